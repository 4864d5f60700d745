//! JSON rendering shared by the command-line reports.
//!
//! Integers whose magnitude exceeds `2^53` are written as decimal strings so
//! that consumers using doubles never lose precision.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::algebra::Relation;
use crate::graph::RankedDigraph;
use crate::moebius::MoebiusTable;
use crate::ops::{NameMapping, OpResult, Operation};
use crate::oracle::NciVerdict;
use crate::series::{IntPolynomial, RationalSeries, TruncatedSeries};

pub const SCHEMA: &str = "glg/1";

const SAFE: i64 = 1 << 53;

pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) if (-SAFE..=SAFE).contains(&v) => Value::from(v),
        _ => Value::String(x.to_string()),
    }
}

pub fn uint(x: &BigUint) -> Value {
    int(&BigInt::from(x.clone()))
}

pub fn ints(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int).collect())
}

pub fn poly(p: &IntPolynomial) -> Value {
    if p.is_zero() {
        return json!([0]);
    }
    ints(p.coeffs())
}

/// `{"num", "den", "coeffs", "order"}`.
pub fn series(r: &RationalSeries, expansion: &TruncatedSeries) -> Value {
    json!({
        "num": poly(r.numerator()),
        "den": poly(r.denominator()),
        "coeffs": ints(expansion.coeffs()),
        "order": expansion.order(),
    })
}

/// Adds the `"schema"` key to an object payload.
pub fn with_schema(mut v: Value) -> Value {
    if let Value::Object(m) = &mut v {
        m.insert("schema".to_string(), Value::from(SCHEMA));
    }
    v
}

pub fn moebius(g: &RankedDigraph, t: &MoebiusTable) -> Value {
    Value::Array(
        t.pairs()
            .map(|(v, w, mu)| json!({"v": g.name(v), "w": g.name(w), "mu": int(mu)}))
            .collect(),
    )
}

pub fn relations(g: &RankedDigraph, rels: &[Relation]) -> Value {
    let path = |p: &[crate::graph::EdgeId]| -> Value { p.iter().map(|e| Value::from(g.edge_name(*e))).collect() };
    Value::Array(
        rels.iter()
            .map(|r| {
                json!({
                    "tail": g.name(r.tail),
                    "head": g.name(r.head),
                    "path": path(&r.path),
                    "reference": path(&r.reference),
                    "degree": r.degree,
                    "poly": r.poly.render(g),
                })
            })
            .collect(),
    )
}

pub fn nci(v: &NciVerdict) -> Value {
    json!({
        "is_nci": v.is_nci,
        "order": v.order,
        "generator_series": v.generator_series,
        "relation_series": v.relation_series,
        "one_minus_g_plus_r": v.one_minus_g_plus_r,
        "product": ints(&v.product),
        "witness": v.witness,
    })
}

fn mapping(m: &NameMapping) -> Value {
    json!({"vertices": m.vertices, "edges": m.edges})
}

fn operation(op: &Operation) -> Value {
    let mut m = Map::new();
    m.insert("operation".into(), Value::from(op.name()));
    match op {
        Operation::AddVertex {
            edge,
            index,
            vertex,
            upper,
            lower,
        } => {
            m.insert("edge".into(), json!(edge));
            m.insert("index".into(), json!(index));
            m.insert("vertex".into(), json!(vertex));
            m.insert("upper_edge".into(), json!(upper));
            m.insert("lower_edge".into(), json!(lower));
        }
        Operation::AddEdge {
            edge,
            tail,
            head,
            path_existed,
        } => {
            m.insert("edge".into(), json!(edge));
            m.insert("tail".into(), json!(tail));
            m.insert("head".into(), json!(head));
            m.insert("path_existed".into(), json!(path_existed));
        }
        Operation::Invert { max_rank } => {
            m.insert("max_rank".into(), json!(max_rank));
        }
        Operation::Bouquet | Operation::DoubleBouquet => {}
    }
    Value::Object(m)
}

/// `{"graph": .glg text, "mapping": ..., "provenance": ...}`. Unary
/// operations give a single mapping; binary ones a list with one per input.
pub fn op_result(r: &OpResult) -> Value {
    let mapping = match r.mappings.as_slice() {
        [one] => mapping(one),
        many => Value::Array(many.iter().map(mapping).collect()),
    };
    json!({
        "graph": r.graph.to_glg(),
        "mapping": mapping,
        "provenance": operation(&r.operation),
    })
}
