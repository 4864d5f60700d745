//! Graph constructions: a vertex placed on an edge, an added edge, inversion,
//! bouquet and double bouquet, with the series identities they satisfy.

mod identities;

pub use identities::{check_identities, moebius_delta_add_edge, IdentityCheck, IdentityOptions, Status};

use std::collections::{BTreeMap, HashSet};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::graph::{EdgeId, GraphError, RankedDigraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpsError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("edge {edge:?} of length {length} cannot be split at {index}: need 0 < index < length")]
    InvalidSplit { edge: String, length: u32, index: u32 },
    #[error("name {0:?} is already in use")]
    NameClash(String),
    #[error("rank({tail})={tail_rank} must exceed rank({head})={head_rank}")]
    RankCondition {
        tail: String,
        head: String,
        tail_rank: u32,
        head_rank: u32,
    },
    #[error("{graph}: {source}")]
    Extremal {
        graph: &'static str,
        #[source]
        source: GraphError,
    },
    #[error("minimal vertices {first:?} (rank {first_rank}) and {second:?} (rank {second_rank}) have different ranks")]
    MinimalRankMismatch {
        first: String,
        first_rank: u32,
        second: String,
        second_rank: u32,
    },
    #[error("maximal vertices {first:?} (rank {first_rank}) and {second:?} (rank {second_rank}) have different ranks")]
    MaximalRankMismatch {
        first: String,
        first_rank: u32,
        second: String,
        second_rank: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Operation {
    AddVertex {
        edge: String,
        index: u32,
        vertex: String,
        upper: String,
        lower: String,
    },
    AddEdge {
        edge: String,
        tail: String,
        head: String,
        path_existed: bool,
    },
    Invert {
        max_rank: u32,
    },
    Bouquet,
    DoubleBouquet,
}

impl Operation {
    pub fn name(&self) -> &'static str {
        match self {
            Operation::AddVertex { .. } => "add-vertex",
            Operation::AddEdge { .. } => "add-edge",
            Operation::Invert { .. } => "invert",
            Operation::Bouquet => "bouquet",
            Operation::DoubleBouquet => "dbouquet",
        }
    }
}

/// Old name to new name, for one input graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NameMapping {
    pub vertices: BTreeMap<String, String>,
    pub edges: BTreeMap<String, String>,
}

impl NameMapping {
    fn identity_on(g: &RankedDigraph) -> Self {
        NameMapping {
            vertices: g
                .vertices()
                .map(|v| (g.name(v).to_string(), g.name(v).to_string()))
                .collect(),
            edges: g
                .edges()
                .map(|e| (g.edge_name(e).to_string(), g.edge_name(e).to_string()))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpResult {
    pub graph: RankedDigraph,
    pub operation: Operation,
    /// One mapping per input graph.
    pub mappings: Vec<NameMapping>,
}

fn fresh(base: &str, taken: impl Fn(&str) -> bool) -> String {
    let mut name = base.to_string();
    while taken(&name) {
        name.push('_');
    }
    name
}

/// Places a new vertex `w` on `e` at rank `rank(head(e)) + i`. The edge `e` is
/// replaced in place by `e_1: tail(e) -> w` of length `l(e) - i` followed by
/// `e_2: w -> head(e)` of length `i`.
pub fn add_vertex(g: &RankedDigraph, edge: &str, i: u32, vertex: &str) -> Result<OpResult, OpsError> {
    let e = g.edge_by_name(edge)?;
    let len = g.length(e);
    if len <= 1 || i == 0 || i >= len {
        return Err(OpsError::InvalidSplit {
            edge: edge.to_string(),
            length: len,
            index: i,
        });
    }
    if g.has_vertex_named(vertex) {
        return Err(OpsError::NameClash(vertex.to_string()));
    }
    let upper = fresh(&format!("{edge}_1"), |n| g.has_edge_named(n));
    let lower = fresh(&format!("{edge}_2"), |n| g.has_edge_named(n) || n == upper);
    let mut b = RankedDigraph::builder();
    for v in g.vertices() {
        b.vertex(g.name(v), g.rank(v))?;
    }
    b.vertex(vertex, g.rank(g.head(e)) + i)?;
    let mut mapping = NameMapping::identity_on(g);
    mapping.edges.remove(edge);
    for f in g.edges() {
        let (t, h) = (g.name(g.tail(f)), g.name(g.head(f)));
        if f == e {
            b.edge(&upper, t, vertex)?;
            b.edge(&lower, vertex, h)?;
        } else {
            b.edge(g.edge_name(f), t, h)?;
        }
    }
    Ok(OpResult {
        graph: b.build(),
        operation: Operation::AddVertex {
            edge: edge.to_string(),
            index: i,
            vertex: vertex.to_string(),
            upper,
            lower,
        },
        mappings: vec![mapping],
    })
}

fn induced(g: &RankedDigraph, keep: impl Fn(VertexId) -> bool) -> RankedDigraph {
    let mut b = RankedDigraph::builder();
    for v in g.vertices().filter(|&v| keep(v)) {
        b.vertex(g.name(v), g.rank(v)).expect("names from a valid graph");
    }
    for e in g.edges().filter(|&e| keep(g.tail(e)) && keep(g.head(e))) {
        b.edge(g.edge_name(e), g.name(g.tail(e)), g.name(g.head(e)))
            .expect("edges from a valid graph");
    }
    b.build()
}

/// Induced subgraph on `{v : w >= v}`.
pub fn sub_below(g: &RankedDigraph, w: &str) -> Result<RankedDigraph, OpsError> {
    let w = g.vertex_by_name(w)?;
    let r = g.reachability();
    Ok(induced(g, |v| r.ge(w, v)))
}

/// Induced subgraph on `{v : v >= w}`.
pub fn sub_above(g: &RankedDigraph, w: &str) -> Result<RankedDigraph, OpsError> {
    let w = g.vertex_by_name(w)?;
    let r = g.reachability();
    Ok(induced(g, |v| r.ge(v, w)))
}

/// Appends an edge `tail -> head`, recording whether a path already existed.
pub fn add_edge(g: &RankedDigraph, tail: &str, head: &str, name: &str) -> Result<OpResult, OpsError> {
    let (v, w) = (g.vertex_by_name(tail)?, g.vertex_by_name(head)?);
    if g.rank(v) <= g.rank(w) {
        return Err(OpsError::RankCondition {
            tail: tail.to_string(),
            head: head.to_string(),
            tail_rank: g.rank(v),
            head_rank: g.rank(w),
        });
    }
    if g.has_edge_named(name) {
        return Err(OpsError::NameClash(name.to_string()));
    }
    let path_existed = g.reachability().reaches(v, w);
    let mut b = copy(g);
    b.edge(name, tail, head)?;
    Ok(OpResult {
        graph: b.build(),
        operation: Operation::AddEdge {
            edge: name.to_string(),
            tail: tail.to_string(),
            head: head.to_string(),
            path_existed,
        },
        mappings: vec![NameMapping::identity_on(g)],
    })
}

fn copy(g: &RankedDigraph) -> crate::graph::GraphBuilder {
    let mut b = RankedDigraph::builder();
    for v in g.vertices() {
        b.vertex(g.name(v), g.rank(v)).expect("names from a valid graph");
    }
    for e in g.edges() {
        b.edge(g.edge_name(e), g.name(g.tail(e)), g.name(g.head(e)))
            .expect("edges from a valid graph");
    }
    b
}

/// Reverses every edge and sends rank `r` to `n - r`, `n` the maximum rank.
pub fn invert(g: &RankedDigraph) -> OpResult {
    let n = g.max_rank();
    let mut b = RankedDigraph::builder();
    for v in g.vertices() {
        b.vertex(g.name(v), n - g.rank(v)).expect("names from a valid graph");
    }
    for e in g.edges() {
        b.edge(g.edge_name(e), g.name(g.head(e)), g.name(g.tail(e)))
            .expect("reversal keeps ranks decreasing");
    }
    OpResult {
        graph: b.build(),
        operation: Operation::Invert { max_rank: n },
        mappings: vec![NameMapping::identity_on(g)],
    }
}

fn prefixed(name: &str, used: &HashSet<String>) -> String {
    let mut out = format!("g2_{name}");
    while used.contains(&out) {
        out.insert_str(0, "g2_");
    }
    out
}

fn extremal(
    g: &RankedDigraph,
    graph: &'static str,
    f: fn(&RankedDigraph) -> Result<VertexId, GraphError>,
) -> Result<VertexId, OpsError> {
    f(g).map_err(|source| OpsError::Extremal { graph, source })
}

/// Disjoint union of `g1` and `g2` with the vertices of `glue` (pairs of a
/// `g1` vertex and a `g2` vertex) identified under the `g1` name. Other
/// clashing `g2` names get a `g2_` prefix.
fn glue(g1: &RankedDigraph, g2: &RankedDigraph, glue: &[(VertexId, VertexId)], op: Operation) -> OpResult {
    let mut b = copy(g1);
    let mut used_v: HashSet<String> = g1.vertices().map(|v| g1.name(v).to_string()).collect();
    used_v.extend(g2.vertices().map(|v| g2.name(v).to_string()));
    let mut used_e: HashSet<String> = g1.edges().map(|e| g1.edge_name(e).to_string()).collect();
    used_e.extend(g2.edges().map(|e| g2.edge_name(e).to_string()));
    let mut m2 = NameMapping::default();
    for v in g2.vertices() {
        let old = g2.name(v);
        let new = if let Some((a, _)) = glue.iter().find(|(_, b)| *b == v) {
            g1.name(*a).to_string()
        } else if g1.has_vertex_named(old) {
            let name = prefixed(old, &used_v);
            used_v.insert(name.clone());
            b.vertex(&name, g2.rank(v)).expect("fresh name");
            name
        } else {
            b.vertex(old, g2.rank(v)).expect("fresh name");
            old.to_string()
        };
        m2.vertices.insert(old.to_string(), new);
    }
    for e in g2.edges() {
        let old = g2.edge_name(e);
        let new = if g1.has_edge_named(old) {
            let name = prefixed(old, &used_e);
            used_e.insert(name.clone());
            name
        } else {
            old.to_string()
        };
        b.edge(
            &new,
            &m2.vertices[g2.name(g2.tail(e))],
            &m2.vertices[g2.name(g2.head(e))],
        )
        .expect("ranks preserved by the identification");
        m2.edges.insert(old.to_string(), new);
    }
    OpResult {
        graph: b.build(),
        operation: op,
        mappings: vec![NameMapping::identity_on(g1), m2],
    }
}

/// Identifies the unique minimal vertices, which must have equal rank.
pub fn bouquet(g1: &RankedDigraph, g2: &RankedDigraph) -> Result<OpResult, OpsError> {
    let a = extremal(g1, "first graph", RankedDigraph::unique_minimal_vertex)?;
    let b = extremal(g2, "second graph", RankedDigraph::unique_minimal_vertex)?;
    if g1.rank(a) != g2.rank(b) {
        return Err(OpsError::MinimalRankMismatch {
            first: g1.name(a).to_string(),
            first_rank: g1.rank(a),
            second: g2.name(b).to_string(),
            second_rank: g2.rank(b),
        });
    }
    Ok(glue(g1, g2, &[(a, b)], Operation::Bouquet))
}

/// Identifies the minimal vertices (rank 0) and the maximal vertices (equal rank).
pub fn double_bouquet(g1: &RankedDigraph, g2: &RankedDigraph) -> Result<OpResult, OpsError> {
    let a = extremal(g1, "first graph", RankedDigraph::rank_zero_sink)?;
    let b = extremal(g2, "second graph", RankedDigraph::rank_zero_sink)?;
    let ta = extremal(g1, "first graph", RankedDigraph::unique_maximal_vertex)?;
    let tb = extremal(g2, "second graph", RankedDigraph::unique_maximal_vertex)?;
    if g1.rank(ta) != g2.rank(tb) {
        return Err(OpsError::MaximalRankMismatch {
            first: g1.name(ta).to_string(),
            first_rank: g1.rank(ta),
            second: g2.name(tb).to_string(),
            second_rank: g2.rank(tb),
        });
    }
    let pairs: Vec<(VertexId, VertexId)> = if ta == a { vec![(a, b)] } else { vec![(a, b), (ta, tb)] };
    Ok(glue(g1, g2, &pairs, Operation::DoubleBouquet))
}

impl OpResult {
    /// Ids of the two edges replacing the split edge.
    pub fn split_edges(&self) -> Option<(EdgeId, EdgeId)> {
        match &self.operation {
            Operation::AddVertex { upper, lower, .. } => Some((
                self.graph.edge_by_name(upper).ok()?,
                self.graph.edge_by_name(lower).ok()?,
            )),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_chain, gen_delta, parse_graph};
    use crate::moebius::{m_lower, m_series, m_upper};
    use crate::series::IntPolynomial;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn split_an_edge() {
        let g = parse_graph("vertex u 2\nvertex v 0\nedge e u v\n").unwrap();
        let r = add_vertex(&g, "e", 1, "w").unwrap();
        assert_eq!(
            r.graph.to_glg(),
            "vertex u 2\nvertex v 0\nvertex w 1\nedge e_1 u w\nedge e_2 w v\n"
        );
        let above = sub_above(&r.graph, "w").unwrap();
        assert_eq!(above.vertex_count(), 2);
        assert_eq!(m_lower(&above).unwrap(), p(&[1, -1]));
        let below = sub_below(&r.graph, "w").unwrap();
        assert_eq!(m_upper(&below).unwrap(), p(&[1, -1]));
        assert_eq!(m_series(&r.graph).unwrap(), p(&[3, -2]));
        assert!(matches!(
            add_vertex(&g, "e", 2, "x"),
            Err(OpsError::InvalidSplit { .. })
        ));
        assert!(matches!(add_vertex(&g, "e", 1, "u"), Err(OpsError::NameClash(_))));
        let unit = parse_graph("vertex u 1\nvertex v 0\nedge e u v\n").unwrap();
        assert!(add_vertex(&unit, "e", 1, "w").is_err());
    }

    #[test]
    fn split_edge_names_stay_fresh() {
        let g = parse_graph("vertex u 3\nvertex v 0\nedge e u v\nedge e_1 u v\n").unwrap();
        let r = add_vertex(&g, "e", 1, "w").unwrap();
        assert!(matches!(&r.operation, Operation::AddVertex { upper, lower, .. } if upper == "e_1_" && lower == "e_2"));
    }

    #[test]
    fn adding_edges() {
        let g = parse_graph("vertex v 1\nvertex w 0\n").unwrap();
        let r = add_edge(&g, "v", "w", "e").unwrap();
        assert!(matches!(
            r.operation,
            Operation::AddEdge {
                path_existed: false,
                ..
            }
        ));
        let again = add_edge(&r.graph, "v", "w", "f").unwrap();
        assert!(matches!(again.operation, Operation::AddEdge { path_existed: true, .. }));
        assert!(matches!(
            add_edge(&g, "w", "v", "e"),
            Err(OpsError::RankCondition { .. })
        ));
        assert!(matches!(add_edge(&r.graph, "v", "w", "e"), Err(OpsError::NameClash(_))));
    }

    #[test]
    fn inversion_is_an_involution() {
        let g = gen_chain(&[1, 2]).unwrap();
        let once = invert(&g).graph;
        assert_eq!(once.rank(once.vertex_by_name("v0").unwrap()), 0);
        assert_eq!(invert(&once).graph, g);
        let d = gen_delta(3).unwrap();
        let inv = invert(&d).graph;
        assert_eq!(m_series(&inv).unwrap(), m_series(&d).unwrap());
    }

    #[test]
    fn bouquets() {
        let d = gen_delta(1).unwrap();
        let b = bouquet(&d, &d).unwrap();
        assert_eq!(
            b.graph.to_glg(),
            "vertex max 1\nvertex min 0\nvertex g2_max 1\nedge e max min\nedge g2_e g2_max min\n"
        );
        assert_eq!(m_series(&b.graph).unwrap(), p(&[3, -2]));
        assert_eq!(b.mappings[1].vertices["min"], "min");
        let db = double_bouquet(&d, &d).unwrap();
        assert_eq!(db.graph.vertex_count(), 2);
        assert_eq!(db.graph.edge_count(), 2);
        assert_eq!(m_series(&db.graph).unwrap(), p(&[2, -1]));
        let err = double_bouquet(&d, &gen_delta(2).unwrap()).unwrap_err();
        assert!(matches!(err, OpsError::MaximalRankMismatch { .. }));
        let two_sinks = parse_graph("vertex a 1\nvertex b 0\nvertex c 0\nedge x a b\nedge y a c\n").unwrap();
        assert!(matches!(
            bouquet(&d, &two_sinks),
            Err(OpsError::Extremal {
                graph: "second graph",
                ..
            })
        ));
    }

    #[test]
    fn double_bouquet_of_chains_is_the_orbit_graph() {
        let c1 = gen_chain(&[1, 2]).unwrap();
        let c2 = gen_chain(&[2, 1]).unwrap();
        let db = double_bouquet(&c1, &c2).unwrap();
        assert_eq!(db.graph.vertex_count(), 4);
        assert_eq!(m_series(&db.graph).unwrap(), p(&[4, -2, -2, 1]));
    }

    #[test]
    fn prefixing_avoids_existing_g2_names() {
        let g1 = parse_graph("vertex x 1\nvertex s 0\nedge e x s\n").unwrap();
        let g2 = parse_graph("vertex x 1\nvertex g2_x 1\nvertex s 0\nedge e x s\nedge f g2_x s\n").unwrap();
        let b = bouquet(&g1, &g2).unwrap();
        assert_eq!(b.mappings[1].vertices["x"], "g2_g2_x");
        assert_eq!(b.mappings[1].vertices["g2_x"], "g2_x");
    }
}
