use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{add_edge, add_vertex, bouquet, double_bouquet, invert, sub_above, sub_below, OpsError};
use crate::graph::{gen_delta, RankedDigraph, VertexId};
use crate::moebius::{m_lower, m_upper, rank_polynomial};
use crate::oracle::{graded_dimensions, OracleConfig, OracleError};
use crate::series::{hilbert_series, IntPolynomial, SeriesError, TruncatedSeries};

/// Change of `M` when adding an edge `v -> w`, as a sum over chain pairs
/// `v1 > ... > vl >= v` and `w >= w1 > ... > wm` with no existing path from
/// `vl` to `w1`, each weighted `(-1)^(l + m + 1) z^(|v1| - |wm|)`.
pub fn moebius_delta_add_edge(g: &RankedDigraph, v: &str, w: &str) -> Result<IntPolynomial, OpsError> {
    let (v, w) = (g.vertex_by_name(v)?, g.vertex_by_name(w)?);
    if g.rank(v) <= g.rank(w) {
        return Err(OpsError::RankCondition {
            tail: g.name(v).to_string(),
            head: g.name(w).to_string(),
            tail_rank: g.rank(v),
            head_rank: g.rank(w),
        });
    }
    let reach = g.reachability();
    let n = g.vertex_count();
    let top = g.max_rank() as usize;
    // up[x]: signed chains ending at x, by rank drop from their top; sign (-1)^l.
    let mut up: Vec<Vec<BigInt>> = vec![Vec::new(); n];
    let mut order: Vec<VertexId> = g.vertices().filter(|&x| reach.ge(x, v)).collect();
    order.sort_by_key(|&x| std::cmp::Reverse(g.rank(x)));
    for &x in &order {
        let mut p = vec![BigInt::zero(); top + 1];
        p[0] = -BigInt::one();
        for &u in &order {
            if reach.reaches(u, x) {
                let d = (g.rank(u) - g.rank(x)) as usize;
                for (k, c) in up[u.0].iter().enumerate().take(top + 1 - d) {
                    p[k + d] -= c;
                }
            }
        }
        up[x.0] = p;
    }
    // down[y]: signed chains starting at y, by rank drop to their bottom; sign (-1)^m.
    let mut down: Vec<Vec<BigInt>> = vec![Vec::new(); n];
    let mut lower: Vec<VertexId> = g.vertices().filter(|&y| reach.ge(w, y)).collect();
    lower.sort_by_key(|&y| g.rank(y));
    for &y in &lower {
        let mut p = vec![BigInt::zero(); top + 1];
        p[0] = -BigInt::one();
        for &u in &lower {
            if reach.reaches(y, u) {
                let d = (g.rank(y) - g.rank(u)) as usize;
                for (k, c) in down[u.0].iter().enumerate().take(top + 1 - d) {
                    p[k + d] -= c;
                }
            }
        }
        down[y.0] = p;
    }
    let mut total = vec![BigInt::zero(); 2 * top + 1];
    for &x in &order {
        for &y in &lower {
            if reach.reaches(x, y) {
                continue;
            }
            let d = (g.rank(x) - g.rank(y)) as usize;
            for (i, a) in up[x.0].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in down[y.0].iter().enumerate() {
                    total[i + j + d] -= a * b;
                }
            }
        }
    }
    Ok(IntPolynomial::new(total))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: &'static str,
    pub instance: String,
    pub status: Status,
    pub detail: String,
}

impl IdentityCheck {
    fn new(identity: &'static str, instance: String, ok: bool, detail: String) -> Self {
        IdentityCheck {
            identity,
            instance,
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
        }
    }

    fn skipped(identity: &'static str, instance: String, detail: String) -> Self {
        IdentityCheck {
            identity,
            instance,
            status: Status::Skipped,
            detail,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityOptions {
    /// Order for series comparisons.
    pub order: usize,
    /// Degree up to which oracle dimensions are compared; `None` skips them.
    pub oracle_degree: Option<u32>,
    pub oracle: OracleConfig,
}

impl Default for IdentityOptions {
    fn default() -> Self {
        IdentityOptions {
            order: 10,
            oracle_degree: Some(4),
            oracle: OracleConfig::default(),
        }
    }
}

fn recip_hilbert(g: &RankedDigraph, order: usize) -> Result<TruncatedSeries, SeriesError> {
    hilbert_series(g, order)?.expansion.inverse()
}

fn fresh_edge(g: &RankedDigraph) -> String {
    let mut name = "new_edge".to_string();
    while g.has_edge_named(&name) {
        name.push('_');
    }
    name
}

fn fresh_vertex(g: &RankedDigraph) -> String {
    let mut name = "new_vertex".to_string();
    while g.has_vertex_named(&name) {
        name.push('_');
    }
    name
}

fn single_graph_checks(g: &RankedDigraph, label: &str, opts: &IdentityOptions) -> Result<Vec<IdentityCheck>, OpsError> {
    let mut out = Vec::new();
    let m = rank_polynomial(g);

    // A vertex on an edge.
    let w = fresh_vertex(g);
    for e in g.edges() {
        for i in 1..g.length(e) {
            let r = add_vertex(g, g.edge_name(e), i, &w)?;
            let upper = m_lower(&sub_above(&r.graph, &w)?)?;
            let lower = m_upper(&sub_below(&r.graph, &w)?)?;
            let lhs = rank_polynomial(&r.graph);
            let rhs = &m + &(&upper * &lower);
            out.push(IdentityCheck::new(
                "add-vertex",
                format!("{label}: edge {} at {i}", g.edge_name(e)),
                lhs == rhs,
                format!("M = {lhs}, expected {rhs}"),
            ));
        }
    }

    // Added edges, new and redundant.
    let reach = g.reachability();
    let name = fresh_edge(g);
    let series = g.has_rank_zero_sink();
    let h = if series {
        Some(hilbert_series(g, opts.order).map_err(series_err)?.expansion)
    } else {
        None
    };
    let mut dims: Option<Result<Vec<u64>, OracleError>> = None;
    for v in g.vertices() {
        for u in g.vertices() {
            if g.rank(v) <= g.rank(u) {
                continue;
            }
            let (vn, un) = (g.name(v), g.name(u));
            let r = add_edge(g, vn, un, &name)?;
            let delta = moebius_delta_add_edge(g, vn, un)?;
            let direct = &rank_polynomial(&r.graph) - &m;
            out.push(IdentityCheck::new(
                "add-edge-delta",
                format!("{label}: {vn} -> {un}"),
                delta == direct,
                format!("chain sum {delta}, direct difference {direct}"),
            ));
            if !reach.reaches(v, u) {
                continue;
            }
            let instance = format!("{label}: {vn} -> {un}");
            out.push(IdentityCheck::new(
                "redundant-edge-m",
                instance.clone(),
                direct.is_zero(),
                format!("M changed by {direct}"),
            ));
            if let Some(h) = &h {
                let h2 = hilbert_series(&r.graph, opts.order).map_err(series_err)?.expansion;
                out.push(IdentityCheck::new(
                    "redundant-edge-h",
                    instance.clone(),
                    &h2 == h,
                    format!("expansion to order {}", opts.order),
                ));
            }
            if let Some(n) = opts.oracle_degree {
                let before = dims.get_or_insert_with(|| graded_dimensions(g, n, &opts.oracle));
                match (before, graded_dimensions(&r.graph, n, &opts.oracle)) {
                    (Ok(a), Ok(b)) => out.push(IdentityCheck::new(
                        "redundant-edge-dims",
                        instance,
                        *a == b,
                        format!("dims {a:?} vs {b:?}"),
                    )),
                    (Err(e), _) => out.push(IdentityCheck::skipped("redundant-edge-dims", instance, e.to_string())),
                    (_, Err(e)) => out.push(IdentityCheck::skipped("redundant-edge-dims", instance, e.to_string())),
                }
            }
        }
    }

    // Inversion.
    if g.unique_minimal_vertex().is_ok() && g.unique_maximal_vertex().is_ok() {
        let mi = rank_polynomial(&invert(g).graph);
        out.push(IdentityCheck::new(
            "inversion",
            label.to_string(),
            mi == m,
            format!("M = {m}, inverted {mi}"),
        ));
    } else {
        out.push(IdentityCheck::skipped(
            "inversion",
            label.to_string(),
            "needs unique maximal and minimal vertices".to_string(),
        ));
    }
    Ok(out)
}

fn series_err(e: SeriesError) -> OpsError {
    match e {
        SeriesError::Graph(g) => OpsError::Graph(g),
        other => OpsError::Graph(crate::graph::GraphError::InvalidArgument(other.to_string())),
    }
}

fn pair_checks(
    g1: &RankedDigraph,
    g2: &RankedDigraph,
    instance: &str,
    opts: &IdentityOptions,
) -> Result<Vec<IdentityCheck>, OpsError> {
    let mut out = Vec::new();
    let (m1, m2) = (rank_polynomial(g1), rank_polynomial(g2));
    let one = IntPolynomial::one();
    let series = g1.has_rank_zero_sink() && g2.has_rank_zero_sink();
    match bouquet(g1, g2) {
        Ok(b) => {
            let mb = rank_polynomial(&b.graph);
            let rhs = &(&m1 + &m2) - &one;
            out.push(IdentityCheck::new(
                "bouquet-m",
                instance.to_string(),
                mb == rhs,
                format!("M = {mb}, expected {rhs}"),
            ));
            if series {
                let ok = (|| -> Result<bool, SeriesError> {
                    let lhs = recip_hilbert(&b.graph, opts.order)?;
                    let rhs = recip_hilbert(g1, opts.order)?
                        .add(&recip_hilbert(g2, opts.order)?)?
                        .sub(&TruncatedSeries::one(opts.order))?;
                    Ok(lhs == rhs)
                })()
                .map_err(series_err)?;
                out.push(IdentityCheck::new(
                    "bouquet-h",
                    instance.to_string(),
                    ok,
                    format!("reciprocal Hilbert series to order {}", opts.order),
                ));
            }
        }
        Err(e) => out.push(IdentityCheck::skipped("bouquet-m", instance.to_string(), e.to_string())),
    }
    match double_bouquet(g1, g2) {
        Ok(b) => {
            let d = g1.max_rank();
            let mb = rank_polynomial(&b.graph);
            let rhs = &(&(&m1 + &m2) - &IntPolynomial::from_i64s(&[2])) + &IntPolynomial::monomial(1, d as usize);
            out.push(IdentityCheck::new(
                "double-bouquet-m",
                instance.to_string(),
                mb == rhs,
                format!("M = {mb}, expected {rhs}"),
            ));
            if d >= 1 {
                let ok = (|| -> Result<bool, SeriesError> {
                    let delta = gen_delta(d).map_err(SeriesError::Graph)?;
                    let lhs = recip_hilbert(&b.graph, opts.order)?;
                    let rhs = recip_hilbert(g1, opts.order)?
                        .add(&recip_hilbert(g2, opts.order)?)?
                        .sub(&recip_hilbert(&delta, opts.order)?)?;
                    Ok(lhs == rhs)
                })()
                .map_err(series_err)?;
                out.push(IdentityCheck::new(
                    "double-bouquet-h",
                    instance.to_string(),
                    ok,
                    format!("reciprocal Hilbert series to order {}", opts.order),
                ));
            }
        }
        Err(e) => out.push(IdentityCheck::skipped(
            "double-bouquet-m",
            instance.to_string(),
            e.to_string(),
        )),
    }
    Ok(out)
}

/// Runs every applicable identity on each graph, and the bouquet identities
/// on the pair (or on a single graph with itself).
pub fn check_identities(graphs: &[RankedDigraph], opts: &IdentityOptions) -> Result<Vec<IdentityCheck>, OpsError> {
    let mut out = Vec::new();
    for (k, g) in graphs.iter().enumerate() {
        out.extend(single_graph_checks(g, &format!("g{}", k + 1), opts)?);
    }
    match graphs {
        [g] => out.extend(pair_checks(g, g, "g1, g1", opts)?),
        [g1, g2, ..] => out.extend(pair_checks(g1, g2, "g1, g2", opts)?),
        [] => {}
    }
    Ok(out)
}
