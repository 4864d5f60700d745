use num_traits::ToPrimitive;

use super::free::{FreePolynomial, Generator};
use super::AlgebraError;
use crate::graph::{EdgeId, RankedDigraph, VertexId};

/// Coefficients `e(pi, 0) = 1, e(pi, 1), ..., e(pi, l(pi))` of the path
/// polynomial `P_pi(t) = sum_j (-1)^j e(pi, j) t^j`. Signs are implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathPoly {
    pub path: Vec<EdgeId>,
    pub coeffs: Vec<FreePolynomial>,
}

impl PathPoly {
    pub fn unit() -> Self {
        PathPoly {
            path: Vec::new(),
            coeffs: vec![FreePolynomial::one()],
        }
    }

    pub fn length(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> &FreePolynomial {
        &self.coeffs[j]
    }

    /// `P_self(t) P_other(t)`: convolution of the coefficient lists.
    pub fn then(&self, other: &PathPoly) -> PathPoly {
        let n = self.length() + other.length();
        let mut coeffs = vec![FreePolynomial::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        let mut path = self.path.clone();
        path.extend_from_slice(&other.path);
        PathPoly { path, coeffs }
    }
}

pub fn edge_poly(g: &RankedDigraph, e: EdgeId) -> PathPoly {
    let mut coeffs = vec![FreePolynomial::one()];
    coeffs.extend((1..=g.length(e)).map(|i| FreePolynomial::generator(Generator::new(e, i))));
    PathPoly { path: vec![e], coeffs }
}

pub fn check_path(g: &RankedDigraph, path: &[EdgeId]) -> Result<(), AlgebraError> {
    for (k, w) in path.windows(2).enumerate() {
        if g.head(w[0]) != g.tail(w[1]) {
            return Err(AlgebraError::BrokenPath {
                position: k + 1,
                edge: g.edge_name(w[1]).to_string(),
            });
        }
    }
    Ok(())
}

pub fn path_poly(g: &RankedDigraph, path: &[EdgeId]) -> Result<PathPoly, AlgebraError> {
    check_path(g, path)?;
    Ok(path.iter().fold(PathPoly::unit(), |acc, &e| acc.then(&edge_poly(g, e))))
}

/// Path from `v` to the sink following the lexicographically least outgoing
/// edge name at every step.
pub fn canonical_path(g: &RankedDigraph, v: VertexId) -> Result<Vec<EdgeId>, AlgebraError> {
    let sink = g.rank_zero_sink()?;
    if v == sink {
        return Err(AlgebraError::MinimalVertex(g.name(v).to_string()));
    }
    let mut path = Vec::new();
    let mut at = v;
    while at != sink {
        let e = *g
            .out_edges(at)
            .iter()
            .min_by(|a, b| g.edge_name(**a).cmp(g.edge_name(**b)))
            .expect("every vertex other than the unique sink has an outgoing edge");
        path.push(e);
        at = g.head(e);
    }
    Ok(path)
}

/// `e(v, j) = e(pi_v, j)` for the canonical path `pi_v`.
pub fn vertex_coeff(g: &RankedDigraph, v: VertexId, j: u32) -> Result<FreePolynomial, AlgebraError> {
    let path = canonical_path(g, v)?;
    if j == 0 || j > g.rank(v) {
        return Err(AlgebraError::IndexOutOfRange {
            vertex: g.name(v).to_string(),
            index: j,
            rank: g.rank(v),
        });
    }
    Ok(path_poly(g, &path)?.coeffs.swap_remove(j as usize))
}

/// The coefficient lists of every canonical vertex path, computed once.
#[derive(Debug, Clone)]
pub struct VertexPolys {
    polys: Vec<Option<PathPoly>>,
}

impl VertexPolys {
    pub fn new(g: &RankedDigraph) -> Result<Self, AlgebraError> {
        let sink = g.rank_zero_sink()?;
        // Canonical paths share tails, so build bottom-up.
        let mut polys: Vec<Option<PathPoly>> = vec![None; g.vertex_count()];
        polys[sink.0] = Some(PathPoly::unit());
        for v in g.by_ascending_rank() {
            if v == sink {
                continue;
            }
            let first = canonical_path(g, v)?[0];
            let below = polys[g.head(first).0].as_ref().expect("heads rank lower");
            polys[v.0] = Some(edge_poly(g, first).then(below));
        }
        polys[sink.0] = None;
        Ok(VertexPolys { polys })
    }

    pub fn get(&self, v: VertexId) -> Option<&PathPoly> {
        self.polys[v.0].as_ref()
    }
}

/// A homogeneous relation `e(path, j) - e(reference, j)` between parallel paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub tail: VertexId,
    pub head: VertexId,
    pub path: Vec<EdgeId>,
    pub reference: Vec<EdgeId>,
    pub degree: u32,
    pub poly: FreePolynomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RelationOptions {
    /// Keep only degrees `j < k`: the relations of the truncated algebra `A(k, G)`.
    pub truncation: Option<u32>,
    /// Emit `e(p, j) - e(q, j)` for every pair `p < q` of parallel paths instead
    /// of pairing each path with the least one.
    pub all_pairs: bool,
    pub path_limit: usize,
}

impl Default for RelationOptions {
    fn default() -> Self {
        RelationOptions {
            truncation: None,
            all_pairs: false,
            path_limit: 10_000,
        }
    }
}

/// All directed paths from `v` to `w`, sorted by their edge-name sequence.
pub fn paths_between(
    g: &RankedDigraph,
    v: VertexId,
    w: VertexId,
    limit: usize,
) -> Result<Vec<Vec<EdgeId>>, AlgebraError> {
    let reach = g.reachability();
    let count = reach.path_count(v, w);
    if count.to_usize().is_none_or(|c| c > limit) {
        return Err(AlgebraError::PathLimit {
            tail: g.name(v).to_string(),
            head: g.name(w).to_string(),
            count: count.to_string(),
            limit,
        });
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn dfs(
        g: &RankedDigraph,
        reach: &crate::graph::Reachability,
        at: VertexId,
        w: VertexId,
        stack: &mut Vec<EdgeId>,
        out: &mut Vec<Vec<EdgeId>>,
    ) {
        if at == w {
            out.push(stack.clone());
            return;
        }
        for &e in g.out_edges(at) {
            let h = g.head(e);
            if reach.ge(h, w) {
                stack.push(e);
                dfs(g, reach, h, w, stack, out);
                stack.pop();
            }
        }
    }
    dfs(g, &reach, v, w, &mut stack, &mut out);
    out.sort_by(|a, b| a.iter().map(|e| g.edge_name(*e)).cmp(b.iter().map(|e| g.edge_name(*e))));
    Ok(out)
}

/// Generators of the relation ideal, one per parallel path and degree.
/// For every ordered pair with at least two paths the least path serves as
/// reference unless `all_pairs` is set.
pub fn relation_generators(g: &RankedDigraph, opts: RelationOptions) -> Result<Vec<Relation>, AlgebraError> {
    let reach = g.reachability();
    let mut out = Vec::new();
    for v in g.vertices() {
        for w in g.vertices() {
            if !reach.reaches(v, w) || reach.path_count(v, w) < &2u32.into() {
                continue;
            }
            let paths = paths_between(g, v, w, opts.path_limit)?;
            let polys = paths.iter().map(|p| path_poly(g, p)).collect::<Result<Vec<_>, _>>()?;
            let len = g.rank(v) - g.rank(w);
            let top = match opts.truncation {
                Some(k) => len.min(k.saturating_sub(1)),
                None => len,
            };
            let pairs: Vec<(usize, usize)> = if opts.all_pairs {
                (0..paths.len())
                    .flat_map(|a| (a + 1..paths.len()).map(move |b| (b, a)))
                    .collect()
            } else {
                (1..paths.len()).map(|b| (b, 0)).collect()
            };
            for (p, q) in pairs {
                for j in 1..=top {
                    let poly = polys[p].coeff(j as usize) - polys[q].coeff(j as usize);
                    if poly.is_zero() {
                        continue;
                    }
                    out.push(Relation {
                        tail: v,
                        head: w,
                        path: paths[p].clone(),
                        reference: paths[q].clone(),
                        degree: j,
                        poly,
                    });
                }
            }
        }
    }
    Ok(out)
}
