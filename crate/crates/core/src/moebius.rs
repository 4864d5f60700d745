//! Moebius function of the path order of a ranked graph, and the rank
//! generating polynomials built from it.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graph::{GraphError, RankedDigraph, Reachability, VertexId};
use crate::series::IntPolynomial;

/// `mu(v, w)` for every pair `v >= w` of the path order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoebiusTable {
    values: Vec<Vec<Option<BigInt>>>,
    ranks: Vec<u32>,
}

impl MoebiusTable {
    pub fn new(g: &RankedDigraph) -> Self {
        Self::with_reachability(g, &g.reachability())
    }

    pub fn with_reachability(g: &RankedDigraph, reach: &Reachability) -> Self {
        let n = g.vertex_count();
        let mut values = vec![vec![None; n]; n];
        for v in g.vertices() {
            let mut interval: Vec<VertexId> = std::iter::once(v).chain(reach.below(v)).collect();
            interval.sort_by(|a, b| g.rank(*b).cmp(&g.rank(*a)).then(a.cmp(b)));
            let row = &mut values[v.0];
            row[v.0] = Some(BigInt::one());
            for (i, &w) in interval.iter().enumerate().skip(1) {
                // Everything strictly above w inside [w, v] has larger rank, so
                // it sits earlier in `interval`.
                let mut sum = BigInt::zero();
                for &u in &interval[..i] {
                    if reach.reaches(u, w) {
                        sum += row[u.0].as_ref().expect("computed earlier");
                    }
                }
                row[w.0] = Some(-sum);
            }
        }
        MoebiusTable {
            values,
            ranks: g.ranks().0,
        }
    }

    /// `None` when `v >= w` fails.
    pub fn get(&self, v: VertexId, w: VertexId) -> Option<&BigInt> {
        self.values[v.0][w.0].as_ref()
    }

    /// All comparable pairs `(v, w, mu(v, w))`, row-major in vertex order.
    pub fn pairs(&self) -> impl Iterator<Item = (VertexId, VertexId, &BigInt)> + '_ {
        self.values.iter().enumerate().flat_map(|(v, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(w, mu)| mu.as_ref().map(|m| (VertexId(v), VertexId(w), m)))
        })
    }

    /// Sum of `mu(v, w) z^(|v| - |w|)` over every comparable pair, diagonal included.
    pub fn rank_polynomial(&self) -> IntPolynomial {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (v, w, mu) in self.pairs() {
            let d = (self.ranks[v.0] - self.ranks[w.0]) as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, BigInt::zero());
            }
            coeffs[d] += mu;
        }
        IntPolynomial::new(coeffs)
    }
}

pub fn moebius_table(g: &RankedDigraph) -> MoebiusTable {
    MoebiusTable::new(g)
}

/// `M(G)(z)` without checking for a unique minimal vertex.
pub fn rank_polynomial(g: &RankedDigraph) -> IntPolynomial {
    MoebiusTable::new(g).rank_polynomial()
}

/// `M(G)(z) = sum over v >= w of mu(v, w) z^(|v| - |w|)`.
///
/// The diagonal terms `v = w` contribute `+1` each; this is the form for
/// which `(1 - z) / (1 - z M)` is the Hilbert series.
pub fn m_series(g: &RankedDigraph) -> Result<IntPolynomial, GraphError> {
    g.unique_minimal_vertex()?;
    Ok(rank_polynomial(g))
}

/// `sum over v of mu(v, v_min) z^(|v| - |v_min|)`.
pub fn m_lower(g: &RankedDigraph) -> Result<IntPolynomial, GraphError> {
    let bottom = g.unique_minimal_vertex()?;
    let table = MoebiusTable::new(g);
    let mut coeffs = vec![BigInt::zero(); (g.max_rank() - g.rank(bottom)) as usize + 1];
    for v in g.vertices() {
        if let Some(mu) = table.get(v, bottom) {
            coeffs[(g.rank(v) - g.rank(bottom)) as usize] += mu;
        }
    }
    Ok(IntPolynomial::new(coeffs))
}

/// `sum over v of mu(v_max, v) z^(|v_max| - |v|)`.
pub fn m_upper(g: &RankedDigraph) -> Result<IntPolynomial, GraphError> {
    let top = g.unique_maximal_vertex()?;
    let table = MoebiusTable::new(g);
    let mut coeffs = vec![BigInt::zero(); g.rank(top) as usize + 1];
    for v in g.vertices() {
        if let Some(mu) = table.get(top, v) {
            coeffs[(g.rank(top) - g.rank(v)) as usize] += mu;
        }
    }
    Ok(IntPolynomial::new(coeffs))
}
