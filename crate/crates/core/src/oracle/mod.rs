//! Graded dimensions of `A(G) = T(E#)/R` by exact linear algebra over the
//! rationals, minimal relation counts, basis independence and the
//! noncommutative complete intersection test.

mod coeff;
mod ideal;
mod space;

pub use coeff::Coeff;
pub use ideal::IdealOracle;
pub use space::{MonomialSpace, Row};

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{enumerate_basis, AlgebraError, FreePolynomial, GeneratorMap, WordEvaluator};
use crate::graph::{GraphError, RankedDigraph};
use crate::series::{hilbert_series, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("degree {degree} has {monomials} monomials, over the budget of {budget}")]
    BudgetExceeded { degree: u32, monomials: u64, budget: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Maximum number of monomials in any single degree.
    pub budget_monomials: u64,
    /// Use only relations of degree `< k`.
    pub truncation: Option<u32>,
    /// Generate the ideal from every pair of parallel paths.
    pub all_pairs: bool,
    pub path_limit: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            budget_monomials: 200_000,
            truncation: None,
            all_pairs: false,
            path_limit: 10_000,
        }
    }
}

/// `dim A_n` for `n = 0..=max_degree`.
pub fn graded_dimensions(g: &RankedDigraph, max_degree: u32, config: &OracleConfig) -> Result<Vec<u64>, OracleError> {
    let mut o = IdealOracle::new(g, config)?;
    o.ensure(max_degree)?;
    Ok((0..=max_degree).map(|n| o.quotient_dim(n)).collect())
}

/// `r_n = dim R_n - dim (T_+ R + R T_+)_n` for `n = 0..=max_degree`.
///
/// Only degrees up to the largest relation degree are computed; above it the
/// ideal has no new generators and `r_n = 0`.
pub fn minimal_relation_series(
    g: &RankedDigraph,
    max_degree: u32,
    config: &OracleConfig,
) -> Result<Vec<u64>, OracleError> {
    let mut o = IdealOracle::new(g, config)?;
    let top = max_degree.min(o.max_relation_degree());
    o.ensure(top)?;
    let mut out = vec![0u64; max_degree as usize + 1];
    for n in 1..=top {
        out[n as usize] = o.minimal_relations(n);
    }
    Ok(out)
}

/// Number of generators `a_i(e)` in each degree: edges of length at least `n`.
pub fn generator_series(g: &RankedDigraph, max_degree: u32) -> Vec<u64> {
    (0..=max_degree)
        .map(|n| {
            if n == 0 {
                0
            } else {
                g.edges().filter(|&e| g.length(e) >= n).count() as u64
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NciVerdict {
    pub is_nci: bool,
    pub order: u32,
    pub generator_series: Vec<u64>,
    pub relation_series: Vec<u64>,
    /// `1 - g(z) + r(z)` with trailing zeros removed.
    pub one_minus_g_plus_r: Vec<i64>,
    /// `h(z) (1 - g(z) + r(z))` to the given order.
    pub product: Vec<BigInt>,
    /// First degree where the product differs from `1`.
    pub witness: Option<u32>,
}

/// Checks `h(z) (1 - g(z) + r(z)) = 1` to order `max_degree`.
pub fn nci_check(g: &RankedDigraph, max_degree: u32, config: &OracleConfig) -> Result<NciVerdict, OracleError> {
    let h = hilbert_series(g, max_degree as usize)?.expansion;
    let gen = generator_series(g, max_degree);
    let rel = minimal_relation_series(g, max_degree, config)?;
    let mut q: Vec<i64> = (0..=max_degree as usize)
        .map(|n| i64::from(n == 0) - gen[n] as i64 + rel[n] as i64)
        .collect();
    let product: Vec<BigInt> = (0..=max_degree as usize)
        .map(|n| (0..=n).map(|k| h.coeff(k) * q[n - k]).sum())
        .collect();
    let witness = product
        .iter()
        .enumerate()
        .find(|(n, c)| **c != BigInt::from(i64::from(*n == 0)))
        .map(|(n, _)| n as u32);
    while q.len() > 1 && q.last() == Some(&0) {
        q.pop();
    }
    Ok(NciVerdict {
        is_nci: witness.is_none(),
        order: max_degree,
        generator_series: gen,
        relation_series: rel,
        one_minus_g_plus_r: q,
        product,
        witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub degree: u32,
    pub words: u64,
    pub dimension: u64,
    /// Rank of the word images modulo the ideal.
    pub rank: u64,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependenceReport {
    pub ok: bool,
    pub degrees: Vec<DegreeCheck>,
}

impl IndependenceReport {
    fn from_degrees(degrees: Vec<DegreeCheck>) -> Self {
        IndependenceReport {
            ok: degrees.iter().all(|d| d.ok),
            degrees,
        }
    }
}

/// Per degree: the images of the basis words are independent modulo the
/// ideal and as many as `dim A_n`, so they form a basis.
pub fn independence_check(
    g: &RankedDigraph,
    max_degree: u32,
    config: &OracleConfig,
) -> Result<IndependenceReport, OracleError> {
    let mut o = IdealOracle::new(g, config)?;
    o.ensure(max_degree)?;
    let words = enumerate_basis(g, max_degree)?;
    let eval = WordEvaluator::new(g)?;
    let mut degrees = Vec::new();
    for (n, group) in words.iter().enumerate() {
        let n = n as u32;
        let polys = group.iter().map(|w| eval.word(w)).collect::<Result<Vec<_>, _>>()?;
        let rank = o.rank_modulo(n, &polys);
        let dimension = o.quotient_dim(n);
        let count = group.len() as u64;
        degrees.push(DegreeCheck {
            degree: n,
            words: count,
            dimension,
            rank,
            ok: rank == count && count == dimension,
        });
    }
    Ok(IndependenceReport::from_degrees(degrees))
}

/// Per degree: the images under `map` of the basis words of `src` are
/// linearly independent modulo the ideal of `dst`.
pub fn injection_check(
    src: &RankedDigraph,
    dst: &RankedDigraph,
    map: &GeneratorMap,
    max_degree: u32,
    config: &OracleConfig,
) -> Result<IndependenceReport, OracleError> {
    let mut o = IdealOracle::new(dst, config)?;
    o.ensure(max_degree)?;
    let words = enumerate_basis(src, max_degree)?;
    let eval = WordEvaluator::new(src)?;
    let mut degrees = Vec::new();
    for (n, group) in words.iter().enumerate() {
        let n = n as u32;
        let polys = group
            .iter()
            .map(|w| map.apply(&eval.word(w)?))
            .collect::<Result<Vec<FreePolynomial>, _>>()?;
        let rank = o.rank_modulo(n, &polys);
        let count = group.len() as u64;
        degrees.push(DegreeCheck {
            degree: n,
            words: count,
            dimension: o.quotient_dim(n),
            rank,
            ok: rank == count,
        });
    }
    Ok(IndependenceReport::from_degrees(degrees))
}

/// Whether each homogeneous polynomial lies in the relation ideal of `g`.
pub fn ideal_contains(
    g: &RankedDigraph,
    polys: &[FreePolynomial],
    config: &OracleConfig,
) -> Result<Vec<bool>, OracleError> {
    let mut o = IdealOracle::new(g, config)?;
    let top = polys
        .iter()
        .filter_map(FreePolynomial::homogeneous_degree)
        .max()
        .unwrap_or(0);
    o.ensure(top)?;
    Ok(polys.iter().map(|p| o.contains(p)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_delta, gen_random_tree, parse_graph};
    use proptest::prelude::*;

    fn orbit_graph() -> RankedDigraph {
        parse_graph(
            "vertex a 3\nvertex b 2\nvertex c 1\nvertex star 0\n\
             edge e1 a b\nedge e2 a c\nedge e3 b star\nedge e4 c star\n",
        )
        .unwrap()
    }

    #[test]
    fn orbit_graph_dimensions() {
        let g = orbit_graph();
        let dims = graded_dimensions(&g, 5, &OracleConfig::default()).unwrap();
        assert_eq!(dims, vec![1, 3, 10, 32, 103, 331]);
    }

    #[test]
    fn orbit_graph_minimal_relations_and_nci() {
        let g = orbit_graph();
        let cfg = OracleConfig::default();
        assert_eq!(minimal_relation_series(&g, 6, &cfg).unwrap(), vec![0, 1, 1, 1, 0, 0, 0]);
        let v = nci_check(&g, 8, &cfg).unwrap();
        assert!(v.is_nci);
        assert_eq!(v.one_minus_g_plus_r, vec![1, -3, -1, 1]);
        assert_eq!(v.generator_series[..4], [0, 4, 2, 0]);
    }

    #[test]
    fn delta2_independence() {
        let r = independence_check(&gen_delta(2).unwrap(), 5, &OracleConfig::default()).unwrap();
        assert!(r.ok);
        assert_eq!(
            r.degrees.iter().map(|d| d.dimension).collect::<Vec<_>>(),
            vec![1, 1, 2, 3, 5, 8]
        );
    }

    #[test]
    fn orbit_graph_independence() {
        let r = independence_check(&orbit_graph(), 4, &OracleConfig::default()).unwrap();
        assert!(r.ok, "{r:?}");
        assert!(r.degrees[0].ok);
    }

    #[test]
    fn budget_error_names_degree() {
        let cfg = OracleConfig {
            budget_monomials: 50,
            ..Default::default()
        };
        match graded_dimensions(&orbit_graph(), 5, &cfg) {
            Err(OracleError::BudgetExceeded { degree, .. }) => assert_eq!(degree, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn all_pairs_generate_the_same_ideal() {
        let texts = [
            "vertex v 1\nvertex w 0\nedge a v w\nedge b v w\nedge c v w\n",
            "vertex v 2\nvertex m 1\nvertex w 0\nedge a v m\nedge b v m\nedge c m w\nedge d v w\n",
        ];
        for t in texts {
            let g = parse_graph(t).unwrap();
            let a = graded_dimensions(&g, 4, &OracleConfig::default()).unwrap();
            let b = graded_dimensions(
                &g,
                4,
                &OracleConfig {
                    all_pairs: true,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(a, b);
        }
        let g = orbit_graph();
        let cfg = OracleConfig {
            all_pairs: true,
            ..Default::default()
        };
        assert_eq!(graded_dimensions(&g, 4, &cfg).unwrap(), vec![1, 3, 10, 32, 103]);
    }

    #[test]
    fn relations_lie_in_ideal() {
        let g = orbit_graph();
        let rels = crate::algebra::relation_generators(&g, Default::default()).unwrap();
        let polys: Vec<_> = rels.iter().map(|r| r.poly.clone()).collect();
        assert!(ideal_contains(&g, &polys, &OracleConfig::default())
            .unwrap()
            .iter()
            .all(|&b| b));
        let x = FreePolynomial::generator(crate::algebra::Generator::new(g.edge_by_name("e1").unwrap(), 1));
        assert_eq!(ideal_contains(&g, &[x], &OracleConfig::default()).unwrap(), vec![false]);
    }

    proptest! {
        #[test]
        fn trees_are_free(n in 1usize..6, seed: u64) {
            let g = gen_random_tree(n, 3, seed).unwrap();
            let cfg = OracleConfig::default();
            let dims = graded_dimensions(&g, 5, &cfg).unwrap();
            let space = MonomialSpace::new(&g, 5);
            for (d, dim) in dims.iter().enumerate() {
                prop_assert_eq!(*dim, space.count(d as u32));
            }
            prop_assert!(minimal_relation_series(&g, 5, &cfg).unwrap().iter().all(|&r| r == 0));
            prop_assert!(nci_check(&g, 6, &cfg).unwrap().is_nci);
        }
    }
}
