use std::collections::HashMap;

use super::coeff::Coeff;
use super::space::{MonomialSpace, Row};
use super::{OracleConfig, OracleError};
use crate::algebra::{relation_generators, FreePolynomial, RelationOptions};
use crate::graph::RankedDigraph;

type Pivots = HashMap<u32, Row>;

#[derive(Debug, Clone, Default)]
struct Level {
    /// Echelon rows of `I_n` not coming from `x * I_(n - deg x)`, keyed by leading column.
    explicit: Pivots,
    /// Columns that lead no echelon row of `I_n`, ascending; they span a complement.
    standard: Vec<u32>,
    dim: u64,
}

/// Degree-wise echelon bases of the two-sided ideal generated by the
/// relations, `I_n = sum_x x I_(n - deg x) + sum_r r S_(n - deg r)`, where
/// `S_k` is spanned by the standard monomials of degree `k`. Right factors
/// in `I_k` are not needed since `r I_k` already lies in `sum_x x I`.
///
/// The left-multiple part is never stored: its pivots are found by peeling
/// off first letters and looking the remainder up in lower degrees. A
/// relation of degree `j` that already lies in `I_j` when its level is built
/// is marked redundant and contributes no rows to higher levels.
#[derive(Debug, Clone)]
pub struct IdealOracle {
    space: MonomialSpace,
    /// Sorted by degree.
    relations: Vec<(u32, FreePolynomial)>,
    redundant: Vec<bool>,
    levels: Vec<Level>,
    budget: u64,
}

fn sub_scaled(row: &Row, f: &Coeff, piv: &Row, off: u32) -> Row {
    let mut out = Vec::with_capacity(row.len() + piv.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < piv.len() {
        let pc = piv.get(j).map(|e| e.0 + off);
        match (row.get(i), pc) {
            (Some(a), Some(b)) if a.0 == b => {
                let v = a.1.sub_mul(f, &piv[j].1);
                if !v.is_zero() {
                    out.push((a.0, v));
                }
                i += 1;
                j += 1;
            }
            (Some(a), Some(b)) if a.0 < b => {
                out.push(a.clone());
                i += 1;
            }
            (Some(_), Some(b)) | (None, Some(b)) => {
                out.push((b, Coeff::neg_mul(f, &piv[j].1)));
                j += 1;
            }
            (Some(a), None) => {
                out.push(a.clone());
                i += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn normalize(mut row: Row) -> Row {
    let lead = row[0].1.clone();
    if !lead.is_one() {
        for e in &mut row {
            e.1 = e.1.div(&lead);
        }
    }
    row
}

impl IdealOracle {
    pub fn new(g: &RankedDigraph, config: &OracleConfig) -> Result<Self, OracleError> {
        let opts = RelationOptions {
            truncation: config.truncation,
            all_pairs: config.all_pairs,
            path_limit: config.path_limit,
        };
        let relations = relation_generators(g, opts)?
            .into_iter()
            .map(|r| (r.degree, r.poly))
            .collect();
        Ok(Self::from_relations(g, relations, config.budget_monomials))
    }

    /// Ideal generated by arbitrary homogeneous polynomials of positive degree.
    pub fn from_relations(g: &RankedDigraph, mut relations: Vec<(u32, FreePolynomial)>, budget: u64) -> Self {
        relations.sort_by_key(|r| r.0);
        IdealOracle {
            space: MonomialSpace::new(g, 0),
            redundant: vec![false; relations.len()],
            relations,
            levels: vec![Level {
                standard: vec![0],
                ..Level::default()
            }],
            budget,
        }
    }

    pub fn space(&self) -> &MonomialSpace {
        &self.space
    }

    pub fn max_relation_degree(&self) -> u32 {
        self.relations.iter().map(|r| r.0).max().unwrap_or(0)
    }

    pub fn built_degree(&self) -> u32 {
        (self.levels.len() - 1) as u32
    }

    pub fn monomial_count(&self, n: u32) -> u64 {
        self.space.count(n)
    }

    /// Builds the echelon bases up to degree `n`.
    pub fn ensure(&mut self, n: u32) -> Result<(), OracleError> {
        self.space.extend_to(n);
        while self.built_degree() < n {
            let d = self.built_degree() + 1;
            self.space.check_budget(d, self.budget)?;
            let (level, redundant) = self.build_level(d);
            for i in redundant {
                self.redundant[i] = true;
            }
            self.levels.push(level);
        }
        Ok(())
    }

    /// Echelon rows of degree `n`, and the degree-`n` relations found redundant.
    fn build_level(&self, n: u32) -> (Level, Vec<usize>) {
        let mut top = Pivots::new();
        let mut redundant = Vec::new();
        let space = &self.space;
        for (i, (j, rel)) in self.relations.iter().enumerate() {
            if *j > n || self.redundant[i] {
                continue;
            }
            let terms: Vec<(u64, Coeff)> = {
                let mut t: Vec<_> = rel
                    .terms()
                    .map(|(m, c)| (space.prefix_position(n, m), Coeff::from_big(c)))
                    .collect();
                t.sort_by_key(|e| e.0);
                t
            };
            for &pos in &self.levels[(n - j) as usize].standard {
                let row: Row = terms
                    .iter()
                    .map(|(p, c)| ((p + pos as u64) as u32, c.clone()))
                    .collect();
                let rem = self.reduce(row, n, &[&top]);
                if !rem.is_empty() {
                    let rem = normalize(rem);
                    top.insert(rem[0].0, rem);
                } else if *j == n {
                    redundant.push(i);
                }
            }
        }
        let mut standard = Vec::new();
        for x in (0..space.generator_count()).filter(|&x| space.generator_degree(x) <= n) {
            let off = space.offset(n, x) as u32;
            let lower = &self.levels[(n - space.generator_degree(x)) as usize];
            standard.extend(lower.standard.iter().map(|s| s + off).filter(|c| !top.contains_key(c)));
        }
        debug_assert_eq!(
            space.count(n) - standard.len() as u64,
            top.len() as u64
                + (0..space.generator_count())
                    .filter(|&x| space.generator_degree(x) <= n)
                    .map(|x| self.levels[(n - space.generator_degree(x)) as usize].dim)
                    .sum::<u64>()
        );
        let level = Level {
            dim: space.count(n) - standard.len() as u64,
            explicit: top,
            standard,
        };
        (level, redundant)
    }

    /// Pivot row with leading column `c` in degree `n`, with the column
    /// offset to add to its entries. `tops` replace the explicit rows of degree `n`.
    fn find_pivot<'a>(&'a self, n: u32, c: u32, tops: &[&'a Pivots]) -> Option<(u32, &'a Row)> {
        if let Some(r) = tops.iter().find_map(|t| t.get(&c)) {
            return Some((0, r));
        }
        let (mut n, mut c, mut off) = (n, c, 0u32);
        while n > 0 {
            let (x, local) = self.space.split_first(n, c);
            off += self.space.offset(n, x) as u32;
            n -= self.space.generator_degree(x);
            c = local;
            let level = &self.levels[n as usize];
            if level.dim == 0 {
                return None;
            }
            if let Some(r) = level.explicit.get(&c) {
                return Some((off, r));
            }
        }
        None
    }

    /// Reduces leading terms until the row is zero or its leading column has no pivot.
    fn reduce(&self, mut row: Row, n: u32, tops: &[&Pivots]) -> Row {
        while let Some((c, f)) = row.first() {
            match self.find_pivot(n, *c, tops) {
                Some((off, piv)) => {
                    let f = f.clone();
                    row = sub_scaled(&row, &f, piv, off);
                }
                None => break,
            }
        }
        row
    }

    /// `dim I_n`; requires `ensure(n)`.
    pub fn ideal_dim(&self, n: u32) -> u64 {
        self.levels[n as usize].dim
    }

    pub fn quotient_dim(&self, n: u32) -> u64 {
        self.space.count(n) - self.ideal_dim(n)
    }

    /// Membership of a polynomial homogeneous of degree `n`; requires `ensure(n)`.
    pub fn contains(&self, p: &FreePolynomial) -> bool {
        let Some(n) = p.homogeneous_degree() else {
            return p.is_zero();
        };
        let row = self.space.row(p);
        self.reduce(row, n, &[&self.levels[n as usize].explicit]).is_empty()
    }

    /// Rank of the given degree-`n` polynomials modulo `I_n`; requires `ensure(n)`.
    pub fn rank_modulo(&self, n: u32, polys: &[FreePolynomial]) -> u64 {
        let mut overlay = Pivots::new();
        let base = &self.levels[n as usize].explicit;
        for p in polys {
            let rem = self.reduce(self.space.row(p), n, &[base, &overlay]);
            if !rem.is_empty() {
                let rem = normalize(rem);
                overlay.insert(rem[0].0, rem);
            }
        }
        overlay.len() as u64
    }

    /// A full echelon basis of `I_n`.
    fn basis_rows(&self, n: u32) -> Vec<Row> {
        let level = &self.levels[n as usize];
        let mut out: Vec<Row> = level.explicit.values().cloned().collect();
        for x in 0..self.space.generator_count() {
            let d = self.space.generator_degree(x);
            if d > n || self.levels[(n - d) as usize].dim == 0 {
                continue;
            }
            let off = self.space.offset(n, x) as u32;
            for row in self.basis_rows(n - d) {
                out.push(row.into_iter().map(|(c, v)| (c + off, v)).collect());
            }
        }
        out
    }

    /// Number of degree-`n` relations independent modulo
    /// `T_+ I + I T_+`; requires `ensure(n)`.
    pub fn minimal_relations(&self, n: u32) -> u64 {
        let space = &self.space;
        let mut dec = Pivots::new();
        for x in 0..space.generator_count() {
            let d = space.generator_degree(x);
            if d >= n || self.levels[(n - d) as usize].dim == 0 {
                continue;
            }
            let m = n - d;
            for b in self.basis_rows(m) {
                let mut row: Row = b
                    .into_iter()
                    .map(|(c, v)| (space.right_multiply_column(m, c, x), v))
                    .collect();
                row.sort_by_key(|e| e.0);
                let rem = self.reduce(row, n, &[&dec]);
                if !rem.is_empty() {
                    let rem = normalize(rem);
                    dec.insert(rem[0].0, rem);
                }
            }
        }
        let mut fresh = 0;
        for (j, rel) in &self.relations {
            if *j != n {
                continue;
            }
            let rem = self.reduce(space.row(rel), n, &[&dec]);
            if !rem.is_empty() {
                let rem = normalize(rem);
                dec.insert(rem[0].0, rem);
                fresh += 1;
            }
        }
        fresh
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;
    use crate::graph::parse_graph;

    #[test]
    fn subtraction_merges_columns() {
        let r = |v: &[(u32, i64)]| -> Row { v.iter().map(|&(c, x)| (c, Coeff::from_big(&rational(x)))).collect() };
        let a = r(&[(0, 1), (2, 3), (5, 1)]);
        let p = r(&[(0, 1), (1, 1), (3, 1)]);
        assert_eq!(
            sub_scaled(&a, &Coeff::from_big(&rational(1)), &p, 2),
            r(&[(0, 1), (2, 2), (3, -1)])
        );
    }

    #[test]
    fn parallel_edges_quotient() {
        // a1(e) = a1(f): the quotient is the polynomial ring in one variable.
        let g = parse_graph("vertex v 1\nvertex w 0\nedge e v w\nedge f v w\n").unwrap();
        let mut o = IdealOracle::new(&g, &OracleConfig::default()).unwrap();
        o.ensure(6).unwrap();
        for n in 0..=6 {
            assert_eq!(o.quotient_dim(n), 1);
            assert_eq!(o.ideal_dim(n) + 1, 1 << n);
        }
        assert_eq!(o.minimal_relations(1), 1);
        assert_eq!(o.minimal_relations(2), 0);
    }
}
