use std::collections::HashMap;

use super::coeff::Coeff;
use super::OracleError;
use crate::algebra::{generators, FreePolynomial, Generator, Monomial};
use crate::graph::RankedDigraph;

/// Sparse row: strictly increasing columns, no zero entries.
pub type Row = Vec<(u32, Coeff)>;

/// Degree-by-degree ranking of the monomials of `T(E#)` in lexicographic
/// order of generator ids.
#[derive(Debug, Clone)]
pub struct MonomialSpace {
    gens: Vec<Generator>,
    deg: Vec<u32>,
    ids: HashMap<Generator, usize>,
    /// Saturating monomial counts per degree.
    counts: Vec<u64>,
    /// `pre[r][x]`: number of degree-`r` words whose first letter precedes `x`.
    /// Has one extra trailing entry equal to `counts[r]`.
    pre: Vec<Vec<u64>>,
}

impl MonomialSpace {
    pub fn new(g: &RankedDigraph, max_degree: u32) -> Self {
        let gens = generators(g);
        let deg: Vec<u32> = gens.iter().map(Generator::degree).collect();
        let ids = gens.iter().enumerate().map(|(i, x)| (*x, i)).collect();
        let mut space = MonomialSpace {
            pre: vec![vec![0u64; gens.len() + 1]],
            gens,
            deg,
            ids,
            counts: vec![1u64],
        };
        space.extend_to(max_degree);
        space
    }

    pub fn extend_to(&mut self, max_degree: u32) {
        for r in self.max_degree() + 1..=max_degree {
            let mut row = Vec::with_capacity(self.gens.len() + 1);
            let mut acc = 0u64;
            for &d in &self.deg {
                row.push(acc);
                if d <= r {
                    acc = acc.saturating_add(self.counts[(r - d) as usize]);
                }
            }
            row.push(acc);
            self.counts.push(acc);
            self.pre.push(row);
        }
    }

    pub fn max_degree(&self) -> u32 {
        (self.counts.len() - 1) as u32
    }

    pub fn generator_count(&self) -> usize {
        self.gens.len()
    }

    pub fn generator(&self, x: usize) -> Generator {
        self.gens[x]
    }

    pub fn generator_degree(&self, x: usize) -> u32 {
        self.deg[x]
    }

    pub fn count(&self, n: u32) -> u64 {
        self.counts[n as usize]
    }

    pub fn offset(&self, n: u32, x: usize) -> u64 {
        self.pre[n as usize][x]
    }

    /// Errors when degree `n` has more monomials than `budget`.
    pub fn check_budget(&self, n: u32, budget: u64) -> Result<(), OracleError> {
        let c = self.count(n);
        if c > budget || c > u32::MAX as u64 {
            return Err(OracleError::BudgetExceeded {
                degree: n,
                monomials: c,
                budget,
            });
        }
        Ok(())
    }

    fn id(&self, x: &Generator) -> usize {
        self.ids[x]
    }

    /// Position of the prefix `w` among degree-`n` words: the first column of
    /// the block of words starting with `w`.
    pub fn prefix_position(&self, n: u32, w: &Monomial) -> u64 {
        let mut r = n;
        let mut idx = 0;
        for x in &w.0 {
            let i = self.id(x);
            idx += self.pre[r as usize][i];
            r -= self.deg[i];
        }
        idx
    }

    pub fn column(&self, m: &Monomial) -> u32 {
        self.prefix_position(m.degree(), m) as u32
    }

    /// First letter and position within its block of column `c` in degree `n`.
    pub fn split_first(&self, n: u32, c: u32) -> (usize, u32) {
        let row = &self.pre[n as usize];
        let x = row[..self.gens.len()].partition_point(|&p| p <= c as u64) - 1;
        (x, c - row[x] as u32)
    }

    pub fn word(&self, n: u32, mut c: u32) -> Vec<usize> {
        let mut out = Vec::new();
        let mut r = n;
        while r > 0 {
            let (x, local) = self.split_first(r, c);
            out.push(x);
            r -= self.deg[x];
            c = local;
        }
        out
    }

    /// Row of a polynomial homogeneous of degree `n`.
    pub fn row(&self, p: &FreePolynomial) -> Row {
        let mut row: Row = p.terms().map(|(m, c)| (self.column(m), Coeff::from_big(c))).collect();
        row.sort_by_key(|e| e.0);
        row
    }

    /// Column of `word(c) * x` when `word(c)` has degree `n`.
    pub fn right_multiply_column(&self, n: u32, c: u32, x: usize) -> u32 {
        let total = n + self.deg[x];
        let mut r = total;
        let mut idx = 0u64;
        for y in self.word(n, c) {
            idx += self.pre[r as usize][y];
            r -= self.deg[y];
        }
        (idx + self.pre[r as usize][x]) as u32
    }
}
