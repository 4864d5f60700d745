use num_bigint::BigUint;
use num_traits::Zero;

use super::free::FreePolynomial;
use super::paths::VertexPolys;
use super::AlgebraError;
use crate::graph::{RankedDigraph, Reachability, VertexId};

/// Letter `(v, k)` standing for `e(v, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub vertex: VertexId,
    pub k: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BasisWord(pub Vec<Letter>);

impl BasisWord {
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|l| l.k).sum()
    }

    pub fn render(&self, g: &RankedDigraph) -> String {
        self.0
            .iter()
            .map(|l| format!("({},{})", g.name(l.vertex), l.k))
            .collect()
    }
}

/// `(v, k) covers (w, l)` iff `v > w` and `k = |v| - |w|`.
pub fn is_cover(g: &RankedDigraph, reach: &Reachability, x: Letter, y: Letter) -> bool {
    reach.reaches(x.vertex, y.vertex) && x.k == g.rank(x.vertex) - g.rank(y.vertex)
}

/// All letters in vertex order, then by `k`.
pub fn letters(g: &RankedDigraph) -> Result<Vec<Letter>, AlgebraError> {
    let sink = g.rank_zero_sink()?;
    Ok(g.vertices()
        .filter(|&v| v != sink)
        .flat_map(|v| (1..=g.rank(v)).map(move |k| Letter { vertex: v, k }))
        .collect())
}

/// `follow[x]` lists the letters allowed right after `x`.
fn successor_table(g: &RankedDigraph, letters: &[Letter]) -> Vec<Vec<usize>> {
    let reach = g.reachability();
    letters
        .iter()
        .map(|&x| {
            (0..letters.len())
                .filter(|&j| !is_cover(g, &reach, x, letters[j]))
                .collect()
        })
        .collect()
}

/// Words of `B(G)` grouped by degree `0..=n`, each group in lexicographic order.
pub fn enumerate_basis(g: &RankedDigraph, n: u32) -> Result<Vec<Vec<BasisWord>>, AlgebraError> {
    let ls = letters(g)?;
    let follow = successor_table(g, &ls);
    // by_first[d][x]: words of degree d starting with letter x, in lex order.
    let mut by_first: Vec<Vec<Vec<BasisWord>>> = Vec::with_capacity(n as usize + 1);
    let mut out = Vec::with_capacity(n as usize + 1);
    by_first.push(vec![Vec::new(); ls.len()]);
    out.push(vec![BasisWord::default()]);
    for d in 1..=n {
        let mut row = vec![Vec::new(); ls.len()];
        for (xi, x) in ls.iter().enumerate() {
            if x.k > d {
                continue;
            }
            let rest = (d - x.k) as usize;
            let words = &mut row[xi];
            if rest == 0 {
                words.push(BasisWord(vec![*x]));
                continue;
            }
            for &yi in &follow[xi] {
                for w in &by_first[rest][yi] {
                    let mut v = Vec::with_capacity(w.0.len() + 1);
                    v.push(*x);
                    v.extend_from_slice(&w.0);
                    words.push(BasisWord(v));
                }
            }
        }
        out.push(row.iter().flatten().cloned().collect());
        by_first.push(row);
    }
    Ok(out)
}

/// Number of words of `B(G)` in each degree `0..=n`, without building them.
pub fn count_basis(g: &RankedDigraph, n: u32) -> Result<Vec<BigUint>, AlgebraError> {
    let ls = letters(g)?;
    let follow = successor_table(g, &ls);
    let mut first: Vec<Vec<BigUint>> = vec![vec![BigUint::zero(); ls.len()]];
    let mut totals = vec![BigUint::from(1u32)];
    for d in 1..=n {
        let mut row = vec![BigUint::zero(); ls.len()];
        for (xi, x) in ls.iter().enumerate() {
            if x.k > d {
                continue;
            }
            let rest = (d - x.k) as usize;
            row[xi] = if rest == 0 {
                BigUint::from(1u32)
            } else {
                follow[xi].iter().map(|&y| &first[rest][y]).sum()
            };
        }
        totals.push(row.iter().sum());
        first.push(row);
    }
    Ok(totals)
}

/// Evaluates words as products of `e(v, k)`, reusing the canonical path polynomials.
#[derive(Debug, Clone)]
pub struct WordEvaluator<'g> {
    g: &'g RankedDigraph,
    polys: VertexPolys,
}

impl<'g> WordEvaluator<'g> {
    pub fn new(g: &'g RankedDigraph) -> Result<Self, AlgebraError> {
        Ok(WordEvaluator {
            g,
            polys: VertexPolys::new(g)?,
        })
    }

    pub fn letter(&self, l: Letter) -> Result<&FreePolynomial, AlgebraError> {
        let invalid = || AlgebraError::InvalidLetter {
            vertex: if l.vertex.0 < self.g.vertex_count() {
                self.g.name(l.vertex).to_string()
            } else {
                format!("#{}", l.vertex.0)
            },
            k: l.k,
        };
        if l.vertex.0 >= self.g.vertex_count() || l.k == 0 {
            return Err(invalid());
        }
        match self.polys.get(l.vertex) {
            Some(p) if (l.k as usize) <= p.length() => Ok(p.coeff(l.k as usize)),
            _ => Err(invalid()),
        }
    }

    pub fn word(&self, w: &BasisWord) -> Result<FreePolynomial, AlgebraError> {
        let mut acc = FreePolynomial::one();
        for &l in &w.0 {
            acc = &acc * self.letter(l)?;
        }
        Ok(acc)
    }
}

/// `e(v1, k1) ... e(vr, kr)`.
pub fn basis_word_to_free_poly(g: &RankedDigraph, word: &BasisWord) -> Result<FreePolynomial, AlgebraError> {
    WordEvaluator::new(g)?.word(word)
}
