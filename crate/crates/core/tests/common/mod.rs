//! Independent reference computations for the integration tests. Nothing
//! here calls the library's algorithms; only graph accessors are used.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use glg::graph::{gen_chain, gen_delta, gen_random_dag, gen_sym_orbit, Permutation, RankedDigraph, VertexId};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Power series coefficients of `num / den` up to `order` by long division.
pub fn long_division(num: &[i64], den: &[i64], order: usize) -> Vec<BigInt> {
    assert_eq!(den[0].abs(), 1, "denominator must have unit constant term");
    let mut rem: Vec<BigInt> = (0..=order + den.len())
        .map(|k| BigInt::from(*num.get(k).unwrap_or(&0)))
        .collect();
    let mut out = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let q = &rem[k] * den[0];
        for (j, d) in den.iter().enumerate() {
            if k + j < rem.len() {
                rem[k + j] -= &q * d;
            }
        }
        out.push(q);
    }
    out
}

/// `above[v][w]`: a nonempty directed path runs from `v` to `w`.
pub fn strict_order(g: &RankedDigraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut above = vec![vec![false; n]; n];
    for v in g.vertices() {
        let mut stack: Vec<VertexId> = g.out_edges(v).iter().map(|&e| g.head(e)).collect();
        while let Some(x) = stack.pop() {
            if !above[v.0][x.0] {
                above[v.0][x.0] = true;
                stack.extend(g.out_edges(x).iter().map(|&e| g.head(e)));
            }
        }
    }
    above
}

/// Moebius value by summing `(-1)^k` over all chains `v = x0 > x1 > ... > xk = w`.
pub fn chain_sum_moebius(above: &[Vec<bool>], v: usize, w: usize) -> BigInt {
    fn walk(above: &[Vec<bool>], x: usize, w: usize, sign: i64, acc: &mut i64) {
        if x == w {
            *acc += sign;
            return;
        }
        for y in 0..above.len() {
            if above[x][y] && (y == w || above[y][w]) {
                walk(above, y, w, -sign, acc);
            }
        }
    }
    if v != w && !above[v][w] {
        return BigInt::zero();
    }
    let mut acc = 0;
    walk(above, v, w, 1, &mut acc);
    BigInt::from(acc)
}

/// Number of words of each degree in the letters `(v, k)`, `1 <= k <= rank(v)`,
/// `v` not the rank-zero sink, with no adjacent pair `(v, k)(w, rank(v) - rank(w))`
/// where `v > w`. Plain enumeration.
pub fn brute_basis_counts(g: &RankedDigraph, max_degree: u32) -> Vec<u64> {
    let above = strict_order(g);
    let mut letters = Vec::new();
    for v in g.vertices() {
        if g.rank(v) == 0 {
            continue;
        }
        for k in 1..=g.rank(v) {
            letters.push((v.0, k, g.rank(v)));
        }
    }
    let mut counts = vec![0u64; max_degree as usize + 1];
    fn grow(
        letters: &[(usize, u32, u32)],
        above: &[Vec<bool>],
        last: Option<(usize, u32, u32)>,
        deg: u32,
        max: u32,
        counts: &mut [u64],
    ) {
        counts[deg as usize] += 1;
        for &(w, l, rw) in letters {
            if deg + l > max {
                continue;
            }
            if let Some((v, k, rv)) = last {
                if above[v][w] && k == rv - rw {
                    continue;
                }
            }
            grow(letters, above, Some((w, l, rw)), deg + l, max, counts);
        }
    }
    grow(&letters, &above, None, 0, max_degree, &mut counts);
    counts
}

/// A word in the generators `a_i(e)`, as `(edge index, i)` pairs.
pub type Word = Vec<(usize, u32)>;
pub type Poly = BTreeMap<Word, BigRational>;

fn poly_add(p: &mut Poly, w: Word, c: BigRational) {
    let entry = p.entry(w.clone()).or_insert_with(BigRational::zero);
    *entry += c;
    if entry.is_zero() {
        p.remove(&w);
    }
}

/// Coefficients of `prod_e (1 + sum_j (-1)^j a_j(e) t^j)` along a path.
fn path_coefficients(g: &RankedDigraph, path: &[usize]) -> Vec<Poly> {
    let mut acc: Vec<Poly> = vec![Poly::from([(Vec::new(), BigRational::one())])];
    for &e in path {
        let len = g.length(glg::graph::EdgeId(e)) as usize;
        let mut next: Vec<Poly> = vec![Poly::new(); acc.len() + len];
        for (i, p) in acc.iter().enumerate() {
            for j in 0..=len {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                for (w, c) in p {
                    let mut w2 = w.clone();
                    if j > 0 {
                        w2.push((e, j as u32));
                    }
                    poly_add(&mut next[i + j], w2, c * BigRational::from_integer(sign.into()));
                }
            }
        }
        acc = next;
    }
    acc
}

fn all_paths(g: &RankedDigraph, v: VertexId, w: VertexId) -> Vec<Vec<usize>> {
    if v == w {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for &e in g.out_edges(v) {
        for mut rest in all_paths(g, g.head(e), w) {
            rest.insert(0, e.0);
            out.push(rest);
        }
    }
    out
}

/// Every coefficient difference of every pair of parallel paths.
pub fn brute_relations(g: &RankedDigraph) -> Vec<Poly> {
    let mut out = Vec::new();
    for v in g.vertices() {
        for w in g.vertices() {
            let paths = all_paths(g, v, w);
            let coeffs: Vec<Vec<Poly>> = paths.iter().map(|p| path_coefficients(g, p)).collect();
            for a in 0..coeffs.len() {
                for b in a + 1..coeffs.len() {
                    for (pa, pb) in coeffs[a].iter().zip(&coeffs[b]).skip(1) {
                        let mut d = pa.clone();
                        for (m, c) in pb {
                            poly_add(&mut d, m.clone(), -c.clone());
                        }
                        if !d.is_empty() {
                            out.push(d);
                        }
                    }
                }
            }
        }
    }
    out
}

fn words_of_degree(gens: &[(usize, u32)], n: u32) -> Vec<Word> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for &x in gens {
        if x.1 <= n {
            for rest in words_of_degree(gens, n - x.1) {
                let mut w = vec![x];
                w.extend(rest);
                out.push(w);
            }
        }
    }
    out
}

/// `dim A_n` by dense Gaussian elimination over the span of `u r v`.
/// Returns `None` when degree `n` has more than `limit` monomials.
pub fn brute_dimensions(g: &RankedDigraph, max_degree: u32, limit: usize) -> Option<Vec<u64>> {
    let gens: Vec<(usize, u32)> = g
        .edges()
        .flat_map(|e| (1..=g.length(e)).map(move |i| (e.0, i)))
        .collect();
    let rels = brute_relations(g);
    let degree = |w: &Word| w.iter().map(|x| x.1).sum::<u32>();
    let mut dims = Vec::new();
    for n in 0..=max_degree {
        let basis = words_of_degree(&gens, n);
        if basis.len() > limit {
            return None;
        }
        let index: HashMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut pivots: BTreeMap<usize, Vec<BigRational>> = BTreeMap::new();
        for r in &rels {
            let rd = degree(r.keys().next().expect("nonzero relation"));
            if rd > n {
                continue;
            }
            for split in 0..=(n - rd) {
                for u in words_of_degree(&gens, split) {
                    for v in words_of_degree(&gens, n - rd - split) {
                        let mut row = vec![BigRational::zero(); basis.len()];
                        for (m, c) in r {
                            let mut w = u.clone();
                            w.extend(m.iter().copied());
                            w.extend(v.iter().copied());
                            row[index[&w]] += c;
                        }
                        insert_row(&mut pivots, row);
                    }
                }
            }
        }
        dims.push((basis.len() - pivots.len()) as u64);
    }
    Some(dims)
}

fn insert_row(pivots: &mut BTreeMap<usize, Vec<BigRational>>, mut row: Vec<BigRational>) {
    loop {
        let Some(lead) = row.iter().position(|x| !x.is_zero()) else {
            return;
        };
        match pivots.get(&lead) {
            Some(p) => {
                let f = row[lead].clone() / &p[lead];
                for (a, b) in row.iter_mut().zip(p) {
                    if !b.is_zero() {
                        *a -= &f * b;
                    }
                }
            }
            None => {
                pivots.insert(lead, row);
                return;
            }
        }
    }
}

/// Coefficients as `i64` for readable assertions.
pub fn small(xs: &[BigInt]) -> Vec<i64> {
    xs.iter()
        .map(|x| {
            assert!(x.abs() < BigInt::from(i64::MAX));
            i64::try_from(x).expect("fits")
        })
        .collect()
}

pub fn orbit_graph() -> RankedDigraph {
    gen_sym_orbit(&Permutation::parse(3, "(1 2)").unwrap()).unwrap()
}

/// Parameters of the seeded random DAGs: at most six vertices, one sink.
pub fn random_suite_dag(seed: u64) -> RankedDigraph {
    let vertices = 3 + (seed % 4) as usize;
    let rank_bound = if seed.is_multiple_of(3) { 0 } else { vertices as u32 };
    gen_random_dag(vertices, 0.5, rank_bound, seed, true).unwrap()
}

/// The fixed graph suite: single edges, two chains, the orbit graph and ten random DAGs.
pub fn suite() -> Vec<(String, RankedDigraph)> {
    let mut out = Vec::new();
    for d in 1..=3 {
        out.push((format!("delta({d})"), gen_delta(d).unwrap()));
    }
    out.push(("chain(1,2)".into(), gen_chain(&[1, 2]).unwrap()));
    out.push(("chain(2,1)".into(), gen_chain(&[2, 1]).unwrap()));
    out.push(("orbit (1 2)".into(), orbit_graph()));
    for seed in 0..10 {
        out.push((format!("random dag seed {seed}"), random_suite_dag(seed)));
    }
    out
}
