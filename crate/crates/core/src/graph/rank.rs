use std::cmp::Ordering;

use serde::Serialize;

use super::{Digraph, GraphError, VertexId};

/// A rank per vertex, indexed by vertex order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct RankFunction(pub Vec<u32>);

impl RankFunction {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: VertexId) -> u32 {
        self.0[v.0]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u32> {
        self.0.iter()
    }

    pub fn max_rank(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn is_valid_for(&self, g: &Digraph) -> bool {
        self.len() == g.vertex_count() && g.edges().all(|(_, t, h)| self.get(t) > self.get(h))
    }
}

/// Longest outgoing path length (in edges) for every vertex; sinks get 0.
pub fn canonical_rank(g: &Digraph) -> Result<RankFunction, GraphError> {
    let n = g.vertex_count();
    let out = g.out_neighbours();
    let mut preds = vec![Vec::new(); n];
    let mut remaining_out = vec![0usize; n];
    for (_, t, h) in g.edges() {
        preds[h.0].push(t);
        remaining_out[t.0] += 1;
    }
    let mut rank = vec![0u32; n];
    let mut done = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| remaining_out[v] == 0).collect();
    while let Some(v) = stack.pop() {
        done[v] = true;
        for p in &preds[v] {
            rank[p.0] = rank[p.0].max(rank[v] + 1);
            remaining_out[p.0] -= 1;
            if remaining_out[p.0] == 0 {
                stack.push(p.0);
            }
        }
    }
    if let Some(start) = (0..n).find(|&v| !done[v]) {
        // Every unfinished vertex has an unfinished successor; walk until a repeat.
        let mut seen = vec![false; n];
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            v = out[v].iter().find(|w| !done[w.0]).expect("unfinished successor").0;
        }
        return Err(GraphError::Cycle(g.vertex_name(VertexId(v)).to_string()));
    }
    Ok(RankFunction(rank))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankEnumeration {
    pub bound: u32,
    pub canonical_max: u32,
    /// Set when `bound` is below the canonical maximum; `functions` is then empty.
    pub below_canonical: bool,
    pub functions: Vec<RankFunction>,
}

/// All rank functions with values in `0..=bound`, in lexicographic order of
/// the rank vector (vertex order).
pub fn enumerate_rank_functions(g: &Digraph, bound: u32) -> Result<RankEnumeration, GraphError> {
    let canonical = canonical_rank(g)?;
    let canonical_max = canonical.max_rank();
    let mut result = RankEnumeration {
        bound,
        canonical_max,
        below_canonical: bound < canonical_max,
        functions: Vec::new(),
    };
    if result.below_canonical {
        return Ok(result);
    }
    let n = g.vertex_count();
    // depth(v): longest path ending at v, giving rank(v) <= bound - depth(v).
    let rev = {
        let mut r = Digraph::new();
        for name in g.vertex_names() {
            r.add_vertex(name, None).expect("names already valid");
        }
        for (name, t, h) in g.edges() {
            r.add_edge(name, g.vertex_name(h), g.vertex_name(t))
                .expect("names already valid");
        }
        r
    };
    let depth = canonical_rank(&rev)?;
    // Constraints against earlier vertices only: (other, other_must_be_greater).
    let mut constraints: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
    for (_, t, h) in g.edges() {
        let (t, h) = (t.0, h.0);
        if t > h {
            constraints[t].push((h, false));
        } else {
            constraints[h].push((t, true));
        }
    }
    let mut current = vec![0u32; n];
    fn go(
        i: usize,
        bound: u32,
        lower: &[u32],
        depth: &[u32],
        constraints: &[Vec<(usize, bool)>],
        current: &mut Vec<u32>,
        out: &mut Vec<RankFunction>,
    ) {
        if i == current.len() {
            out.push(RankFunction(current.clone()));
            return;
        }
        let hi = bound - depth[i];
        for r in lower[i]..=hi {
            let ok = constraints[i].iter().all(|&(other, other_greater)| {
                if other_greater {
                    current[other] > r
                } else {
                    r > current[other]
                }
            });
            if ok {
                current[i] = r;
                go(i + 1, bound, lower, depth, constraints, current, out);
            }
        }
    }
    go(
        0,
        bound,
        &canonical.0,
        &depth.0,
        &constraints,
        &mut current,
        &mut result.functions,
    );
    Ok(result)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RankingOrder {
    Equal,
    Ge,
    Le,
    Incomparable,
}

/// Compare two rankings of the same graph through the tail rank of every edge.
pub fn compare_rankings(g: &Digraph, r1: &RankFunction, r2: &RankFunction) -> Result<RankingOrder, GraphError> {
    for r in [r1, r2] {
        if r.len() != g.vertex_count() {
            return Err(GraphError::RankLengthMismatch {
                expected: g.vertex_count(),
                got: r.len(),
            });
        }
        if let Some((name, _, _)) = g.edges().find(|(_, t, h)| r.get(*t) <= r.get(*h)) {
            return Err(GraphError::InvalidRankFunction(name.to_string()));
        }
    }
    let (mut ge, mut le) = (true, true);
    for (_, t, _) in g.edges() {
        match r1.get(t).cmp(&r2.get(t)) {
            Ordering::Greater => le = false,
            Ordering::Less => ge = false,
            Ordering::Equal => {}
        }
    }
    Ok(match (ge, le) {
        (true, true) => RankingOrder::Equal,
        (true, false) => RankingOrder::Ge,
        (false, true) => RankingOrder::Le,
        (false, false) => RankingOrder::Incomparable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_digraph;

    fn dag(text: &str) -> Digraph {
        parse_digraph(text).unwrap()
    }

    #[test]
    fn canonical_chain() {
        let g = dag("vertex a\nvertex b\nvertex c\nedge x a b\nedge y b c\n");
        assert_eq!(canonical_rank(&g).unwrap().0, vec![2, 1, 0]);
    }

    #[test]
    fn canonical_orbit_graph_ignores_given_ranks() {
        let g = dag("vertex a 3\nvertex b 2\nvertex c 1\nvertex star 0\n\
             edge e1 a b\nedge e2 a c\nedge e3 b star\nedge e4 c star\n");
        assert_eq!(canonical_rank(&g).unwrap().0, vec![2, 1, 1, 0]);
    }

    #[test]
    fn canonical_single_vertex_and_cycle() {
        assert_eq!(canonical_rank(&dag("vertex a\n")).unwrap().0, vec![0]);
        let cyc = dag("vertex a\nvertex b\nvertex c\nedge x a b\nedge y b a\nedge z c a\n");
        match canonical_rank(&cyc) {
            Err(GraphError::Cycle(v)) => assert!(v == "a" || v == "b"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn enumeration_examples() {
        let one = dag("vertex a\n");
        assert_eq!(enumerate_rank_functions(&one, 2).unwrap().functions.len(), 3);

        let edge = dag("vertex a\nvertex s\nedge e a s\n");
        let r1 = enumerate_rank_functions(&edge, 1).unwrap();
        assert_eq!(r1.functions, vec![RankFunction(vec![1, 0])]);
        let r2 = enumerate_rank_functions(&edge, 2).unwrap();
        let got: Vec<_> = r2.functions.iter().map(|r| r.0.clone()).collect();
        assert_eq!(got, vec![vec![1, 0], vec![2, 0], vec![2, 1]]);

        let low = enumerate_rank_functions(&edge, 0).unwrap();
        assert!(low.below_canonical && low.functions.is_empty());
    }

    #[test]
    fn enumeration_matches_exhaustive_search() {
        // Edges declared against vertex order exercise both constraint directions.
        let g = dag("vertex s\nvertex a\nvertex b\nedge x a s\nedge y b a\nedge z b s\n");
        for bound in 2..5u32 {
            let mut expected = Vec::new();
            for r0 in 0..=bound {
                for r1 in 0..=bound {
                    for r2 in 0..=bound {
                        let r = RankFunction(vec![r0, r1, r2]);
                        if r.is_valid_for(&g) {
                            expected.push(r);
                        }
                    }
                }
            }
            assert_eq!(enumerate_rank_functions(&g, bound).unwrap().functions, expected);
        }
    }

    #[test]
    fn comparisons() {
        let edge = dag("vertex a\nvertex s\nedge e a s\n");
        let r = |v: &[u32]| RankFunction(v.to_vec());
        assert_eq!(
            compare_rankings(&edge, &r(&[2, 0]), &r(&[2, 0])).unwrap(),
            RankingOrder::Equal
        );
        assert_eq!(
            compare_rankings(&edge, &r(&[2, 0]), &r(&[1, 0])).unwrap(),
            RankingOrder::Ge
        );
        assert_eq!(
            compare_rankings(&edge, &r(&[1, 0]), &r(&[2, 0])).unwrap(),
            RankingOrder::Le
        );
        let two = dag("vertex a\nvertex s\nvertex b\nvertex t\nedge e a s\nedge f b t\n");
        assert_eq!(
            compare_rankings(&two, &r(&[2, 0, 1, 0]), &r(&[1, 0, 2, 0])).unwrap(),
            RankingOrder::Incomparable
        );
        assert!(compare_rankings(&edge, &r(&[1]), &r(&[1, 0])).is_err());
        assert!(compare_rankings(&edge, &r(&[0, 1]), &r(&[1, 0])).is_err());
    }
}
