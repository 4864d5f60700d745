use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{RankedDigraph, VertexId};

/// Transitive closure of the edge relation together with directed path counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reachability {
    reaches: Vec<Vec<bool>>,
    paths: Vec<Vec<BigUint>>,
}

impl Reachability {
    pub fn new(g: &RankedDigraph) -> Self {
        let n = g.vertex_count();
        let mut reaches = vec![vec![false; n]; n];
        let mut paths = vec![vec![BigUint::zero(); n]; n];
        // Heads have strictly smaller rank, so they are finished first.
        for v in g.by_ascending_rank() {
            paths[v.0][v.0] = BigUint::one();
            for &e in g.out_edges(v) {
                let h = g.head(e).0;
                let row_h = std::mem::take(&mut paths[h]);
                for (acc, c) in paths[v.0].iter_mut().zip(&row_h) {
                    if !c.is_zero() {
                        *acc += c;
                    }
                }
                paths[h] = row_h;
            }
            for w in 0..n {
                reaches[v.0][w] = w != v.0 && !paths[v.0][w].is_zero();
            }
        }
        Reachability { reaches, paths }
    }

    /// Strict path order: a directed path of at least one edge exists.
    pub fn reaches(&self, v: VertexId, w: VertexId) -> bool {
        self.reaches[v.0][w.0]
    }

    /// `v >= w` in the path order.
    pub fn ge(&self, v: VertexId, w: VertexId) -> bool {
        v == w || self.reaches[v.0][w.0]
    }

    /// Number of directed paths from `v` to `w`; 1 for `v == w`.
    pub fn path_count(&self, v: VertexId, w: VertexId) -> &BigUint {
        &self.paths[v.0][w.0]
    }

    pub fn vertex_count(&self) -> usize {
        self.reaches.len()
    }

    /// Vertices strictly below `v`, in vertex order.
    pub fn below(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.reaches[v.0]
            .iter()
            .enumerate()
            .filter(|(_, r)| **r)
            .map(|(w, _)| VertexId(w))
    }
}

#[cfg(test)]
mod tests {
    use crate::graph::{parse_graph, VertexId};

    #[test]
    fn orbit_graph_reachability() {
        let g = parse_graph(
            "vertex a 3\nvertex b 2\nvertex c 1\nvertex star 0\n\
             edge e1 a b\nedge e2 a c\nedge e3 b star\nedge e4 c star\n",
        )
        .unwrap();
        let r = g.reachability();
        let (a, b, c, s) = (VertexId(0), VertexId(1), VertexId(2), VertexId(3));
        assert!(r.reaches(a, s));
        assert_eq!(r.path_count(a, s), &2u32.into());
        assert!(!r.reaches(b, c) && !r.reaches(c, b));
        assert!(!r.reaches(a, a));
        assert_eq!(r.path_count(a, a), &1u32.into());
    }

    #[test]
    fn parallel_edges_count_twice() {
        let g = parse_graph("vertex v 1\nvertex w 0\nedge e v w\nedge f v w\n").unwrap();
        let r = g.reachability();
        assert_eq!(r.path_count(VertexId(0), VertexId(1)), &2u32.into());
    }
}
