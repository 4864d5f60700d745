//! Graph generators: the two-vertex graph of a single long edge, chains,
//! rooted trees, subset lattices of permutation orbits, and seeded random DAGs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GraphError, RankedDigraph};

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidArgument(msg.into())
}

/// One edge `e` of length `d` from `max` (rank `d`) to `min` (rank 0).
pub fn gen_delta(d: u32) -> Result<RankedDigraph, GraphError> {
    if d == 0 {
        return Err(invalid("delta graph needs d >= 1"));
    }
    let mut b = RankedDigraph::builder();
    b.vertex("max", d)?;
    b.vertex("min", 0)?;
    b.edge("e", "max", "min")?;
    Ok(b.build())
}

/// A chain `v0 -> v1 -> ... -> vk` whose edge lengths are listed from the top.
pub fn gen_chain(lengths: &[u32]) -> Result<RankedDigraph, GraphError> {
    if lengths.contains(&0) {
        return Err(invalid("chain edge lengths must be >= 1"));
    }
    let total: u32 = lengths.iter().sum();
    let mut b = RankedDigraph::builder();
    let mut rank = total;
    b.vertex("v0", rank)?;
    for (i, l) in lengths.iter().enumerate() {
        rank -= l;
        b.vertex(&format!("v{}", i + 1), rank)?;
        b.edge(&format!("e{}", i + 1), &format!("v{i}"), &format!("v{}", i + 1))?;
    }
    Ok(b.build())
}

pub fn parse_lengths(text: &str) -> Result<Vec<u32>, GraphError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| {
            let s = s.trim();
            match s.parse::<u32>() {
                Ok(l) if l >= 1 => Ok(l),
                _ => Err(invalid(format!("edge length {s:?} is not a positive integer"))),
            }
        })
        .collect()
}

/// A rooted tree: vertex `i` (1-based) hangs below `parent` by an edge of
/// `length`; vertex 0 is the root and unique sink, at rank 0.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TreeSpec {
    pub nodes: Vec<(usize, u32)>,
}

/// Parse `PARENT:LENGTH,PARENT:LENGTH,...`; entry `i` describes vertex `i + 1`.
pub fn parse_tree_spec(text: &str) -> Result<TreeSpec, GraphError> {
    let text = text.trim();
    let mut nodes = Vec::new();
    if text.is_empty() {
        return Ok(TreeSpec { nodes });
    }
    for (i, item) in text.split(',').enumerate() {
        let item = item.trim();
        let (p, l) = item
            .split_once(':')
            .ok_or_else(|| invalid(format!("tree entry {item:?} is not PARENT:LENGTH")))?;
        let parent: usize = p
            .trim()
            .parse()
            .map_err(|_| invalid(format!("tree parent {p:?} is not an integer")))?;
        let length: u32 = l
            .trim()
            .parse()
            .map_err(|_| invalid(format!("tree length {l:?} is not an integer")))?;
        if parent > i {
            return Err(invalid(format!(
                "vertex {} names parent {parent}, which is not an earlier vertex",
                i + 1
            )));
        }
        if length == 0 {
            return Err(invalid(format!("vertex {} has edge length 0", i + 1)));
        }
        nodes.push((parent, length));
    }
    Ok(TreeSpec { nodes })
}

pub fn gen_tree(spec: &TreeSpec) -> Result<RankedDigraph, GraphError> {
    let mut ranks = vec![0u32];
    for (i, &(parent, length)) in spec.nodes.iter().enumerate() {
        if parent > i || length == 0 {
            return Err(invalid(format!("bad tree entry for vertex {}", i + 1)));
        }
        let r = ranks[parent]
            .checked_add(length)
            .ok_or_else(|| invalid("tree ranks overflow"))?;
        ranks.push(r);
    }
    let mut b = RankedDigraph::builder();
    for (i, r) in ranks.iter().enumerate() {
        b.vertex(&format!("t{i}"), *r)?;
    }
    for (i, &(parent, _)) in spec.nodes.iter().enumerate() {
        b.edge(&format!("e{}", i + 1), &format!("t{}", i + 1), &format!("t{parent}"))?;
    }
    Ok(b.build())
}

/// A seeded random rooted tree with `vertices` vertices and edge lengths in `1..=max_len`.
pub fn gen_random_tree(vertices: usize, max_len: u32, seed: u64) -> Result<RankedDigraph, GraphError> {
    if vertices == 0 || max_len == 0 {
        return Err(invalid("random tree needs at least one vertex and max_len >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nodes = (1..vertices)
        .map(|i| (rng.gen_range(0..i), rng.gen_range(1..=max_len)))
        .collect();
    gen_tree(&TreeSpec { nodes })
}

/// A permutation of `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Parse cycle notation such as `(1 2)(3 4 5)`; `()`, `id` and the empty
    /// string denote the identity. Elements may be separated by spaces or commas.
    pub fn parse(n: usize, text: &str) -> Result<Self, GraphError> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n + 1];
        let text = text.trim();
        if text.is_empty() || text == "id" {
            return Ok(Permutation { images });
        }
        let mut rest = text;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| invalid(format!("expected '(' at {rest:?}")))?;
            let close = open.find(')').ok_or_else(|| invalid("unterminated cycle"))?;
            let body = &open[..close];
            rest = open[close + 1..].trim_start();
            let cycle = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| invalid(format!("{s:?} is not an element")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            for &x in &cycle {
                if x == 0 || x > n {
                    return Err(invalid(format!("element {x} is outside 1..={n}")));
                }
                if seen[x] {
                    return Err(invalid(format!("element {x} appears twice")));
                }
                seen[x] = true;
            }
            for (k, &x) in cycle.iter().enumerate() {
                images[x - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    /// Orbits on `{1..n}`, each sorted, ordered by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                orbit.push(x);
                x = self.apply(x);
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }
}

/// Hasse graph of the subsets of the orbit set of `perm`; a subset is ranked
/// by the number of points its orbits cover.
///
/// Vertices are named `s<m1>_<m2>...` after the smallest element of each
/// chosen orbit (`empty` for the empty set), listed by decreasing rank.
pub fn gen_sym_orbit(perm: &Permutation) -> Result<RankedDigraph, GraphError> {
    let orbits = perm.orbits();
    let k = orbits.len();
    if k > 16 {
        return Err(invalid(format!("{k} orbits give too many subsets")));
    }
    let size = |mask: usize| -> u32 {
        (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| orbits[i].len() as u32)
            .sum()
    };
    let name = |mask: usize| -> String {
        if mask == 0 {
            return "empty".to_string();
        }
        let mins: Vec<String> = (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| orbits[i][0].to_string())
            .collect();
        format!("s{}", mins.join("_"))
    };
    let mut masks: Vec<usize> = (0..1usize << k).collect();
    masks.sort_by(|a, b| size(*b).cmp(&size(*a)).then(b.cmp(a)));
    let mut b = RankedDigraph::builder();
    for &m in &masks {
        b.vertex(&name(m), size(m))?;
    }
    let mut count = 0;
    for &m in &masks {
        for i in (0..k).rev().filter(|i| m >> i & 1 == 1) {
            count += 1;
            b.edge(&format!("e{count}"), &name(m), &name(m & !(1 << i)))?;
        }
    }
    Ok(b.build())
}

/// Seeded random DAG on `vertices` vertices named `v0, v1, ...`.
///
/// Edges are sampled with probability `edge_prob` along a random topological
/// order. With `single_sink`, every other vertex without an outgoing edge is
/// joined to a random later vertex, leaving the last one as the unique sink.
/// Ranks are built bottom-up: sinks get 0, every other vertex a uniform rank
/// between one more than its highest head and `max(that, rank_bound)`. So
/// `rank_bound = 0` yields the canonical ranking.
pub fn gen_random_dag(
    vertices: usize,
    edge_prob: f64,
    rank_bound: u32,
    seed: u64,
    single_sink: bool,
) -> Result<RankedDigraph, GraphError> {
    if vertices == 0 {
        return Err(invalid("random DAG needs at least one vertex"));
    }
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(invalid(format!("edge probability {edge_prob} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut topo: Vec<usize> = (0..vertices).collect();
    topo.shuffle(&mut rng);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..vertices {
        for j in i + 1..vertices {
            if rng.gen_bool(edge_prob) {
                edges.push((topo[i], topo[j]));
            }
        }
    }
    if single_sink {
        for i in 0..vertices.saturating_sub(1) {
            if !edges.iter().any(|(t, _)| *t == topo[i]) {
                let j = rng.gen_range(i + 1..vertices);
                edges.push((topo[i], topo[j]));
            }
        }
    }
    let mut ranks = vec![0u32; vertices];
    for &v in topo.iter().rev() {
        let heads: Vec<u32> = edges.iter().filter(|(t, _)| *t == v).map(|(_, h)| ranks[*h]).collect();
        if let Some(hmax) = heads.iter().max() {
            let lo = hmax + 1;
            ranks[v] = rng.gen_range(lo..=lo.max(rank_bound));
        }
    }
    let mut b = RankedDigraph::builder();
    for (v, r) in ranks.iter().enumerate() {
        b.vertex(&format!("v{v}"), *r)?;
    }
    for (k, (t, h)) in edges.iter().enumerate() {
        b.edge(&format!("e{k}"), &format!("v{t}"), &format!("v{h}"))?;
    }
    Ok(b.build())
}
