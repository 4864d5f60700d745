//! Generalized layered graphs: finite directed graphs with a nonnegative
//! integer rank on every vertex, where every edge strictly lowers the rank.

mod generate;
mod glg;
mod rank;
mod reach;

pub use generate::{
    gen_chain, gen_delta, gen_random_dag, gen_random_tree, gen_sym_orbit, gen_tree, parse_lengths, parse_tree_spec,
    Permutation, TreeSpec,
};
pub use glg::{parse_digraph, parse_graph, ParseError, ParseErrorKind};
pub use rank::{
    canonical_rank, compare_rankings, enumerate_rank_functions, RankEnumeration, RankFunction, RankingOrder,
};
pub use reach::Reachability;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid name {0:?}: names must match [A-Za-z0-9_]+")]
    InvalidName(String),
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(String),
    #[error("edge {edge:?} refers to unknown vertex {vertex:?}")]
    UnknownVertex { edge: String, vertex: String },
    #[error("unknown vertex {0:?}")]
    NoSuchVertex(String),
    #[error("unknown edge {0:?}")]
    NoSuchEdge(String),
    #[error("edge {edge:?} is not rank-decreasing: rank({tail})={tail_rank} <= rank({head})={head_rank}")]
    NotRankDecreasing {
        edge: String,
        tail: String,
        head: String,
        tail_rank: u32,
        head_rank: u32,
    },
    #[error("vertex {0:?} has no rank")]
    MissingRank(String),
    #[error("directed cycle through vertex {0:?}")]
    Cycle(String),
    #[error("graph has no vertices")]
    Empty,
    #[error("expected a unique minimal vertex, found {}: [{}]", .0.len(), .0.join(", "))]
    MinimalVertexNotUnique(Vec<String>),
    #[error("expected a unique maximal vertex, found {}: [{}]", .0.len(), .0.join(", "))]
    MaximalVertexNotUnique(Vec<String>),
    #[error("minimal vertex {vertex:?} has rank {rank}, expected 0")]
    MinimalVertexNotAtZero { vertex: String, rank: u32 },
    #[error("rank function has {got} entries but the graph has {expected} vertices")]
    RankLengthMismatch { expected: usize, got: usize },
    #[error("rank function violates edge {0:?}")]
    InvalidRankFunction(String),
    #[error("invalid generator argument: {0}")]
    InvalidArgument(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub name: String,
    pub rank: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub tail: VertexId,
    pub head: VertexId,
}

pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// A directed graph whose vertices may or may not carry ranks. This is the
/// input type for rank computations; [`RankedDigraph`] is the validated form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Digraph {
    names: Vec<String>,
    ranks: Vec<Option<u32>>,
    index: HashMap<String, VertexId>,
    edges: Vec<(String, VertexId, VertexId)>,
    edge_index: HashMap<String, EdgeId>,
}

impl Digraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: &str, rank: Option<u32>) -> Result<VertexId, GraphError> {
        if !is_valid_name(name) {
            return Err(GraphError::InvalidName(name.to_string()));
        }
        if self.index.contains_key(name) {
            return Err(GraphError::DuplicateVertex(name.to_string()));
        }
        let id = VertexId(self.names.len());
        self.names.push(name.to_string());
        self.ranks.push(rank);
        self.index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn add_edge(&mut self, name: &str, tail: &str, head: &str) -> Result<EdgeId, GraphError> {
        if !is_valid_name(name) {
            return Err(GraphError::InvalidName(name.to_string()));
        }
        if self.edge_index.contains_key(name) {
            return Err(GraphError::DuplicateEdge(name.to_string()));
        }
        let lookup = |v: &str| {
            self.index.get(v).copied().ok_or_else(|| GraphError::UnknownVertex {
                edge: name.to_string(),
                vertex: v.to_string(),
            })
        };
        let (t, h) = (lookup(tail)?, lookup(head)?);
        let id = EdgeId(self.edges.len());
        self.edges.push((name.to_string(), t, h));
        self.edge_index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.names[v.0]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).copied()
    }

    pub fn given_rank(&self, v: VertexId) -> Option<u32> {
        self.ranks[v.0]
    }

    /// `(name, tail, head)` of every edge in stored order.
    pub fn edges(&self) -> impl Iterator<Item = (&str, VertexId, VertexId)> {
        self.edges.iter().map(|(n, t, h)| (n.as_str(), *t, *h))
    }

    pub fn out_neighbours(&self) -> Vec<Vec<VertexId>> {
        let mut out = vec![Vec::new(); self.names.len()];
        for (_, t, h) in &self.edges {
            out[t.0].push(*h);
        }
        out
    }

    /// Attach the given ranks, validating every edge.
    pub fn with_ranks(&self, ranks: &RankFunction) -> Result<RankedDigraph, GraphError> {
        if ranks.len() != self.names.len() {
            return Err(GraphError::RankLengthMismatch {
                expected: self.names.len(),
                got: ranks.len(),
            });
        }
        let mut b = RankedDigraph::builder();
        for (name, r) in self.names.iter().zip(ranks.iter()) {
            b.vertex(name, *r)?;
        }
        for (name, t, h) in &self.edges {
            b.edge(name, &self.names[t.0], &self.names[h.0])?;
        }
        Ok(b.build())
    }

    /// Validate using the ranks given in the input.
    pub fn into_ranked(&self) -> Result<RankedDigraph, GraphError> {
        let ranks = self
            .ranks
            .iter()
            .zip(&self.names)
            .map(|(r, n)| r.ok_or_else(|| GraphError::MissingRank(n.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        self.with_ranks(&RankFunction(ranks))
    }
}

/// A generalized layered graph.
///
/// Vertices and edges keep their insertion order; ids index into that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedDigraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    vertex_index: HashMap<String, VertexId>,
    edge_index: HashMap<String, EdgeId>,
    out_edges: Vec<Vec<EdgeId>>,
    in_edges: Vec<Vec<EdgeId>>,
}

#[derive(Debug, Default)]
pub struct GraphBuilder {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    vertex_index: HashMap<String, VertexId>,
    edge_index: HashMap<String, EdgeId>,
}

impl GraphBuilder {
    pub fn vertex(&mut self, name: &str, rank: u32) -> Result<VertexId, GraphError> {
        if !is_valid_name(name) {
            return Err(GraphError::InvalidName(name.to_string()));
        }
        if self.vertex_index.contains_key(name) {
            return Err(GraphError::DuplicateVertex(name.to_string()));
        }
        let id = VertexId(self.vertices.len());
        self.vertices.push(Vertex {
            name: name.to_string(),
            rank,
        });
        self.vertex_index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn edge(&mut self, name: &str, tail: &str, head: &str) -> Result<EdgeId, GraphError> {
        if !is_valid_name(name) {
            return Err(GraphError::InvalidName(name.to_string()));
        }
        if self.edge_index.contains_key(name) {
            return Err(GraphError::DuplicateEdge(name.to_string()));
        }
        let lookup = |v: &str| {
            self.vertex_index
                .get(v)
                .copied()
                .ok_or_else(|| GraphError::UnknownVertex {
                    edge: name.to_string(),
                    vertex: v.to_string(),
                })
        };
        let (t, h) = (lookup(tail)?, lookup(head)?);
        let (tr, hr) = (self.vertices[t.0].rank, self.vertices[h.0].rank);
        if tr <= hr {
            return Err(GraphError::NotRankDecreasing {
                edge: name.to_string(),
                tail: tail.to_string(),
                head: head.to_string(),
                tail_rank: tr,
                head_rank: hr,
            });
        }
        let id = EdgeId(self.edges.len());
        self.edges.push(Edge {
            name: name.to_string(),
            tail: t,
            head: h,
        });
        self.edge_index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn contains_vertex(&self, name: &str) -> bool {
        self.vertex_index.contains_key(name)
    }

    pub fn contains_edge(&self, name: &str) -> bool {
        self.edge_index.contains_key(name)
    }

    pub fn build(self) -> RankedDigraph {
        let n = self.vertices.len();
        let mut out_edges = vec![Vec::new(); n];
        let mut in_edges = vec![Vec::new(); n];
        for (i, e) in self.edges.iter().enumerate() {
            out_edges[e.tail.0].push(EdgeId(i));
            in_edges[e.head.0].push(EdgeId(i));
        }
        RankedDigraph {
            vertices: self.vertices,
            edges: self.edges,
            vertex_index: self.vertex_index,
            edge_index: self.edge_index,
            out_edges,
            in_edges,
        }
    }
}

impl RankedDigraph {
    pub fn builder() -> GraphBuilder {
        GraphBuilder::default()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + Clone {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = EdgeId> + Clone {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn vertex(&self, v: VertexId) -> &Vertex {
        &self.vertices[v.0]
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn vertex_by_name(&self, name: &str) -> Result<VertexId, GraphError> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::NoSuchVertex(name.to_string()))
    }

    pub fn edge_by_name(&self, name: &str) -> Result<EdgeId, GraphError> {
        self.edge_index
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::NoSuchEdge(name.to_string()))
    }

    pub fn has_vertex_named(&self, name: &str) -> bool {
        self.vertex_index.contains_key(name)
    }

    pub fn has_edge_named(&self, name: &str) -> bool {
        self.edge_index.contains_key(name)
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.vertices[v.0].name
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.0].name
    }

    pub fn rank(&self, v: VertexId) -> u32 {
        self.vertices[v.0].rank
    }

    pub fn tail(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].tail
    }

    pub fn head(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].head
    }

    /// `l(e) = rank(tail) - rank(head)`, always at least 1.
    pub fn length(&self, e: EdgeId) -> u32 {
        self.rank(self.tail(e)) - self.rank(self.head(e))
    }

    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_edges[v.0]
    }

    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.in_edges[v.0]
    }

    pub fn max_rank(&self) -> u32 {
        self.vertices.iter().map(|v| v.rank).max().unwrap_or(0)
    }

    pub fn ranks(&self) -> RankFunction {
        RankFunction(self.vertices.iter().map(|v| v.rank).collect())
    }

    /// Vertices without outgoing edges, in stored order.
    pub fn sinks(&self) -> Vec<VertexId> {
        self.vertices().filter(|v| self.out_edges(*v).is_empty()).collect()
    }

    /// Vertices without incoming edges, in stored order.
    pub fn sources(&self) -> Vec<VertexId> {
        self.vertices().filter(|v| self.in_edges(*v).is_empty()).collect()
    }

    pub fn unique_minimal_vertex(&self) -> Result<VertexId, GraphError> {
        if self.vertices.is_empty() {
            return Err(GraphError::Empty);
        }
        match self.sinks().as_slice() {
            [v] => Ok(*v),
            many => Err(GraphError::MinimalVertexNotUnique(
                many.iter().map(|v| self.name(*v).to_string()).collect(),
            )),
        }
    }

    pub fn unique_maximal_vertex(&self) -> Result<VertexId, GraphError> {
        if self.vertices.is_empty() {
            return Err(GraphError::Empty);
        }
        match self.sources().as_slice() {
            [v] => Ok(*v),
            many => Err(GraphError::MaximalVertexNotUnique(
                many.iter().map(|v| self.name(*v).to_string()).collect(),
            )),
        }
    }

    /// Whether the unique minimal vertex exists and sits at rank 0.
    pub fn has_rank_zero_sink(&self) -> bool {
        self.unique_minimal_vertex().map(|v| self.rank(v) == 0).unwrap_or(false)
    }

    /// The unique minimal vertex, required to have rank 0.
    pub fn rank_zero_sink(&self) -> Result<VertexId, GraphError> {
        let v = self.unique_minimal_vertex()?;
        match self.rank(v) {
            0 => Ok(v),
            rank => Err(GraphError::MinimalVertexNotAtZero {
                vertex: self.name(v).to_string(),
                rank,
            }),
        }
    }

    /// Vertices sorted by ascending rank (stable). Every edge points from a
    /// later entry to an earlier one.
    pub fn by_ascending_rank(&self) -> Vec<VertexId> {
        let mut order: Vec<VertexId> = self.vertices().collect();
        order.sort_by_key(|v| self.rank(*v));
        order
    }

    /// The underlying directed graph with the current ranks attached.
    pub fn to_digraph(&self) -> Digraph {
        let mut d = Digraph::new();
        for v in &self.vertices {
            d.add_vertex(&v.name, Some(v.rank)).expect("valid graph");
        }
        for e in &self.edges {
            d.add_edge(&e.name, self.name(e.tail), self.name(e.head))
                .expect("valid graph");
        }
        d
    }

    /// Undirected acyclic, connected, with a unique sink.
    pub fn is_rooted_tree(&self) -> bool {
        if self.vertices.is_empty() || self.edges.len() + 1 != self.vertices.len() {
            return false;
        }
        if self.unique_minimal_vertex().is_err() {
            return false;
        }
        // |E| = |V| - 1 plus connectivity gives a tree.
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.tail.0), find(&mut parent, e.head.0));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    /// Serialize to the `.glg` text format: vertices, then edges, in stored order.
    pub fn to_glg(&self) -> String {
        let mut s = String::new();
        for v in &self.vertices {
            s.push_str(&format!("vertex {} {}\n", v.name, v.rank));
        }
        for e in &self.edges {
            s.push_str(&format!(
                "edge {} {} {}\n",
                e.name,
                self.name(e.tail),
                self.name(e.head)
            ));
        }
        s
    }

    pub fn reachability(&self) -> Reachability {
        Reachability::new(self)
    }
}

impl fmt::Display for RankedDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_glg())
    }
}
