//! The free algebra on edge generators, path polynomials, the relation
//! ideal, the monomial basis `B(G)` and generator maps induced by graph maps.

mod basis;
mod free;
mod maps;
mod paths;

pub use basis::{
    basis_word_to_free_poly, count_basis, enumerate_basis, is_cover, letters, BasisWord, Letter, WordEvaluator,
};
pub use free::{generators, rational, FreePolynomial, Generator, Monomial};
pub use maps::{add_vertex_map, GeneratorMap, Morphism};
pub use paths::{
    canonical_path, check_path, edge_poly, path_poly, paths_between, relation_generators, vertex_coeff, PathPoly,
    Relation, RelationOptions, VertexPolys,
};

use thiserror::Error;

use crate::graph::GraphError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("not a path: edge {edge:?} at position {position} does not start where the previous edge ends")]
    BrokenPath { position: usize, edge: String },
    #[error("index {index} out of range 1..={rank} for vertex {vertex:?}")]
    IndexOutOfRange { vertex: String, index: u32, rank: u32 },
    #[error("vertex {0:?} is the minimal vertex")]
    MinimalVertex(String),
    #[error("{count} paths from {tail:?} to {head:?} exceed the limit of {limit}")]
    PathLimit {
        tail: String,
        head: String,
        count: String,
        limit: usize,
    },
    #[error("morphism law violated at edge {edge:?}: {reason}")]
    MorphismLaw { edge: String, reason: String },
    #[error("invalid letter ({vertex}, {k})")]
    InvalidLetter { vertex: String, k: u32 },
    #[error("no image for generator {0}")]
    MissingGenerator(String),
    #[error("invalid split of edge {edge:?} of length {length} at {index}")]
    InvalidSplit { edge: String, length: u32, index: u32 },
}
