//! Algebras of generalized layered graphs.
//!
//! A generalized layered graph is a finite directed graph with a rank on
//! every vertex such that each edge strictly lowers the rank. Each such graph
//! `G` carries a graded algebra `A(G)`: the free algebra on generators
//! `a_1(e), ..., a_l(e)` for every edge `e` of length `l`, modulo the
//! relations that make the path polynomials of parallel paths agree.
//!
//! This crate builds those algebras and computes their invariants:
//!
//! * [`graph`]: the graphs themselves, the `.glg` text format, ranking
//!   functions, reachability and generators.
//! * [`moebius`]: the Moebius function of the path order and the rank
//!   generating polynomial `M(G)(z)`.
//! * [`series`]: exact integer polynomials, truncated power series and the
//!   Hilbert series `(1 - z) / (1 - z M(G)(z))`.
//! * [`algebra`]: free noncommutative polynomials, path polynomials,
//!   relation generators, the monomial basis and generator maps.
//! * [`oracle`]: graded dimensions of `A(G)` by exact rational linear
//!   algebra, minimal relation counts and complete-intersection checks.
//! * [`ops`]: graph operations (add vertex, add edge, inversion, bouquets)
//!   and the series identities they satisfy.
//! * [`cli`]: the `glg` command-line front end.

pub mod algebra;
pub mod cli;
pub mod graph;
pub mod json;
pub mod moebius;
pub mod ops;
pub mod oracle;
pub mod series;
