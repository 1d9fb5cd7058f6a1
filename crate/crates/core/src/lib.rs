//! Exact toughness toolkit for small graphs.
//!
//! * [`graph`]: bitset graphs on at most 64 vertices, graph6 and edge-list
//!   I/O, and the classical subroutines (components, α, κ, claws,
//!   Hamiltonian cycles).
//! * [`toughness`]: exact τ(G), tough sets and t-toughness tests.
//! * [`minimality`]: minimally t-tough / minimally k-connected certificates
//!   with per-edge witnesses.
//! * [`embedding`]: embeds any graph as an induced subgraph of a minimally
//!   t-tough graph, for every positive rational t.
//! * [`corpus`]: exhaustive small-graph enumeration and the theorem sweep.

pub mod corpus;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod minimality;
pub mod rational;
pub mod toughness;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{GraphError, ParseError};
pub use graph::{EdgeId, Graph, VertexSet};
pub use rational::Rational;
pub use toughness::{Toughness, ToughnessCertificate};
