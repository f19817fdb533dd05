//! Computational toolkit for the uniformity threshold of Berge hypergraphs.
//!
//! The crate is split along the objects it manipulates:
//!
//! * [`graph`]: small simple graphs on at most 64 vertices (bitset adjacency),
//!   graph6 I/O, the named families, colouring, canonical forms and
//!   subgraph/homomorphism search.
//! * [`berge`]: hypergraphs, shadow graphs, heavy/light edges and Berge-copy
//!   detection with witnesses.
//! * [`partitions`]: t-admissible partitions, quotients and `c_t(F)`.
//! * [`ramsey`]: exact two-colour Ramsey numbers for small graphs.
//! * [`extremal`]: brute-force Turán-type numbers and cover numbers.
//! * [`bounds`]: lower/upper bounds on `th(F)` with provenance.

pub mod berge;
pub mod bounds;
mod budget;
mod error;
pub mod extremal;
pub mod graph;
pub mod partitions;
pub mod ramsey;

pub use budget::{Budget, SearchBudget};
pub use error::{Error, Result};
pub use graph::{FamilySpec, Graph};
pub use berge::{BergeWitness, Hypergraph};
