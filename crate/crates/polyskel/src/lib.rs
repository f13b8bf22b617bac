//! polyskel computes the edge structure (1-skeleton) of 0/1-polytopes.
//!
//! The workflow mirrors how the skeletons are actually computed: generate a
//! vertex set, build the pair ledger with sum keys, strike out every pair
//! that shares its key with another (such pairs are never edges and the
//! coinciding pair is kept as a witness), restrict each remaining pair to
//! the face spanned by its agreeing coordinates, try to verify the edge with
//! a cheap numeric cost-function search, and settle what is left with an
//! exact rational LP feasibility test. Closed-form adjacency oracles for the
//! classical families cross-validate the whole pipeline.

pub mod error;
pub mod subsets;
pub mod vertex;
pub mod ledger;
pub mod graphs;
pub mod families;
pub mod rhombus;
pub mod faces;
pub mod linalg;
pub mod simplex;

pub use error::{Error, Result};
pub use vertex::{CostFunction, IntVertex, VertexSet};
