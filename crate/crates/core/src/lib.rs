//! Exact solvers for domination variants in sparse graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] holds the immutable compressed-adjacency [`Graph`] and the
//!   heavy-vertex computation every solver starts from.
//! * [`algebra`] provides truncated polynomials, polynomial matrices and
//!   bit-packed boolean matrices together with the two products the solvers
//!   rely on.
//! * [`multidom`] solves r-Multiple and r-Tuple k-Dominating Set.
//! * [`patterndom`] solves pattern-constrained domination (cliques,
//!   independent sets, induced matchings and arbitrary small patterns).
//! * [`reductions`] generates certified instances from Orthogonal Vectors and
//!   Independent Set sources.
//! * [`oracles`] contains exhaustive deciders used as ground truth.
//!
//! Row-stripe parallelism is provided by rayon behind the default `parallel`
//! feature. Every product and scan returns identical results with or without
//! it.

pub mod algebra;
pub mod error;
pub mod graph;
pub mod multidom;
pub mod oracles;
pub mod par;
pub mod patterndom;
pub mod problem;
pub mod reductions;
mod subsets;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
pub use problem::{Certificate, DominationVariant, Problem, SolveStats, Solution};
