//! Truncated polynomials, polynomial matrices and bit-packed boolean
//! matrices, with the two products used by the solvers.

pub(crate) mod boolean;
mod poly;

pub use boolean::{complement_zero_pairs, BoolMatrix};
pub use poly::{poly_mat_mul, PolyMatrix, TruncatedPoly};
