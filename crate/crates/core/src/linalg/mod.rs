//! Exact linear algebra over arbitrary-precision integers and rationals.

mod elim;
mod lattice;
mod matrix;
mod normal_form;

pub(crate) use elim::abs_det;
pub use elim::{det, int_rank, rank, solve};
pub use lattice::{gcd_of, integer_kernel, primitive_direction, primitive_part, saturate};
pub use matrix::{dot, IntMatrix, Matrix, RatMatrix, RatVector};
pub use normal_form::{hnf, snf, HermiteDecomposition, SmithDecomposition};
