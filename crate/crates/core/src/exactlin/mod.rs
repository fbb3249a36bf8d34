//! Exact rational scalars and the small dense linear algebra kernel the rest
//! of the crate is built on. There is no tolerance parameter anywhere here:
//! every comparison is exact.

mod matrix;
mod scalar;
mod tensor;

pub use matrix::{kron, mat_inverse, Matrix};
pub use scalar::Scalar;
pub use tensor::{contract, Tensor3};
