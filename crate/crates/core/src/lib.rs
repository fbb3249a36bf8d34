//! Exact computation with G-Frobenius algebras over a finite group `G` and the
//! two-dimensional G-equivariant TQFTs they define.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactlin`]: rational scalars, matrices and rank-3 tensors.
//! * [`group`]: finite groups given by multiplication tables.
//! * [`algebra`]: G-Frobenius algebras, their axiom checker and the derived
//!   pairing/coproduct structure.
//! * [`orbifold`]: the G-invariant subalgebra as an ordinary Frobenius algebra.
//! * [`cobordism`]: combinatorial G-cobordisms as layered words, with a small
//!   text syntax.
//! * [`tqft`]: evaluation of words to linear maps and the decomposition
//!   independence checks.

pub mod algebra;
pub mod cobordism;
pub mod error;
pub mod exactlin;
pub mod group;
pub mod orbifold;
pub mod report;
pub mod tqft;

pub use error::{Error, ErrorCategory, Result};
