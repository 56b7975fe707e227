//! Exact rational scalars and the dense/sparse linear algebra everything
//! else reduces to.

mod matrix;
mod poly;
mod rational;
mod sparse;

pub use matrix::{RatMatrix, Rref};
pub use poly::{minimal_polynomial, rational_roots, Poly};
pub use rational::{ParseRationalError, Rational};
pub use sparse::{span_rank, SparseEchelon, SparseRow};
