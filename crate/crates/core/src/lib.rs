//! Exact homological algebra for m-replicated algebras of hereditary path
//! algebras.
//!
//! The crate is layered:
//!
//! * [`linalg`]: exact rationals, dense and sparse elimination;
//! * [`algebra`]: finite-dimensional algebras given by structure constants,
//!   their modules, covers, envelopes, resolutions, decompositions and
//!   endomorphism algebras;
//! * [`replicated`]: path algebras of acyclic quivers, the replicated algebra
//!   `A^(m)`, cosyzygy ladders and the generator-cogenerator `M`;
//! * [`verify`]: certificates for the representation-dimension and
//!   dominant-dimension statements.

pub mod algebra;
pub mod error;
pub mod linalg;
pub mod replicated;
pub mod verify;

pub use algebra::{
    AlgebraData, Bounded, Idempotent, ModuleMap, ModuleRep, Resolution, ResolutionKind,
};
pub use error::{Error, Result};
pub use linalg::{RatMatrix, Rational};
pub use replicated::{Quiver, ReplicatedAlgebra};
pub use verify::{Certificate, Verdict};
