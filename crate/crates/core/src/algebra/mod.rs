//! Finite-dimensional algebras given by structure constants and their
//! finite-dimensional right modules.

mod approx;
mod cover;
mod data;
mod decompose;
mod endo;
mod hom;
mod module;
mod resolution;

pub use approx::{AddCategory, Approximation};
pub use cover::{cosyzygy, injective_envelope, projective_cover, syzygy, Cover, Envelope};
pub use data::{AlgebraData, Arrow, Idempotent, SparseVec, Word};
pub use decompose::{decompose, decompose_grouped, is_indecomposable, is_isomorphic, iso_indecomposable, Summand};
pub use endo::end_algebra;
pub use hom::{hom_basis, hom_dim, span_rank_maps, HomSpace};
pub use module::{direct_sum, ModuleMap, ModuleRep};
pub use resolution::{
    dominant_dimension, dominant_dimension_of, ext1_dim, global_dimension, injective_dimension,
    injective_resolution, projective_dimension, projective_resolution, stable_hom_dim, Bounded,
    Resolution, ResolutionKind,
};
