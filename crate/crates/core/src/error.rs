use thiserror::Error;

/// Errors surfaced by the algebra engine and the replicated-algebra builders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("structure constants are not associative at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("invalid algebra data: {0}")]
    InvalidAlgebra(String),
    #[error("idempotent `{0}` is not split: e(A/rad)e has dimension {1}")]
    NonSplitSimple(String, usize),
    #[error("algebra is not basic: idempotents `{0}` and `{1}` are equivalent")]
    NotBasic(String, String),
    #[error("module `{0}` has non-split endomorphism residue and no splitting element was found")]
    UndecidableDecomposition(String),
    #[error("module is not projective-injective: {0}")]
    NotProjInjective(String),
    #[error("quiver has an oriented cycle through vertex `{0}`")]
    CyclicQuiver(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("copy index {copy} out of range 0..={m}")]
    CopyOutOfRange { copy: usize, m: usize },
    #[error("ambient truncation too small: injective envelope in layer {0} is not projective-injective")]
    AmbientTooSmall(usize),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid morphism: {0}")]
    InvalidMap(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
