//! Path algebras of acyclic quivers, their m-replicated algebras and the
//! module inventory built from cosyzygy ladders.

mod algebra;
mod inventory;
mod quiver;

pub use algebra::{build_hereditary, vertex_label, BasisTag, ReplicatedAlgebra};
pub use inventory::{
    ambient_copies, auslander_generator, minimal_cogenerator, sigma_layers, Generator, SigmaLayer, SigmaModule, SummandKind,
    SummandRecord,
};
pub use quiver::{Path, Quiver, QuiverArrow};
