//! Instances shared by the benchmarks in `benches/`.

use replicated_core::Quiver;

/// Base quivers with the `m` values the benchmarks sweep.
pub fn instances() -> Vec<(&'static str, Quiver, usize)> {
    vec![
        ("A2", Quiver::a2(), 1),
        ("A3", Quiver::a3_linear(), 1),
        ("Kronecker", Quiver::kronecker(), 1),
        ("Kronecker", Quiver::kronecker(), 2),
    ]
}
