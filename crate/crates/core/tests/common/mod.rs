#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use replicated_core::algebra::{direct_sum, AlgebraData, HomSpace, ModuleRep};
use replicated_core::linalg::Rational;
use replicated_core::replicated::{build_hereditary, Quiver, ReplicatedAlgebra};

pub fn kronecker() -> Arc<AlgebraData> {
    build_hereditary(&Quiver::kronecker()).unwrap()
}

pub fn replicated(q: &Quiver, m: usize) -> ReplicatedAlgebra {
    ReplicatedAlgebra::build(q, m).unwrap()
}

/// Small algebras the property suites draw from, built once so that modules
/// from different cases share the same algebra.
pub fn test_algebras() -> &'static [Arc<AlgebraData>] {
    static CELL: OnceLock<Vec<Arc<AlgebraData>>> = OnceLock::new();
    CELL.get_or_init(|| vec![
        kronecker(),
        build_hereditary(&Quiver::a3_linear()).unwrap(),
        replicated(&Quiver::one_vertex(), 2).algebra().clone(),
        replicated(&Quiver::a2(), 1).algebra().clone(),
        replicated(&Quiver::kronecker(), 1).algebra().clone(),
    ])
}

/// `Λ^(3)` of the Kronecker quiver and of `A_2`: room for modules whose
/// envelopes are projective-injective.
pub fn ambient_algebras() -> &'static [ReplicatedAlgebra] {
    static CELL: OnceLock<Vec<ReplicatedAlgebra>> = OnceLock::new();
    CELL.get_or_init(|| vec![replicated(&Quiver::a2(), 3), replicated(&Quiver::kronecker(), 3)])
}

/// Recipe for a module: the cokernel of a map between sums of projectives,
/// or the kernel of a map between sums of injectives.
#[derive(Clone, Debug)]
pub struct ModuleSeed {
    pub from: Vec<usize>,
    pub to: Vec<usize>,
    pub coeffs: Vec<i64>,
    pub injective_side: bool,
}

pub fn module_seed(max_vertex: usize) -> impl Strategy<Value = ModuleSeed> {
    (
        proptest::collection::vec(0..max_vertex, 1..=2),
        proptest::collection::vec(0..max_vertex, 1..=2),
        proptest::collection::vec(-2i64..=2, 12),
        any::<bool>(),
    )
        .prop_map(|(from, to, coeffs, injective_side)| ModuleSeed { from, to, coeffs, injective_side })
}

fn sum_of(alg: &Arc<AlgebraData>, vertices: &[usize], injective: bool) -> ModuleRep {
    let parts: Vec<ModuleRep> = vertices
        .iter()
        .map(|&v| {
            let v = v % alg.vertex_count();
            if injective {
                ModuleRep::injective(alg.clone(), v)
            } else {
                ModuleRep::projective(alg.clone(), v)
            }
        })
        .collect();
    direct_sum(alg, &parts).0
}

pub fn build_module(alg: &Arc<AlgebraData>, seed: &ModuleSeed) -> ModuleRep {
    let a = sum_of(alg, &seed.from, seed.injective_side);
    let b = sum_of(alg, &seed.to, seed.injective_side);
    let h = HomSpace::new(&a, &b);
    let coeffs: Vec<Rational> =
        (0..h.dim()).map(|k| Rational::from(seed.coeffs[k % seed.coeffs.len()] + (k / 12) as i64)).collect();
    let f = h.combine(&coeffs);
    if seed.injective_side {
        f.kernel(&a).0
    } else {
        f.cokernel(&b).0
    }
}
