use serde::Serialize;

use super::algebra::{vertex_label, ReplicatedAlgebra};
use super::quiver::Quiver;
use crate::algebra::{
    decompose, direct_sum, global_dimension, injective_envelope, iso_indecomposable, Bounded, ModuleRep,
};
use crate::error::{Error, Result};

/// An indecomposable in a cosyzygy layer, over the ambient algebra.
#[derive(Clone, Debug)]
pub struct SigmaModule {
    pub module: ModuleRep,
    /// Supported in copies `0..=m`, hence a module over `A^(m)`.
    pub in_a_m: bool,
}

/// `Σ_k`: the indecomposable summands of the `k`-th cosyzygy of the copy-0
/// projectives.
#[derive(Clone, Debug)]
pub struct SigmaLayer {
    pub k: usize,
    pub modules: Vec<SigmaModule>,
}

/// Number of copies of the ambient algebra used for cosyzygy ladders.
pub fn ambient_copies(m: usize) -> usize {
    2 * m + 1
}

fn push_unique(list: &mut Vec<ModuleRep>, x: ModuleRep) -> bool {
    if list.iter().any(|y| iso_indecomposable(y, &x).is_some()) {
        return false;
    }
    list.push(x);
    true
}

/// `Σ_0, …, Σ_upto` computed inside `ambient`; membership in `A^(m)` is
/// decided by support. Every envelope used must be projective-injective,
/// otherwise the ambient truncation is too small.
pub fn sigma_layers(ambient: &ReplicatedAlgebra, m: usize, upto: usize, seed: u64) -> Result<Vec<SigmaLayer>> {
    let nv = ambient.base_vertex_count();
    let flag = |x: &ModuleRep| ambient.support_copies(x).iter().all(|&c| c <= m);
    let sigma0: Vec<ModuleRep> = (0..nv).map(|v| ambient.projective(v, 0)).collect();
    let mut layers = vec![SigmaLayer {
        k: 0,
        modules: sigma0.into_iter().map(|x| SigmaModule { in_a_m: flag(&x), module: x }).collect(),
    }];
    for k in 1..=upto {
        let mut next: Vec<ModuleRep> = Vec::new();
        for prev in &layers[k - 1].modules {
            let env = injective_envelope(&prev.module);
            if !env.module.is_projective() {
                return Err(Error::AmbientTooSmall(k));
            }
            let (c, _) = env.map.cokernel(&env.module);
            for s in decompose(&c, seed)? {
                push_unique(&mut next, s.module);
            }
        }
        layers.push(SigmaLayer {
            k,
            modules: next.into_iter().map(|x| SigmaModule { in_a_m: flag(&x), module: x }).collect(),
        });
    }
    Ok(layers)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "layer", rename_all = "snake_case")]
pub enum SummandKind {
    /// Indecomposable projective of copy 0.
    Projective,
    /// Indecomposable injective of copy `m`.
    Injective,
    ProjectiveInjective,
    /// Summand of `U_k`.
    Layer(usize),
}

#[derive(Clone, Debug)]
pub struct SummandRecord {
    pub label: String,
    pub kind: SummandKind,
    pub module: ModuleRep,
}

/// A generator-cogenerator of `A^(m)` with labelled, pairwise
/// non-isomorphic indecomposable summands.
#[derive(Clone, Debug)]
pub struct Generator {
    pub algebra: ReplicatedAlgebra,
    /// `gl.dim A^(m)`
    pub gl_dim: Bounded,
    pub summands: Vec<SummandRecord>,
    /// `A^(2m+1)`, where the cosyzygy layers live.
    pub ambient: ReplicatedAlgebra,
    /// `Σ_0, …, Σ_{t-1}` over the ambient algebra.
    pub layers: Vec<SigmaLayer>,
}

impl Generator {
    pub fn modules(&self) -> Vec<ModuleRep> {
        self.summands.iter().map(|s| s.module.clone()).collect()
    }

    pub fn labels(&self) -> Vec<String> {
        self.summands.iter().map(|s| s.label.clone()).collect()
    }

    /// The direct sum of all summands.
    pub fn module(&self) -> ModuleRep {
        direct_sum(self.algebra.algebra(), &self.modules()).0
    }
}

fn base_summands(r: &ReplicatedAlgebra) -> (Vec<ModuleRep>, Vec<SummandRecord>) {
    let q = r.quiver();
    let m = r.m();
    let nv = q.vertex_count();
    let mut seen = Vec::new();
    let mut out = Vec::new();
    let mut add = |label: String, kind: SummandKind, x: ModuleRep, seen: &mut Vec<ModuleRep>| {
        if push_unique(seen, x.clone()) {
            out.push(SummandRecord { label, kind, module: x });
        }
    };
    for v in 0..nv {
        add(format!("P{}", vertex_label(q, v, 0)), SummandKind::Projective, r.projective(v, 0), &mut seen);
    }
    for v in 0..nv {
        add(format!("I{}", vertex_label(q, v, m)), SummandKind::Injective, r.injective(v, m), &mut seen);
    }
    for (s, p) in r.projective_injectives() {
        let (v, c) = r.split_vertex(s);
        add(format!("P{}", vertex_label(q, v, c)), SummandKind::ProjectiveInjective, p, &mut seen);
    }
    (seen, out)
}

/// `M_0 = A ⊕ D(A)_m ⊕ P`: copy-0 projectives, copy-`m` injectives and the
/// projective-injectives.
///
/// The cosyzygy layers are computed as well, for use as test modules.
pub fn minimal_cogenerator(q: &Quiver, m: usize, cap: usize, seed: u64) -> Result<Generator> {
    let algebra = ReplicatedAlgebra::build(q, m)?;
    let gl_dim = global_dimension(algebra.algebra(), cap);
    let (_, summands) = base_summands(&algebra);
    let ambient = ReplicatedAlgebra::build(q, ambient_copies(m))?;
    let layers = sigma_layers(&ambient, m, gl_dim.value().saturating_sub(1), seed)?;
    Ok(Generator { algebra, gl_dim, summands, ambient, layers })
}

/// `M = A ⊕ D(A)_m ⊕ P ⊕ U_1 ⊕ … ⊕ U_{t-1}` with `t = gl.dim A^(m)` and
/// `U_k` the part of `Σ_k` supported in copies `0..=m`.
pub fn auslander_generator(q: &Quiver, m: usize, cap: usize, seed: u64) -> Result<Generator> {
    let algebra = ReplicatedAlgebra::build(q, m)?;
    let gl_dim = global_dimension(algebra.algebra(), cap);
    let (mut seen, mut summands) = base_summands(&algebra);
    let t = gl_dim.value();
    let ambient = ReplicatedAlgebra::build(q, ambient_copies(m))?;
    let layers = sigma_layers(&ambient, m, t.saturating_sub(1), seed)?;
    for layer in layers.iter().skip(1) {
        let mut j = 0;
        for sm in layer.modules.iter().filter(|s| s.in_a_m) {
            let x = algebra.restrict_from(&ambient, &sm.module)?;
            if push_unique(&mut seen, x.clone()) {
                j += 1;
                summands.push(SummandRecord {
                    label: format!("U{}.{}", layer.k, j),
                    kind: SummandKind::Layer(layer.k),
                    module: x,
                });
            }
        }
    }
    Ok(Generator { algebra, gl_dim, summands, ambient, layers })
}
