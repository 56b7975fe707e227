use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Certificate, Instance};
use crate::algebra::{
    cosyzygy, dominant_dimension, end_algebra, ext1_dim, global_dimension, injective_envelope,
    iso_indecomposable, stable_hom_dim, ModuleRep,
};
use crate::error::Result;
use crate::replicated::{ambient_copies, build_hereditary, sigma_layers, Generator, Quiver, ReplicatedAlgebra};

/// `gl.dim End(M) ≤ 3` for the generator-cogenerator `M`, together with
/// checks that `M` really is a generator and a cogenerator.
pub fn certify_representation_dimension(gen: &Generator, cap: usize) -> Result<Certificate> {
    let r = &gen.algebra;
    let mut cert = Certificate::new("rep_dim_le_3", Instance::new(r.quiver(), r.m()));
    let modules = gen.modules();
    let end = end_algebra(&modules, &gen.labels())?;
    let gl_end = global_dimension(&end, cap);
    let alg = r.algebra();
    let covers = |xs: Vec<ModuleRep>| xs.iter().all(|x| modules.iter().any(|y| iso_indecomposable(x, y).is_some()));
    let nv = alg.vertex_count();
    let generator = covers((0..nv).map(|s| ModuleRep::projective(alg.clone(), s)).collect());
    let cogenerator = covers((0..nv).map(|s| ModuleRep::injective(alg.clone(), s)).collect());
    cert.value("gl_dim_end_m", gl_end)
        .value("gl_dim_algebra", gen.gl_dim)
        .value("end_dim", end.dim())
        .value("summands", modules.len())
        .value("summand_labels", gen.labels())
        .value("summand_dims", modules.iter().map(|x| x.dims().to_vec()).collect::<Vec<_>>())
        .check("every indecomposable projective is a summand", generator)
        .check("every indecomposable injective is a summand", cogenerator)
        .check("gl.dim End(M) <= 3", gl_end.is_at_most(3));
    Ok(cert)
}

/// `dom.dim A^(m) ≥ m` and `dom.dim A^(m) ≥ t - 1` for `t = gl.dim A^(m)`.
pub fn certify_dominant_dimension(q: &Quiver, m: usize, cap: usize) -> Result<Certificate> {
    let r = ReplicatedAlgebra::build(q, m)?;
    let mut cert = Certificate::new("dom_dim_ge_m", Instance::new(q, m));
    let dd = dominant_dimension(r.algebra(), cap);
    let t = global_dimension(r.algebra(), cap);
    cert.value("dom_dim", dd)
        .value("gl_dim_algebra", t)
        .check("dom.dim >= m", dd.is_at_least(m))
        .check("dom.dim >= gl.dim - 1", t.is_exact() && dd.is_at_least(t.value().saturating_sub(1)));
    Ok(cert)
}

/// `m + gl.dim A ≤ gl.dim A^(m) ≤ (m+1)·gl.dim A + m`.
pub fn certify_gl_dim_bounds(q: &Quiver, m: usize, cap: usize) -> Result<Certificate> {
    let base = build_hereditary(q)?;
    let r = ReplicatedAlgebra::build(q, m)?;
    let mut cert = Certificate::new("gl_dim_bounds", Instance::new(q, m));
    let g = global_dimension(&base, cap);
    let gm = global_dimension(r.algebra(), cap);
    let lower = m + g.value();
    let upper = (m + 1) * g.value() + m;
    cert.value("gl_dim_base", g)
        .value("gl_dim_algebra", gm)
        .value("lower_bound", lower)
        .value("upper_bound", upper)
        .check("base algebra is hereditary", g.is_at_most(1))
        .check("lower bound", gm.is_at_least(lower))
        .check("upper bound", g.is_exact() && gm.is_at_most(upper));
    Ok(cert)
}

/// Options for [`certify_ext_stable_hom`].
#[derive(Clone, Copy, Debug)]
pub struct ExtSuiteOptions {
    /// Maximum number of `(Y, X)` pairs; `None` checks every pair.
    pub sample: Option<usize>,
    pub seed: u64,
    pub cap: usize,
}

fn push_new(pool: &mut Vec<(String, ModuleRep)>, label: String, x: ModuleRep) {
    if !x.is_zero() && !pool.iter().any(|(_, y)| iso_indecomposable(y, &x).is_some()) {
        pool.push((label, x));
    }
}

/// Over the ambient algebra: `dim Ext¹(Y, X) = dim StHom(Y, Ω⁻¹X)` modulo
/// projective-injectives for pairs where `X` has a projective-injective
/// envelope, and vanishing of the stable Hom from `Ω^{-i}` of copy-0
/// projectives to `Ω^{-j}` of embedded `A`-modules for `i < j`.
pub fn certify_ext_stable_hom(q: &Quiver, m: usize, opts: ExtSuiteOptions) -> Result<Certificate> {
    let r = ReplicatedAlgebra::build(q, m)?;
    let t = global_dimension(r.algebra(), opts.cap).value();
    let amb = ReplicatedAlgebra::build(q, ambient_copies(m))?;
    let alg = amb.algebra();
    let nv = q.vertex_count();
    let through: Vec<ModuleRep> = amb.projective_injectives().into_iter().map(|(_, p)| p).collect();

    // Test modules: simples up to copy m + 1, the cosyzygy layers and the
    // embedded indecomposable projective, injective and simple A-modules.
    let mut pool: Vec<(String, ModuleRep)> = Vec::new();
    for c in 0..=(m + 1) {
        for v in 0..nv {
            let s = amb.vertex(v, c);
            push_new(&mut pool, format!("S{}", alg.vertex_labels()[s]), ModuleRep::simple(alg.clone(), s));
        }
    }
    for layer in sigma_layers(&amb, m, t.saturating_sub(1), opts.seed)? {
        for (j, sm) in layer.modules.into_iter().enumerate() {
            push_new(&mut pool, format!("Sigma{}.{}", layer.k, j + 1), sm.module);
        }
    }
    let base = amb.base().clone();
    let mut embedded: Vec<(String, ModuleRep)> = Vec::new();
    for v in 0..nv {
        let name = &q.vertices()[v];
        for (kind, x) in [
            ("P", ModuleRep::projective(base.clone(), v)),
            ("I", ModuleRep::injective(base.clone(), v)),
            ("S", ModuleRep::simple(base.clone(), v)),
        ] {
            push_new(&mut embedded, format!("{kind}{name}@0"), amb.embed(&x, 0)?);
        }
    }
    for (l, x) in &embedded {
        push_new(&mut pool, l.clone(), x.clone());
    }

    let targets: Vec<&(String, ModuleRep)> =
        pool.iter().filter(|(_, x)| injective_envelope(x).module.is_projective()).collect();
    let mut pairs: Vec<(usize, usize)> =
        (0..pool.len()).flat_map(|y| (0..targets.len()).map(move |x| (y, x))).collect();
    let total = pairs.len();
    if let Some(n) = opts.sample.filter(|&n| n < total) {
        pairs.shuffle(&mut ChaCha8Rng::seed_from_u64(opts.seed));
        pairs.truncate(n);
        pairs.sort_unstable();
    }
    let cosyz: Vec<ModuleRep> = targets.iter().map(|(_, x)| cosyzygy(x)).collect();
    let mut mismatches = Vec::new();
    for &(yi, xi) in &pairs {
        let (yl, y) = &pool[yi];
        let (xl, x) = targets[xi];
        let ext = ext1_dim(y, x);
        let st = stable_hom_dim(y, &cosyz[xi], &through)?;
        if ext != st {
            mismatches.push(format!("Ext1({yl},{xl}) = {ext} but StHom = {st}"));
        }
    }

    // Vanishing for i < j <= depth.
    let depth = (m + 1).min(2 * m);
    let ladder = |x: &ModuleRep| -> Vec<ModuleRep> {
        let mut out = vec![x.clone()];
        for _ in 0..depth {
            let next = cosyzygy(out.last().unwrap());
            out.push(next);
        }
        out
    };
    let proj_ladders: Vec<Vec<ModuleRep>> = (0..nv).map(|v| ladder(&amb.projective(v, 0))).collect();
    let emb_ladders: Vec<(String, Vec<ModuleRep>)> = embedded.iter().map(|(l, x)| (l.clone(), ladder(x))).collect();
    let mut vanishing_checked = 0;
    let mut vanishing_failures = Vec::new();
    for (v, pl) in proj_ladders.iter().enumerate() {
        for (el, xl) in &emb_ladders {
            for i in 0..=depth {
                for j in i + 1..=depth {
                    vanishing_checked += 1;
                    let d = stable_hom_dim(&pl[i], &xl[j], &through)?;
                    if d != 0 {
                        vanishing_failures.push(format!("P{}@0 layer {i} -> {el} layer {j}: {d}", q.vertices()[v]));
                    }
                }
            }
        }
    }

    let mut cert = Certificate::new("ext_stable_hom", Instance::new(q, m));
    cert.value("ambient_copies", ambient_copies(m))
        .value("test_modules", pool.len())
        .value("targets_with_projective_injective_envelope", targets.len())
        .value("pairs_total", total)
        .value("pairs_checked", pairs.len())
        .value("mismatches", mismatches.len())
        .value("vanishing_checked", vanishing_checked)
        .value("vanishing_failures", vanishing_failures.len())
        .check("Ext1(Y,X) = StHom(Y, cosyzygy X) on checked pairs", mismatches.is_empty())
        .check("stable Hom vanishes from earlier to later cosyzygy layers", vanishing_failures.is_empty());
    for w in mismatches.into_iter().chain(vanishing_failures) {
        cert.witness(w);
    }
    Ok(cert)
}
