use super::module::{complement, direct_sum, ModuleMap, ModuleRep};
use crate::linalg::RatMatrix;

/// A projective cover `P → X` with `P = ⊕ e_{v} A` over the listed vertices.
#[derive(Clone, Debug)]
pub struct Cover {
    pub module: ModuleRep,
    pub map: ModuleMap,
    pub vertices: Vec<usize>,
}

/// An injective envelope `X → I` with `I = ⊕ D(A e_{v})` over the listed vertices.
#[derive(Clone, Debug)]
pub struct Envelope {
    pub module: ModuleRep,
    pub map: ModuleMap,
    pub vertices: Vec<usize>,
}

/// Projective cover: generators are a complement of `X·rad` at each vertex,
/// and the summand for a generator `g` at `s` sends the word `w` to `g·w`.
pub fn projective_cover(x: &ModuleRep) -> Cover {
    let alg = x.algebra().clone();
    let nv = alg.vertex_count();
    let rad = x.radical_bases();
    let mut gens: Vec<(usize, Vec<crate::linalg::Rational>)> = Vec::new();
    for s in 0..nv {
        let (_, sect) = complement(&rad[s], x.dims()[s]);
        for c in 0..sect.cols() {
            gens.push((s, sect.column(c)));
        }
    }
    let parts: Vec<ModuleRep> = gens.iter().map(|(s, _)| ModuleRep::projective(alg.clone(), *s)).collect();
    let (p, _, _) = direct_sum(&alg, &parts);
    let actions: Vec<Option<Vec<Option<RatMatrix>>>> = (0..nv)
        .map(|s| gens.iter().any(|(g, _)| *g == s).then(|| x.word_actions_from(s)))
        .collect();
    let blocks = (0..nv)
        .map(|t| {
            let mut cols: Vec<Vec<crate::linalg::Rational>> = Vec::with_capacity(p.dims()[t]);
            for (s, g) in &gens {
                let acts = actions[*s].as_ref().unwrap();
                for &w in alg.words_between(*s, t) {
                    cols.push(acts[w].as_ref().unwrap().mul_vec(g));
                }
            }
            RatMatrix::from_columns(x.dims()[t], &cols)
        })
        .collect();
    Cover { module: p, map: ModuleMap::from_blocks(blocks), vertices: gens.into_iter().map(|(s, _)| s).collect() }
}

/// Injective envelope, obtained by dualising the projective cover of `D X`
/// over the opposite algebra.
pub fn injective_envelope(x: &ModuleRep) -> Envelope {
    let dx = x.dual();
    let cover = projective_cover(&dx);
    let module = cover.module.dual();
    debug_assert!(module.same_algebra(x));
    Envelope { module, map: cover.map.dual(), vertices: cover.vertices }
}

/// `Ω X`: kernel of the projective cover.
pub fn syzygy(x: &ModuleRep) -> ModuleRep {
    let c = projective_cover(x);
    c.map.kernel(&c.module).0
}

/// `Ω⁻¹ X`: cokernel of the injective envelope.
pub fn cosyzygy(x: &ModuleRep) -> ModuleRep {
    let e = injective_envelope(x);
    e.map.cokernel(&e.module).0
}
