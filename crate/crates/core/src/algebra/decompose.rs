use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hom::HomSpace;
use super::module::{ModuleMap, ModuleRep};
use crate::error::{Error, Result};
use crate::linalg::{minimal_polynomial, rational_roots, RatMatrix, Rational, SparseEchelon};

/// An indecomposable direct summand with its split inclusion and projection.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: ModuleRep,
    pub inclusion: ModuleMap,
    pub projection: ModuleMap,
}

const RANDOM_ATTEMPTS: usize = 64;

/// Rank of the trace form `(φ, ψ) ↦ tr(φψ)` on `End(X)`, which equals
/// `dim End(X)/rad End(X)` for split residues.
fn residue_rank(basis: &[ModuleMap]) -> usize {
    let n = basis.len();
    let mut e = SparseEchelon::new(n);
    for a in basis {
        let row: Vec<Rational> = basis.iter().map(|b| a.trace_of_composite(b)).collect();
        e.insert_dense(&row);
    }
    e.rank()
}

/// Whether `End(X)` is local with residue field the rationals.
pub fn is_indecomposable(x: &ModuleRep) -> bool {
    if x.is_zero() {
        return false;
    }
    let end = HomSpace::new(x, x);
    end.dim() == 1 || residue_rank(end.basis()) == 1
}

/// Fitting decomposition along `φ - λ`: stabilised kernel and image bases.
fn fitting(phi: &ModuleMap, lambda: &Rational) -> (Vec<RatMatrix>, Vec<RatMatrix>) {
    let psi: Vec<RatMatrix> = phi
        .blocks()
        .iter()
        .map(|b| b.sub(&RatMatrix::identity(b.rows()).scale(lambda)))
        .collect();
    let mut power = psi.clone();
    let mut rank: usize = power.iter().map(RatMatrix::rank).sum();
    loop {
        let next: Vec<RatMatrix> = power.iter().zip(&psi).map(|(p, q)| p.mul(q)).collect();
        let r: usize = next.iter().map(RatMatrix::rank).sum();
        power = next;
        if r == rank {
            break;
        }
        rank = r;
    }
    let ker = power.iter().map(RatMatrix::kernel_basis).collect();
    let img = power.iter().map(RatMatrix::column_space).collect();
    (ker, img)
}

/// Tries to split `X` with one endomorphism: needs a rational eigenvalue
/// whose generalised eigenspace is proper.
fn try_split(phi: &ModuleMap) -> Option<(Vec<RatMatrix>, Vec<RatMatrix>)> {
    let minpoly = minimal_polynomial(phi.blocks());
    let deg = minpoly.degree()?;
    for (lambda, mult) in rational_roots(&minpoly) {
        if mult == deg {
            return None;
        }
        let (ker, img) = fitting(phi, &lambda);
        let kd: usize = ker.iter().map(RatMatrix::cols).sum();
        let id: usize = img.iter().map(RatMatrix::cols).sum();
        if kd > 0 && id > 0 {
            return Some((ker, img));
        }
    }
    None
}

/// Projections onto the two parts of a per-vertex direct sum decomposition.
fn split_projections(first: &[RatMatrix], second: &[RatMatrix]) -> (Vec<RatMatrix>, Vec<RatMatrix>) {
    let mut p1 = Vec::with_capacity(first.len());
    let mut p2 = Vec::with_capacity(first.len());
    for (a, b) in first.iter().zip(second) {
        let n = a.cols() + b.cols();
        let inv = a.hstack(b).inverse().expect("complementary subspaces");
        p1.push(inv.select_rows(&(0..a.cols()).collect::<Vec<_>>()));
        p2.push(inv.select_rows(&(a.cols()..n).collect::<Vec<_>>()));
    }
    (p1, p2)
}

fn splitting_endomorphism(end: &HomSpace, rng: &mut ChaCha8Rng) -> Option<(Vec<RatMatrix>, Vec<RatMatrix>)> {
    let basis = end.basis();
    for phi in basis {
        if let Some(s) = try_split(phi) {
            return Some(s);
        }
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if let Some(s) = try_split(&basis[i].add(&basis[j])) {
                return Some(s);
            }
        }
    }
    for _ in 0..RANDOM_ATTEMPTS {
        let coeffs: Vec<Rational> = (0..basis.len()).map(|_| Rational::from_integer(rng.gen_range(-4..=4))).collect();
        if let Some(s) = try_split(&end.combine(&coeffs)) {
            return Some(s);
        }
    }
    None
}

fn decompose_into(x: &ModuleRep, rng: &mut ChaCha8Rng, out: &mut Vec<Summand>) -> Result<()> {
    if x.is_zero() {
        return Ok(());
    }
    let end = HomSpace::new(x, x);
    if end.dim() == 1 || residue_rank(end.basis()) == 1 {
        out.push(Summand {
            module: x.clone(),
            inclusion: ModuleMap::identity(x),
            projection: ModuleMap::identity(x),
        });
        return Ok(());
    }
    let Some((ker, img)) = splitting_endomorphism(&end, rng) else {
        return Err(Error::UndecidableDecomposition(format!("{:?}", x.dims())));
    };
    let (pk, pi) = split_projections(&ker, &img);
    for (bases, proj) in [(ker, pk), (img, pi)] {
        let (sub, incl) = x.submodule(&bases);
        let proj = ModuleMap::from_blocks(proj);
        let start = out.len();
        decompose_into(&sub, rng, out)?;
        for s in &mut out[start..] {
            s.inclusion = incl.compose(&s.inclusion);
            s.projection = s.projection.compose(&proj);
        }
    }
    Ok(())
}

/// Decomposes `X` into indecomposable summands by repeated Fitting
/// splitting. Each leaf is certified by `dim End/rad End = 1`.
pub fn decompose(x: &ModuleRep, seed: u64) -> Result<Vec<Summand>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    decompose_into(x, &mut rng, &mut out)?;
    Ok(out)
}

/// Decomposition grouped into isomorphism classes with multiplicities.
pub fn decompose_grouped(x: &ModuleRep, seed: u64) -> Result<Vec<(ModuleRep, usize)>> {
    let mut groups: Vec<(ModuleRep, usize)> = Vec::new();
    for s in decompose(x, seed)? {
        match groups.iter_mut().find(|(g, _)| iso_indecomposable(g, &s.module).is_some()) {
            Some(g) => g.1 += 1,
            None => groups.push((s.module, 1)),
        }
    }
    Ok(groups)
}

/// Isomorphism between two indecomposable modules, or `None`.
///
/// Both ends have local endomorphism rings with rational residue, so some
/// `g ∘ f` has nonzero trace exactly when `X ≅ Y`, and then `f` is an
/// isomorphism. The answer is deterministic in both directions.
pub fn iso_indecomposable(x: &ModuleRep, y: &ModuleRep) -> Option<ModuleMap> {
    if x.dims() != y.dims() || !x.same_algebra(y) {
        return None;
    }
    if x.is_zero() {
        return Some(ModuleMap::zero(x, y));
    }
    let there = HomSpace::new(x, y);
    if there.dim() == 0 {
        return None;
    }
    let back = HomSpace::new(y, x);
    for f in there.basis() {
        if back.basis().iter().any(|g| !g.trace_of_composite(f).is_zero()) {
            return Some(f.clone());
        }
    }
    None
}

/// An isomorphism `X → Y`, or `None` when none exists.
///
/// Random integer combinations of a Hom basis are tried first. The
/// fallback decomposes both modules and matches indecomposable summands,
/// which also certifies a negative answer.
pub fn is_isomorphic(x: &ModuleRep, y: &ModuleRep, seed: u64) -> Result<Option<ModuleMap>> {
    x.check_same_algebra(y)?;
    if x.dims() != y.dims() {
        return Ok(None);
    }
    if x.is_zero() {
        return Ok(Some(ModuleMap::zero(x, y)));
    }
    let hom = HomSpace::new(x, y);
    if hom.dim() == 0 {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..8 {
        let coeffs: Vec<Rational> =
            (0..hom.dim()).map(|_| Rational::from_integer(rng.gen_range(-8..=8))).collect();
        let f = hom.combine(&coeffs);
        if f.is_isomorphism() {
            return Ok(Some(f));
        }
    }
    let xs = decompose(x, seed)?;
    let ys = decompose(y, seed)?;
    if xs.len() != ys.len() {
        return Ok(None);
    }
    let mut used = vec![false; ys.len()];
    let mut total = ModuleMap::zero(x, y);
    for a in &xs {
        let hit = ys.iter().enumerate().find_map(|(j, b)| {
            if used[j] {
                return None;
            }
            iso_indecomposable(&a.module, &b.module).map(|f| (j, f))
        });
        let Some((j, f)) = hit else {
            return Ok(None);
        };
        used[j] = true;
        total = total.add(&ys[j].inclusion.compose(&f).compose(&a.projection));
    }
    debug_assert!(total.is_isomorphism());
    Ok(Some(total))
}
