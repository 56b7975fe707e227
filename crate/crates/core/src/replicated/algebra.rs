use std::collections::HashMap;
use std::sync::Arc;

use super::quiver::{Path, Quiver};
use crate::algebra::{AlgebraData, Idempotent, ModuleRep, SparseVec};
use crate::error::{Error, Result};
use crate::linalg::Rational;

/// The path algebra `kQ`: basis all paths, product concatenation or zero.
pub fn build_hereditary(q: &Quiver) -> Result<Arc<AlgebraData>> {
    let paths = q.paths();
    let index = path_index(&paths);
    let n = paths.len();
    let mut products: Vec<SparseVec> = vec![Vec::new(); n * n];
    for (i, p) in paths.iter().enumerate() {
        for (j, r) in paths.iter().enumerate() {
            if let Some(k) = concat(p, r, &index) {
                products[i * n + j] = vec![(k, Rational::one())];
            }
        }
    }
    let labels = paths.iter().map(|p| q.path_label(p)).collect();
    let nv = q.vertex_count();
    let idempotents = (0..nv)
        .map(|v| {
            let mut coords = vec![Rational::zero(); n];
            coords[v] = Rational::one();
            Idempotent { label: q.vertices()[v].clone(), coords }
        })
        .collect();
    let unit = (0..n).map(|i| if i < nv { Rational::one() } else { Rational::zero() }).collect();
    AlgebraData::new(labels, products, unit, idempotents)
}

type PathIndex = HashMap<(usize, Vec<usize>), usize>;

fn path_index(paths: &[Path]) -> PathIndex {
    paths.iter().enumerate().map(|(i, p)| ((p.src, p.arrows.clone()), i)).collect()
}

fn concat(p: &Path, r: &Path, index: &PathIndex) -> Option<usize> {
    if p.tgt != r.src {
        return None;
    }
    let mut arrows = p.arrows.clone();
    arrows.extend_from_slice(&r.arrows);
    index.get(&(p.src, arrows)).copied()
}

/// `r` with `p = r·q`, when `q` is a final segment of `p`.
fn strip_suffix(p: &Path, q: &Path, index: &PathIndex) -> Option<usize> {
    if p.tgt != q.tgt || q.len() > p.len() || !p.arrows.ends_with(&q.arrows) {
        return None;
    }
    index.get(&(p.src, p.arrows[..p.len() - q.len()].to_vec())).copied()
}

/// `r` with `p = q·r`, when `q` is an initial segment of `p`.
fn strip_prefix(p: &Path, q: &Path, index: &PathIndex) -> Option<usize> {
    if p.src != q.src || q.len() > p.len() || !p.arrows.starts_with(&q.arrows) {
        return None;
    }
    index.get(&(q.tgt, p.arrows[q.len()..].to_vec())).copied()
}

/// What a basis element of `A^(m)` is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisTag {
    /// Path `p` in the diagonal copy `copy`.
    Path { path: usize, copy: usize },
    /// Dual path `p*` in the bimodule slot between copies `slot` and `slot - 1`.
    Dual { path: usize, slot: usize },
}

/// The m-replicated algebra of `kQ`: the lower triangular matrix algebra
/// with `m + 1` diagonal copies of `A = kQ` and copies of `DA` directly
/// below the diagonal, products of two `DA` entries being zero.
///
/// The vertex `(v, c)` has index `c·|Q_0| + v` and label `v` followed by
/// `c` primes.
#[derive(Clone, Debug)]
pub struct ReplicatedAlgebra {
    quiver: Quiver,
    m: usize,
    paths: Vec<Path>,
    base: Arc<AlgebraData>,
    algebra: Arc<AlgebraData>,
    tags: Vec<BasisTag>,
    tag_index: HashMap<BasisTag, usize>,
}

impl ReplicatedAlgebra {
    /// Builds `A^(m)`; associativity is checked exhaustively by
    /// [`AlgebraData::new`].
    pub fn build(q: &Quiver, m: usize) -> Result<Self> {
        let base = build_hereditary(q)?;
        let paths = q.paths();
        let index = path_index(&paths);
        let np = paths.len();
        let nv = q.vertex_count();
        let mut tags = Vec::with_capacity((2 * m + 1) * np);
        for c in 0..=m {
            if c > 0 {
                tags.extend((0..np).map(|path| BasisTag::Dual { path, slot: c }));
            }
            tags.extend((0..np).map(|path| BasisTag::Path { path, copy: c }));
        }
        let pos: HashMap<BasisTag, usize> = tags.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        let n = tags.len();
        let mut products: Vec<SparseVec> = vec![Vec::new(); n * n];
        for (i, x) in tags.iter().enumerate() {
            for (j, y) in tags.iter().enumerate() {
                let hit = match (*x, *y) {
                    (BasisTag::Path { path: p, copy: c }, BasisTag::Path { path: r, copy: d }) if c == d => {
                        concat(&paths[p], &paths[r], &index).map(|k| BasisTag::Path { path: k, copy: c })
                    }
                    // q · p* = r* where p = r·q
                    (BasisTag::Path { path: qq, copy: c }, BasisTag::Dual { path: p, slot: s }) if c == s => {
                        strip_suffix(&paths[p], &paths[qq], &index).map(|k| BasisTag::Dual { path: k, slot: s })
                    }
                    // p* · q = r* where p = q·r
                    (BasisTag::Dual { path: p, slot: s }, BasisTag::Path { path: qq, copy: c }) if c + 1 == s => {
                        strip_prefix(&paths[p], &paths[qq], &index).map(|k| BasisTag::Dual { path: k, slot: s })
                    }
                    _ => None,
                };
                if let Some(t) = hit {
                    products[i * n + j] = vec![(pos[&t], Rational::one())];
                }
            }
        }
        let labels: Vec<String> = tags
            .iter()
            .map(|t| match *t {
                BasisTag::Path { path, copy } => format!("{}@{}", q.path_label(&paths[path]), copy),
                BasisTag::Dual { path, slot } => format!("{}*@{}", q.path_label(&paths[path]), slot),
            })
            .collect();
        let mut unit = vec![Rational::zero(); n];
        let mut idempotents = Vec::with_capacity((m + 1) * nv);
        for c in 0..=m {
            for v in 0..nv {
                let k = pos[&BasisTag::Path { path: v, copy: c }];
                let mut coords = vec![Rational::zero(); n];
                coords[k] = Rational::one();
                unit[k] = Rational::one();
                idempotents.push(Idempotent { label: vertex_label(q, v, c), coords });
            }
        }
        let algebra = AlgebraData::new(labels, products, unit, idempotents)?;
        Ok(ReplicatedAlgebra { quiver: q.clone(), m, paths, base, algebra, tags, tag_index: pos })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn algebra(&self) -> &Arc<AlgebraData> {
        &self.algebra
    }

    /// The hereditary algebra `A = kQ`.
    pub fn base(&self) -> &Arc<AlgebraData> {
        &self.base
    }

    pub fn tags(&self) -> &[BasisTag] {
        &self.tags
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn base_vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    /// Index of the vertex `(v, copy)`.
    pub fn vertex(&self, v: usize, copy: usize) -> usize {
        copy * self.base_vertex_count() + v
    }

    /// `(v, copy)` of a vertex index.
    pub fn split_vertex(&self, idx: usize) -> (usize, usize) {
        (idx % self.base_vertex_count(), idx / self.base_vertex_count())
    }

    pub fn vertex_labels(&self) -> Vec<String> {
        self.algebra.vertex_labels().into_iter().map(str::to_string).collect()
    }

    /// Copies in which `x` has nonzero dimension.
    pub fn support_copies(&self, x: &ModuleRep) -> Vec<usize> {
        let mut copies: Vec<usize> = x.support().into_iter().map(|s| self.split_vertex(s).1).collect();
        copies.dedup();
        copies
    }

    /// The standard embedding of `mod A` as the modules over copy `copy`.
    pub fn embed(&self, x: &ModuleRep, copy: usize) -> Result<ModuleRep> {
        if copy > self.m {
            return Err(Error::CopyOutOfRange { copy, m: self.m });
        }
        if !Arc::ptr_eq(x.algebra(), &self.base) {
            return Err(Error::AlgebraMismatch);
        }
        let n = self.base.dim();
        let images: Vec<Vec<Rational>> = self
            .tags
            .iter()
            .map(|t| match *t {
                BasisTag::Path { path, copy: c } if c == copy => self.base.basis_vector(path),
                _ => vec![Rational::zero(); n],
            })
            .collect();
        x.pullback(self.algebra.clone(), &images)
    }

    /// Restricts a module over a larger replicated algebra of the same
    /// quiver, supported in copies `0..=m`, to a module over this one.
    pub fn restrict_from(&self, ambient: &ReplicatedAlgebra, x: &ModuleRep) -> Result<ModuleRep> {
        if ambient.quiver != self.quiver || ambient.m < self.m || !Arc::ptr_eq(x.algebra(), &ambient.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        if ambient.support_copies(x).iter().any(|&c| c > self.m) {
            return Err(Error::InvalidModule(format!("support reaches beyond copy {}", self.m)));
        }
        let images: Vec<Vec<Rational>> =
            self.tags.iter().map(|t| ambient.algebra.basis_vector(ambient.tag_index[t])).collect();
        x.pullback(self.algebra.clone(), &images)
    }

    /// Inflates a module to a larger replicated algebra through the
    /// quotient map that kills every copy beyond `m`.
    pub fn inflate_to(&self, ambient: &ReplicatedAlgebra, x: &ModuleRep) -> Result<ModuleRep> {
        if ambient.quiver != self.quiver || ambient.m < self.m || !Arc::ptr_eq(x.algebra(), &self.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let n = self.algebra.dim();
        let images: Vec<Vec<Rational>> = ambient
            .tags
            .iter()
            .map(|t| match self.tag_index.get(t) {
                Some(&i) => self.algebra.basis_vector(i),
                None => vec![Rational::zero(); n],
            })
            .collect();
        x.pullback(ambient.algebra.clone(), &images)
    }

    pub fn projective(&self, v: usize, copy: usize) -> ModuleRep {
        ModuleRep::projective(self.algebra.clone(), self.vertex(v, copy))
    }

    pub fn injective(&self, v: usize, copy: usize) -> ModuleRep {
        ModuleRep::injective(self.algebra.clone(), self.vertex(v, copy))
    }

    /// Indecomposable projective-injective modules `e_s A^(m)`, with their vertex.
    pub fn projective_injectives(&self) -> Vec<(usize, ModuleRep)> {
        (0..self.algebra.vertex_count())
            .map(|s| (s, ModuleRep::projective(self.algebra.clone(), s)))
            .filter(|(_, p)| p.is_injective())
            .collect()
    }
}

/// Vertex label with one prime per copy.
pub fn vertex_label(q: &Quiver, v: usize, copy: usize) -> String {
    format!("{}{}", q.vertices()[v], "'".repeat(copy))
}
