use super::module::{ModuleMap, ModuleRep};
use crate::linalg::{RatMatrix, Rational, SparseEchelon};

/// A basis of `Hom(X, Y)` together with a coordinate chart.
///
/// Unknowns are the block entries `f_s[i][j]`, flattened vertex by vertex
/// and row-major inside a block. The intertwining equations
/// `f_t · X(a) = Y(a) · f_s`, one block equation per arrow `a: s → t`, are
/// eliminated sparsely. Each basis map has a single 1 among the free
/// unknowns, so the coordinates of any homomorphism are its values at the
/// free positions.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source_dims: Vec<usize>,
    target_dims: Vec<usize>,
    basis: Vec<ModuleMap>,
    free: Vec<usize>,
}

fn offsets(source: &[usize], target: &[usize]) -> Vec<usize> {
    let mut offs = Vec::with_capacity(source.len() + 1);
    let mut acc = 0;
    for (s, t) in source.iter().zip(target) {
        offs.push(acc);
        acc += s * t;
    }
    offs.push(acc);
    offs
}

impl HomSpace {
    pub fn new(x: &ModuleRep, y: &ModuleRep) -> Self {
        assert!(x.same_algebra(y), "Hom between modules over different algebras");
        let xd = x.dims();
        let yd = y.dims();
        let offs = offsets(xd, yd);
        let total = *offs.last().unwrap();
        let var = |s: usize, i: usize, j: usize| offs[s] + i * xd[s] + j;
        let mut system = SparseEchelon::new(total);
        for (ai, a) in x.algebra().arrows().iter().enumerate() {
            let (s, t) = (a.src, a.tgt);
            if yd[t] == 0 || xd[s] == 0 {
                continue;
            }
            let xa = x.arrow(ai);
            let ya = y.arrow(ai);
            for i in 0..yd[t] {
                for j in 0..xd[s] {
                    let mut row: Vec<(usize, Rational)> = Vec::new();
                    for k in 0..xd[t] {
                        let c = &xa[(k, j)];
                        if !c.is_zero() {
                            row.push((var(t, i, k), c.clone()));
                        }
                    }
                    for k in 0..yd[s] {
                        let c = &ya[(i, k)];
                        if !c.is_zero() {
                            row.push((var(s, k, j), -c));
                        }
                    }
                    if !row.is_empty() {
                        row.sort_by_key(|e| e.0);
                        system.insert_sparse(&row);
                    }
                }
            }
        }
        let free = system.free_cols();
        let basis = system
            .kernel_basis()
            .into_iter()
            .map(|v| unflatten(&v, xd, yd, &offs))
            .collect();
        HomSpace { source_dims: xd.to_vec(), target_dims: yd.to_vec(), basis, free }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ModuleMap] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<ModuleMap> {
        self.basis
    }

    /// Coordinates of a homomorphism in the basis.
    pub fn coords(&self, f: &ModuleMap) -> Vec<Rational> {
        let flat = f.flatten();
        self.free.iter().map(|&p| flat[p].clone()).collect()
    }

    /// Linear combination of basis maps.
    pub fn combine(&self, coeffs: &[Rational]) -> ModuleMap {
        let mut blocks: Vec<RatMatrix> = self
            .source_dims
            .iter()
            .zip(&self.target_dims)
            .map(|(&s, &t)| RatMatrix::zeros(t, s))
            .collect();
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (acc, blk) in blocks.iter_mut().zip(b.blocks()) {
                *acc = acc.add(&blk.scale(c));
            }
        }
        ModuleMap::from_blocks(blocks)
    }
}

fn unflatten(v: &[Rational], xd: &[usize], yd: &[usize], offs: &[usize]) -> ModuleMap {
    let blocks = (0..xd.len())
        .map(|s| RatMatrix::from_vec(yd[s], xd[s], v[offs[s]..offs[s + 1]].to_vec()))
        .collect();
    ModuleMap::from_blocks(blocks)
}

/// Basis of `Hom(X, Y)`.
pub fn hom_basis(x: &ModuleRep, y: &ModuleRep) -> Vec<ModuleMap> {
    HomSpace::new(x, y).into_basis()
}

/// `dim Hom(X, Y)`.
pub fn hom_dim(x: &ModuleRep, y: &ModuleRep) -> usize {
    HomSpace::new(x, y).dim()
}

/// Rank of a family of maps with a common source and target.
pub fn span_rank_maps<'a, I>(maps: I) -> usize
where
    I: IntoIterator<Item = &'a ModuleMap>,
{
    let mut iter = maps.into_iter().peekable();
    let Some(first) = iter.peek() else {
        return 0;
    };
    let len = first.flatten().len();
    let mut e = SparseEchelon::new(len);
    for f in iter {
        e.insert_dense(&f.flatten());
    }
    e.rank()
}
