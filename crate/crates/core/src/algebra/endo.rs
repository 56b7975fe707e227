use std::sync::Arc;

use super::data::{AlgebraData, Idempotent, SparseVec};
use super::hom::HomSpace;
use super::module::{ModuleMap, ModuleRep};
use crate::error::{Error, Result};
use crate::linalg::Rational;

/// `End(M)` for `M = M_0 ⊕ … ⊕ M_{r-1}` with pairwise non-isomorphic
/// indecomposable summands.
///
/// The basis is the union of Hom bases between summands, the product is
/// composition `f · g = f ∘ g`, and the idempotent labelled by summand `i`
/// is the identity of `M_i`. With this convention `e_i End(M) e_j` is
/// `Hom(M_j, M_i)`.
pub fn end_algebra(summands: &[ModuleRep], labels: &[String]) -> Result<Arc<AlgebraData>> {
    let r = summands.len();
    if labels.len() != r {
        return Err(Error::InvalidAlgebra("one label per summand is required".into()));
    }
    for pair in summands.windows(2) {
        pair[0].check_same_algebra(&pair[1])?;
    }
    // spaces[i][j] = Hom(M_j, M_i)
    let spaces: Vec<Vec<HomSpace>> =
        (0..r).map(|i| (0..r).map(|j| HomSpace::new(&summands[j], &summands[i])).collect()).collect();
    let mut offset = vec![vec![0usize; r]; r];
    let mut basis_labels = Vec::new();
    for i in 0..r {
        for j in 0..r {
            offset[i][j] = basis_labels.len();
            for k in 0..spaces[i][j].dim() {
                basis_labels.push(format!("{}<-{}#{}", labels[i], labels[j], k));
            }
        }
    }
    let n = basis_labels.len();
    let mut products: Vec<SparseVec> = vec![Vec::new(); n * n];
    for i in 0..r {
        for j in 0..r {
            for (a, f) in spaces[i][j].basis().iter().enumerate() {
                let fa = offset[i][j] + a;
                for l in 0..r {
                    let target = &spaces[i][l];
                    for (b, g) in spaces[j][l].basis().iter().enumerate() {
                        let gb = offset[j][l] + b;
                        let c = target.coords(&f.compose(g));
                        products[fa * n + gb] = c
                            .into_iter()
                            .enumerate()
                            .filter(|(_, v)| !v.is_zero())
                            .map(|(k, v)| (offset[i][l] + k, v))
                            .collect();
                    }
                }
            }
        }
    }
    let mut unit = vec![Rational::zero(); n];
    let mut idempotents = Vec::with_capacity(r);
    for i in 0..r {
        let mut coords = vec![Rational::zero(); n];
        for (k, v) in spaces[i][i].coords(&ModuleMap::identity(&summands[i])).into_iter().enumerate() {
            unit[offset[i][i] + k] = v.clone();
            coords[offset[i][i] + k] = v;
        }
        idempotents.push(Idempotent { label: labels[i].clone(), coords });
    }
    AlgebraData::new(basis_labels, products, unit, idempotents)
}
