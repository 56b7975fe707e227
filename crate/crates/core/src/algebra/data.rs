use std::fmt;
use std::sync::{Arc, OnceLock, Weak};

use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, Rational, SparseEchelon};

/// Sparse coordinate vector: `(basis index, coefficient)`, no zeros.
pub type SparseVec = Vec<(usize, Rational)>;

/// A primitive idempotent, tagged with a vertex label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Idempotent {
    pub label: String,
    pub coords: Vec<Rational>,
}

/// An arrow of the Gabriel quiver: an element of `e_src rad e_tgt` that is
/// not in `rad^2`.
#[derive(Clone, Debug)]
pub struct Arrow {
    pub src: usize,
    pub tgt: usize,
    pub coords: Vec<Rational>,
}

/// A basis element of the algebra written as a product of arrows.
/// `parent = Some((w, a))` means this word is `w · a`.
#[derive(Clone, Debug)]
pub struct Word {
    pub src: usize,
    pub tgt: usize,
    pub parent: Option<(usize, usize)>,
    pub coords: Vec<Rational>,
}

/// Quiver presentation derived from the structure constants: arrows, a
/// basis of words in the arrows, and the right multiplication of words by
/// arrows in word coordinates.
#[derive(Clone, Debug)]
pub(crate) struct Presentation {
    pub arrows: Vec<Arrow>,
    pub words: Vec<Word>,
    /// `block_words[s][t]`: words from `s` to `t`, in creation order.
    pub block_words: Vec<Vec<Vec<usize>>>,
    /// Position of each word inside its block list.
    pub word_pos: Vec<usize>,
    /// Inverse of the matrix whose columns are the word vectors.
    pub to_words: RatMatrix,
    /// `extend[w]`: for each arrow `a` starting at `tgt(w)`, the word
    /// coordinates of `w · a`.
    pub extend: Vec<Vec<(usize, SparseVec)>>,
    pub radical: Vec<Vec<Rational>>,
    pub loewy_length: usize,
}

/// A finite-dimensional associative unital algebra over the rationals,
/// given by a labelled basis, structure constants and a complete set of
/// primitive orthogonal idempotents.
///
/// The algebra must be basic and split: each `e_i (A/rad) e_i` is one
/// dimensional and distinct idempotents are not equivalent.
pub struct AlgebraData {
    labels: Vec<String>,
    products: Vec<SparseVec>,
    unit: Vec<Rational>,
    idempotents: Vec<Idempotent>,
    pres: Presentation,
    opposite: OnceLock<Arc<AlgebraData>>,
    origin: Option<Weak<AlgebraData>>,
}

impl fmt::Debug for AlgebraData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgebraData")
            .field("dim", &self.dim())
            .field("vertices", &self.vertex_labels())
            .field("arrows", &self.pres.arrows.len())
            .finish()
    }
}

fn dense(n: usize, v: &SparseVec) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (i, c) in v {
        out[*i] += c;
    }
    out
}

fn sparse(v: &[Rational]) -> SparseVec {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

impl AlgebraData {
    /// Validates the data and derives the quiver presentation.
    ///
    /// `products[i * dim + j]` is the expansion of `b_i · b_j`.
    pub fn new(
        labels: Vec<String>,
        products: Vec<SparseVec>,
        unit: Vec<Rational>,
        idempotents: Vec<Idempotent>,
    ) -> Result<Arc<Self>> {
        Self::build(labels, products, unit, idempotents, None)
    }

    fn build(
        labels: Vec<String>,
        products: Vec<SparseVec>,
        unit: Vec<Rational>,
        idempotents: Vec<Idempotent>,
        origin: Option<Weak<AlgebraData>>,
    ) -> Result<Arc<Self>> {
        let n = labels.len();
        if products.len() != n * n {
            return Err(Error::InvalidAlgebra(format!(
                "expected {} products, got {}",
                n * n,
                products.len()
            )));
        }
        if unit.len() != n || idempotents.iter().any(|e| e.coords.len() != n) {
            return Err(Error::InvalidAlgebra("coordinate vector of wrong length".into()));
        }
        if products.iter().flatten().any(|(k, _)| *k >= n) {
            return Err(Error::InvalidAlgebra("product index out of range".into()));
        }
        let products: Vec<SparseVec> = products
            .into_iter()
            .map(|v| sparse(&dense(n, &v)))
            .collect();
        let mut alg = AlgebraData {
            labels,
            products,
            unit,
            idempotents,
            pres: Presentation {
                arrows: vec![],
                words: vec![],
                block_words: vec![],
                word_pos: vec![],
                to_words: RatMatrix::zeros(0, 0),
                extend: vec![],
                radical: vec![],
                loewy_length: 0,
            },
            opposite: OnceLock::new(),
            origin,
        };
        alg.check_associative()?;
        alg.check_unit_and_idempotents()?;
        alg.pres = alg.derive_presentation()?;
        Ok(Arc::new(alg))
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn idempotents(&self) -> &[Idempotent] {
        &self.idempotents
    }

    pub fn vertex_count(&self) -> usize {
        self.idempotents.len()
    }

    pub fn vertex_labels(&self) -> Vec<&str> {
        self.idempotents.iter().map(|e| e.label.as_str()).collect()
    }

    /// Expansion of `b_i · b_j`.
    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i * self.dim() + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    /// Product of two elements in basis coordinates.
    pub fn mul(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.product(i, j) {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    fn mul_sparse(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        let mut touched = false;
        for (i, a) in u {
            for (j, b) in v {
                let p = self.product(*i, *j);
                if p.is_empty() {
                    continue;
                }
                touched = true;
                let ab = a * b;
                for (k, c) in p {
                    out[*k] += &(&ab * c);
                }
            }
        }
        if !touched {
            return Vec::new();
        }
        sparse(&out)
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.product(i, j);
                for k in 0..n {
                    let jk = self.product(j, k);
                    if ij.is_empty() && jk.is_empty() {
                        continue;
                    }
                    let left = self.mul_sparse(ij, &vec![(k, Rational::one())]);
                    let right = self.mul_sparse(&vec![(i, Rational::one())], jk);
                    if left != right {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_unit_and_idempotents(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            let b = self.basis_vector(i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(Error::InvalidAlgebra(format!(
                    "unit does not act as identity on `{}`",
                    self.labels[i]
                )));
            }
        }
        let mut total = vec![Rational::zero(); n];
        for (a, ea) in self.idempotents.iter().enumerate() {
            for (b, eb) in self.idempotents.iter().enumerate() {
                let p = self.mul(&ea.coords, &eb.coords);
                let expected = if a == b { ea.coords.clone() } else { vec![Rational::zero(); n] };
                if p != expected {
                    return Err(Error::InvalidAlgebra(format!(
                        "idempotents `{}` and `{}` are not orthogonal idempotents",
                        ea.label, eb.label
                    )));
                }
            }
            for (t, c) in total.iter_mut().zip(&ea.coords) {
                *t += c;
            }
        }
        if total != self.unit {
            return Err(Error::InvalidAlgebra("idempotents do not sum to the unit".into()));
        }
        Ok(())
    }

    /// Jacobson radical via the trace form `(x, y) ↦ tr(L_{xy})`, valid in
    /// characteristic zero.
    fn trace_radical(&self) -> Vec<Vec<Rational>> {
        let n = self.dim();
        let traces: Vec<Rational> = (0..n)
            .map(|z| {
                (0..n)
                    .filter_map(|c| self.product(z, c).iter().find(|(k, _)| *k == c).map(|(_, v)| v.clone()))
                    .sum()
            })
            .collect();
        let mut gram = SparseEchelon::new(n);
        for a in 0..n {
            let row: Vec<(usize, Rational)> = (0..n)
                .filter_map(|b| {
                    let s: Rational = self.product(a, b).iter().map(|(z, c)| c * &traces[*z]).sum();
                    (!s.is_zero()).then_some((b, s))
                })
                .collect();
            gram.insert_sparse(&row);
        }
        gram.kernel_basis()
    }

    fn derive_presentation(&self) -> Result<Presentation> {
        let n = self.dim();
        let nv = self.vertex_count();
        let e: Vec<SparseVec> = self.idempotents.iter().map(|x| sparse(&x.coords)).collect();

        // Peirce decomposition: bases of e_s A e_t, chosen among projected basis vectors.
        let mut blocks: Vec<Vec<SparseEchelon>> =
            (0..nv).map(|_| (0..nv).map(|_| SparseEchelon::new(n)).collect()).collect();
        let mut block_basis: Vec<Vec<Vec<Vec<Rational>>>> = vec![vec![Vec::new(); nv]; nv];
        for k in 0..n {
            let b = vec![(k, Rational::one())];
            for s in 0..nv {
                let left = self.mul_sparse(&e[s], &b);
                if left.is_empty() {
                    continue;
                }
                for t in 0..nv {
                    let v = self.mul_sparse(&left, &e[t]);
                    if v.is_empty() {
                        continue;
                    }
                    let d = dense(n, &v);
                    if blocks[s][t].insert_dense(&d) {
                        block_basis[s][t].push(d);
                    }
                }
            }
        }
        let total: usize = block_basis.iter().flatten().map(Vec::len).sum();
        if total != n {
            return Err(Error::InvalidAlgebra("Peirce blocks do not span the algebra".into()));
        }
        let mut order: Vec<(usize, usize)> = Vec::with_capacity(n);
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(n);
        for s in 0..nv {
            for t in 0..nv {
                for v in &block_basis[s][t] {
                    order.push((s, t));
                    cols.push(v.clone());
                }
            }
        }
        let peirce = RatMatrix::from_columns(n, &cols);
        let peirce_inv = peirce
            .inverse()
            .ok_or_else(|| Error::InvalidAlgebra("Peirce blocks are not independent".into()))?;

        // Radical and its Peirce components.
        let radical = self.trace_radical();
        let mut rad_blocks: Vec<Vec<SparseEchelon>> =
            (0..nv).map(|_| (0..nv).map(|_| SparseEchelon::new(n)).collect()).collect();
        let mut rad_basis: Vec<Vec<Vec<Vec<Rational>>>> = vec![vec![Vec::new(); nv]; nv];
        let mut block_idx: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); nv]; nv];
        for (idx, &(bs, bt)) in order.iter().enumerate() {
            block_idx[bs][bt].push(idx);
        }
        for r in &radical {
            let c = peirce_inv.mul_vec(r);
            for s in 0..nv {
                for t in 0..nv {
                    let idxs: Vec<usize> =
                        block_idx[s][t].iter().copied().filter(|&i| !c[i].is_zero()).collect();
                    if idxs.is_empty() {
                        continue;
                    }
                    let mut part = vec![Rational::zero(); n];
                    for idx in idxs {
                        for (p, x) in part.iter_mut().zip(&cols[idx]) {
                            if !x.is_zero() {
                                *p += &(&c[idx] * x);
                            }
                        }
                    }
                    if rad_blocks[s][t].insert_dense(&part) {
                        rad_basis[s][t].push(part);
                    }
                }
            }
        }
        let rad_total: usize = rad_basis.iter().flatten().map(Vec::len).sum();
        if rad_total != radical.len() {
            return Err(Error::InvalidAlgebra("radical is not compatible with the idempotents".into()));
        }
        for s in 0..nv {
            for t in 0..nv {
                let full = block_basis[s][t].len();
                let rad = rad_basis[s][t].len();
                if s == t && full - rad != 1 {
                    return Err(Error::NonSplitSimple(self.idempotents[s].label.clone(), full - rad));
                }
                if s != t && full != rad {
                    return Err(Error::NotBasic(
                        self.idempotents[s].label.clone(),
                        self.idempotents[t].label.clone(),
                    ));
                }
            }
        }

        // Arrows: complement of rad^2 in rad, blockwise.
        let mut arrows = Vec::new();
        for s in 0..nv {
            for t in 0..nv {
                if rad_basis[s][t].is_empty() {
                    continue;
                }
                let mut sq = SparseEchelon::new(n);
                for u in 0..nv {
                    for x in &rad_basis[s][u] {
                        let xs = sparse(x);
                        for y in &rad_basis[u][t] {
                            let p = self.mul_sparse(&xs, &sparse(y));
                            if !p.is_empty() {
                                sq.insert_dense(&dense(n, &p));
                            }
                        }
                    }
                }
                for x in &rad_basis[s][t] {
                    if sq.insert_dense(x) {
                        arrows.push(Arrow { src: s, tgt: t, coords: x.clone() });
                    }
                }
            }
        }

        // Words: breadth-first products of arrows, kept when independent in their block.
        let mut word_blocks: Vec<Vec<SparseEchelon>> =
            (0..nv).map(|_| (0..nv).map(|_| SparseEchelon::new(n)).collect()).collect();
        let mut words: Vec<Word> = Vec::with_capacity(n);
        let mut lengths: Vec<usize> = Vec::with_capacity(n);
        for (s, idem) in self.idempotents.iter().enumerate() {
            word_blocks[s][s].insert_dense(&idem.coords);
            words.push(Word { src: s, tgt: s, parent: None, coords: idem.coords.clone() });
            lengths.push(0);
        }
        let mut frontier = 0;
        while frontier < words.len() {
            let w = words[frontier].clone();
            let ws = sparse(&w.coords);
            for (ai, a) in arrows.iter().enumerate() {
                if a.src != w.tgt {
                    continue;
                }
                let p = dense(n, &self.mul_sparse(&ws, &sparse(&a.coords)));
                if p.iter().all(Rational::is_zero) {
                    continue;
                }
                if word_blocks[w.src][a.tgt].insert_dense(&p) {
                    words.push(Word { src: w.src, tgt: a.tgt, parent: Some((frontier, ai)), coords: p });
                    lengths.push(lengths[frontier] + 1);
                }
            }
            frontier += 1;
        }
        if words.len() != n {
            return Err(Error::InvalidAlgebra(format!(
                "arrow words span {} of {} dimensions",
                words.len(),
                n
            )));
        }
        let wmat = RatMatrix::from_columns(n, &words.iter().map(|w| w.coords.clone()).collect::<Vec<_>>());
        let to_words = wmat
            .inverse()
            .ok_or_else(|| Error::InvalidAlgebra("word basis is singular".into()))?;
        let mut block_words = vec![vec![Vec::new(); nv]; nv];
        let mut word_pos = vec![0; n];
        for (i, w) in words.iter().enumerate() {
            word_pos[i] = block_words[w.src][w.tgt].len();
            block_words[w.src][w.tgt].push(i);
        }
        let mut extend = Vec::with_capacity(n);
        for w in &words {
            let ws = sparse(&w.coords);
            let mut row = Vec::new();
            for (ai, a) in arrows.iter().enumerate() {
                if a.src != w.tgt {
                    continue;
                }
                let p = dense(n, &self.mul_sparse(&ws, &sparse(&a.coords)));
                row.push((ai, sparse(&to_words.mul_vec(&p))));
            }
            extend.push(row);
        }
        let loewy_length = lengths.iter().max().map_or(0, |l| l + 1);
        Ok(Presentation { arrows, words, block_words, word_pos, to_words, extend, radical, loewy_length })
    }

    pub(crate) fn pres(&self) -> &Presentation {
        &self.pres
    }

    /// Arrows of the Gabriel quiver.
    pub fn arrows(&self) -> &[Arrow] {
        &self.pres.arrows
    }

    pub fn words(&self) -> &[Word] {
        &self.pres.words
    }

    /// Words from vertex `s` to vertex `t`.
    pub fn words_between(&self, s: usize, t: usize) -> &[usize] {
        &self.pres.block_words[s][t]
    }

    /// Coordinates of an element in the word basis.
    pub fn word_coords(&self, v: &[Rational]) -> Vec<Rational> {
        self.pres.to_words.mul_vec(v)
    }

    /// Basis of the Jacobson radical.
    pub fn radical_basis(&self) -> &[Vec<Rational>] {
        &self.pres.radical
    }

    /// Smallest `L` with `rad^L = 0`.
    pub fn loewy_length(&self) -> usize {
        self.pres.loewy_length
    }

    /// Number of Gabriel-quiver arrows from `s` to `t`.
    pub fn arrow_count(&self, s: usize, t: usize) -> usize {
        self.pres.arrows.iter().filter(|a| a.src == s && a.tgt == t).count()
    }

    /// `dim e_s A e_t`.
    pub fn block_dim(&self, s: usize, t: usize) -> usize {
        self.pres.block_words[s][t].len()
    }

    /// Dimension vector of the indecomposable projective `e_s A`.
    pub fn projective_dims(&self, s: usize) -> Vec<usize> {
        (0..self.vertex_count()).map(|t| self.block_dim(s, t)).collect()
    }

    /// Dimension vector of the indecomposable injective `D(A e_t)`.
    pub fn injective_dims(&self, t: usize) -> Vec<usize> {
        (0..self.vertex_count()).map(|s| self.block_dim(s, t)).collect()
    }

    pub fn is_semisimple(&self) -> bool {
        self.pres.radical.is_empty()
    }

    /// The opposite algebra: same basis and idempotents, transposed
    /// structure constants. Cached; `a.opposite().opposite()` is `a` itself.
    pub fn opposite(self: &Arc<Self>) -> Arc<AlgebraData> {
        if let Some(origin) = self.origin.as_ref().and_then(Weak::upgrade) {
            return origin;
        }
        self.opposite
            .get_or_init(|| {
                let n = self.dim();
                let mut products = Vec::with_capacity(n * n);
                for i in 0..n {
                    for j in 0..n {
                        products.push(self.product(j, i).clone());
                    }
                }
                AlgebraData::build(
                    self.labels.clone(),
                    products,
                    self.unit.clone(),
                    self.idempotents.clone(),
                    Some(Arc::downgrade(self)),
                )
                .expect("opposite of a valid algebra is valid")
            })
            .clone()
    }

    /// Structural equality of the defining data.
    pub fn same_structure(&self, other: &AlgebraData) -> bool {
        self.labels == other.labels
            && self.products == other.products
            && self.unit == other.unit
            && self.idempotents == other.idempotents
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    /// k[t]/(t^2) with basis (1, t).
    pub(crate) fn dual_numbers() -> Arc<AlgebraData> {
        let products = vec![vec![(0, q(1))], vec![(1, q(1))], vec![(1, q(1))], vec![]];
        AlgebraData::new(
            vec!["1".into(), "t".into()],
            products,
            vec![q(1), q(0)],
            vec![Idempotent { label: "1".into(), coords: vec![q(1), q(0)] }],
        )
        .unwrap()
    }

    #[test]
    fn dual_numbers_radical() {
        let a = dual_numbers();
        assert_eq!(a.radical_basis().len(), 1);
        assert!(a.radical_basis()[0][0].is_zero());
        assert_eq!(a.arrows().len(), 1);
        assert_eq!(a.loewy_length(), 2);
    }

    #[test]
    fn semisimple_one_dim() {
        let a = AlgebraData::new(
            vec!["e".into()],
            vec![vec![(0, q(1))]],
            vec![q(1)],
            vec![Idempotent { label: "e".into(), coords: vec![q(1)] }],
        )
        .unwrap();
        assert!(a.is_semisimple());
        assert_eq!(a.loewy_length(), 1);
    }

    #[test]
    fn rejects_non_associative() {
        // x*x = y, x*y = x, y*x = 0: (xx)x = 0 but x(xx) = x.
        let products = vec![
            vec![(0, q(1))],
            vec![(1, q(1))],
            vec![(2, q(1))],
            vec![(1, q(1))],
            vec![(2, q(1))],
            vec![(1, q(1))],
            vec![(2, q(1))],
            vec![],
            vec![],
        ];
        let r = AlgebraData::new(
            vec!["1".into(), "x".into(), "y".into()],
            products,
            vec![q(1), q(0), q(0)],
            vec![Idempotent { label: "1".into(), coords: vec![q(1), q(0), q(0)] }],
        );
        assert!(matches!(r, Err(Error::NotAssociative(..))));
    }

    #[test]
    fn rejects_non_split_field_extension() {
        // Q(i) with basis (1, i): i*i = -1.
        let products = vec![vec![(0, q(1))], vec![(1, q(1))], vec![(1, q(1))], vec![(0, q(-1))]];
        let r = AlgebraData::new(
            vec!["1".into(), "i".into()],
            products,
            vec![q(1), q(0)],
            vec![Idempotent { label: "1".into(), coords: vec![q(1), q(0)] }],
        );
        assert!(matches!(r, Err(Error::NonSplitSimple(_, 2))));
    }

    #[test]
    fn opposite_is_involution() {
        let a = dual_numbers();
        let op = a.opposite();
        assert!(Arc::ptr_eq(&op.opposite(), &a));
        assert!(a.same_structure(&op));
    }
}
