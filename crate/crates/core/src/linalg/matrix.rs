use std::fmt;
use std::ops::{Index, IndexMut};

use super::Rational;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Output of [`RatMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: RatMatrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        RatMatrix { rows, cols, data }
    }

    /// Builds from integer rows; all rows must have equal length.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let data = rows
            .iter()
            .flat_map(|row| {
                assert_eq!(row.len(), c, "ragged rows");
                row.iter().map(|&x| Rational::from_integer(x))
            })
            .collect();
        RatMatrix { rows: r, cols: c, data }
    }

    pub fn from_rows(rows: &[Vec<Rational>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row.iter().cloned());
        }
        RatMatrix { rows: rows.len(), cols, data }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Rational>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let rrow = rhs.row(k);
                let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, b) in orow.iter_mut().zip(rrow) {
                    if !b.is_zero() {
                        *o += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "shape mismatch in product");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn add(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sum");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        RatMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in difference");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        RatMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Rational) -> RatMatrix {
        let data = self.data.iter().map(|a| a * s).collect();
        RatMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    /// `[self | rhs]`
    pub fn hstack(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.rows, rhs.rows, "row mismatch in hstack");
        let cols = self.cols + rhs.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(rhs.row(i));
        }
        RatMatrix { rows: self.rows, cols, data }
    }

    pub fn vstack(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        RatMatrix { rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    pub fn select_columns(&self, cols: &[usize]) -> RatMatrix {
        let mut m = Self::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                m[(i, jj)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> RatMatrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &i in rows {
            data.extend_from_slice(self.row(i));
        }
        RatMatrix { rows: rows.len(), cols: self.cols, data }
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &RatMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> RatMatrix {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = self[(r0 + i, c0 + j)].clone();
            }
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let c = self.cols;
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let (head, tail) = self.data.split_at_mut(hi * c);
        head[lo * c..(lo + 1) * c].swap_with_slice(&mut tail[..c]);
    }

    /// In-place Gauss-Jordan elimination; returns pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip().expect("nonzero pivot");
            let support: Vec<usize> = (c..cols).filter(|&j| !self[(r, j)].is_zero()).collect();
            for &j in &support {
                self[(r, j)] = &self[(r, j)] * &inv;
            }
            let pivot_row: Vec<(usize, Rational)> =
                support.iter().map(|&j| (j, self[(r, j)].clone())).collect();
            for i in 0..rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone();
                for (j, v) in &pivot_row {
                    let delta = &factor * v;
                    self[(i, *j)] -= &delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row echelon form, rank and pivot columns.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivot_cols = m.rref_in_place();
        Rref { rank: pivot_cols.len(), matrix: m, pivot_cols }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Columns form a basis of the right null space. For each free column `f`
    /// the basis vector has a 1 in position `f` and 0 in every other free
    /// position, so coordinates of a null vector are its free entries.
    pub fn kernel_basis(&self) -> RatMatrix {
        let Rref { matrix, pivot_cols, .. } = self.rref();
        kernel_from_rref(&matrix, &pivot_cols, self.cols)
    }

    /// Some `x` with `self * x = b`, or `None`.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(self.rows, b.len(), "right-hand side length mismatch");
        let bm = RatMatrix::from_columns(self.rows, &[b.to_vec()]);
        self.solve_many(&bm).map(|x| x.column(0))
    }

    /// Solves `self * X = B` column by column; `None` if any column is inconsistent.
    pub fn solve_many(&self, b: &RatMatrix) -> Option<RatMatrix> {
        assert_eq!(self.rows, b.rows, "right-hand side row mismatch");
        let mut aug = self.hstack(b);
        let pivots = aug.rref_in_place();
        let mut x = RatMatrix::zeros(self.cols, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            if pc >= self.cols {
                return None;
            }
            for j in 0..b.cols {
                x[(pc, j)] = aug[(r, self.cols + j)].clone();
            }
        }
        Some(x)
    }

    /// Inverse when square and of full rank.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = self.hstack(&RatMatrix::identity(n));
        let pivots = aug.rref_in_place();
        if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
            return None;
        }
        Some(aug.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Basis of the column space, taken from the original pivot columns.
    pub fn column_space(&self) -> RatMatrix {
        let Rref { pivot_cols, .. } = self.rref();
        self.select_columns(&pivot_cols)
    }

    pub fn determinant(&self) -> Rational {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = &det * &pivot;
            let inv = pivot.recip().expect("nonzero pivot");
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..n {
                    let d = &f * &m[(c, j)];
                    m[(i, j)] -= &d;
                }
            }
        }
        det
    }
}

fn kernel_from_rref(rref: &RatMatrix, pivot_cols: &[usize], cols: usize) -> RatMatrix {
    let mut is_pivot = vec![None; cols];
    for (r, &c) in pivot_cols.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    let free: Vec<usize> = (0..cols).filter(|&c| is_pivot[c].is_none()).collect();
    let mut k = RatMatrix::zeros(cols, free.len());
    for (j, &f) in free.iter().enumerate() {
        k[(f, j)] = Rational::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            let v = &rref[(r, f)];
            if !v.is_zero() {
                k[(pc, j)] = -v;
            }
        }
    }
    k
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        write!(f, "]")
    }
}
