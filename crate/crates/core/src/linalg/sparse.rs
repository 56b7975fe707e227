use super::{RatMatrix, Rational};

/// Sparse row: `(column, value)` pairs in increasing column order, no zeros.
pub type SparseRow = Vec<(usize, Rational)>;

/// Incremental row echelon form over sparse rows.
///
/// Rows are inserted one at a time and reduced against the current pivots;
/// only the leading column is kept normalised to 1. Used for the large,
/// very sparse intertwiner systems and for span/rank bookkeeping.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    cols: usize,
    rows: Vec<SparseRow>,
    pivot_row: Vec<Option<usize>>,
}

impl SparseEchelon {
    pub fn new(cols: usize) -> Self {
        SparseEchelon { cols, rows: Vec::new(), pivot_row: vec![None; cols] }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, dense: &mut [Rational]) {
        for c in 0..self.cols {
            if dense[c].is_zero() {
                continue;
            }
            if let Some(r) = self.pivot_row[c] {
                let f = dense[c].clone();
                for (j, v) in &self.rows[r] {
                    let d = &f * v;
                    dense[*j] -= &d;
                }
            }
        }
    }

    /// Inserts a dense vector; returns `true` if it was independent.
    pub fn insert_dense(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut dense = v.to_vec();
        self.reduce(&mut dense);
        self.push_reduced(dense)
    }

    /// Inserts a sparse row; returns `true` if it was independent.
    pub fn insert_sparse(&mut self, row: &[(usize, Rational)]) -> bool {
        if row.iter().all(|(_, v)| v.is_zero()) {
            return false;
        }
        let mut dense = vec![Rational::zero(); self.cols];
        for (j, v) in row {
            dense[*j] += v;
        }
        self.reduce(&mut dense);
        self.push_reduced(dense)
    }

    fn push_reduced(&mut self, dense: Vec<Rational>) -> bool {
        let Some(lead) = dense.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = dense[lead].recip().expect("nonzero");
        let row: SparseRow = dense
            .into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, &x * &inv))
            .collect();
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(row);
        true
    }

    /// Whether `v` lies in the row span.
    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut dense = v.to_vec();
        self.reduce(&mut dense);
        dense.iter().all(Rational::is_zero)
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        (0..self.cols).filter(|&c| self.pivot_row[c].is_some()).collect()
    }

    /// Fully reduced rows keyed by pivot column, in increasing pivot order.
    fn reduced_rows(&self) -> Vec<(usize, Vec<Rational>)> {
        let pivots = self.pivot_cols();
        let mut out: Vec<(usize, Vec<Rational>)> = Vec::with_capacity(pivots.len());
        // Back substitution from the last pivot.
        let mut done: Vec<Option<Vec<Rational>>> = vec![None; self.cols];
        for &p in pivots.iter().rev() {
            let mut dense = vec![Rational::zero(); self.cols];
            for (j, v) in &self.rows[self.pivot_row[p].unwrap()] {
                dense[*j] = v.clone();
            }
            for c in p + 1..self.cols {
                if dense[c].is_zero() {
                    continue;
                }
                if let Some(prow) = &done[c] {
                    let f = dense[c].clone();
                    for (j, v) in prow.iter().enumerate() {
                        if !v.is_zero() {
                            let d = &f * v;
                            dense[j] -= &d;
                        }
                    }
                }
            }
            done[p] = Some(dense);
        }
        for p in pivots {
            out.push((p, done[p].take().unwrap()));
        }
        out
    }

    /// Basis of the right null space of the inserted rows, one vector per
    /// free column with the same normalisation as [`RatMatrix::kernel_basis`].
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let reduced = self.reduced_rows();
        let free: Vec<usize> = (0..self.cols).filter(|&c| self.pivot_row[c].is_none()).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (p, row) in &reduced {
                    if !row[f].is_zero() {
                        v[*p] = -&row[f];
                    }
                }
                v
            })
            .collect()
    }

    /// Free (non-pivot) columns in increasing order.
    pub fn free_cols(&self) -> Vec<usize> {
        (0..self.cols).filter(|&c| self.pivot_row[c].is_none()).collect()
    }

    pub fn to_matrix(&self) -> RatMatrix {
        let rows: Vec<Vec<Rational>> = self.reduced_rows().into_iter().map(|(_, r)| r).collect();
        RatMatrix::from_rows(&rows, self.cols)
    }
}

/// Rank of a family of dense vectors of equal length.
pub fn span_rank<'a, I>(len: usize, vectors: I) -> usize
where
    I: IntoIterator<Item = &'a Vec<Rational>>,
{
    let mut e = SparseEchelon::new(len);
    for v in vectors {
        e.insert_dense(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn agrees_with_dense(v in proptest::collection::vec(-2i64..3, 12)) {
            let m = RatMatrix::from_vec(3, 4, v.into_iter().map(Rational::from_integer).collect());
            let mut e = SparseEchelon::new(4);
            for i in 0..3 {
                e.insert_dense(m.row(i));
            }
            prop_assert_eq!(e.rank(), m.rank());
            prop_assert_eq!(e.to_matrix(), m.rref().matrix.select_rows(&(0..m.rank()).collect::<Vec<_>>()));
            let k = RatMatrix::from_columns(4, &e.kernel_basis());
            prop_assert_eq!(k, m.kernel_basis());
        }
    }
}
