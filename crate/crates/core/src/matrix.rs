//! Dense exact matrices over the rationals.
//!
//! Row reduction uses a fixed pivot rule (leftmost nonzero column, first
//! nonzero row) so reduced forms are canonical: two row spaces are equal if
//! and only if their `rref` matrices are structurally equal.

use num_traits::{One, Zero};

use crate::rational::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rat::one();
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<Rat>>) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for row in rows {
            assert_eq!(row.len(), cols, "ragged row");
            data.extend(row);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Rat]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    /// Stack `self` on top of `other` (column counts must match).
    pub fn stack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column mismatch in stack");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row-echelon form with zero rows dropped.
    ///
    /// Pivot rule: scan columns left to right, take the first row (from the
    /// current one down) with a nonzero entry. Idempotent, row space
    /// preserving.
    pub fn rref(&self) -> Matrix {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let inv = m.at(pivot_row, col).recip();
            m.scale_row(pivot_row, &inv);
            for r in 0..m.rows {
                if r != pivot_row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    m.sub_scaled_row(r, pivot_row, &factor);
                }
            }
            pivot_row += 1;
        }
        m.truncate_rows(pivot_row);
        m
    }

    pub fn rank(&self) -> usize {
        self.rref().rows
    }

    /// Basis of the right kernel `{ x : M x = 0 }`, one vector per row.
    ///
    /// Built from the rref by the free-variable construction, so the result
    /// is deterministic.
    pub fn null_space(&self) -> Matrix {
        let r = self.rref();
        let mut pivot_of_col = vec![None; r.cols];
        for (i, row) in r.iter_rows().enumerate() {
            let col = row.iter().position(|x| !x.is_zero()).expect("zero row in rref");
            pivot_of_col[col] = Some(i);
        }
        let mut rows = Vec::new();
        for free in 0..r.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![Rat::zero(); r.cols];
            v[free] = Rat::one();
            for (col, pivot) in pivot_of_col.iter().enumerate() {
                if let Some(i) = pivot {
                    v[col] = -r.at(*i, free).clone();
                }
            }
            rows.push(v);
        }
        Matrix::from_rows(r.cols, rows)
    }

    /// Reduce `v` against the rows of `self`, which must be in rref.
    /// The result has zeros in every pivot column.
    pub fn reduce_vector(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        let mut out = v.to_vec();
        for row in self.iter_rows() {
            let col = row.iter().position(|x| !x.is_zero()).expect("zero row in rref");
            if !out[col].is_zero() {
                let factor = out[col].clone();
                for (o, r) in out.iter_mut().zip(row.iter()) {
                    *o -= &factor * r;
                }
            }
        }
        out
    }

    /// Whether `v` lies in the row space of `self` (which must be in rref).
    pub fn row_space_contains(&self, v: &[Rat]) -> bool {
        self.reduce_vector(v).iter().all(Rat::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Rat) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            if !self.data[idx].is_zero() {
                self.data[idx] = &self.data[idx] * factor;
            }
        }
    }

    fn sub_scaled_row(&mut self, dst: usize, src: usize, factor: &Rat) {
        for c in 0..self.cols {
            let s = self.data[src * self.cols + c].clone();
            if !s.is_zero() {
                self.data[dst * self.cols + c] -= factor * &s;
            }
        }
    }

    fn truncate_rows(&mut self, rows: usize) {
        self.data.truncate(rows * self.cols);
        self.rows = rows;
    }
}

/// Incremental row-space accumulator: rows are inserted one at a time and
/// kept in rref, so rank queries and membership tests stay cheap.
#[derive(Debug, Clone)]
pub struct RowSpace {
    cols: usize,
    /// Rows in rref order; `pivots[i]` is the pivot column of `rows[i]`.
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(cols: usize) -> Self {
        RowSpace {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the accumulated rows.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        let mut out = v.to_vec();
        self.reduce_in_place(&mut out);
        out
    }

    fn reduce_in_place(&self, out: &mut [Rat]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let factor = out[p].clone();
                for (o, r) in out.iter_mut().zip(row.iter()) {
                    *o -= &factor * r;
                }
            }
        }
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(Rat::is_zero)
    }

    /// Insert a row; returns true if it enlarged the space.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.cols);
        let mut red = self.reduce(v);
        let Some(p) = red.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = red[p].recip();
        for x in red.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        // Back-substitute into existing rows to keep the reduced form.
        for (row, &q) in self.rows.iter_mut().zip(&self.pivots) {
            debug_assert_ne!(p, q);
            if !row[p].is_zero() {
                let factor = row[p].clone();
                for (o, r) in row.iter_mut().zip(red.iter()) {
                    *o -= &factor * r;
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(pos, red);
        self.pivots.insert(pos, p);
        true
    }

    /// The accumulated space as a canonical rref matrix.
    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(self.cols, self.rows.clone())
    }
}
