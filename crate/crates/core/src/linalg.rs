//! Dense exact linear algebra over Q(i).
//!
//! Pivoting always takes the first nonzero entry in column order, so every
//! result here is reproducible bit for bit.

use std::fmt::Write as _;
use std::ops::{Index, IndexMut};

use crate::exactnum::{GaussianInt, GaussianRational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),
    #[error("entry ({0}, {1}) is not a Gaussian integer")]
    NonIntegerEntry(usize, usize),
    #[error("entry count {got} does not match {rows}x{cols}")]
    BadLength {
        rows: usize,
        cols: usize,
        got: usize,
    },
}

/// Row-major dense matrix of Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

/// Reduced row-echelon form together with its rank and pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: DenseMatrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl DenseMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<GaussianRational>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::BadLength {
                rows,
                cols,
                got: data.len(),
            });
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| {
            if r == c {
                GaussianRational::one()
            } else {
                GaussianRational::zero()
            }
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> GaussianRational,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        DenseMatrix { rows, cols, data }
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged rows");
        DenseMatrix {
            rows: n,
            cols: m,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn diagonal_from(entries: &[GaussianRational]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |r, c| {
            if r == c {
                entries[r].clone()
            } else {
                GaussianRational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<GaussianRational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussianRational::is_zero)
    }

    pub fn transpose(&self) -> DenseMatrix {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, rhs: &DenseMatrix) -> Result<DenseMatrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut out = DenseMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip_with(
        &self,
        rhs: &DenseMatrix,
        f: impl Fn(&GaussianRational, &GaussianRational) -> GaussianRational,
    ) -> Result<DenseMatrix, LinalgError> {
        if self.shape() != rhs.shape() {
            return Err(LinalgError::DimensionMismatch {
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, rhs: &DenseMatrix) -> Result<DenseMatrix, LinalgError> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &DenseMatrix) -> Result<DenseMatrix, LinalgError> {
        self.zip_with(rhs, |a, b| a - b)
    }

    /// Entrywise product.
    pub fn hadamard(&self, rhs: &DenseMatrix) -> Result<DenseMatrix, LinalgError> {
        self.zip_with(rhs, |a, b| a * b)
    }

    pub fn scale(&self, c: &GaussianRational) -> DenseMatrix {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// Kronecker product; entry `((i, k), (j, l))` sits at `(i * rhs.rows + k, j * rhs.cols + l)`.
    pub fn kronecker(&self, rhs: &DenseMatrix) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = &rhs[(k, l)];
                        if !b.is_zero() {
                            out[(i * rhs.rows + k, j * rhs.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    /// `v^T · self`, as a row vector.
    pub fn vec_mul(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(v.len(), self.rows, "vector length");
        let mut out = vec![GaussianRational::zero(); self.cols];
        for (r, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (c, acc) in out.iter_mut().enumerate() {
                let a = &self[(r, c)];
                if !a.is_zero() {
                    *acc += x * a;
                }
            }
        }
        out
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = &m[(row, c)] * &inv;
                m[(row, c)] = v;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    if m[(row, c)].is_zero() {
                        continue;
                    }
                    let v = &m[(r, c)] - &(&factor * &m[(row, c)]);
                    m[(r, c)] = v;
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
        Rref {
            matrix: m,
            rank: pivot_cols.len(),
            pivot_cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A basis of `{ v : self · v = 0 }`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<GaussianRational>> {
        let Rref {
            matrix, pivot_cols, ..
        } = self.rref();
        let free = (0..self.cols).filter(|c| !pivot_cols.contains(c));
        free.map(|f| {
            let mut v = vec![GaussianRational::zero(); self.cols];
            v[f] = GaussianRational::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -&matrix[(r, f)];
            }
            v
        })
        .collect()
    }

    /// One solution of `self · x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[GaussianRational]) -> Option<Vec<GaussianRational>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let aug = DenseMatrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                b[r].clone()
            }
        });
        let Rref {
            matrix, pivot_cols, ..
        } = aug.rref();
        if pivot_cols.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![GaussianRational::zero(); self.cols];
        for (r, &pc) in pivot_cols.iter().enumerate() {
            x[pc] = matrix[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Result<Option<DenseMatrix>, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let aug = DenseMatrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                GaussianRational::one()
            } else {
                GaussianRational::zero()
            }
        });
        let rr = aug.rref();
        if rr.pivot_cols.iter().copied().take(n).ne(0..n) {
            return Ok(None);
        }
        Ok(Some(DenseMatrix::from_fn(n, n, |r, c| {
            rr.matrix[(r, n + c)].clone()
        })))
    }

    /// Determinant by Gaussian elimination over the field.
    pub fn det_field(&self) -> Result<GaussianRational, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = GaussianRational::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !m[(r, k)].is_zero()) else {
                return Ok(GaussianRational::zero());
            };
            if p != k {
                m.swap_rows(p, k);
                det = -det;
            }
            let pivot = m[(k, k)].clone();
            det *= &pivot;
            let inv = pivot.inv().expect("pivot is nonzero");
            for r in k + 1..n {
                if m[(r, k)].is_zero() {
                    continue;
                }
                let factor = &m[(r, k)] * &inv;
                for c in k + 1..n {
                    if m[(k, c)].is_zero() {
                        continue;
                    }
                    let v = &m[(r, c)] - &(&factor * &m[(k, c)]);
                    m[(r, c)] = v;
                }
            }
        }
        Ok(det)
    }

    fn to_gaussian_ints(&self) -> Result<Vec<GaussianInt>, LinalgError> {
        self.data
            .iter()
            .enumerate()
            .map(|(idx, x)| {
                GaussianInt::try_from(x)
                    .map_err(|_| LinalgError::NonIntegerEntry(idx / self.cols, idx % self.cols))
            })
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination in Z[i].
    ///
    /// Requires every entry to be a Gaussian integer.
    pub fn det_bareiss(&self) -> Result<GaussianRational, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut m = self.to_gaussian_ints()?;
        if n == 0 {
            return Ok(GaussianRational::one());
        }
        let mut negate = false;
        let mut prev = GaussianInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                    return Ok(GaussianRational::zero());
                };
                for c in 0..n {
                    m.swap(k * n + c, p * n + c);
                }
                negate = !negate;
            }
            bareiss_step(&mut m, n, k, &prev);
            prev = m[k * n + k].clone();
        }
        let det = m[n * n - 1].clone();
        Ok(if negate { det.neg() } else { det }.to_rational())
    }

    /// Leading principal minors of orders `1..=n` from a single fraction-free
    /// pass without row exchanges.
    ///
    /// Elimination stops at the first vanishing minor: that zero is the last
    /// element returned, so a result shorter than `n` means the minor of the
    /// next order is undetermined by this method.
    pub fn leading_minors_bareiss(&self) -> Result<Vec<GaussianRational>, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut m = self.to_gaussian_ints()?;
        let mut minors = Vec::with_capacity(n);
        let mut prev = GaussianInt::one();
        for k in 0..n {
            let pivot = m[k * n + k].clone();
            minors.push(pivot.to_rational());
            if pivot.is_zero() {
                break;
            }
            if k + 1 < n {
                bareiss_step(&mut m, n, k, &prev);
            }
            prev = pivot;
        }
        Ok(minors)
    }

    pub fn diagonal(&self) -> Vec<GaussianRational> {
        (0..self.rows.min(self.cols))
            .map(|k| self[(k, k)].clone())
            .collect()
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols.min(r)).all(|c| self[(r, c)].is_zero()))
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self[(r, c)].is_zero()))
    }

    pub fn is_unit_lower_triangular(&self) -> bool {
        self.is_square()
            && self.is_lower_triangular()
            && self.diagonal().iter().all(GaussianRational::is_one)
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_upper_triangular() && self.is_lower_triangular()
    }

    /// One line per row, cells in canonical text form.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(out, "{}", cells.join(",")).unwrap();
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

fn bareiss_step(m: &mut [GaussianInt], n: usize, k: usize, prev: &GaussianInt) {
    let pivot = m[k * n + k].clone();
    for r in k + 1..n {
        let lead = m[r * n + k].clone();
        for c in k + 1..n {
            let v = pivot
                .mul(&m[r * n + c])
                .sub(&lead.mul(&m[k * n + c]))
                .div_exact(prev);
            m[r * n + c] = v;
        }
        m[r * n + k] = GaussianInt::default();
    }
}

pub fn dot(a: &[GaussianRational], b: &[GaussianRational]) -> GaussianRational {
    let mut acc = GaussianRational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = GaussianRational;
    fn index(&self, (r, c): (usize, usize)) -> &GaussianRational {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r}, {c}) out of range"
        );
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut GaussianRational {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r}, {c}) out of range"
        );
        &mut self.data[r * self.cols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    fn m(rows: &[&[(i64, i64)]]) -> DenseMatrix {
        DenseMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(a, b)| g(a, b)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_examples() {
        let id = DenseMatrix::identity(3);
        let rr = id.rref();
        assert_eq!(rr.matrix, id);
        assert_eq!(rr.rank, 3);

        let dep = m(&[&[(1, 0), (0, 1)], &[(0, 1), (-1, 0)]]);
        assert_eq!(dep.rank(), 1);
        assert_eq!(dep.rref().pivot_cols, vec![0]);

        assert_eq!(DenseMatrix::zeros(2, 2).rank(), 0);
    }

    #[test]
    fn kernel_examples() {
        assert!(DenseMatrix::identity(2).kernel_basis().is_empty());
        let k = m(&[&[(1, 0), (0, 1)]]).kernel_basis();
        assert_eq!(k, vec![vec![g(0, -1), g(1, 0)]]);
        assert_eq!(DenseMatrix::zeros(1, 2).kernel_basis().len(), 2);
    }

    #[test]
    fn determinant_examples() {
        let h2 = m(&[&[(1, 0), (0, 1)], &[(0, 1), (0, 1)]]);
        assert_eq!(h2.det_field().unwrap(), g(1, 1));
        assert_eq!(h2.det_bareiss().unwrap(), g(1, 1));
        assert_eq!(DenseMatrix::identity(4).det_bareiss().unwrap(), g(1, 0));
        let h3 = m(&[
            &[(1, 0), (0, 1), (0, 1)],
            &[(0, 1), (0, 1), (-1, 0)],
            &[(0, 1), (-1, 0), (0, 1)],
        ]);
        assert_eq!(h3.det_field().unwrap(), g(0, 2));
        assert_eq!(h3.det_bareiss().unwrap(), g(0, 2));
        assert_eq!(
            h3.leading_minors_bareiss().unwrap(),
            vec![g(1, 0), g(1, 1), g(0, 2)]
        );
        assert_eq!(DenseMatrix::zeros(0, 0).det_field().unwrap(), g(1, 0));
        assert_eq!(DenseMatrix::zeros(0, 0).det_bareiss().unwrap(), g(1, 0));
    }

    #[test]
    fn bareiss_needs_row_exchange() {
        let a = m(&[&[(0, 0), (1, 0)], &[(1, 0), (0, 0)]]);
        assert_eq!(a.det_bareiss().unwrap(), g(-1, 0));
        assert_eq!(a.leading_minors_bareiss().unwrap(), vec![g(0, 0)]);
    }

    #[test]
    fn bareiss_rejects_fractions() {
        let mut a = DenseMatrix::identity(2);
        a[(1, 0)] = "1/2".parse().unwrap();
        assert_eq!(a.det_bareiss(), Err(LinalgError::NonIntegerEntry(1, 0)));
        assert_eq!(a.det_field().unwrap(), g(1, 0));
    }

    #[test]
    fn product_examples() {
        let l = m(&[&[(1, 0), (0, 0)], &[(0, 1), (1, 0)]]);
        let u = m(&[&[(1, 0), (0, 1)], &[(0, 0), (1, 1)]]);
        let h = m(&[&[(1, 0), (0, 1)], &[(0, 1), (0, 1)]]);
        assert_eq!(l.mul(&u).unwrap(), h);
        assert_eq!(l.mul(&DenseMatrix::identity(2)).unwrap(), l);
        assert_eq!(l.transpose().transpose(), l);
        assert!(matches!(
            l.mul(&DenseMatrix::zeros(3, 1)),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[(1, 0), (0, 1)], &[(0, 1), (0, 1)]]);
        let x = a.solve(&[g(1, 0), g(0, 0)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![g(1, 0), g(0, 0)]);
        let inv = a.inverse().unwrap().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), DenseMatrix::identity(2));
        let sing = m(&[&[(1, 0), (0, 1)], &[(0, 1), (-1, 0)]]);
        assert!(sing.inverse().unwrap().is_none());
        assert!(sing.solve(&[g(0, 0), g(1, 0)]).is_none());
    }

    #[test]
    fn csv_uses_canonical_cells() {
        let a = m(&[&[(1, 0), (0, 1)], &[(0, 0), (1, -1)]]);
        assert_eq!(a.to_csv(), "1,i\n0,1-i\n");
    }
}
