//! Dense exact matrices over a field, with row reduction as the workhorse.
//!
//! Vectors are plain `Vec<T>` treated as columns; matrices act on the left.
//! All algorithms are deterministic: identical inputs give bit-identical
//! outputs.

use crate::error::Error;
use crate::scalar::{CScalar, Field, Scalar};
use crate::subspace::Subspace;
use crate::Result;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T: Field> {
    rows: usize,
    cols: usize,
    data: Vec<T>, // row-major
}

impl<T: Field> std::fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<T: Field> Matrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> Vec<T> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn col(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix<T> {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn add(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.ref_add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.ref_sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &T) -> Matrix<T> {
        self.map(|x| x.ref_mul(s))
    }

    pub fn mul(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out: Matrix<T> = Matrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(r, c).ref_add(&a.ref_mul(b));
                    out.set(r, c, cur);
                }
            }
        }
        out
    }

    /// Matrix-vector product (vector as column).
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for c in 0..self.cols {
                    let a = self.at(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc = acc.ref_add(&a.ref_mul(&v[c]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, k: u32) -> Matrix<T> {
        assert!(self.is_square());
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        let mut acc = T::zero();
        for i in 0..self.rows {
            acc = acc.ref_add(self.at(i, i));
        }
        acc
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for r in 0..self.rows {
            for c in (r + 1)..self.cols {
                if self.at(r, c) != self.at(c, r) {
                    return false;
                }
            }
        }
        true
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row-echelon form together with the pivot column list.
    ///
    /// The row space is preserved; pivots are normalized to 1 and are the
    /// only nonzero entries in their columns.
    pub fn rref(&self) -> (Matrix<T>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // first nonzero entry in column c at or below row r
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for k in 0..m.cols {
                    let tmp = m.at(r, k).clone();
                    let other = m.at(p, k).clone();
                    m.set(r, k, other);
                    m.set(p, k, tmp);
                }
            }
            let inv = m.at(r, c).inv().expect("pivot is nonzero");
            for k in 0..m.cols {
                let v = m.at(r, k).ref_mul(&inv);
                m.set(r, k, v);
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for k in 0..m.cols {
                        let v = m.at(i, k).ref_sub(&f.ref_mul(m.at(r, k)));
                        m.set(i, k, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space `{v : M v = 0}` as a subspace of the column domain.
    pub fn kernel(&self) -> Subspace<T> {
        let (rr, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![T::zero(); self.cols];
            v[fc] = T::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = rr.at(ri, fc).ref_neg();
            }
            basis.push(v);
        }
        Subspace::from_rows(self.cols, basis)
    }

    /// Column space as a subspace of the codomain.
    pub fn image(&self) -> Subspace<T> {
        Subspace::from_matrix_rows(&self.transpose())
    }

    /// Row space.
    pub fn row_space(&self) -> Subspace<T> {
        Subspace::from_matrix_rows(self)
    }

    /// One solution of `M x = b`, if any.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (rr, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![T::zero(); self.cols];
        for (ri, &pc) in pivots.iter().enumerate() {
            x[pc] = rr.at(ri, self.cols).clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix<T>> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, n + r, T::one());
        }
        let (rr, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Matrix::from_fn(n, n, |r, c| rr.at(r, n + c).clone()))
    }

    /// Determinant by fraction-free-ish Gaussian elimination (exact field ops).
    pub fn det(&self) -> T {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = T::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.at(i, c).is_zero()) else {
                return T::zero();
            };
            if p != c {
                det = det.ref_neg();
                for k in 0..n {
                    let tmp = m.at(c, k).clone();
                    let other = m.at(p, k).clone();
                    m.set(c, k, other);
                    m.set(p, k, tmp);
                }
            }
            det = det.ref_mul(m.at(c, c));
            let inv = m.at(c, c).inv().expect("nonzero pivot");
            for i in (c + 1)..n {
                if m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).ref_mul(&inv);
                for k in c..n {
                    let v = m.at(i, k).ref_sub(&f.ref_mul(m.at(c, k)));
                    m.set(i, k, v);
                }
            }
        }
        det
    }

    /// Least `m >= 1` with `M^m = 0`; error if `M` is not nilpotent.
    pub fn nilpotency_index(&self) -> Result<u32> {
        assert!(self.is_square());
        if self.rows == 0 {
            return Ok(1);
        }
        let mut p = self.clone();
        for m in 1..=(self.rows as u32) {
            if p.is_zero() {
                return Ok(m);
            }
            p = p.mul(self);
        }
        Err(Error::NotNilpotent)
    }
}

impl Matrix<Scalar> {
    /// Entrywise complexification.
    pub fn complexify(&self) -> Matrix<CScalar> {
        self.map(|x| CScalar::from_real(x.clone()))
    }
}

impl Matrix<CScalar> {
    /// Entrywise conjugation.
    pub fn conj(&self) -> Matrix<CScalar> {
        self.map(CScalar::conj)
    }
}

/// Exact dot product of two vectors.
pub fn dot<T: Field>(a: &[T], b: &[T]) -> T {
    assert_eq!(a.len(), b.len());
    let mut acc = T::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc.ref_add(&x.ref_mul(y));
        }
    }
    acc
}

pub fn vec_add<T: Field>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.ref_add(y)).collect()
}

pub fn vec_sub<T: Field>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.ref_sub(y)).collect()
}

pub fn vec_scale<T: Field>(a: &[T], s: &T) -> Vec<T> {
    a.iter().map(|x| x.ref_mul(s)).collect()
}

pub fn vec_is_zero<T: Field>(a: &[T]) -> bool {
    a.iter().all(|x| x.is_zero())
}
