//! Subspaces of `T^n` in canonical reduced row-echelon basis.
//!
//! The RREF basis is a canonical form, so subspace equality is structural
//! equality and all lattice operations (sum, intersection, containment) are
//! exact and deterministic.

use crate::error::Error;
use crate::matrix::Matrix;
use crate::scalar::{CScalar, Field, Scalar};
use crate::Result;

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace<T: Field> {
    ambient: usize,
    basis: Matrix<T>, // rows in RREF, no zero rows
    pivots: Vec<usize>,
}

impl<T: Field> std::fmt::Debug for Subspace<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim {} of {}) {:?}",
            self.dim(),
            self.ambient,
            self.basis
        )
    }
}

impl<T: Field> Subspace<T> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn from_rows(ambient: usize, rows: Vec<Vec<T>>) -> Self {
        if rows.is_empty() {
            return Subspace::zero(ambient);
        }
        Subspace::from_matrix_rows(&Matrix::from_rows(rows))
    }

    /// Span of the rows of a matrix.
    pub fn from_matrix_rows(m: &Matrix<T>) -> Self {
        let (rr, pivots) = m.rref();
        let basis = Matrix::from_fn(pivots.len(), m.cols(), |r, c| rr.at(r, c).clone());
        Subspace {
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis_matrix(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<T>> {
        (0..self.dim()).map(|r| self.basis.row(r)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is outside.
    pub fn coords_of(&self, v: &[T]) -> Option<Vec<T>> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vec<T> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        // verify v = sum coords_i * basis_i
        for c in 0..self.ambient {
            let mut acc = T::zero();
            for (ri, co) in coords.iter().enumerate() {
                if !co.is_zero() {
                    acc = acc.ref_add(&co.ref_mul(self.basis.at(ri, c)));
                }
            }
            if &acc != &v[c] {
                return None;
            }
        }
        Some(coords)
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.coords_of(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace<T>) -> bool {
        other.basis_rows().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace<T>) -> Subspace<T> {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        Subspace::from_matrix_rows(&self.basis.vstack(&other.basis))
    }

    /// Exact intersection via the kernel of `[A^T | -B^T]`.
    pub fn intersect(&self, other: &Subspace<T>) -> Subspace<T> {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let a = self.dim();
        let b = other.dim();
        if a == 0 || b == 0 {
            return Subspace::zero(self.ambient);
        }
        let m = Matrix::from_fn(self.ambient, a + b, |r, c| {
            if c < a {
                self.basis.at(c, r).clone()
            } else {
                other.basis.at(c - a, r).ref_neg()
            }
        });
        let ker = m.kernel();
        let vecs: Vec<Vec<T>> = ker
            .basis_rows()
            .iter()
            .map(|yz| {
                (0..self.ambient)
                    .map(|c| {
                        let mut acc = T::zero();
                        for (i, y) in yz[..a].iter().enumerate() {
                            if !y.is_zero() {
                                acc = acc.ref_add(&y.ref_mul(self.basis.at(i, c)));
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Subspace::from_rows(self.ambient, vecs)
    }

    /// `dim(B) - dim(A)` for `A = self` contained in `B`; errors when the
    /// containment fails.
    pub fn quotient_dims(&self, larger: &Subspace<T>) -> Result<usize> {
        if self.ambient != larger.ambient {
            return Err(Error::DimMismatch(format!(
                "ambient {} vs {}",
                self.ambient, larger.ambient
            )));
        }
        if !larger.contains_subspace(self) {
            return Err(Error::NotContained);
        }
        Ok(larger.dim() - self.dim())
    }

    /// Representatives of a basis of `self / smaller`: basis rows of `self`
    /// that extend a basis of `smaller`.
    pub fn complement_in(&self, smaller: &Subspace<T>) -> Result<Vec<Vec<T>>> {
        if !self.contains_subspace(smaller) {
            return Err(Error::NotContained);
        }
        let mut span = smaller.clone();
        let mut reps = Vec::new();
        for v in self.basis_rows() {
            if !span.contains(&v) {
                span = span.sum(&Subspace::from_rows(self.ambient, vec![v.clone()]));
                reps.push(v);
            }
        }
        debug_assert_eq!(reps.len(), self.dim() - smaller.dim());
        Ok(reps)
    }

    /// Restrict an endomorphism of the ambient space to this (invariant)
    /// subspace, expressed in the RREF basis. `None` if not invariant.
    pub fn restrict_endo(&self, m: &Matrix<T>) -> Option<Matrix<T>> {
        assert_eq!(m.rows(), self.ambient);
        assert_eq!(m.cols(), self.ambient);
        let k = self.dim();
        let mut out = Matrix::zero(k, k);
        for j in 0..k {
            let w = m.apply(&self.basis.row(j));
            let coords = self.coords_of(&w)?;
            for i in 0..k {
                out.set(i, j, coords[i].clone());
            }
        }
        Some(out)
    }
}

impl Subspace<Scalar> {
    pub fn complexify(&self) -> Subspace<CScalar> {
        Subspace {
            ambient: self.ambient,
            basis: self.basis.complexify(),
            pivots: self.pivots.clone(),
        }
    }
}

impl Subspace<CScalar> {
    /// Conjugate subspace. Conjugation commutes with row reduction, so the
    /// conjugated basis is again RREF with the same pivots.
    pub fn conj(&self) -> Subspace<CScalar> {
        Subspace {
            ambient: self.ambient,
            basis: self.basis.conj(),
            pivots: self.pivots.clone(),
        }
    }
}

/// Growable span kept in reduced row-echelon form; insertion reduces the
/// new vector against the pivot rows and is linear in the current dimension.
pub struct IncrementalSpan<T: Field> {
    ambient: usize,
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Field> IncrementalSpan<T> {
    pub fn new(ambient: usize) -> Self {
        IncrementalSpan {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Insert a vector; returns `false` if it was already in the span.
    pub fn insert(&mut self, v: &[T]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let f = w[p].clone();
                for c in 0..self.ambient {
                    w[c] = w[c].ref_sub(&f.ref_mul(&row[c]));
                }
            }
        }
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().expect("pivot nonzero");
        for c in 0..self.ambient {
            w[c] = w[c].ref_mul(&inv);
        }
        // clear the new pivot column from the existing rows
        for row in &mut self.rows {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for c in 0..self.ambient {
                    row[c] = row[c].ref_sub(&f.ref_mul(&w[c]));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, w);
        true
    }

    pub fn contains(&self, v: &[T]) -> bool {
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let f = w[p].clone();
                for c in 0..self.ambient {
                    w[c] = w[c].ref_sub(&f.ref_mul(&row[c]));
                }
            }
        }
        w.iter().all(|x| x.is_zero())
    }

    pub fn into_subspace(self) -> Subspace<T> {
        Subspace::from_rows(self.ambient, self.rows)
    }
}

/// Working model of a quotient `W / U` of subspaces of the ambient space:
/// carries chosen representatives and projects/lifts exactly.
pub struct QuotientSpace<T: Field> {
    pub total: Subspace<T>,
    pub denom: Subspace<T>,
    reps: Vec<Vec<T>>,
}

impl<T: Field> QuotientSpace<T> {
    pub fn new(total: Subspace<T>, denom: Subspace<T>) -> Result<Self> {
        let reps = total.complement_in(&denom)?;
        Ok(QuotientSpace { total, denom, reps })
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[Vec<T>] {
        &self.reps
    }

    /// Class of an ambient vector of `total` in quotient coordinates.
    pub fn project(&self, v: &[T]) -> Option<Vec<T>> {
        // solve v = sum a_i rep_i + (element of denom)
        let n = self.total.ambient();
        let k = self.reps.len();
        let d = self.denom.dim();
        let m = Matrix::from_fn(n, k + d, |r, c| {
            if c < k {
                self.reps[c][r].clone()
            } else {
                self.denom.basis_matrix().at(c - k, r).clone()
            }
        });
        let sol = m.solve(v)?;
        Some(sol[..k].to_vec())
    }

    /// Ambient representative of quotient coordinates.
    pub fn lift(&self, coords: &[T]) -> Vec<T> {
        let n = self.total.ambient();
        let mut out = vec![T::zero(); n];
        for (a, rep) in coords.iter().zip(&self.reps) {
            if !a.is_zero() {
                for c in 0..n {
                    out[c] = out[c].ref_add(&a.ref_mul(&rep[c]));
                }
            }
        }
        out
    }

    /// The endomorphism induced on the quotient by an ambient endomorphism
    /// mapping `total` into `total` and `denom` into `denom`.
    pub fn induced_endo(&self, m: &Matrix<T>) -> Option<Matrix<T>> {
        let k = self.dim();
        let mut out = Matrix::zero(k, k);
        for j in 0..k {
            let w = m.apply(&self.reps[j]);
            let coords = self.project(&w)?;
            for i in 0..k {
                out.set(i, j, coords[i].clone());
            }
        }
        Some(out)
    }
}
