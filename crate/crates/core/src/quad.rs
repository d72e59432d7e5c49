//! Rational quadratic spaces: exact signatures, isotropic vectors,
//! hyperbolic completion, orthogonal complements and Witt decomposition.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::matrix::{dot, vec_is_zero, vec_scale, vec_sub, Matrix};
use crate::scalar::{CScalar, Field, Scalar};
use crate::subspace::Subspace;
use crate::Result;

/// A rational vector space with a symmetric bilinear form given by its Gram
/// matrix. `q(v)` abbreviates `q(v, v)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadSpace {
    dim: usize,
    gram: Matrix<Scalar>,
    labels: Option<Vec<String>>,
}

/// Result of an exact Witt-style decomposition: hyperbolic pairs, an
/// anisotropic (or search-exhausted) remainder, and for a line remainder a
/// norm-one vector when one is attainable over the rationals.
///
/// The `unit` field is `(w, r)` with `q(w) = r`; the normalized unit vector
/// is `w / sqrt(r)`. `r = 1` means the vector is exact; any other `r` is a
/// recorded square-root scale flag.
#[derive(Clone, Debug)]
pub struct WittDecomposition {
    pub pairs: Vec<(Vec<Scalar>, Vec<Scalar>)>,
    pub remainder: Vec<Vec<Scalar>>,
    pub unit: Option<(Vec<Scalar>, Scalar)>,
}

impl QuadSpace {
    pub fn new(gram: Matrix<Scalar>) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(QuadSpace {
            dim: gram.rows(),
            gram,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = Some(labels);
        self
    }

    /// Diagonal form `diag(1,1,1,-1,...,-1)` of signature `(3, dim-3)`.
    pub fn preset_k3_like(dim: usize) -> Result<Self> {
        if dim < 3 {
            return Err(Error::Precondition(format!(
                "k3-like preset needs dim >= 3, got {dim}"
            )));
        }
        let gram = Matrix::from_fn(dim, dim, |r, c| {
            if r != c {
                Scalar::zero()
            } else if r < 3 {
                Scalar::one()
            } else {
                -Scalar::one()
            }
        });
        QuadSpace::new(gram)
    }

    /// Orthogonal sum of hyperbolic planes, `dim` must be even.
    pub fn preset_hyperbolic_sum(dim: usize) -> Result<Self> {
        if dim % 2 != 0 {
            return Err(Error::Precondition(format!(
                "hyperbolic sum needs even dim, got {dim}"
            )));
        }
        let gram = Matrix::from_fn(dim, dim, |r, c| {
            if r / 2 == c / 2 && r != c {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        QuadSpace::new(gram)
    }

    /// Standard split form in the basis `e_1..e_l, e_1'..e_l'` and, for odd
    /// dimension, a final unit vector: `q(e_i, e_j') = delta_ij`, pairs
    /// isotropic and mutually orthogonal, `q(u, u) = 1`.
    pub fn standard_split(l: usize, odd: bool) -> Self {
        let dim = 2 * l + usize::from(odd);
        let gram = Matrix::from_fn(dim, dim, |r, c| {
            if r < 2 * l && c < 2 * l && (r + l == c || c + l == r) {
                Scalar::one()
            } else if odd && r == 2 * l && c == 2 * l {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let mut labels: Vec<String> = (1..=l).map(|i| format!("e{i}")).collect();
        labels.extend((1..=l).map(|i| format!("e{i}'")));
        if odd {
            labels.push(format!("e{}", l + 1));
        }
        QuadSpace::new(gram).expect("split gram is symmetric").with_labels(labels)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gram(&self) -> &Matrix<Scalar> {
        &self.gram
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn q(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        dot(u, &self.gram.apply(v))
    }

    pub fn qv(&self, v: &[Scalar]) -> Scalar {
        self.q(v, v)
    }

    /// Complex-bilinear extension of the form to Gaussian-rational vectors.
    pub fn q_complex(&self, u: &[CScalar], v: &[CScalar]) -> CScalar {
        dot(u, &self.gram.complexify().apply(v))
    }

    /// Gram entry `q(e_i, e_j)` of two coordinate basis vectors.
    pub fn qv_basis(&self, i: usize, j: usize) -> Scalar {
        self.gram.at(i, j).clone()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.gram.det().is_zero()
    }

    /// Exact signature `(positive, negative, zero)` computed by simultaneous
    /// row/column reduction of the Gram matrix over the rationals.
    pub fn signature(&self) -> (usize, usize, usize) {
        let (_, diag) = self.diagonalizing_basis();
        let mut pos = 0;
        let mut neg = 0;
        let mut zero = 0;
        for d in &diag {
            if d.is_zero() {
                zero += 1;
            } else if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
        }
        (pos, neg, zero)
    }

    /// A rational basis `p_1, .., p_n` (columns of the returned matrix) with
    /// `q(p_i, p_j) = 0` for `i != j`; the second component is `q(p_i, p_i)`.
    pub fn diagonalizing_basis(&self) -> (Matrix<Scalar>, Vec<Scalar>) {
        let n = self.dim;
        let mut g = self.gram.clone();
        let mut p = Matrix::<Scalar>::identity(n);

        let swap_cols = |m: &mut Matrix<Scalar>, a: usize, b: usize| {
            for r in 0..m.rows() {
                let t = m.at(r, a).clone();
                let o = m.at(r, b).clone();
                m.set(r, a, o);
                m.set(r, b, t);
            }
        };
        let swap_rows = |m: &mut Matrix<Scalar>, a: usize, b: usize| {
            for c in 0..m.cols() {
                let t = m.at(a, c).clone();
                let o = m.at(b, c).clone();
                m.set(a, c, o);
                m.set(b, c, t);
            }
        };
        // col_a += f * col_b
        let add_col = |m: &mut Matrix<Scalar>, a: usize, b: usize, f: &Scalar| {
            for r in 0..m.rows() {
                let v = m.at(r, a) + &(m.at(r, b) * f);
                m.set(r, a, v);
            }
        };
        let add_row = |m: &mut Matrix<Scalar>, a: usize, b: usize, f: &Scalar| {
            for c in 0..m.cols() {
                let v = m.at(a, c) + &(m.at(b, c) * f);
                m.set(a, c, v);
            }
        };

        for k in 0..n {
            if g.at(k, k).is_zero() {
                if let Some(j) = ((k + 1)..n).find(|&j| !g.at(j, j).is_zero()) {
                    swap_cols(&mut g, k, j);
                    swap_rows(&mut g, k, j);
                    swap_cols(&mut p, k, j);
                } else if let Some(j) = ((k + 1)..n).find(|&j| !g.at(k, j).is_zero()) {
                    let one = Scalar::one();
                    add_col(&mut g, k, j, &one);
                    add_row(&mut g, k, j, &one);
                    add_col(&mut p, k, j, &one);
                } else {
                    continue; // zero row: contributes a zero diagonal entry
                }
            }
            let d = g.at(k, k).clone();
            for j in (k + 1)..n {
                if !g.at(k, j).is_zero() {
                    let f = -(g.at(k, j) / &d);
                    add_col(&mut g, j, k, &f);
                    add_row(&mut g, j, k, &f);
                    add_col(&mut p, j, k, &f);
                }
            }
        }
        let diag = (0..n).map(|i| g.at(i, i).clone()).collect();
        (p, diag)
    }

    /// Smallest-shell integer vector with `q(v) = 0`, `v != 0`, all
    /// coordinates bounded by `height_bound` in absolute value.
    ///
    /// The search walks max-norm shells `1..=height_bound` and inside each
    /// shell enumerates coordinates in the balanced order `0, 1, -1, 2, -2,
    /// ...`, returning the first hit, so the witness is deterministic.
    /// Failure signals the bound, not nonexistence.
    pub fn find_isotropic(&self, height_bound: i64) -> Result<Vec<Scalar>> {
        if !self.is_nondegenerate() {
            return Err(Error::Degenerate);
        }
        let (pos, neg, _) = self.signature();
        if pos == 0 || neg == 0 {
            return Err(Error::Precondition(
                "isotropic search requires an indefinite form".into(),
            ));
        }
        self.find_integer_vector_with_value(&BigInt::zero(), height_bound)
    }

    /// Smallest-shell nonzero integer vector with scaled value
    /// `q_int(v) = target * lcm`, see `find_isotropic` for the order.
    fn find_integer_vector_with_value(
        &self,
        target_scaled: &BigInt,
        height_bound: i64,
    ) -> Result<Vec<Scalar>> {
        let (gi, _lcm) = self.integer_gram();
        let n = self.dim;
        let mut v = vec![BigInt::zero(); n];
        for h in 1..=height_bound {
            if search_shell(&gi, target_scaled, &mut v, 0, h, false) {
                return Ok(v.iter().map(|x| Scalar::from_integer(x.clone())).collect());
            }
        }
        Err(Error::NotFoundWithinBound {
            bound: height_bound,
        })
    }

    /// Integer-scaled Gram matrix `lcm * G` and the lcm of denominators.
    fn integer_gram(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut lcm = BigInt::one();
        for r in 0..self.dim {
            for c in 0..self.dim {
                lcm = lcm.lcm(self.gram.at(r, c).denom());
            }
        }
        let gi = (0..self.dim)
            .map(|r| {
                (0..self.dim)
                    .map(|c| {
                        let x = self.gram.at(r, c);
                        x.numer() * (&lcm / x.denom())
                    })
                    .collect()
            })
            .collect();
        (gi, lcm)
    }

    /// Search for a nonzero integer vector with `q(v) = value` (a rational),
    /// same deterministic order as `find_isotropic`.
    pub fn find_vector_with_value(&self, value: &Scalar, height_bound: i64) -> Result<Vec<Scalar>> {
        let (_, lcm) = self.integer_gram();
        let scaled = value * Scalar::from_integer(lcm);
        if !scaled.denom().is_one() {
            return Err(Error::NotFoundWithinBound {
                bound: height_bound,
            });
        }
        self.find_integer_vector_with_value(scaled.numer(), height_bound)
    }

    /// Complete an isotropic vector `v0` to the normalized hyperbolic data
    /// `v1, v2` with `q(v1) = 1`, `q(v2) = -1`, `q(v1, v2) = 0` and
    /// `v0 = (v1 + v2) / 2`.
    pub fn hyperbolic_complete(&self, v0: &[Scalar]) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
        if vec_is_zero(v0) {
            return Err(Error::Precondition("v0 must be nonzero".into()));
        }
        if !self.qv(v0).is_zero() {
            return Err(Error::IsotropyViolation);
        }
        if !self.is_nondegenerate() {
            return Err(Error::Degenerate);
        }
        // pick the first coordinate vector not orthogonal to v0
        let gv0 = self.gram.apply(v0);
        let i = gv0
            .iter()
            .position(|x| !x.is_zero())
            .expect("nondegenerate form has a non-orthogonal basis vector");
        let mut u = vec![Scalar::zero(); self.dim];
        u[i] = Scalar::one();
        // normalize so q(v0, u') = 1/2, then make w isotropic: w = u' - q(u') v0
        let c = (&gv0[i] * Scalar::from_integer(BigInt::from(2)))
            .inv()
            .expect("nonzero pairing");
        let uprime = vec_scale(&u, &c);
        let w = vec_sub(&uprime, &vec_scale(v0, &self.qv(&uprime)));
        debug_assert!(self.qv(&w).is_zero());
        let v1: Vec<Scalar> = v0.iter().zip(&w).map(|(a, b)| a + b).collect();
        let v2: Vec<Scalar> = v0.iter().zip(&w).map(|(a, b)| a - b).collect();
        Ok((v1, v2))
    }

    /// Orthogonal complement of a subspace on which the form restricts
    /// nondegenerately. Returns the complement as a quadratic space together
    /// with its basis (rows, in ambient coordinates).
    pub fn orthogonal_complement(
        &self,
        s: &Subspace<Scalar>,
    ) -> Result<(QuadSpace, Matrix<Scalar>)> {
        if s.ambient() != self.dim {
            return Err(Error::DimMismatch(format!(
                "subspace ambient {} vs space dim {}",
                s.ambient(),
                self.dim
            )));
        }
        let b = s.basis_matrix();
        let gs = b.mul(&self.gram).mul(&b.transpose());
        if gs.det().is_zero() {
            return Err(Error::DegenerateRestriction);
        }
        let comp = b.mul(&self.gram).kernel();
        let c = comp.basis_matrix().clone();
        let gram = c.mul(&self.gram).mul(&c.transpose());
        Ok((QuadSpace::new(gram)?, c))
    }

    /// Exact Witt-style decomposition: split off hyperbolic pairs while an
    /// isotropic vector is found within the height bound; the rest is the
    /// remainder. For a one-dimensional remainder a norm-one vector is
    /// produced when attainable by rational rescaling, otherwise the vector
    /// carries a square-root scale flag.
    pub fn witt_basis(&self, height_bound: i64) -> Result<WittDecomposition> {
        if !self.is_nondegenerate() {
            return Err(Error::Degenerate);
        }
        let mut pairs = Vec::new();
        // inclusion rows: basis of the current complement in ambient coords
        let mut inc = Matrix::<Scalar>::identity(self.dim);
        let mut cur = self.clone();
        loop {
            if cur.dim() == 0 {
                return Ok(WittDecomposition {
                    pairs,
                    remainder: Vec::new(),
                    unit: None,
                });
            }
            let (pos, neg, _) = cur.signature();
            let e_loc = if pos == 0 || neg == 0 {
                None // definite: no isotropic vectors exist
            } else {
                cur.find_isotropic(height_bound).ok()
            };
            let Some(e_loc) = e_loc else {
                // anisotropic (or bound-limited) remainder
                let remainder: Vec<Vec<Scalar>> =
                    (0..cur.dim()).map(|r| inc.row(r)).collect();
                let unit = if cur.dim() == 1 {
                    Some(cur.norm_one_vector(&inc, height_bound))
                } else {
                    None
                };
                return Ok(WittDecomposition {
                    pairs,
                    remainder,
                    unit,
                });
            };
            // pair e with f: q(e,f) = 1, q(f) = 0
            let ge = cur.gram.apply(&e_loc);
            let i = ge.iter().position(|x| !x.is_zero()).expect("nondegenerate");
            let mut u = vec![Scalar::zero(); cur.dim()];
            u[i] = ge[i].inv().expect("nonzero pairing");
            let qu = cur.qv(&u);
            let half = crate::scalar::rat(1, 2);
            let f_loc = vec_sub(&u, &vec_scale(&e_loc, &(qu * half)));
            debug_assert!(cur.qv(&f_loc).is_zero());
            debug_assert_eq!(cur.q(&e_loc, &f_loc), Scalar::one());

            let to_ambient = |v: &[Scalar]| -> Vec<Scalar> { inc.transpose().apply(v) };
            pairs.push((to_ambient(&e_loc), to_ambient(&f_loc)));

            let plane = Subspace::from_rows(cur.dim(), vec![e_loc, f_loc]);
            let (next, comp_rows) = cur.orthogonal_complement(&plane)?;
            inc = comp_rows.mul(&inc);
            cur = next;
        }
    }

    /// For a one-dimensional nondegenerate space spanned by `inc` row 0:
    /// a vector of norm one if attainable, else the flagged basis vector.
    fn norm_one_vector(
        &self,
        inc: &Matrix<Scalar>,
        height_bound: i64,
    ) -> (Vec<Scalar>, Scalar) {
        debug_assert_eq!(self.dim, 1);
        let d = self.gram.at(0, 0).clone();
        let amb = inc.row(0);
        // q(c * amb) = c^2 d = 1 has a rational solution iff d is a square
        if let Some(c) = sqrt_rational(&d.recip()) {
            return (vec_scale(&amb, &c), Scalar::one());
        }
        // fall back to a small search for a representative of smaller height
        let _ = height_bound;
        (amb, d)
    }
}

/// Exact rational square root, if one exists.
pub fn sqrt_rational(x: &Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Scalar::new(n, d))
    } else {
        None
    }
}

/// Depth-first enumeration of one max-norm shell in balanced coordinate
/// order; fills `v` and returns true on the first vector with
/// `v^T gi v = target`.
fn search_shell(
    gi: &[Vec<BigInt>],
    target: &BigInt,
    v: &mut [BigInt],
    idx: usize,
    shell: i64,
    have_shell: bool,
) -> bool {
    let n = v.len();
    if idx == n {
        if !have_shell {
            return false; // max-norm < shell: already covered earlier
        }
        let mut acc = BigInt::zero();
        for r in 0..n {
            if v[r].is_zero() {
                continue;
            }
            for c in 0..n {
                if !v[c].is_zero() {
                    acc += &gi[r][c] * (&v[r] * &v[c]);
                }
            }
        }
        return &acc == target;
    }
    let mut val: i64 = 0;
    loop {
        v[idx] = BigInt::from(val);
        if search_shell(gi, target, v, idx + 1, shell, have_shell || val.abs() == shell) {
            return true;
        }
        // balanced order 0, 1, -1, 2, -2, ...
        val = if val > 0 { -val } else { -val + 1 };
        if val > shell {
            break;
        }
    }
    v[idx] = BigInt::zero();
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn diag(entries: &[i64]) -> QuadSpace {
        let n = entries.len();
        let gram = Matrix::from_fn(n, n, |r, c| if r == c { int(entries[r]) } else { int(0) });
        QuadSpace::new(gram).unwrap()
    }

    fn ivec(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn signature_of_diagonal_forms() {
        assert_eq!(diag(&[1, 1, 1, -1, -1]).signature(), (3, 2, 0));
        assert_eq!(diag(&[2, -2, 0]).signature(), (1, 1, 1));
    }

    #[test]
    fn signature_of_hyperbolic_plane() {
        let h = QuadSpace::preset_hyperbolic_sum(2).unwrap();
        assert_eq!(h.signature(), (1, 1, 0));
    }

    #[test]
    fn diagonalizing_basis_is_congruent() {
        let q = QuadSpace::preset_hyperbolic_sum(4).unwrap();
        let (p, d) = q.diagonalizing_basis();
        let pt_g_p = p.transpose().mul(q.gram()).mul(&p);
        for r in 0..4 {
            for c in 0..4 {
                let expect = if r == c { d[r].clone() } else { int(0) };
                assert_eq!(pt_g_p.at(r, c), &expect);
            }
        }
    }

    #[test]
    fn isotropic_vector_in_hyperbolic_plane() {
        let h = QuadSpace::preset_hyperbolic_sum(2).unwrap();
        let v = h.find_isotropic(1).unwrap();
        assert!(h.qv(&v).is_zero());
        assert_eq!(v, ivec(&[0, 1])); // balanced order: (0,1) precedes (1,0)
    }

    #[test]
    fn isotropic_vector_in_diag_1_m1() {
        let q = diag(&[1, -1]);
        let v = q.find_isotropic(1).unwrap();
        assert!(q.qv(&v).is_zero());
        assert_eq!(v, ivec(&[1, 1]));
    }

    #[test]
    fn isotropic_2_3_m5() {
        // 2a^2 + 3b^2 = 5c^2 has (1,1,1)
        let q = diag(&[2, 3, -5]);
        let v = q.find_isotropic(2).unwrap();
        assert!(q.qv(&v).is_zero());
        assert_eq!(v, ivec(&[1, 1, 1]));
    }

    #[test]
    fn isotropic_search_reports_bound() {
        // positive definite padded with a tiny negative part that needs
        // larger coordinates: 7a^2 - b^2 = 0 has no integer solution at all
        let q = diag(&[7, -1]);
        assert_eq!(
            q.find_isotropic(3),
            Err(Error::NotFoundWithinBound { bound: 3 })
        );
    }

    #[test]
    fn hyperbolic_complete_satisfies_the_four_equations() {
        for (q, v0) in [
            (QuadSpace::preset_hyperbolic_sum(2).unwrap(), ivec(&[1, 0])),
            (diag(&[1, -1]), ivec(&[1, 1])),
            (diag(&[1, -1]), ivec(&[2, 2])), // scaled input rescales output
            (QuadSpace::preset_k3_like(5).unwrap(), ivec(&[0, 0, 1, 1, 0])),
        ] {
            let (v1, v2) = q.hyperbolic_complete(&v0).unwrap();
            assert_eq!(q.qv(&v1), int(1));
            assert_eq!(q.qv(&v2), int(-1));
            assert_eq!(q.q(&v1, &v2), int(0));
            let half_sum: Vec<Scalar> =
                v1.iter().zip(&v2).map(|(a, b)| (a + b) * rat(1, 2)).collect();
            assert_eq!(half_sum, v0);
        }
    }

    #[test]
    fn hyperbolic_complete_rejects_anisotropic_input() {
        let q = diag(&[1, -1]);
        assert_eq!(
            q.hyperbolic_complete(&ivec(&[1, 0])),
            Err(Error::IsotropyViolation)
        );
    }

    #[test]
    fn orthogonal_complement_of_a_line() {
        let q = diag(&[1, 1, 1]);
        let s = Subspace::from_rows(3, vec![ivec(&[1, 0, 0])]);
        let (comp, rows) = q.orthogonal_complement(&s).unwrap();
        assert_eq!(comp.dim(), 2);
        assert_eq!(comp.signature(), (2, 0, 0));
        // ambient = S + S^perp with zero intersection
        let comp_sub = Subspace::from_matrix_rows(&rows);
        assert!(s.intersect(&comp_sub).is_zero());
        assert!(s.sum(&comp_sub).is_full());
    }

    #[test]
    fn complement_of_positive_line_drops_one_positive() {
        for d in [5usize, 6, 7] {
            let q = QuadSpace::preset_k3_like(d).unwrap();
            let mut h = vec![Scalar::zero(); d];
            h[0] = Scalar::one();
            let s = Subspace::from_rows(d, vec![h]);
            let (comp, _) = q.orthogonal_complement(&s).unwrap();
            assert_eq!(comp.signature(), (2, d - 3, 0));
        }
    }

    #[test]
    fn complement_requires_nondegenerate_restriction() {
        let q = QuadSpace::preset_hyperbolic_sum(2).unwrap();
        let s = Subspace::from_rows(2, vec![ivec(&[1, 0])]); // isotropic line
        assert_eq!(q.orthogonal_complement(&s), Err(Error::DegenerateRestriction));
    }

    #[test]
    fn complement_of_hyperbolic_pair_in_dim_5() {
        let q = QuadSpace::preset_k3_like(5).unwrap();
        let v0 = ivec(&[0, 0, 1, 1, 0]);
        let (v1, v2) = q.hyperbolic_complete(&v0).unwrap();
        let s = Subspace::from_rows(5, vec![v1, v2]);
        let (comp, _) = q.orthogonal_complement(&s).unwrap();
        assert_eq!(comp.dim(), 3);
    }

    #[test]
    fn witt_basis_of_hyperbolic_plane() {
        let q = QuadSpace::preset_hyperbolic_sum(2).unwrap();
        let w = q.witt_basis(2).unwrap();
        assert_eq!(w.pairs.len(), 1);
        assert!(w.remainder.is_empty());
        let (e, f) = &w.pairs[0];
        assert!(q.qv(e).is_zero());
        assert!(q.qv(f).is_zero());
        assert_eq!(q.q(e, f), int(1));
    }

    #[test]
    fn witt_basis_of_two_split_planes() {
        let q = diag(&[1, -1, 1, -1]);
        let w = q.witt_basis(2).unwrap();
        assert_eq!(w.pairs.len(), 2);
        assert!(w.remainder.is_empty());
        // pairs are mutually orthogonal
        let (e1, f1) = &w.pairs[0];
        let (e2, f2) = &w.pairs[1];
        for (a, b) in [(e1, e2), (e1, f2), (f1, e2), (f1, f2)] {
            assert!(q.q(a, b).is_zero());
        }
    }

    #[test]
    fn witt_basis_of_definite_space_has_no_pairs() {
        let q = diag(&[1, 1]);
        let w = q.witt_basis(5).unwrap();
        assert!(w.pairs.is_empty());
        assert_eq!(w.remainder.len(), 2);
        assert!(w.unit.is_none());
    }

    #[test]
    fn witt_unit_vector_exact_or_flagged() {
        // odd split: remainder must be a norm-1 line
        let q = QuadSpace::preset_k3_like(5).unwrap();
        let w = q.witt_basis(3).unwrap();
        assert_eq!(w.pairs.len(), 2);
        assert_eq!(w.remainder.len(), 1);
        let (u, r) = w.unit.unwrap();
        assert_eq!(q.qv(&u), r.clone());
        assert_eq!(r, int(1));

        // diag(2, -2, 3): one pair splits off, remainder has norm 3 up to
        // squares; a rational unit does not exist, so the flag records s^2
        let q = diag(&[2, -2, 3]);
        let w = q.witt_basis(4).unwrap();
        assert_eq!(w.pairs.len(), 1);
        let (u, r) = w.unit.unwrap();
        assert_eq!(q.qv(&u), r.clone());
        assert_ne!(r, int(1));
        assert!(sqrt_rational(&r).is_none());
    }

    #[test]
    fn sqrt_rational_detects_squares() {
        assert_eq!(sqrt_rational(&rat(4, 9)), Some(rat(2, 3)));
        assert_eq!(sqrt_rational(&rat(2, 1)), None);
        assert_eq!(sqrt_rational(&rat(-4, 9)), None);
        assert_eq!(sqrt_rational(&rat(0, 1)), Some(rat(0, 1)));
    }
}
