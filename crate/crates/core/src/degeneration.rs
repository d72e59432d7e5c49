//! Construction of maximally unipotent nilpotent operators on the
//! orthogonal complement of a polarization class, for forms of signature
//! `(3, dim - 3)`.
//!
//! The construction follows the hyperbolic-completion route: an isotropic
//! vector `v0` is completed to `v1, v2` with `v0 = (v1 + v2)/2`, a positive
//! orthogonal pair `v3, h` is extracted from the complement of the plane
//! `<v1, v2>`, and `N` is the bivector `v0 ^ v3` inside `so(V^h, q)`. Then
//! `N^2 != 0`, `N^3 = 0` and `q` restricted to `im N` is positive
//! semidefinite with one-dimensional kernel.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::lie::SOElement;
use crate::matrix::{vec_scale, Matrix};
use crate::quad::QuadSpace;
use crate::scalar::Scalar;
use crate::subspace::Subspace;
use crate::Result;

/// The data of one maximally unipotent degeneration candidate. All vectors
/// `h, v0..v3` live in ambient `V` coordinates; `v0_h, v3_h` are the same
/// vectors in the coordinates of `V^h`, where `N = v0 ^ v3` acts.
#[derive(Clone, Debug)]
pub struct DegenerationDatum {
    pub ambient: QuadSpace,
    pub h: Vec<Scalar>,
    pub v0: Vec<Scalar>,
    pub v1: Vec<Scalar>,
    pub v2: Vec<Scalar>,
    pub v3: Vec<Scalar>,
    /// The orthogonal complement of `h` as a quadratic space.
    pub vh: QuadSpace,
    /// Rows: basis of `V^h` in ambient coordinates.
    pub vh_basis: Matrix<Scalar>,
    pub v0_h: Vec<Scalar>,
    pub v3_h: Vec<Scalar>,
    /// The nilpotent `v0 ^ v3` acting on `V^h`.
    pub n: SOElement,
}

/// Clear denominators and divide by the content, preserving the sign.
fn primitive_integer_vector(v: &[Scalar]) -> Vec<Scalar> {
    let mut lcm = BigInt::from(1);
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if gcd.is_zero() {
        return v.to_vec();
    }
    ints.into_iter()
        .map(|x| Scalar::from_integer(x / &gcd))
        .collect()
}

/// Run the construction on a form of signature `(3, dim - 3)`, `dim >= 5`.
/// The height bound controls the isotropic vector search only.
pub fn degeneration_data(space: &QuadSpace, height_bound: i64) -> Result<DegenerationDatum> {
    let d = space.dim();
    if d < 5 {
        return Err(Error::Precondition(format!(
            "degeneration data needs dim >= 5, got {d}"
        )));
    }
    let sig = space.signature();
    if sig != (3, d - 3, 0) {
        return Err(Error::SignatureMismatch {
            expected: format!("(3, {}, 0)", d - 3),
            found: format!("({}, {}, {})", sig.0, sig.1, sig.2),
        });
    }
    let v0 = space.find_isotropic(height_bound)?;
    let (v1, v2) = space.hyperbolic_complete(&v0)?;
    // V' = <v1, v2>-perp has signature (2, d - 4)
    let plane = Subspace::from_rows(d, vec![v1.clone(), v2.clone()]);
    let (vprime, vprime_rows) = space.orthogonal_complement(&plane)?;
    // positive orthogonal pair from the exact diagonalization
    let (p, diag) = vprime.diagonalizing_basis();
    let mut positives = (0..vprime.dim()).filter(|&i| diag[i].is_positive());
    let ia = positives.next().ok_or_else(|| {
        Error::SignatureMismatch {
            expected: "two positive directions in the complement".into(),
            found: "none".into(),
        }
    })?;
    let ib = positives.next().ok_or_else(|| {
        Error::SignatureMismatch {
            expected: "two positive directions in the complement".into(),
            found: "one".into(),
        }
    })?;
    let to_ambient = |local: &[Scalar]| -> Vec<Scalar> { vprime_rows.transpose().apply(local) };
    let v3 = primitive_integer_vector(&to_ambient(&p.col(ia)));
    let h = primitive_integer_vector(&to_ambient(&p.col(ib)));

    // V^h and the coordinates of v0, v3 inside it
    let h_line = Subspace::from_rows(d, vec![h.clone()]);
    let (vh, vh_basis) = space.orthogonal_complement(&h_line)?;
    let bt = vh_basis.transpose();
    let v0_h = bt
        .solve(&v0)
        .ok_or_else(|| Error::Precondition("v0 must lie in V^h".into()))?;
    let v3_h = bt
        .solve(&v3)
        .ok_or_else(|| Error::Precondition("v3 must lie in V^h".into()))?;
    let n = SOElement::bivector(vh.clone(), &v0_h, &v3_h);

    let datum = DegenerationDatum {
        ambient: space.clone(),
        h,
        v0,
        v1,
        v2,
        v3,
        vh,
        vh_basis,
        v0_h,
        v3_h,
        n,
    };
    datum.validate()?;
    Ok(datum)
}

impl DegenerationDatum {
    /// Exact verification of every defining invariant. This is the
    /// re-checkable contract for the construction.
    pub fn validate(&self) -> Result<()> {
        let q = &self.ambient;
        let fail = |msg: &str| Err(Error::Precondition(format!("degeneration datum: {msg}")));
        if !q.qv(&self.h).is_positive() {
            return fail("q(h) > 0");
        }
        if !q.qv(&self.v0).is_zero() {
            return fail("q(v0) = 0");
        }
        if q.qv(&self.v1) != Scalar::from_integer(BigInt::from(1)) {
            return fail("q(v1) = 1");
        }
        if q.qv(&self.v2) != Scalar::from_integer(BigInt::from(-1)) {
            return fail("q(v2) = -1");
        }
        if !q.q(&self.v1, &self.v2).is_zero() {
            return fail("q(v1, v2) = 0");
        }
        let half_sum = vec_scale(
            &self
                .v1
                .iter()
                .zip(&self.v2)
                .map(|(a, b)| a + b)
                .collect::<Vec<_>>(),
            &crate::scalar::rat(1, 2),
        );
        if half_sum != self.v0 {
            return fail("v0 = (v1 + v2)/2");
        }
        if !q.qv(&self.v3).is_positive() {
            return fail("q(v3) > 0");
        }
        if !q.q(&self.v3, &self.h).is_zero() {
            return fail("q(v3, h) = 0");
        }
        if !q.q(&self.v0, &self.h).is_zero() {
            return fail("q(v0, h) = 0");
        }
        // index exactly 3
        let nmat = self.n.matrix();
        let idx = nmat.nilpotency_index()?;
        if idx != 3 {
            return Err(Error::IndexMismatch {
                expected: 3,
                found: idx,
            });
        }
        // rank N = 2, rank N^2 = 1
        if nmat.rank() != 2 {
            return fail("rank N = 2");
        }
        let n2 = nmat.mul(nmat);
        if n2.rank() != 1 {
            return fail("rank N^2 = 1");
        }
        // im N = <v0, v3>, im N^2 = <v0>
        let im_n = nmat.image();
        let span =
            Subspace::from_rows(self.vh.dim(), vec![self.v0_h.clone(), self.v3_h.clone()]);
        if im_n != span {
            return fail("im N = <v0, v3>");
        }
        let im_n2 = n2.image();
        let v0_line = Subspace::from_rows(self.vh.dim(), vec![self.v0_h.clone()]);
        if im_n2 != v0_line {
            return fail("im N^2 = <v0>");
        }
        // Gram of q on im N in the basis (v0, v3): [[0, 0], [0, q(v3)]]
        let q00 = self.vh.qv(&self.v0_h);
        let q01 = self.vh.q(&self.v0_h, &self.v3_h);
        let q11 = self.vh.qv(&self.v3_h);
        if !q00.is_zero() || !q01.is_zero() || !q11.is_positive() {
            return fail("q on im N is [[0,0],[0,positive]]");
        }
        Ok(())
    }
}

/// An index-2 control operator `w1 ^ w2` built from a totally isotropic
/// pair of the space (the type II shape), together with the pair itself.
/// Requires the space to split off two hyperbolic planes within the bound.
#[derive(Clone, Debug)]
pub struct Index2Control {
    pub n: SOElement,
    pub w1: Vec<Scalar>,
    pub w2: Vec<Scalar>,
}

pub fn index2_control(space: &QuadSpace, height_bound: i64) -> Result<Index2Control> {
    let witt = space.witt_basis(height_bound)?;
    if witt.pairs.len() < 2 {
        return Err(Error::Precondition(
            "need Witt index >= 2 for an isotropic pair".into(),
        ));
    }
    let w1 = witt.pairs[0].0.clone();
    let w2 = witt.pairs[1].0.clone();
    debug_assert!(space.q(&w1, &w2).is_zero());
    let n = SOElement::bivector(space.clone(), &w1, &w2);
    let idx = n.nilpotency_index()?;
    if idx != 2 {
        return Err(Error::IndexMismatch {
            expected: 2,
            found: idx,
        });
    }
    Ok(Index2Control { n, w1, w2 })
}
