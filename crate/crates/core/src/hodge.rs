//! Monodromy weight filtrations, nilpotent orbits, limit mixed Hodge
//! structures, and the Hodge-Tate / semi-purity predicates.
//!
//! The weight filtration is computed by the standard recursion: with
//! `A^{m+1} = 0`, the top step is `ker A^m`, the bottom step is `im A^m`,
//! and the middle is the filtration of the operator induced on their
//! quotient. For a pure nilpotent orbit the limit Hodge filtration is the
//! filtration attached to the orbit point itself; no limiting process is
//! involved, everything stays exact.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::clifford::CliffordAlgebra;
use crate::error::Error;
use crate::lie::SOElement;
use crate::matrix::{dot, Matrix};
use crate::quad::QuadSpace;
use crate::scalar::{complexify_vec, conj_vec, CScalar, Field, Scalar};
use crate::subspace::{QuotientSpace, Subspace};
use crate::Result;

/// Least `m >= 1` with `A^m = 0`; errors when `A` is not nilpotent.
pub fn unipotency_index(a: &Matrix<Scalar>) -> Result<u32> {
    a.nilpotency_index()
}

/// Increasing filtration `W_k` of a rational space, indexed around a center.
#[derive(Clone, Debug)]
pub struct WeightFiltration {
    ambient: usize,
    center: i64,
    low: i64,
    /// `steps[k] = W_{low + k}`, increasing, last entry is the full space.
    steps: Vec<Subspace<Scalar>>,
}

impl WeightFiltration {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn center(&self) -> i64 {
        self.center
    }

    /// Inclusive range of weights where the filtration jumps may occur.
    pub fn range(&self) -> (i64, i64) {
        (self.low, self.low + self.steps.len() as i64 - 1)
    }

    /// `W_k`, extended by zero below and the full space above.
    pub fn at(&self, k: i64) -> Subspace<Scalar> {
        if k < self.low {
            Subspace::zero(self.ambient)
        } else if k >= self.low + self.steps.len() as i64 {
            Subspace::full(self.ambient)
        } else {
            self.steps[(k - self.low) as usize].clone()
        }
    }

    pub fn gr_dim(&self, k: i64) -> usize {
        self.at(k).dim() - self.at(k - 1).dim()
    }

    /// Graded dimensions over the jump range.
    pub fn gr_dims(&self) -> Vec<(i64, usize)> {
        let (lo, hi) = self.range();
        (lo..=hi).map(|k| (k, self.gr_dim(k))).collect()
    }
}

/// The monodromy weight filtration of a nilpotent operator, centered at
/// `center`: the unique increasing filtration with `A W_k` inside `W_{k-2}`
/// and `A^k` inducing isomorphisms between opposite graded pieces.
pub fn weight_filtration(a: &Matrix<Scalar>, center: i64) -> Result<WeightFiltration> {
    let index = a.nilpotency_index()?;
    let m = (index - 1) as i64;
    let steps = wf_steps(a)?;
    Ok(WeightFiltration {
        ambient: a.rows(),
        center,
        low: center - m,
        steps,
    })
}

/// Relative steps `W_{-m} .. W_m` for the full coordinate space of `a`.
fn wf_steps(a: &Matrix<Scalar>) -> Result<Vec<Subspace<Scalar>>> {
    let n = a.rows();
    let index = a.nilpotency_index()?;
    let m = (index - 1) as usize;
    if m == 0 {
        return Ok(vec![Subspace::full(n)]);
    }
    let am = a.pow(m as u32);
    let k = am.kernel();
    let i = am.image();
    let q = QuotientSpace::new(k.clone(), i.clone())?;
    let induced = q
        .induced_endo(a)
        .expect("kernel and image of A^m are A-stable");
    let inner = wf_steps(&induced)?;
    let inner_m = (inner.len() - 1) / 2;
    // pull a subspace of quotient coordinates back to the ambient space
    let pull = |sub: &Subspace<Scalar>| -> Subspace<Scalar> {
        let mut rows: Vec<Vec<Scalar>> = i.basis_rows();
        for v in sub.basis_rows() {
            rows.push(q.lift(&v));
        }
        Subspace::from_rows(n, rows)
    };
    let mut steps = Vec::with_capacity(2 * m + 1);
    steps.push(i.clone()); // W_{-m}
    for j in -(m as i64 - 1)..=(m as i64 - 1) {
        if j < -(inner_m as i64) {
            steps.push(i.clone());
        } else if j > inner_m as i64 {
            steps.push(k.clone());
        } else {
            steps.push(pull(&inner[(j + inner_m as i64) as usize]));
        }
    }
    steps.push(Subspace::full(n)); // W_m
    Ok(steps)
}

/// Independent route to `W_k`: the closed formula
/// `W_k = sum_j ( ker A^{k+j+1}  meet  im A^j )`, centered at zero.
pub fn weight_filtration_closed_form(a: &Matrix<Scalar>, center: i64) -> Result<WeightFiltration> {
    let index = a.nilpotency_index()?;
    let m = (index - 1) as i64;
    let n = a.rows();
    let kers: Vec<Subspace<Scalar>> = (0..=index).map(|p| a.pow(p).kernel()).collect();
    let ims: Vec<Subspace<Scalar>> = (0..=index).map(|p| a.pow(p).image()).collect();
    let mut steps = Vec::new();
    for k in -m..=m {
        let mut acc = Subspace::zero(n);
        for j in 0..=(index as i64) {
            let ker_pow = k + j + 1;
            if ker_pow < 0 {
                continue;
            }
            let ker = &kers[(ker_pow.min(index as i64)) as usize];
            let im = &ims[(j.min(index as i64)) as usize];
            acc = acc.sum(&ker.intersect(im));
        }
        steps.push(acc);
    }
    Ok(WeightFiltration {
        ambient: n,
        center,
        low: center - m,
        steps,
    })
}

/// Decreasing filtration `F^p` of the complexified space.
#[derive(Clone, Debug)]
pub struct HodgeFiltration {
    ambient: usize,
    /// `levels[j]` is `F^{lo + j}`; consecutive, decreasing, `levels[0]` full.
    lo: i64,
    levels: Vec<Subspace<CScalar>>,
}

impl HodgeFiltration {
    /// Build from consecutive levels `(p, F^p)`; the lowest level must be the
    /// full space and the chain must be decreasing.
    pub fn new(levels: Vec<(i64, Subspace<CScalar>)>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::Precondition("empty Hodge filtration".into()));
        }
        let ambient = levels[0].1.ambient();
        let lo = levels[0].0;
        for (j, (p, sub)) in levels.iter().enumerate() {
            if *p != lo + j as i64 {
                return Err(Error::Precondition(
                    "Hodge filtration levels must be consecutive".into(),
                ));
            }
            if sub.ambient() != ambient {
                return Err(Error::DimMismatch("Hodge filtration ambient".into()));
            }
            if j > 0 && !levels[j - 1].1.contains_subspace(sub) {
                return Err(Error::Precondition("Hodge filtration must decrease".into()));
            }
        }
        if !levels[0].1.is_full() {
            return Err(Error::Precondition(
                "lowest Hodge filtration level must be everything".into(),
            ));
        }
        Ok(HodgeFiltration {
            ambient,
            lo,
            levels: levels.into_iter().map(|(_, s)| s).collect(),
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Inclusive range `(lo, hi)` of levels with explicit subspaces.
    pub fn range(&self) -> (i64, i64) {
        (self.lo, self.lo + self.levels.len() as i64 - 1)
    }

    /// `F^p`, extended by the full space below and zero above.
    pub fn at(&self, p: i64) -> Subspace<CScalar> {
        if p < self.lo {
            Subspace::full(self.ambient)
        } else if p >= self.lo + self.levels.len() as i64 {
            Subspace::zero(self.ambient)
        } else {
            self.levels[(p - self.lo) as usize].clone()
        }
    }
}

/// A mixed Hodge structure candidate: a rational weight filtration and a
/// Gaussian-rational Hodge filtration on the same underlying space.
#[derive(Clone, Debug)]
pub struct MixedHodge {
    pub weight: WeightFiltration,
    pub hodge: HodgeFiltration,
}

impl MixedHodge {
    pub fn new(weight: WeightFiltration, hodge: HodgeFiltration) -> Result<Self> {
        if weight.ambient() != hodge.ambient() {
            return Err(Error::DimMismatch(
                "weight and Hodge filtrations on different spaces".into(),
            ));
        }
        Ok(MixedHodge { weight, hodge })
    }

    pub fn dim(&self) -> usize {
        self.weight.ambient()
    }

    /// Dimension of the induced `F^p` on `gr^W_m`:
    /// `dim(F^p meet W_m + W_{m-1}) - dim W_{m-1}`.
    fn induced_dim(&self, m: i64, p: i64) -> usize {
        let fp = self.hodge.at(p);
        if fp.is_zero() {
            return 0;
        }
        let wm = self.weight.at(m);
        let wm1 = self.weight.at(m - 1);
        let inter = if wm.is_full() {
            fp
        } else {
            fp.intersect(&wm.complexify())
        };
        let sum_dim = if wm1.is_zero() {
            inter.dim()
        } else {
            inter.sum(&wm1.complexify()).dim()
        };
        sum_dim - wm1.dim()
    }

    /// Exact verification that `(W, F)` is a mixed Hodge structure with the
    /// Gaussian-rational conjugation: for every weight `m` and every `p`,
    /// the induced `F^p` and the conjugate of the induced `F^{m-p+1}` are
    /// complementary in `gr^W_m`.
    ///
    /// Both subspaces contain `W_{m-1}` and sit inside `W_m`, so
    /// complementarity reduces to two dimension counts on their sum.
    pub fn is_mhs(&self) -> Result<()> {
        let (wlo, whi) = self.weight.range();
        let (flo, fhi) = self.hodge.range();
        for m in wlo..=whi {
            if self.weight.gr_dim(m) == 0 {
                continue;
            }
            let wm = self.weight.at(m).complexify();
            let wm1 = self.weight.at(m - 1).complexify();
            for p in flo..=(fhi + 1) {
                let a = self.hodge.at(p).intersect(&wm).sum(&wm1);
                let b = self.hodge.at(m - p + 1).conj().intersect(&wm).sum(&wm1);
                let join_dim = a.sum(&b).dim();
                let meet_dim = a.dim() + b.dim() - join_dim;
                if join_dim != wm.dim() || meet_dim != wm1.dim() {
                    return Err(Error::PurityFailure(format!(
                        "gr_{m} fails complementarity at p = {p}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Hodge numbers `h^{p,q}`: dimensions of the graded pieces of the
    /// induced filtration on `gr^W_{p+q}`. Only nonzero entries are listed.
    pub fn hodge_numbers(&self) -> BTreeMap<(i64, i64), usize> {
        let (wlo, whi) = self.weight.range();
        let (flo, fhi) = self.hodge.range();
        let mut out = BTreeMap::new();
        for m in wlo..=whi {
            if self.weight.gr_dim(m) == 0 {
                continue;
            }
            // one induced dimension per level, consecutive differences
            let dims: Vec<usize> = (flo..=(fhi + 2))
                .map(|p| self.induced_dim(m, p))
                .collect();
            for (i, p) in (flo..=(fhi + 1)).enumerate() {
                let h = dims[i] - dims[i + 1];
                if h > 0 {
                    out.insert((p, m - p), h);
                }
            }
        }
        out
    }

    /// Hodge-Tate: `h^{p,q} = 0` whenever `p != q`.
    pub fn is_hodge_tate(&self) -> bool {
        self.hodge_numbers().keys().all(|(p, q)| p == q)
    }

    /// Semi-purity in degree `k`: the structure induced on `W_{k-1}` is of
    /// Hodge-Tate type, i.e. all off-diagonal Hodge numbers vanish in
    /// weights at most `k - 1`.
    pub fn is_semipure(&self, k: i64) -> bool {
        self.hodge_numbers()
            .keys()
            .all(|(p, q)| p + q > k - 1 || p == q)
    }
}

/// `exp(z A)` for a nilpotent `A` and rational `z`: the finite sum
/// `sum z^j A^j / j!`.
pub fn nilpotent_exp(a: &Matrix<Scalar>, z: &Scalar) -> Result<Matrix<Scalar>> {
    let index = a.nilpotency_index()?;
    let n = a.rows();
    let mut out: Matrix<Scalar> = Matrix::identity(n);
    let mut term: Matrix<Scalar> = Matrix::identity(n);
    let mut fact = Scalar::one();
    for j in 1..index {
        term = term.mul(a);
        fact = fact * Scalar::from_integer(BigInt::from(j));
        let zj = pow_scalar(z, j);
        out = out.add(&term.scale(&(zj / fact.clone())));
    }
    Ok(out)
}

/// `exp(z A)` for a nilpotent rational `A` and Gaussian-rational `z`.
pub fn nilpotent_exp_complex(a: &Matrix<Scalar>, z: &CScalar) -> Result<Matrix<CScalar>> {
    let index = a.nilpotency_index()?;
    let n = a.rows();
    let ac = a.complexify();
    let mut out: Matrix<CScalar> = Matrix::identity(n);
    let mut term: Matrix<CScalar> = Matrix::identity(n);
    let mut fact = Scalar::one();
    let mut zj = CScalar::one();
    for j in 1..index {
        term = term.mul(&ac);
        fact = fact * Scalar::from_integer(BigInt::from(j));
        zj = &zj * z;
        let coeff = &zj * &CScalar::from_real(fact.clone()).inv().expect("factorial nonzero");
        out = out.add(&term.scale(&coeff));
    }
    Ok(out)
}

fn pow_scalar(z: &Scalar, k: u32) -> Scalar {
    let mut out = Scalar::one();
    for _ in 0..k {
        out = out * z.clone();
    }
    out
}

/// A nilpotent orbit candidate: a nilpotent `N` in `so(V, q)` and a point
/// `x0` on the quadric `q(x, x) = 0`.
#[derive(Clone, Debug)]
pub struct NilpotentOrbitDatum {
    space: QuadSpace,
    n: SOElement,
    x0: Vec<CScalar>,
}

impl NilpotentOrbitDatum {
    pub fn new(space: QuadSpace, n: SOElement, x0: Vec<CScalar>) -> Result<Self> {
        if n.space().gram() != space.gram() {
            return Err(Error::DimMismatch("operator on a different space".into()));
        }
        if x0.len() != space.dim() {
            return Err(Error::DimMismatch("orbit point length".into()));
        }
        if !space.q_complex(&x0, &x0).is_zero() {
            return Err(Error::IsotropyViolation);
        }
        n.nilpotency_index()?; // must be nilpotent
        Ok(NilpotentOrbitDatum { space, n, x0 })
    }

    pub fn space(&self) -> &QuadSpace {
        &self.space
    }

    pub fn operator(&self) -> &SOElement {
        &self.n
    }

    pub fn point(&self) -> &[CScalar] {
        &self.x0
    }

    /// Real coefficients `c_j` of the polynomial
    /// `f(t) = q(exp(2itN) x0, conj x0) = sum c_j t^j`.
    pub fn orbit_polynomial(&self) -> Vec<Scalar> {
        let index = self.n.nilpotency_index().expect("checked nilpotent");
        let xbar = conj_vec(&self.x0);
        let mut coeffs = Vec::with_capacity(index as usize);
        let mut power = self.x0.clone();
        let mut fact = Scalar::one();
        let mut two_i_pow = CScalar::one();
        let two_i = CScalar::new(Scalar::zero(), Scalar::from_integer(BigInt::from(2)));
        for j in 0..index {
            if j > 0 {
                power = self.n.apply_complex(&power);
                fact = fact * Scalar::from_integer(BigInt::from(j));
                two_i_pow = &two_i_pow * &two_i;
            }
            let val = self.space.q_complex(&power, &xbar);
            let c = &(&two_i_pow * &val)
                * &CScalar::from_real(fact.clone()).inv().expect("nonzero");
            debug_assert!(c.is_real(), "orbit polynomial coefficient must be real");
            coeffs.push(c.re);
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        coeffs
    }

    /// `q(exp(2itN) x0, conj x0)` at a specific rational `t`, computed
    /// through the actual matrix exponential (independent of the
    /// polynomial shortcut).
    pub fn orbit_value_at(&self, t: &Scalar) -> Result<Scalar> {
        let z = CScalar::new(Scalar::zero(), t * &Scalar::from_integer(BigInt::from(2)));
        let e = nilpotent_exp_complex(self.n.matrix(), &z)?;
        let moved = e.apply(&self.x0);
        let val = self.space.q_complex(&moved, &conj_vec(&self.x0));
        if !val.is_real() {
            return Err(Error::Precondition("orbit value must be real".into()));
        }
        Ok(val.re)
    }

    /// Definition-level orbit test: `f(t) > 0` for all large `t`, decided
    /// exactly by the sign of the leading coefficient. Works for any
    /// nilpotency index.
    pub fn is_orbit_eventually(&self) -> bool {
        match self.orbit_polynomial().last() {
            Some(c) => c.is_positive(),
            None => false, // identically zero
        }
    }
}

/// Outcome of the index-3 orbit criterion.
#[derive(Clone, Debug)]
pub struct OrbitTest {
    /// The exact value `q(N x0, N conj(x0))`.
    pub criterion_value: Scalar,
    /// The verdict: `criterion_value > 0`.
    pub accepted: bool,
    /// For accepted data, a rational threshold with `f(t) > 0` for `t > t0`.
    pub t0: Option<Scalar>,
}

/// The orbit criterion for operators with `N^3 = 0`: the pair defines a
/// nilpotent orbit iff `q(N x0, N conj(x0)) > 0` (an exact rational sign
/// test). Errors with `IndexMismatch` when `N^3 != 0`.
pub fn orbit_test(datum: &NilpotentOrbitDatum) -> Result<OrbitTest> {
    let index = datum.n.nilpotency_index()?;
    if index > 3 {
        return Err(Error::IndexMismatch {
            expected: 3,
            found: index,
        });
    }
    let nx = datum.n.apply_complex(&datum.x0);
    let nxbar = conj_vec(&nx);
    let value_c = datum.space.q_complex(&nx, &nxbar);
    debug_assert!(value_c.is_real());
    let value = value_c.re;
    let accepted = value.is_positive();
    let t0 = if accepted {
        // Cauchy-style bound: f(t) = c0 + c1 t + c2 t^2 with c2 > 0 is
        // positive beyond 1 + (|c1| + |c0|)/c2
        let coeffs = datum.orbit_polynomial();
        let c0 = coeffs.first().cloned().unwrap_or_else(Scalar::zero);
        let c1 = coeffs.get(1).cloned().unwrap_or_else(Scalar::zero);
        let c2 = coeffs.get(2).cloned().unwrap_or_else(Scalar::zero);
        debug_assert_eq!(c2, value.clone() * Scalar::from_integer(BigInt::from(2)));
        Some(Scalar::one() + (c0.abs() + c1.abs()) / c2)
    } else {
        None
    };
    Ok(OrbitTest {
        criterion_value: value,
        accepted,
        t0,
    })
}

/// The limit mixed Hodge structure of a (second-cohomology) nilpotent
/// orbit: weight filtration of `N` centered at 2, Hodge filtration
/// `F^2 = <x0>`, `F^1` = the `q`-orthogonal complement of `x0`, `F^0` =
/// everything. The result is verified to be a mixed Hodge structure.
pub fn k3_limit_mhs(datum: &NilpotentOrbitDatum) -> Result<MixedHodge> {
    if !datum.is_orbit_eventually() {
        return Err(Error::NotAnOrbit);
    }
    let w = weight_filtration(datum.n.matrix(), 2)?;
    let f = k3_hodge_filtration(&datum.space, &datum.x0)?;
    let mhs = MixedHodge::new(w, f)?;
    mhs.is_mhs()?;
    Ok(mhs)
}

/// The pure Hodge structure of a period point (trivial weight filtration in
/// weight 2), same Hodge filtration as the limit construction.
pub fn pure_k3_hs(space: &QuadSpace, x0: &[CScalar]) -> Result<MixedHodge> {
    let w = WeightFiltration {
        ambient: space.dim(),
        center: 2,
        low: 2,
        steps: vec![Subspace::full(space.dim())],
    };
    let f = k3_hodge_filtration(space, x0)?;
    let mhs = MixedHodge::new(w, f)?;
    mhs.is_mhs()?;
    Ok(mhs)
}

fn k3_hodge_filtration(space: &QuadSpace, x0: &[CScalar]) -> Result<HodgeFiltration> {
    if !space.q_complex(x0, x0).is_zero() {
        return Err(Error::IsotropyViolation);
    }
    let n = space.dim();
    let f2 = Subspace::from_rows(n, vec![x0.to_vec()]);
    // q-orthogonal complement of x0 (complex-bilinear)
    let gx: Vec<CScalar> = space.gram().complexify().apply(x0);
    let f1 = Matrix::from_rows(vec![gx]).kernel();
    HodgeFiltration::new(vec![
        (0, Subspace::full(n)),
        (1, f1),
        (2, f2),
    ])
}

/// The limit mixed Hodge structure of the Kuga-Satake variation attached to
/// an orbit datum: on the Clifford algebra of `(V^h, q)`, the weight
/// filtration of left multiplication by the spin lift of `N` centered at
/// `-1`, and `F^0` the right ideal `x0 . Cl` (image of left multiplication
/// by `x0`).
pub fn ks_limit_mhs(ca: &CliffordAlgebra, datum: &NilpotentOrbitDatum) -> Result<MixedHodge> {
    if ca.space().gram() != datum.space.gram() {
        return Err(Error::DimMismatch(
            "Clifford algebra over a different space".into(),
        ));
    }
    if !datum.is_orbit_eventually() {
        return Err(Error::NotAnOrbit);
    }
    let lifted = ca.lift(&datum.n)?;
    let ln = ca.left_mul_matrix(&lifted);
    let w = weight_filtration(&ln, -1)?;
    let lx = ca.left_mul_matrix_complex(&datum.x0);
    let f0 = lx.image();
    let f = HodgeFiltration::new(vec![(-1, Subspace::full(ca.dim())), (0, f0)])?;
    let mhs = MixedHodge::new(w, f)?;
    mhs.is_mhs()?;
    Ok(mhs)
}

/// The Kuga-Satake polarization form `w(x, y) = Tr(x a bar(y))` with
/// `a = a1 a2`, for orthogonal positive vectors `a1, a2`.
pub struct KsPolarization {
    pub a: crate::clifford::CliffordElement,
    /// Gram matrix of the form on the word basis.
    pub gram: Matrix<Scalar>,
}

pub fn ks_polarization(
    ca: &CliffordAlgebra,
    a1: &[Scalar],
    a2: &[Scalar],
) -> Result<KsPolarization> {
    let q1 = ca.space().qv(a1);
    let q2 = ca.space().qv(a2);
    let q12 = ca.space().q(a1, a2);
    if !q1.is_positive() || !q2.is_positive() || !q12.is_zero() {
        return Err(Error::Precondition(
            "need q(a1) > 0, q(a2) > 0, q(a1, a2) = 0".into(),
        ));
    }
    let a = ca.mul(&ca.vector(a1), &ca.vector(a2));
    let dim = ca.dim();
    // columns: a * bar(word_j), then row dot products via the trace
    let mut gram: Matrix<Scalar> = Matrix::zero(dim, dim);
    for j in 0..dim as u32 {
        let abarj = ca.mul(&a, &ca.bar(&crate::clifford::CliffordElement::basis_word(j)));
        for i in 0..dim as u32 {
            let z = ca.mul(&crate::clifford::CliffordElement::basis_word(i), &abarj);
            gram.set(i as usize, j as usize, ca.trace(&z));
        }
    }
    Ok(KsPolarization { a, gram })
}

impl KsPolarization {
    /// `w(x, y)` on coefficient vectors over the word basis.
    pub fn value(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        dot(x, &self.gram.apply(y))
    }

    /// `w(Lx, y) + w(x, Ly)` as a matrix; exactly zero iff `L` is
    /// infinitesimally `w`-orthogonal.
    pub fn invariance_defect(&self, l: &Matrix<Scalar>) -> Matrix<Scalar> {
        l.transpose().mul(&self.gram).add(&self.gram.mul(l))
    }

    /// The values `i * w(v, conj v)` on a family of complex vectors
    /// (coefficients over the word basis); real when the form is
    /// alternating. Reported, not asserted: the definite sign identifies
    /// which of `w`, `-w` polarizes.
    pub fn hermitian_values(&self, vectors: &[Vec<CScalar>]) -> Vec<CScalar> {
        let gc = self.gram.complexify();
        vectors
            .iter()
            .map(|v| {
                let val = dot(v, &gc.apply(&conj_vec(v)));
                &CScalar::i() * &val
            })
            .collect()
    }
}

/// Project a complexified sample vector onto the quadric along an isotropic
/// direction `w`: solves `q(y + t w) = 0` for the single unknown `t`
/// (linear because `q(w) = 0`). Returns `None` when `q(y, w) = 0`.
pub fn project_to_quadric(
    space: &QuadSpace,
    y: &[CScalar],
    w: &[Scalar],
) -> Option<Vec<CScalar>> {
    debug_assert!(space.qv(w).is_zero());
    let wc = complexify_vec(w);
    let qyw = space.q_complex(y, &wc);
    if qyw.is_zero() {
        return None;
    }
    let qyy = space.q_complex(y, y);
    let two = CScalar::from_real(Scalar::from_integer(BigInt::from(2)));
    let t = (&qyy * &(&two * &qyw).inv().expect("nonzero")).ref_neg();
    let x: Vec<CScalar> = y
        .iter()
        .zip(&wc)
        .map(|(a, b)| a.ref_add(&b.ref_mul(&t)))
        .collect();
    debug_assert!(space.q_complex(&x, &x).is_zero());
    Some(x)
}
