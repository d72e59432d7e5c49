//! The orthogonal Lie algebra `so(V, q)` in its bivector model, hyperbolic
//! bases, Cartan subalgebras, roots and weights for types B and D, the Mukai
//! extension and the Weil operator.
//!
//! Sign convention, fixed once and used everywhere downstream:
//! `(a ^ b) v = q(b, v) a - q(a, v) b`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::matrix::{vec_is_zero, vec_scale, Matrix};
use crate::quad::{QuadSpace, WittDecomposition};
use crate::scalar::{rat, CScalar, Scalar};
use crate::Result;

/// An element of `so(V, q)`: a matrix `A` with `A^T G + G A = 0`, checked
/// exactly at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SOElement {
    space: QuadSpace,
    mat: Matrix<Scalar>,
}

impl SOElement {
    pub fn new(space: QuadSpace, mat: Matrix<Scalar>) -> Result<Self> {
        if mat.rows() != space.dim() || mat.cols() != space.dim() {
            return Err(Error::DimMismatch(format!(
                "matrix {}x{} on space of dim {}",
                mat.rows(),
                mat.cols(),
                space.dim()
            )));
        }
        let defect = mat.transpose().mul(space.gram()).add(&space.gram().mul(&mat));
        if !defect.is_zero() {
            return Err(Error::NotOrthogonal);
        }
        Ok(SOElement { space, mat })
    }

    pub fn zero(space: QuadSpace) -> Self {
        let n = space.dim();
        SOElement {
            space,
            mat: Matrix::zero(n, n),
        }
    }

    /// The bivector `a ^ b` acting by `v -> q(b, v) a - q(a, v) b`.
    pub fn bivector(space: QuadSpace, a: &[Scalar], b: &[Scalar]) -> Self {
        let ga = space.gram().apply(a);
        let gb = space.gram().apply(b);
        let n = space.dim();
        let mat = Matrix::from_fn(n, n, |r, c| &(&a[r] * &gb[c]) - &(&b[r] * &ga[c]));
        debug_assert!(SOElement::new(space.clone(), mat.clone()).is_ok());
        SOElement { space, mat }
    }

    pub fn space(&self) -> &QuadSpace {
        &self.space
    }

    pub fn matrix(&self) -> &Matrix<Scalar> {
        &self.mat
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.mat.apply(v)
    }

    pub fn apply_complex(&self, v: &[CScalar]) -> Vec<CScalar> {
        self.mat.complexify().apply(v)
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    fn same_space(&self, other: &SOElement) -> Result<()> {
        if self.space.gram() != other.space.gram() {
            return Err(Error::DimMismatch(
                "elements live on different quadratic spaces".into(),
            ));
        }
        Ok(())
    }

    /// Lie bracket `AB - BA`.
    pub fn bracket(&self, other: &SOElement) -> Result<SOElement> {
        self.same_space(other)?;
        let mat = self.mat.mul(&other.mat).sub(&other.mat.mul(&self.mat));
        Ok(SOElement {
            space: self.space.clone(),
            mat,
        })
    }

    pub fn add(&self, other: &SOElement) -> Result<SOElement> {
        self.same_space(other)?;
        Ok(SOElement {
            space: self.space.clone(),
            mat: self.mat.add(&other.mat),
        })
    }

    pub fn sub(&self, other: &SOElement) -> Result<SOElement> {
        self.same_space(other)?;
        Ok(SOElement {
            space: self.space.clone(),
            mat: self.mat.sub(&other.mat),
        })
    }

    pub fn scale(&self, s: &Scalar) -> SOElement {
        SOElement {
            space: self.space.clone(),
            mat: self.mat.scale(s),
        }
    }

    pub fn nilpotency_index(&self) -> Result<u32> {
        self.mat.nilpotency_index()
    }
}

/// Basis of `so(V, q)` given by the bivectors `e_i ^ e_j` of the coordinate
/// basis, `i < j` in lexicographic order. Requires `q` nondegenerate.
pub fn so_basis(space: &QuadSpace) -> Vec<SOElement> {
    let n = space.dim();
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            let mut a = vec![Scalar::zero(); n];
            let mut b = vec![Scalar::zero(); n];
            a[i] = Scalar::one();
            b[j] = Scalar::one();
            out.push(SOElement::bivector(space.clone(), &a, &b));
        }
    }
    out
}

/// Coordinates of an `so(V, q)` matrix in the bivector basis `e_i ^ e_j`,
/// `i < j` lexicographic. Unique when `q` is nondegenerate.
pub fn bivector_coords(space: &QuadSpace, mat: &Matrix<Scalar>) -> Result<Vec<Scalar>> {
    let n = space.dim();
    let basis = so_basis(space);
    let k = basis.len();
    let sys = Matrix::from_fn(n * n, k, |rc, b| {
        basis[b].matrix().at(rc / n, rc % n).clone()
    });
    let target: Vec<Scalar> = (0..n * n).map(|rc| mat.at(rc / n, rc % n).clone()).collect();
    sys.solve(&target).ok_or(Error::NotOrthogonal)
}

/// Lie algebra type: B for odd ambient dimension, D for even.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LieType {
    B,
    D,
}

impl std::fmt::Display for LieType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LieType::B => write!(f, "B"),
            LieType::D => write!(f, "D"),
        }
    }
}

/// Which epsilon the weight coordinates start at. Extended (Mukai) algebras
/// index from `e0`, plain ones from `e1`. Always an explicit flag, never
/// inferred.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum EpsilonIndexing {
    FromZero,
    FromOne,
}

/// A weight in epsilon coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct WeightVector {
    coords: Vec<Scalar>,
    indexing: EpsilonIndexing,
}

impl WeightVector {
    pub fn new(coords: Vec<Scalar>, indexing: EpsilonIndexing) -> Self {
        WeightVector { coords, indexing }
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn indexing(&self) -> EpsilonIndexing {
        self.indexing
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn sub(&self, other: &WeightVector) -> WeightVector {
        assert_eq!(self.indexing, other.indexing);
        assert_eq!(self.coords.len(), other.coords.len());
        WeightVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
            indexing: self.indexing,
        }
    }

    pub fn scale(&self, s: &Scalar) -> WeightVector {
        WeightVector {
            coords: vec_scale(&self.coords, s),
            indexing: self.indexing,
        }
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        assert_eq!(self.indexing, other.indexing);
        WeightVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
            indexing: self.indexing,
        }
    }
}

impl std::fmt::Display for WeightVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let start = match self.indexing {
            EpsilonIndexing::FromZero => 0,
            EpsilonIndexing::FromOne => 1,
        };
        let parts: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{}*a{}", c, start + i))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A hyperbolic basis: pairs `(e_i, e_i')` with `q(e_i, e_j') = delta_ij`,
/// all other products among pair vectors zero, plus for odd-dimensional
/// spaces a unit vector orthogonal to all pairs.
///
/// The unit is stored as `(w, r)` with `q(w) = r`; `r = 1` means the basis is
/// exact over the rationals, any other `r` records the square-root scale
/// `s = sqrt(r)` so that the true unit vector is `w / s`. Constructions that
/// genuinely need the normalized vector require `r = 1` and fail otherwise;
/// scale-invariant predicates (bracket eigen-equations, annihilation tests)
/// work with `w` directly.
#[derive(Clone, Debug)]
pub struct HyperbolicBasis {
    space: QuadSpace,
    pairs: Vec<(Vec<Scalar>, Vec<Scalar>)>,
    unit: Option<(Vec<Scalar>, Scalar)>,
    indexing: EpsilonIndexing,
}

impl HyperbolicBasis {
    /// The standard split space of rank `l`, type B (ambient dim `2l+1`) or
    /// type D (ambient dim `2l`), with the coordinate basis as hyperbolic
    /// basis. Plain indexing (from `e1`).
    pub fn standard(l: usize, ty: LieType) -> Result<HyperbolicBasis> {
        if ty == LieType::D && l < 2 {
            return Err(Error::RankTooSmall(l));
        }
        if l == 0 {
            return Err(Error::RankTooSmall(0));
        }
        if l > 64 {
            return Err(Error::CapExceeded(format!(
                "standard split basis of rank {l} is beyond desk scale"
            )));
        }
        let odd = ty == LieType::B;
        let space = QuadSpace::standard_split(l, odd);
        let dim = space.dim();
        let unit_vec = |k: usize| -> Vec<Scalar> {
            let mut v = vec![Scalar::zero(); dim];
            v[k] = Scalar::one();
            v
        };
        let pairs = (0..l).map(|i| (unit_vec(i), unit_vec(l + i))).collect();
        let unit = odd.then(|| (unit_vec(2 * l), Scalar::one()));
        Ok(HyperbolicBasis {
            space,
            pairs,
            unit,
            indexing: EpsilonIndexing::FromOne,
        })
    }

    /// Assemble a hyperbolic basis from a Witt decomposition. The remainder
    /// must be empty (type D) or a line (type B).
    pub fn from_witt(
        space: &QuadSpace,
        witt: &WittDecomposition,
        indexing: EpsilonIndexing,
    ) -> Result<HyperbolicBasis> {
        match witt.remainder.len() {
            0 => Ok(HyperbolicBasis {
                space: space.clone(),
                pairs: witt.pairs.clone(),
                unit: None,
                indexing,
            }),
            1 => {
                let unit = witt.unit.clone().ok_or_else(|| {
                    Error::Precondition("line remainder without unit data".into())
                })?;
                Ok(HyperbolicBasis {
                    space: space.clone(),
                    pairs: witt.pairs.clone(),
                    unit: Some(unit),
                    indexing,
                })
            }
            k => Err(Error::Precondition(format!(
                "Witt remainder of dim {k} does not give a hyperbolic basis"
            ))),
        }
    }

    pub fn space(&self) -> &QuadSpace {
        &self.space
    }

    pub fn rank(&self) -> usize {
        self.pairs.len()
    }

    pub fn lie_type(&self) -> LieType {
        if self.unit.is_some() {
            LieType::B
        } else {
            LieType::D
        }
    }

    pub fn indexing(&self) -> EpsilonIndexing {
        self.indexing
    }

    /// The isotropic vector of weight `+eps_i` (0-based position).
    pub fn e(&self, i: usize) -> &[Scalar] {
        &self.pairs[i].0
    }

    /// The isotropic vector of weight `-eps_i`.
    pub fn eprime(&self, i: usize) -> &[Scalar] {
        &self.pairs[i].1
    }

    /// The unit direction `(w, r)` with `q(w) = r`, odd dimension only.
    pub fn unit(&self) -> Option<&(Vec<Scalar>, Scalar)> {
        self.unit.as_ref()
    }

    pub fn unit_is_exact(&self) -> bool {
        matches!(&self.unit, Some((_, r)) if r == &Scalar::one())
    }

    /// All basis vectors as rows: `e_1..e_l, e_1'..e_l', (w)`.
    pub fn basis_matrix(&self) -> Matrix<Scalar> {
        let mut rows: Vec<Vec<Scalar>> = self.pairs.iter().map(|p| p.0.clone()).collect();
        rows.extend(self.pairs.iter().map(|p| p.1.clone()));
        if let Some((w, _)) = &self.unit {
            rows.push(w.clone());
        }
        Matrix::from_rows(rows)
    }

    /// Exact verification of every defining equation of the basis.
    pub fn validate(&self) -> Result<()> {
        let l = self.pairs.len();
        let expect = |cond: bool, msg: &str| -> Result<()> {
            if cond {
                Ok(())
            } else {
                Err(Error::Precondition(format!("hyperbolic basis: {msg}")))
            }
        };
        let dim = self.space.dim();
        expect(
            dim == 2 * l + usize::from(self.unit.is_some()),
            "basis size does not match ambient dimension",
        )?;
        for i in 0..l {
            for j in 0..l {
                let want = if i == j { Scalar::one() } else { Scalar::zero() };
                expect(self.space.q(self.e(i), self.eprime(j)) == want, "q(e_i, e_j')")?;
                expect(self.space.q(self.e(i), self.e(j)).is_zero(), "q(e_i, e_j)")?;
                expect(
                    self.space.q(self.eprime(i), self.eprime(j)).is_zero(),
                    "q(e_i', e_j')",
                )?;
            }
        }
        if let Some((w, r)) = &self.unit {
            expect(&self.space.qv(w) == r, "q(w) = r")?;
            for i in 0..l {
                expect(self.space.q(w, self.e(i)).is_zero(), "w orthogonal to e_i")?;
                expect(
                    self.space.q(w, self.eprime(i)).is_zero(),
                    "w orthogonal to e_i'",
                )?;
            }
        }
        Ok(())
    }

    /// The root system matching this basis: rank and indexing agree with
    /// the Cartan generators, whatever the indexing convention.
    pub fn root_system(&self) -> Result<RootSystem> {
        let l = match self.indexing {
            EpsilonIndexing::FromZero => self.rank() - 1,
            EpsilonIndexing::FromOne => self.rank(),
        };
        roots_and_weights(self.lie_type(), l, self.indexing)
    }

    /// Cartan generators `xi_i = e_i ^ e_i'`; `xi_i e_j = delta_ij e_j`,
    /// `xi_i e_j' = -delta_ij e_j'`, pairwise commuting.
    pub fn cartan_basis(&self) -> Vec<SOElement> {
        self.pairs
            .iter()
            .map(|(e, f)| SOElement::bivector(self.space.clone(), e, f))
            .collect()
    }

    /// Simultaneous eigenvalue vector of `v` under the Cartan generators, or
    /// `None` if `v` is not a weight vector (e.g. a sum of two of them).
    pub fn weight_of(&self, v: &[Scalar]) -> Option<WeightVector> {
        if vec_is_zero(v) {
            return None;
        }
        let mut coords = Vec::with_capacity(self.rank());
        for xi in self.cartan_basis() {
            let w = xi.apply(v);
            let k = v.iter().position(|x| !x.is_zero()).expect("nonzero");
            let lambda = w[k].clone() / v[k].clone();
            if w != vec_scale(v, &lambda) {
                return None;
            }
            coords.push(lambda);
        }
        Some(WeightVector::new(coords, self.indexing))
    }

    /// The maximally unipotent nilpotent `N = e_1' ^ (e_2 + e_2')` adapted to
    /// this basis; `N e_1 = -e_2 - e_2'` and `N^2 e_1 = -2 e_1'`. Requires
    /// rank at least 2.
    pub fn index3_nilpotent(&self) -> SOElement {
        assert!(self.rank() >= 2, "need at least two hyperbolic pairs");
        let e2_sum: Vec<Scalar> = self
            .e(1)
            .iter()
            .zip(self.eprime(1))
            .map(|(a, b)| a + b)
            .collect();
        SOElement::bivector(self.space.clone(), self.eprime(0), &e2_sum)
    }

    /// The standard root vector realization: `e_i ^ e_j'` for `eps_i - eps_j`,
    /// `e_i ^ e_j` for `eps_i + eps_j`, `e_i' ^ e_j'` for `-eps_i - eps_j`,
    /// and for type B `e_i ^ w` (`eps_i`) resp. `e_i' ^ w` (`-eps_i`).
    ///
    /// Short-root vectors are returned with the unnormalized `w`; they differ
    /// from the normalized realization by the nonzero factor `sqrt(r)`, which
    /// every eigen-equation and annihilation predicate is invariant under.
    pub fn root_vector(&self, root: &WeightVector) -> Result<SOElement> {
        if root.indexing() != self.indexing || root.rank() != self.rank() {
            return Err(Error::UnknownRoot);
        }
        let nz: Vec<(usize, &Scalar)> = root
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let one = Scalar::one();
        let mone = -Scalar::one();
        match nz.as_slice() {
            [(i, a), (j, b)] => {
                let (i, j) = (*i, *j);
                if **a == one && **b == mone {
                    Ok(SOElement::bivector(self.space.clone(), self.e(i), self.eprime(j)))
                } else if **a == mone && **b == one {
                    Ok(SOElement::bivector(self.space.clone(), self.e(j), self.eprime(i)))
                } else if **a == one && **b == one {
                    Ok(SOElement::bivector(self.space.clone(), self.e(i), self.e(j)))
                } else if **a == mone && **b == mone {
                    Ok(SOElement::bivector(
                        self.space.clone(),
                        self.eprime(i),
                        self.eprime(j),
                    ))
                } else {
                    Err(Error::UnknownRoot)
                }
            }
            [(i, a)] => {
                let (w, _) = self.unit.as_ref().ok_or(Error::UnknownRoot)?;
                if **a == one {
                    Ok(SOElement::bivector(self.space.clone(), self.e(*i), w))
                } else if **a == mone {
                    Ok(SOElement::bivector(self.space.clone(), self.eprime(*i), w))
                } else {
                    Err(Error::UnknownRoot)
                }
            }
            _ => Err(Error::UnknownRoot),
        }
    }
}

/// Positive roots and fundamental weights for type B or D of the stated
/// rank parameter `l`: plain indexing gives rank `l` (coordinates
/// `eps_1..eps_l`), extended indexing gives rank `l + 1` (coordinates
/// `eps_0..eps_l`).
pub struct RootSystem {
    pub lie_type: LieType,
    pub positive_roots: Vec<WeightVector>,
    pub fundamental_weights: Vec<WeightVector>,
}

pub fn roots_and_weights(
    ty: LieType,
    l: usize,
    indexing: EpsilonIndexing,
) -> Result<RootSystem> {
    if ty == LieType::D && l < 2 {
        return Err(Error::RankTooSmall(l));
    }
    let rank = match indexing {
        EpsilonIndexing::FromZero => l + 1,
        EpsilonIndexing::FromOne => l,
    };
    if rank == 0 {
        return Err(Error::RankTooSmall(0));
    }
    let eps = |i: usize, sign: i64| -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); rank];
        v[i] = Scalar::from_integer(BigInt::from(sign));
        v
    };
    let mut positive_roots = Vec::new();
    if ty == LieType::B {
        for i in 0..rank {
            positive_roots.push(WeightVector::new(eps(i, 1), indexing));
        }
    }
    for i in 0..rank {
        for j in (i + 1)..rank {
            let mut minus = eps(i, 1);
            minus[j] = -Scalar::one();
            positive_roots.push(WeightVector::new(minus, indexing));
            let mut plus = eps(i, 1);
            plus[j] = Scalar::one();
            positive_roots.push(WeightVector::new(plus, indexing));
        }
    }

    let half = rat(1, 2);
    let prefix = |k: usize| -> Vec<Scalar> {
        (0..rank)
            .map(|i| if i <= k { Scalar::one() } else { Scalar::zero() })
            .collect()
    };
    let mut fundamental_weights = Vec::new();
    match ty {
        LieType::B => {
            for k in 0..rank.saturating_sub(1) {
                fundamental_weights.push(WeightVector::new(prefix(k), indexing));
            }
            let spinor: Vec<Scalar> = (0..rank).map(|_| half.clone()).collect();
            fundamental_weights.push(WeightVector::new(spinor, indexing));
        }
        LieType::D => {
            for k in 0..rank.saturating_sub(2) {
                fundamental_weights.push(WeightVector::new(prefix(k), indexing));
            }
            let mut semi_minus: Vec<Scalar> = (0..rank).map(|_| half.clone()).collect();
            semi_minus[rank - 1] = -half.clone();
            fundamental_weights.push(WeightVector::new(semi_minus, indexing));
            let semi_plus: Vec<Scalar> = (0..rank).map(|_| half.clone()).collect();
            fundamental_weights.push(WeightVector::new(semi_plus, indexing));
        }
    }
    Ok(RootSystem {
        lie_type: ty,
        positive_roots,
        fundamental_weights,
    })
}

/// A dominant weight given by nonnegative integer coefficients in the
/// fundamental weight basis, converted to epsilon coordinates.
pub fn weight_from_fundamental(
    ty: LieType,
    coeffs: &[i64],
    indexing: EpsilonIndexing,
) -> Result<WeightVector> {
    if coeffs.iter().any(|&a| a < 0) {
        return Err(Error::NegativeWeight);
    }
    let l = match indexing {
        EpsilonIndexing::FromZero => coeffs.len().checked_sub(1).ok_or(Error::RankTooSmall(0))?,
        EpsilonIndexing::FromOne => coeffs.len(),
    };
    let rs = roots_and_weights(ty, l, indexing)?;
    let rank = rs.fundamental_weights[0].rank();
    let mut acc = WeightVector::new(vec![Scalar::zero(); rank], indexing);
    for (a, w) in coeffs.iter().zip(&rs.fundamental_weights) {
        acc = acc.add(&w.scale(&Scalar::from_integer(BigInt::from(*a))));
    }
    Ok(acc)
}

/// The scalar by which `xi_1` acts on a highest weight vector of the plain
/// algebra with dominant fundamental-weight coordinates `a_1..a_l`:
/// `a_1 + .. + a_{l-1} + a_l/2` for type B,
/// `a_1 + .. + a_{l-2} + (a_{l-1} + a_l)/2` for type D.
pub fn xi1_of_highest_weight(ty: LieType, coeffs: &[i64]) -> Result<Scalar> {
    if coeffs.iter().any(|&a| a < 0) {
        return Err(Error::NegativeWeight);
    }
    let w = weight_from_fundamental(ty, coeffs, EpsilonIndexing::FromOne)?;
    Ok(w.coords()[0].clone())
}

/// The Mukai extension `V~ = <e0> + V + <e4>` with `q~(e0, e4) = 1`, `e0` and
/// `e4` isotropic and orthogonal to `V`, and the grading operator
/// `Xi = e4 ^ e0` (`Xi e4 = e4`, `Xi e0 = -e0`, `Xi|V = 0`).
///
/// Basis order: `e0` first, then the basis of `V`, then `e4`.
#[derive(Clone, Debug)]
pub struct MukaiSpace {
    space: QuadSpace,
    base: QuadSpace,
}

pub fn mukai_extend(base: &QuadSpace) -> Result<MukaiSpace> {
    let d = base.dim();
    let n = d + 2;
    let gram = Matrix::from_fn(n, n, |r, c| {
        if (r, c) == (0, n - 1) || (r, c) == (n - 1, 0) {
            Scalar::one()
        } else if (1..=d).contains(&r) && (1..=d).contains(&c) {
            base.gram().at(r - 1, c - 1).clone()
        } else {
            Scalar::zero()
        }
    });
    Ok(MukaiSpace {
        space: QuadSpace::new(gram)?,
        base: base.clone(),
    })
}

impl MukaiSpace {
    pub fn space(&self) -> &QuadSpace {
        &self.space
    }

    pub fn base(&self) -> &QuadSpace {
        &self.base
    }

    pub fn e0(&self) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.space.dim()];
        v[0] = Scalar::one();
        v
    }

    pub fn e4(&self) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.space.dim()];
        v[self.space.dim() - 1] = Scalar::one();
        v
    }

    pub fn embed_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.base.dim());
        let mut out = vec![Scalar::zero(); self.space.dim()];
        out[1..=self.base.dim()].clone_from_slice(v);
        out
    }

    /// Embed `so(V)` into `so(V~)` acting trivially on `e0`, `e4`.
    pub fn embed_so(&self, a: &SOElement) -> Result<SOElement> {
        if a.space().gram() != self.base.gram() {
            return Err(Error::DimMismatch("element not on the base space".into()));
        }
        let d = self.base.dim();
        let mat = Matrix::from_fn(d + 2, d + 2, |r, c| {
            if (1..=d).contains(&r) && (1..=d).contains(&c) {
                a.matrix().at(r - 1, c - 1).clone()
            } else {
                Scalar::zero()
            }
        });
        SOElement::new(self.space.clone(), mat)
    }

    /// The grading operator `Xi = e4 ^ e0`.
    pub fn xi(&self) -> SOElement {
        SOElement::bivector(self.space.clone(), &self.e4(), &self.e0())
    }

    /// Extend a hyperbolic basis of `V` by the Mukai pair `(e4, e0)` in
    /// position 0, re-indexed from `eps_0`.
    pub fn extended_basis(&self, hb: &HyperbolicBasis) -> Result<HyperbolicBasis> {
        if hb.space().gram() != self.base.gram() {
            return Err(Error::DimMismatch("basis not on the base space".into()));
        }
        let mut pairs = vec![(self.e4(), self.e0())];
        for (e, f) in &hb.pairs {
            pairs.push((self.embed_vec(e), self.embed_vec(f)));
        }
        let unit = hb
            .unit
            .as_ref()
            .map(|(w, r)| (self.embed_vec(w), r.clone()));
        Ok(HyperbolicBasis {
            space: self.space.clone(),
            pairs,
            unit,
            indexing: EpsilonIndexing::FromZero,
        })
    }
}

/// The Weil operator of a K3-type period point: the rational operator with
/// eigenvalue `2i` on `<x>`, `-2i` on the conjugate line, zero on their
/// orthogonal complement.
pub fn weil_operator(space: &QuadSpace, x: &[CScalar]) -> Result<SOElement> {
    let qxx = space.q_complex(x, x);
    if !qxx.is_zero() {
        return Err(Error::IsotropyViolation);
    }
    let a: Vec<Scalar> = x.iter().map(|z| z.re.clone()).collect();
    let b: Vec<Scalar> = x.iter().map(|z| z.im.clone()).collect();
    let qa = space.qv(&a);
    // q(x, conj x) = q(a) + q(b) = 2 q(a) for isotropic x
    if !qa.is_positive() {
        return Err(Error::Precondition(
            "period point needs q(x, conj x) > 0".into(),
        ));
    }
    let scale = rat(2, 1) / qa;
    Ok(SOElement::bivector(space.clone(), &a, &b).scale(&scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn b2() -> HyperbolicBasis {
        HyperbolicBasis::standard(2, LieType::B).unwrap()
    }

    fn lincomb(hb: &HyperbolicBasis, terms: &[(i64, Vec<Scalar>)]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); hb.space().dim()];
        for (c, v) in terms {
            for (o, x) in out.iter_mut().zip(v) {
                *o = &*o + &(x * &int(*c));
            }
        }
        out
    }

    #[test]
    fn bivector_sign_convention_anchor() {
        let hb = b2();
        let n = hb.index3_nilpotent();
        // N e1 = -e2 - e2'
        let expect = lincomb(&hb, &[(-1, hb.e(1).to_vec()), (-1, hb.eprime(1).to_vec())]);
        assert_eq!(n.apply(hb.e(0)), expect);
        // N^2 e1 = -2 e1'
        let expect2 = lincomb(&hb, &[(-2, hb.eprime(0).to_vec())]);
        assert_eq!(n.apply(&n.apply(hb.e(0))), expect2);
        assert_eq!(n.nilpotency_index().unwrap(), 3);
    }

    #[test]
    fn bivector_is_alternating() {
        let q = QuadSpace::preset_k3_like(5).unwrap();
        let a: Vec<Scalar> = [1, 2, 3, 4, 5].iter().map(|&x| int(x)).collect();
        assert!(SOElement::bivector(q, &a, &a).is_zero());
    }

    #[test]
    fn brackets_are_antisymmetric_and_eigen() {
        let hb = b2();
        let xi = hb.cartan_basis();
        let a = &xi[0];
        assert!(a.bracket(a).unwrap().is_zero());
        // [xi_1, e1 ^ e2] = 1 * (e1 ^ e2) and [xi_2, e1 ^ e2] = 1 * (e1 ^ e2)
        let root = SOElement::bivector(hb.space().clone(), hb.e(0), hb.e(1));
        assert_eq!(xi[0].bracket(&root).unwrap(), root);
        assert_eq!(xi[1].bracket(&root).unwrap(), root);
        // [xi_i, xi_j] = 0
        assert!(xi[0].bracket(&xi[1]).unwrap().is_zero());
    }

    #[test]
    fn cartan_acts_diagonally() {
        let hb = b2();
        let xi = hb.cartan_basis();
        assert_eq!(xi[0].apply(hb.e(0)), hb.e(0).to_vec());
        assert_eq!(
            xi[0].apply(hb.eprime(0)),
            vec_scale(hb.eprime(0), &int(-1))
        );
        assert!(vec_is_zero(&xi[0].apply(hb.e(1))));
        if let Some((w, _)) = hb.unit() {
            assert!(vec_is_zero(&xi[0].apply(w)));
        }
    }

    #[test]
    fn weight_of_basis_vectors() {
        let hb = b2();
        let w = hb.weight_of(hb.e(0)).unwrap();
        assert_eq!(w.coords(), &[int(1), int(0)]);
        let w = hb.weight_of(hb.eprime(0)).unwrap();
        assert_eq!(w.coords(), &[int(-1), int(0)]);
        // e1 + e2 is not a weight vector
        let sum = lincomb(&hb, &[(1, hb.e(0).to_vec()), (1, hb.e(1).to_vec())]);
        assert!(hb.weight_of(&sum).is_none());
    }

    #[test]
    fn root_vectors_satisfy_the_eigen_equation() {
        for ty in [LieType::B, LieType::D] {
            let hb = HyperbolicBasis::standard(3, ty).unwrap();
            let rs = roots_and_weights(ty, 3, EpsilonIndexing::FromOne).unwrap();
            let cartan = hb.cartan_basis();
            for root in &rs.positive_roots {
                let x = hb.root_vector(root).unwrap();
                assert!(!x.is_zero());
                for (i, xi) in cartan.iter().enumerate() {
                    let lhs = xi.bracket(&x).unwrap();
                    let rhs = x.scale(&root.coords()[i]);
                    assert_eq!(lhs, rhs, "root {root} fails at xi_{i} for type {ty}");
                }
            }
        }
    }

    #[test]
    fn root_counts_match_the_type() {
        // type D, parameter l, extended: pairs i < j over 0..l -> l(l+1) roots
        for l in [2usize, 3] {
            let rs = roots_and_weights(LieType::D, l, EpsilonIndexing::FromZero).unwrap();
            assert_eq!(rs.positive_roots.len(), l * (l + 1));
        }
        // type B adds the short roots
        let rs = roots_and_weights(LieType::B, 2, EpsilonIndexing::FromOne).unwrap();
        assert_eq!(rs.positive_roots.len(), 2 * 2); // 2 short + eps1 -+ eps2
    }

    #[test]
    fn fundamental_weights_match_the_tables() {
        // extended B with l = 1: two coordinates, spinor weight (1/2, 1/2)
        let rs = roots_and_weights(LieType::B, 1, EpsilonIndexing::FromZero).unwrap();
        assert_eq!(
            rs.fundamental_weights.last().unwrap().coords(),
            &[rat(1, 2), rat(1, 2)]
        );
        assert_eq!(rs.fundamental_weights[0].coords(), &[int(1), int(0)]);

        // extended B, l = 2: first weights are prefix sums
        let rs = roots_and_weights(LieType::B, 2, EpsilonIndexing::FromZero).unwrap();
        assert_eq!(rs.fundamental_weights[0].coords(), &[int(1), int(0), int(0)]);
        assert_eq!(rs.fundamental_weights[1].coords(), &[int(1), int(1), int(0)]);

        // plain D, l = 3: the two semi-spinors
        let rs = roots_and_weights(LieType::D, 3, EpsilonIndexing::FromOne).unwrap();
        assert_eq!(
            rs.fundamental_weights[1].coords(),
            &[rat(1, 2), rat(1, 2), rat(-1, 2)]
        );
        assert_eq!(
            rs.fundamental_weights[2].coords(),
            &[rat(1, 2), rat(1, 2), rat(1, 2)]
        );
        assert!(roots_and_weights(LieType::D, 1, EpsilonIndexing::FromOne).is_err());
    }

    #[test]
    fn xi1_scalar_on_highest_weights() {
        // spinor weight of type B: 1/2
        assert_eq!(xi1_of_highest_weight(LieType::B, &[0, 0, 1]).unwrap(), rat(1, 2));
        // (k-1) w1 + w_l at k = 3
        assert_eq!(
            xi1_of_highest_weight(LieType::B, &[2, 0, 1]).unwrap(),
            rat(5, 2)
        );
        assert_eq!(xi1_of_highest_weight(LieType::B, &[0, 0, 0]).unwrap(), int(0));
        // type D semi-spinors both give 1/2
        assert_eq!(xi1_of_highest_weight(LieType::D, &[0, 0, 1]).unwrap(), rat(1, 2));
        assert_eq!(xi1_of_highest_weight(LieType::D, &[0, 1, 0]).unwrap(), rat(1, 2));
        assert_eq!(
            xi1_of_highest_weight(LieType::B, &[-1, 0, 0]),
            Err(Error::NegativeWeight)
        );
    }

    #[test]
    fn mukai_extension_invariants() {
        let v = QuadSpace::preset_k3_like(5).unwrap();
        let m = mukai_extend(&v).unwrap();
        assert_eq!(m.space().dim(), 7);
        assert_eq!(m.space().q(&m.e0(), &m.e4()), int(1));
        assert!(m.space().qv(&m.e0()).is_zero());
        assert!(m.space().qv(&m.e4()).is_zero());
        // restriction to V is q
        for i in 0..5 {
            for j in 0..5 {
                let mut a = vec![Scalar::zero(); 5];
                let mut b = vec![Scalar::zero(); 5];
                a[i] = Scalar::one();
                b[j] = Scalar::one();
                assert_eq!(
                    m.space().q(&m.embed_vec(&a), &m.embed_vec(&b)),
                    v.q(&a, &b)
                );
            }
        }
        // Xi acts as -1, 0, 1
        let xi = m.xi();
        assert_eq!(xi.apply(&m.e0()), vec_scale(&m.e0(), &int(-1)));
        assert_eq!(xi.apply(&m.e4()), m.e4());
        let mut inner = vec![Scalar::zero(); 5];
        inner[2] = Scalar::one();
        assert!(vec_is_zero(&xi.apply(&m.embed_vec(&inner))));
        // Xi commutes with the embedded so(V)
        for a in so_basis(&v).iter().take(4) {
            let emb = m.embed_so(a).unwrap();
            assert!(xi.bracket(&emb).unwrap().is_zero());
        }
    }

    #[test]
    fn weil_operator_eigenvalues() {
        let q = QuadSpace::preset_k3_like(5).unwrap();
        // x = a + i b with q(a) = q(b) = 1, q(a, b) = 0
        let x: Vec<CScalar> = vec![
            CScalar::one(),
            CScalar::i(),
            CScalar::zero(),
            CScalar::zero(),
            CScalar::zero(),
        ];
        let w = weil_operator(&q, &x).unwrap();
        // W x = 2i x
        let wx = w.apply_complex(&x);
        let two_i = CScalar::new(int(0), int(2));
        let expect: Vec<CScalar> = x.iter().map(|z| z * &two_i).collect();
        assert_eq!(wx, expect);
        // W v = 0 for v orthogonal to x and conj x
        let mut v = vec![Scalar::zero(); 5];
        v[2] = Scalar::one();
        assert!(vec_is_zero(&w.apply(&v)));
        // W^3 = -4 W
        let m3 = w.matrix().pow(3);
        assert_eq!(m3, w.matrix().scale(&int(-4)));
        // rejects non-isotropic points
        let bad: Vec<CScalar> = vec![
            CScalar::one(),
            CScalar::zero(),
            CScalar::zero(),
            CScalar::zero(),
            CScalar::zero(),
        ];
        assert_eq!(weil_operator(&q, &bad), Err(Error::IsotropyViolation));
    }

    #[test]
    fn so_membership_is_checked_exactly() {
        let q = QuadSpace::preset_k3_like(3).unwrap();
        let bad = Matrix::identity(3);
        assert_eq!(SOElement::new(q, bad), Err(Error::NotOrthogonal));
    }
}
