//! Clifford algebras with the relation `v w + w v = 2 q(v, w)`, the spin
//! lift `a ^ b -> (ab - ba)/4`, and spinor modules realized on the exterior
//! algebra of a maximal isotropic subspace.
//!
//! Elements are sparse maps from sorted subset words of the generating basis
//! to rational coefficients. The generating basis need not be orthogonal;
//! products are normalized by the rewriting rule
//! `e_j e_i = 2 q(e_i, e_j) - e_i e_j` (for `j > i`), tabulated once per
//! algebra.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::lie::{bivector_coords, so_basis, HyperbolicBasis, LieType, SOElement};
use crate::matrix::Matrix;
use crate::quad::QuadSpace;
use crate::rep::RepModule;
use crate::scalar::{rat, CScalar, Field, Scalar};
use crate::Result;

/// Hard cap on the ambient dimension (the algebra has dimension `2^d`).
pub const CLIFFORD_DIM_CAP: usize = 12;

/// Sparse Clifford algebra element: sorted-subset word mask -> coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CliffordElement {
    terms: BTreeMap<u32, Scalar>,
}

impl CliffordElement {
    pub fn zero() -> Self {
        CliffordElement::default()
    }

    pub fn one() -> Self {
        CliffordElement::basis_word(0)
    }

    pub fn basis_word(mask: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(mask, Scalar::one());
        CliffordElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Scalar)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, mask: u32) -> Scalar {
        self.terms.get(&mask).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, mask: u32, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mask).or_insert_with(Scalar::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn add(&self, other: &CliffordElement) -> CliffordElement {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, c);
        }
        out
    }

    pub fn sub(&self, other: &CliffordElement) -> CliffordElement {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, &c.ref_neg());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> CliffordElement {
        if s.is_zero() {
            return CliffordElement::zero();
        }
        CliffordElement {
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    /// Coefficient vector over the `2^d` word basis.
    pub fn to_vec(&self, dim: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); dim];
        for (m, c) in self.terms() {
            out[m as usize] = c.clone();
        }
        out
    }
}

/// A Clifford algebra over a quadratic space, with product, canonical
/// anti-involution and left-regular trace.
#[derive(Debug)]
pub struct CliffordAlgebra {
    space: QuadSpace,
    d: usize,
    dim: usize,
    /// `gen_mul[g][mask]` = `word(mask) * e_g`
    gen_mul: Vec<Vec<CliffordElement>>,
    /// `bar[mask]` = reversal of `word(mask)`
    bar_table: Vec<CliffordElement>,
    /// `trace[mask]` = trace of left multiplication by `word(mask)`
    trace_table: OnceLock<Vec<Scalar>>,
}

impl CliffordAlgebra {
    pub fn new(space: QuadSpace) -> Result<Self> {
        let d = space.dim();
        if d > CLIFFORD_DIM_CAP {
            return Err(Error::CapExceeded(format!(
                "Clifford algebra over dim {d} exceeds cap {CLIFFORD_DIM_CAP}"
            )));
        }
        let dim = 1usize << d;
        // gen_mul by dynamic programming over submasks: word(mask) * e_g
        let mut gen_mul: Vec<Vec<CliffordElement>> = vec![Vec::with_capacity(dim); d];
        for mask in 0..dim as u32 {
            for g in 0..d {
                let elem = if mask == 0 {
                    CliffordElement::basis_word(1 << g)
                } else {
                    let top = 31 - mask.leading_zeros(); // highest generator in the word
                    let rest = mask & !(1 << top);
                    if (top as usize) < g {
                        CliffordElement::basis_word(mask | (1 << g))
                    } else if top as usize == g {
                        // e_g e_g = q(e_g)
                        CliffordElement::basis_word(rest).scale(&space.qv_basis(g, g))
                    } else {
                        // word = rest * e_top with top > g:
                        // (rest e_top) e_g = 2 q(e_top, e_g) rest - (rest e_g) e_top
                        let two_q = space.qv_basis(top as usize, g) * rat(2, 1);
                        let mut out = CliffordElement::basis_word(rest).scale(&two_q);
                        for (m, c) in gen_mul[g][rest as usize].clone().terms() {
                            // all words in rest*e_g have top bit < top
                            debug_assert!(m & (1 << top) == 0);
                            out.add_term(m | (1 << top), &c.ref_neg());
                        }
                        out
                    }
                };
                gen_mul[g].push(elem);
            }
        }
        let mut ca = CliffordAlgebra {
            space,
            d,
            dim,
            gen_mul,
            bar_table: Vec::new(),
            trace_table: OnceLock::new(),
        };
        // bar(word) = product of the generators in descending order
        let mut bar_table = Vec::with_capacity(dim);
        for mask in 0..dim as u32 {
            let mut elem = CliffordElement::one();
            for g in (0..ca.d).rev() {
                if mask & (1 << g) != 0 {
                    elem = ca.mul_elem_gen(&elem, g);
                }
            }
            bar_table.push(elem);
        }
        ca.bar_table = bar_table;
        Ok(ca)
    }

    pub fn space(&self) -> &QuadSpace {
        &self.space
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        self.d
    }

    /// Dimension `2^d` of the algebra.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Word labels in mask order.
    pub fn labels(&self) -> Vec<String> {
        (0..self.dim as u32)
            .map(|mask| {
                if mask == 0 {
                    "1".to_string()
                } else {
                    (0..self.d)
                        .filter(|g| mask & (1 << g) != 0)
                        .map(|g| match self.space.labels() {
                            Some(ls) => ls[g].clone(),
                            None => format!("v{}", g + 1),
                        })
                        .collect::<Vec<_>>()
                        .join("")
                }
            })
            .collect()
    }

    /// Degree-one element from an ambient vector.
    pub fn vector(&self, v: &[Scalar]) -> CliffordElement {
        assert_eq!(v.len(), self.d);
        let mut out = CliffordElement::zero();
        for (g, c) in v.iter().enumerate() {
            out.add_term(1 << g, c);
        }
        out
    }

    fn mul_elem_gen(&self, x: &CliffordElement, g: usize) -> CliffordElement {
        let mut out = CliffordElement::zero();
        for (m, c) in x.terms() {
            for (m2, c2) in self.gen_mul[g][m as usize].terms() {
                out.add_term(m2, &(c * c2));
            }
        }
        out
    }

    fn mul_word_elem(&self, mask: u32, y: &CliffordElement) -> CliffordElement {
        let mut out = CliffordElement::zero();
        for (m, c) in y.terms() {
            // word(mask) * word(m): fold generators of m from the left
            let mut acc = CliffordElement::basis_word(mask);
            for g in 0..self.d {
                if m & (1 << g) != 0 {
                    acc = self.mul_elem_gen(&acc, g);
                }
            }
            for (m2, c2) in acc.terms() {
                out.add_term(m2, &(c * c2));
            }
        }
        out
    }

    /// Associative product.
    pub fn mul(&self, x: &CliffordElement, y: &CliffordElement) -> CliffordElement {
        let mut out = CliffordElement::zero();
        for (m, c) in x.terms() {
            let part = self.mul_word_elem(m, y);
            for (m2, c2) in part.terms() {
                out.add_term(m2, &(c * c2));
            }
        }
        out
    }

    /// The canonical anti-involution: reverses products, fixes generators.
    pub fn bar(&self, x: &CliffordElement) -> CliffordElement {
        let mut out = CliffordElement::zero();
        for (m, c) in x.terms() {
            for (m2, c2) in self.bar_table[m as usize].terms() {
                out.add_term(m2, &(c * c2));
            }
        }
        out
    }

    /// Trace of left multiplication on the algebra (the left-regular trace).
    pub fn trace(&self, x: &CliffordElement) -> Scalar {
        let table = self.trace_table.get_or_init(|| {
            (0..self.dim as u32)
                .map(|mask| {
                    let mut acc = Scalar::zero();
                    for w in 0..self.dim as u32 {
                        let prod = self.mul_word_elem(mask, &CliffordElement::basis_word(w));
                        acc += &prod.coeff(w);
                    }
                    acc
                })
                .collect()
        });
        let mut acc = Scalar::zero();
        for (m, c) in x.terms() {
            acc += &(c * &table[m as usize]);
        }
        acc
    }

    /// Matrix of left multiplication by `x` on the word basis.
    pub fn left_mul_matrix(&self, x: &CliffordElement) -> Matrix<Scalar> {
        let mut out: Matrix<Scalar> = Matrix::zero(self.dim, self.dim);
        for w in 0..self.dim as u32 {
            let col = self.mul(x, &CliffordElement::basis_word(w));
            for (m, c) in col.terms() {
                out.set(m as usize, w as usize, c.clone());
            }
        }
        out
    }

    /// Left multiplication by a Gaussian-rational vector, as a complex
    /// matrix on the complexified algebra.
    pub fn left_mul_matrix_complex(&self, v: &[CScalar]) -> Matrix<CScalar> {
        let re: Vec<Scalar> = v.iter().map(|z| z.re.clone()).collect();
        let im: Vec<Scalar> = v.iter().map(|z| z.im.clone()).collect();
        let lre = self.left_mul_matrix(&self.vector(&re)).complexify();
        let lim = self.left_mul_matrix(&self.vector(&im)).complexify();
        lre.add(&lim.scale(&CScalar::i()))
    }

    /// The spin lift of a Lie algebra element: `a ^ b -> (ab - ba)/4`,
    /// extended linearly over the bivector expansion.
    pub fn lift(&self, a: &SOElement) -> Result<CliffordElement> {
        if a.space().gram() != self.space.gram() {
            return Err(Error::DimMismatch("element on a different space".into()));
        }
        let coords = bivector_coords(&self.space, a.matrix())?;
        let mut out = CliffordElement::zero();
        let mut k = 0;
        let half = rat(1, 2);
        for i in 0..self.d {
            for j in (i + 1)..self.d {
                let c = &coords[k];
                k += 1;
                if c.is_zero() {
                    continue;
                }
                // (e_i e_j - e_j e_i)/4 = e_i e_j / 2 - q(e_i, e_j)/2
                out.add_term((1 << i) | (1 << j), &(c * &half));
                out.add_term(0, &-(c * &half * self.space.qv_basis(i, j)));
            }
        }
        Ok(out)
    }

    /// The algebra as a module over `so(V, q)` by left multiplication with
    /// the spin lift.
    pub fn spin_action(&self) -> RepModule {
        let gen_actions = so_basis(&self.space)
            .iter()
            .map(|b| {
                let lifted = self.lift(b).expect("basis element lifts");
                self.left_mul_matrix(&lifted)
            })
            .collect();
        RepModule::new(self.space.clone(), self.labels(), gen_actions)
            .expect("action matrices match the algebra")
    }
}

/// The spinor module on the exterior algebra of the isotropic subspace
/// spanned by `e_1..e_l`: `e_i` acts by exterior multiplication, `e_i'` by
/// twice the interior product, and (type B) the unit vector by the parity
/// involution. Dimension `2^l`; for type D the even and odd wedge-degree
/// summands are the two semi-spinor modules.
///
/// Requires an exact unit vector for type B (a square-root scale flag is
/// rejected: the flagged generator action is only rational up to the flag).
pub fn spinor_module(hb: &HyperbolicBasis) -> Result<RepModule> {
    let l = hb.rank();
    if l == 0 {
        return Err(Error::RankTooSmall(0));
    }
    match 1usize.checked_shl(l as u32) {
        Some(d) if d <= crate::rep::MODULE_DIM_CAP => {}
        _ => {
            return Err(Error::CapExceeded(format!(
                "spinor module of rank {l} exceeds cap {}",
                crate::rep::MODULE_DIM_CAP
            )))
        }
    }
    if hb.lie_type() == LieType::B && !hb.unit_is_exact() {
        let (_, r) = hb.unit().expect("type B has a unit");
        return Err(Error::UnnormalizedUnit(r.to_string()));
    }
    let dim = 1usize << l;
    let sdim = hb.space().dim();

    // generator actions of the hyperbolic basis vectors on the wedge words
    let wedge = |i: usize| -> Matrix<Scalar> {
        let mut m: Matrix<Scalar> = Matrix::zero(dim, dim);
        for mask in 0..dim as u32 {
            if mask & (1 << i) != 0 {
                continue;
            }
            let below = (mask & ((1 << i) - 1)).count_ones();
            let sign = if below % 2 == 0 { Scalar::one() } else { -Scalar::one() };
            m.set((mask | (1 << i)) as usize, mask as usize, sign);
        }
        m
    };
    let contract2 = |i: usize| -> Matrix<Scalar> {
        let mut m: Matrix<Scalar> = Matrix::zero(dim, dim);
        for mask in 0..dim as u32 {
            if mask & (1 << i) == 0 {
                continue;
            }
            let below = (mask & ((1 << i) - 1)).count_ones();
            let sign = if below % 2 == 0 { rat(2, 1) } else { rat(-2, 1) };
            m.set((mask & !(1 << i)) as usize, mask as usize, sign);
        }
        m
    };
    let parity = || -> Matrix<Scalar> {
        let mut m: Matrix<Scalar> = Matrix::zero(dim, dim);
        for mask in 0..dim as u32 {
            let sign = if mask.count_ones() % 2 == 0 {
                Scalar::one()
            } else {
                -Scalar::one()
            };
            m.set(mask as usize, mask as usize, sign);
        }
        m
    };

    // Clifford action of each ambient coordinate vector, through the change
    // of basis into the hyperbolic basis
    let basis = hb.basis_matrix(); // rows: e_1..e_l, e_1'..e_l', (w)
    let bt = basis.transpose();
    let mut gen_rho: Vec<Matrix<Scalar>> = Vec::with_capacity(sdim);
    for k in 0..sdim {
        let mut fk = vec![Scalar::zero(); sdim];
        fk[k] = Scalar::one();
        let coords = bt.solve(&fk).ok_or_else(|| {
            Error::Precondition("hyperbolic basis does not span the space".into())
        })?;
        let mut rho: Matrix<Scalar> = Matrix::zero(dim, dim);
        for i in 0..l {
            if !coords[i].is_zero() {
                rho = rho.add(&wedge(i).scale(&coords[i]));
            }
            if !coords[l + i].is_zero() {
                rho = rho.add(&contract2(i).scale(&coords[l + i]));
            }
        }
        if hb.unit().is_some() && !coords[2 * l].is_zero() {
            rho = rho.add(&parity().scale(&coords[2 * l]));
        }
        gen_rho.push(rho);
    }

    // so-action via the spin lift (ab - ba)/4 on generator pairs
    let mut gen_actions = Vec::with_capacity(sdim * (sdim - 1) / 2);
    let quarter = rat(1, 4);
    for i in 0..sdim {
        for j in (i + 1)..sdim {
            let ab = gen_rho[i].mul(&gen_rho[j]);
            let ba = gen_rho[j].mul(&gen_rho[i]);
            gen_actions.push(ab.sub(&ba).scale(&quarter));
        }
    }

    let labels = (0..dim as u32)
        .map(|mask| {
            if mask == 0 {
                "1".to_string()
            } else {
                (0..l)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| format!("e{}", i + 1))
                    .collect::<Vec<_>>()
                    .join("^")
            }
        })
        .collect();
    RepModule::new(hb.space().clone(), labels, gen_actions)
}

/// The highest weight vector `u = e_1 ^ .. ^ e_l` of the spinor module, in
/// module coordinates (the full wedge word).
pub fn spinor_highest_weight_vector(l: usize) -> Vec<Scalar> {
    let dim = 1usize << l;
    let mut v = vec![Scalar::zero(); dim];
    v[dim - 1] = Scalar::one();
    v
}
