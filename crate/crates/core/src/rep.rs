//! Functorial module constructions over the orthogonal Lie algebra: tensor,
//! symmetric and exterior powers, contraction kernels, generated submodules,
//! and exact weight decompositions.
//!
//! A module stores the action matrices of the bivector basis of `so(V, q)`;
//! the action of an arbitrary element is recovered by expanding it in that
//! basis, so it is linear by construction. Basis words are kept in canonical
//! sorted order and every construction is deterministic.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::lie::{bivector_coords, so_basis, HyperbolicBasis, SOElement, WeightVector};
use crate::matrix::{vec_is_zero, Matrix};
use crate::quad::QuadSpace;
use crate::scalar::{Field, Scalar};
use crate::subspace::Subspace;
use crate::Result;

/// Hard cap on module dimensions; exceeding it is a clean error.
pub const MODULE_DIM_CAP: usize = 20_000;

/// A finite-dimensional module over `so(V, q)` with a labeled basis.
#[derive(Clone, Debug)]
pub struct RepModule {
    algebra: QuadSpace,
    labels: Vec<String>,
    gen_actions: Vec<Matrix<Scalar>>,
}

impl RepModule {
    pub fn new(
        algebra: QuadSpace,
        labels: Vec<String>,
        gen_actions: Vec<Matrix<Scalar>>,
    ) -> Result<Self> {
        let d = algebra.dim();
        if gen_actions.len() != d * (d - 1) / 2 {
            return Err(Error::DimMismatch(
                "one action matrix per bivector basis element required".into(),
            ));
        }
        let dim = labels.len();
        if gen_actions.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimMismatch("action matrix shape".into()));
        }
        Ok(RepModule {
            algebra,
            labels,
            gen_actions,
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn algebra(&self) -> &QuadSpace {
        &self.algebra
    }

    pub fn gen_actions(&self) -> &[Matrix<Scalar>] {
        &self.gen_actions
    }

    /// Action matrix of an arbitrary Lie algebra element, by expanding it in
    /// the bivector basis. Linear in the element by construction.
    pub fn act(&self, a: &SOElement) -> Result<Matrix<Scalar>> {
        if a.space().gram() != self.algebra.gram() {
            return Err(Error::DimMismatch(
                "element does not act on this module's algebra".into(),
            ));
        }
        let coords = bivector_coords(&self.algebra, a.matrix())?;
        let mut out = Matrix::zero(self.dim(), self.dim());
        for (c, m) in coords.iter().zip(&self.gen_actions) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        Ok(out)
    }

    /// The defining representation: `V` itself.
    pub fn standard(space: &QuadSpace) -> Self {
        let labels = match space.labels() {
            Some(ls) => ls.to_vec(),
            None => (1..=space.dim()).map(|i| format!("v{i}")).collect(),
        };
        let gen_actions = so_basis(space)
            .into_iter()
            .map(|b| b.matrix().clone())
            .collect();
        RepModule {
            algebra: space.clone(),
            labels,
            gen_actions,
        }
    }

    /// Dual module: `A` acts by `-A^T`.
    pub fn dual(&self) -> Self {
        RepModule {
            algebra: self.algebra.clone(),
            labels: self.labels.iter().map(|l| format!("{l}*")).collect(),
            gen_actions: self
                .gen_actions
                .iter()
                .map(|m| m.transpose().scale(&-Scalar::one()))
                .collect(),
        }
    }

    /// Tensor product with the Leibniz action `A(x@y) = Ax@y + x@Ay`.
    pub fn tensor(&self, other: &RepModule) -> Result<Self> {
        if self.algebra.gram() != other.algebra.gram() {
            return Err(Error::DimMismatch(
                "tensor factors over different algebras".into(),
            ));
        }
        let (d1, d2) = (self.dim(), other.dim());
        check_cap(d1.checked_mul(d2))?;
        let labels = (0..d1 * d2)
            .map(|k| format!("{}@{}", self.labels[k / d2], other.labels[k % d2]))
            .collect();
        let gen_actions = self
            .gen_actions
            .iter()
            .zip(&other.gen_actions)
            .map(|(a, b)| tensor_leibniz(a, b))
            .collect();
        Ok(RepModule {
            algebra: self.algebra.clone(),
            labels,
            gen_actions,
        })
    }

    /// Symmetric power with the Leibniz action on monomials.
    pub fn sym_power(&self, k: usize) -> Result<Self> {
        check_cap(binom_checked(self.dim() + k.saturating_sub(1), k))?;
        let words = sym_words(self.dim(), k);
        let index: BTreeMap<Vec<usize>, usize> = words.iter().cloned().zip(0..).collect();
        let labels = words
            .iter()
            .map(|w| {
                if w.is_empty() {
                    "1".to_string()
                } else {
                    w.iter()
                        .map(|&i| self.labels[i].clone())
                        .collect::<Vec<_>>()
                        .join(".")
                }
            })
            .collect();
        let gen_actions = self
            .gen_actions
            .iter()
            .map(|a| sym_matrix(a, &words, &index))
            .collect();
        Ok(RepModule {
            algebra: self.algebra.clone(),
            labels,
            gen_actions,
        })
    }

    /// Exterior power with the signed Leibniz action on wedge words.
    pub fn ext_power(&self, k: usize) -> Result<Self> {
        check_cap(binom_checked(self.dim(), k.min(self.dim())))?;
        let words = ext_words(self.dim(), k);
        let index: BTreeMap<Vec<usize>, usize> = words.iter().cloned().zip(0..).collect();
        let labels = words
            .iter()
            .map(|w| {
                if w.is_empty() {
                    "1".to_string()
                } else {
                    w.iter()
                        .map(|&i| self.labels[i].clone())
                        .collect::<Vec<_>>()
                        .join("^")
                }
            })
            .collect();
        let gen_actions = self
            .gen_actions
            .iter()
            .map(|a| ext_matrix(a, &words, &index))
            .collect();
        Ok(RepModule {
            algebra: self.algebra.clone(),
            labels,
            gen_actions,
        })
    }
}

/// Binomial coefficient with overflow detection.
fn binom_checked(n: usize, k: usize) -> Option<usize> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut r: usize = 1;
    for i in 0..k {
        r = r.checked_mul(n - i)? / (i + 1);
    }
    Some(r)
}

fn check_cap(dim: Option<usize>) -> Result<usize> {
    match dim {
        Some(d) if d <= MODULE_DIM_CAP => Ok(d),
        Some(d) => Err(Error::CapExceeded(format!(
            "module dimension {d} exceeds cap {MODULE_DIM_CAP}"
        ))),
        None => Err(Error::CapExceeded("module dimension overflows".into())),
    }
}

/// `a@1 + 1@b` on the tensor basis.
fn tensor_leibniz(a: &Matrix<Scalar>, b: &Matrix<Scalar>) -> Matrix<Scalar> {
    let (d1, d2) = (a.rows(), b.rows());
    let mut out: Matrix<Scalar> = Matrix::zero(d1 * d2, d1 * d2);
    for i in 0..d1 {
        for j in 0..d2 {
            let col = i * d2 + j;
            for m in 0..d1 {
                let c = a.at(m, i);
                if !c.is_zero() {
                    let row = m * d2 + j;
                    let v = out.at(row, col).ref_add(c);
                    out.set(row, col, v);
                }
            }
            for m in 0..d2 {
                let c = b.at(m, j);
                if !c.is_zero() {
                    let row = i * d2 + m;
                    let v = out.at(row, col).ref_add(c);
                    out.set(row, col, v);
                }
            }
        }
    }
    out
}

/// Nondecreasing index words of length `k` over `0..n`, lexicographic.
pub fn sym_words(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, start: usize, word: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if word.len() == k {
            out.push(word.clone());
            return;
        }
        for i in start..n {
            word.push(i);
            rec(n, k, i, word, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Strictly increasing index words of length `k` over `0..n`, lexicographic.
pub fn ext_words(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, start: usize, word: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if word.len() == k {
            out.push(word.clone());
            return;
        }
        for i in start..n {
            word.push(i);
            rec(n, k, i + 1, word, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

fn sym_matrix(
    a: &Matrix<Scalar>,
    words: &[Vec<usize>],
    index: &BTreeMap<Vec<usize>, usize>,
) -> Matrix<Scalar> {
    let dim = words.len();
    let mut out: Matrix<Scalar> = Matrix::zero(dim, dim);
    for (col, w) in words.iter().enumerate() {
        for p in 0..w.len() {
            for m in 0..a.rows() {
                let c = a.at(m, w[p]);
                if c.is_zero() {
                    continue;
                }
                let mut nw = w.clone();
                nw[p] = m;
                nw.sort_unstable();
                let row = index[&nw];
                let v = out.at(row, col).ref_add(c);
                out.set(row, col, v);
            }
        }
    }
    out
}

fn ext_matrix(
    a: &Matrix<Scalar>,
    words: &[Vec<usize>],
    index: &BTreeMap<Vec<usize>, usize>,
) -> Matrix<Scalar> {
    let dim = words.len();
    let mut out: Matrix<Scalar> = Matrix::zero(dim, dim);
    for (col, w) in words.iter().enumerate() {
        for p in 0..w.len() {
            for m in 0..a.rows() {
                let c = a.at(m, w[p]);
                if c.is_zero() {
                    continue;
                }
                if w.iter().enumerate().any(|(s, &x)| s != p && x == m) {
                    continue; // repeated factor kills the wedge
                }
                // sign of sorting m into the word with slot p removed
                let others: Vec<usize> = w
                    .iter()
                    .enumerate()
                    .filter(|&(s, _)| s != p)
                    .map(|(_, &x)| x)
                    .collect();
                let target = others.iter().filter(|&&x| x < m).count();
                let signed = if (p + target) % 2 == 0 {
                    c.clone()
                } else {
                    c.ref_neg()
                };
                let mut nw = others;
                nw.insert(target, m);
                let row = index[&nw];
                let v = out.at(row, col).ref_add(&signed);
                out.set(row, col, v);
            }
        }
    }
    out
}

/// A submodule of a parent module: its own module structure plus the
/// embedding (RREF basis rows in parent coordinates).
#[derive(Clone, Debug)]
pub struct Submodule {
    pub module: RepModule,
    pub basis: Subspace<Scalar>,
}

impl Submodule {
    /// Coordinates of a parent vector inside the submodule, if it lies there.
    pub fn coords_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.basis.coords_of(v)
    }
}

/// Restrict a parent module to an action-invariant subspace.
pub fn restrict_module(parent: &RepModule, sub: &Subspace<Scalar>) -> Result<Submodule> {
    let mut gen_actions = Vec::with_capacity(parent.gen_actions.len());
    for m in &parent.gen_actions {
        let r = sub
            .restrict_endo(m)
            .ok_or_else(|| Error::Precondition("subspace is not action-stable".into()))?;
        gen_actions.push(r);
    }
    let labels = (1..=sub.dim()).map(|i| format!("b{i}")).collect();
    Ok(Submodule {
        module: RepModule {
            algebra: parent.algebra.clone(),
            labels,
            gen_actions,
        },
        basis: sub.clone(),
    })
}

/// The kernel of the contraction `S^n V -> S^{n-2} V` with the form, as a
/// submodule of `S^n V`. For `n < 2` the kernel is all of `S^n V`.
pub fn contraction_kernel(space: &QuadSpace, n: usize) -> Result<Submodule> {
    let std_rep = RepModule::standard(space);
    let sn = std_rep.sym_power(n)?;
    if n < 2 {
        let full = Subspace::full(sn.dim());
        return restrict_module(&sn, &full);
    }
    let words_n = sym_words(space.dim(), n);
    let words_m = sym_words(space.dim(), n - 2);
    let index_m: BTreeMap<Vec<usize>, usize> = words_m.iter().cloned().zip(0..).collect();
    let mut c: Matrix<Scalar> = Matrix::zero(words_m.len(), words_n.len());
    for (col, w) in words_n.iter().enumerate() {
        for p in 0..w.len() {
            for s in (p + 1)..w.len() {
                let coeff = space.gram().at(w[p], w[s]).clone();
                if coeff.is_zero() {
                    continue;
                }
                let mut nw = Vec::with_capacity(w.len() - 2);
                for (t, &x) in w.iter().enumerate() {
                    if t != p && t != s {
                        nw.push(x);
                    }
                }
                let row = index_m[&nw];
                let v = c.at(row, col).ref_add(&coeff);
                c.set(row, col, v);
            }
        }
    }
    let ker = c.kernel();
    restrict_module(&sn, &ker)
}

/// Smallest action-stable subspace containing `v`, with the restricted
/// module structure. `generators` must span the acting algebra for the
/// result to be a genuine submodule.
pub fn submodule_generated(
    parent: &RepModule,
    v: &[Scalar],
    generators: &[SOElement],
) -> Result<Submodule> {
    if v.len() != parent.dim() {
        return Err(Error::DimMismatch("generating vector length".into()));
    }
    let gen_mats: Vec<Matrix<Scalar>> = generators
        .iter()
        .map(|g| parent.act(g))
        .collect::<Result<_>>()?;
    let mut span = crate::subspace::IncrementalSpan::new(parent.dim());
    let mut frontier: Vec<Vec<Scalar>> = Vec::new();
    if !vec_is_zero(v) && span.insert(v) {
        frontier.push(v.to_vec());
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for m in &gen_mats {
                let img = m.apply(w);
                if span.insert(&img) {
                    next.push(img);
                }
            }
        }
        frontier = next;
    }
    restrict_module(parent, &span.into_subspace())
}

/// Simultaneous Cartan eigenspace refinement of a starting subspace; each
/// resulting block carries its accumulated eigenvalue vector.
fn cartan_refine(
    module: &RepModule,
    hb: &HyperbolicBasis,
    start: Subspace<Scalar>,
) -> Result<Vec<(Vec<Scalar>, Subspace<Scalar>)>> {
    let cartan_mats: Vec<Matrix<Scalar>> = hb
        .cartan_basis()
        .iter()
        .map(|xi| module.act(xi))
        .collect::<Result<_>>()?;
    let mut blocks: Vec<(Vec<Scalar>, Subspace<Scalar>)> = vec![(Vec::new(), start)];
    for xi in &cartan_mats {
        let mut next = Vec::new();
        for (evs, block) in &blocks {
            if block.is_zero() {
                continue;
            }
            let restricted = block.restrict_endo(xi).ok_or(Error::NonSemisimpleCartan)?;
            let mut covered = 0;
            for ev in rational_eigenvalues(&restricted)? {
                let shifted = restricted.sub(&Matrix::identity(restricted.rows()).scale(&ev));
                let ker = shifted.kernel();
                if ker.is_zero() {
                    continue;
                }
                covered += ker.dim();
                // lift block coordinates back to module coordinates
                let rows = ker.basis_matrix().mul(block.basis_matrix());
                let mut evs2 = evs.clone();
                evs2.push(ev.clone());
                next.push((evs2, Subspace::from_matrix_rows(&rows)));
            }
            if covered != block.dim() {
                return Err(Error::NonSemisimpleCartan);
            }
        }
        blocks = next;
    }
    Ok(blocks)
}

/// Exact simultaneous eigenspace decomposition under the Cartan generators
/// of the hyperbolic basis. Errors if some Cartan action is not semisimple
/// with rational eigenvalues (which signals a bug upstream).
pub fn weight_decomposition(
    module: &RepModule,
    hb: &HyperbolicBasis,
) -> Result<BTreeMap<WeightVector, Subspace<Scalar>>> {
    if hb.space().gram() != module.algebra.gram() {
        return Err(Error::DimMismatch("basis on a different algebra".into()));
    }
    let blocks = cartan_refine(module, hb, Subspace::full(module.dim()))?;
    let mut out = BTreeMap::new();
    for (evs, sub) in blocks {
        out.insert(WeightVector::new(evs, hb.indexing()), sub);
    }
    Ok(out)
}

/// Simultaneous Cartan eigenvectors annihilated by every positive root
/// vector, grouped by weight.
pub fn highest_weight_vectors(
    module: &RepModule,
    hb: &HyperbolicBasis,
) -> Result<Vec<(Vec<Scalar>, WeightVector)>> {
    let rs = hb.root_system()?;
    let mut hw_space = Subspace::full(module.dim());
    for root in &rs.positive_roots {
        let x = hb.root_vector(root)?;
        let ker = module.act(&x)?.kernel();
        hw_space = hw_space.intersect(&ker);
        if hw_space.is_zero() {
            return Ok(Vec::new());
        }
    }
    let blocks = cartan_refine(module, hb, hw_space)?;
    let mut out = Vec::new();
    for (evs, sub) in blocks {
        let weight = WeightVector::new(evs, hb.indexing());
        for v in sub.basis_rows() {
            out.push((v, weight.clone()));
        }
    }
    Ok(out)
}

/// Weight of a single module vector: simultaneous eigenvalue under the
/// Cartan action, or `None` if the vector is not a weight vector.
pub fn weight_of_vector(
    module: &RepModule,
    hb: &HyperbolicBasis,
    v: &[Scalar],
) -> Result<Option<WeightVector>> {
    if vec_is_zero(v) {
        return Ok(None);
    }
    let mut coords = Vec::with_capacity(hb.rank());
    for xi in hb.cartan_basis() {
        let m = module.act(&xi)?;
        let w = m.apply(v);
        let k = v.iter().position(|x| !x.is_zero()).expect("nonzero");
        let lambda = w[k].clone() / v[k].clone();
        let scaled: Vec<Scalar> = v.iter().map(|x| x * &lambda).collect();
        if w != scaled {
            return Ok(None);
        }
        coords.push(lambda);
    }
    Ok(Some(WeightVector::new(coords, hb.indexing())))
}

/// All rational eigenvalues of a matrix whose minimal polynomial splits into
/// distinct rational linear factors; errors otherwise.
pub fn rational_eigenvalues(m: &Matrix<Scalar>) -> Result<Vec<Scalar>> {
    let poly = minimal_polynomial(m);
    rational_roots_of_squarefree(&poly)
}

/// Monic minimal polynomial coefficients `c_0..c_d` (with `c_d = 1`) via the
/// first linear dependence among vectorized powers of the matrix.
fn minimal_polynomial(m: &Matrix<Scalar>) -> Vec<Scalar> {
    let n = m.rows();
    if n == 0 {
        return vec![Scalar::zero(), Scalar::one()]; // x
    }
    let vec_len = n * n;
    let mut powers: Vec<Vec<Scalar>> = Vec::new();
    let mut p = Matrix::<Scalar>::identity(n);
    loop {
        let flat: Vec<Scalar> = (0..vec_len).map(|rc| p.at(rc / n, rc % n).clone()).collect();
        if !powers.is_empty() {
            let sys = Matrix::from_fn(vec_len, powers.len(), |r, c| powers[c][r].clone());
            if let Some(coeffs) = sys.solve(&flat) {
                let mut poly: Vec<Scalar> = coeffs.iter().map(|c| -c).collect();
                poly.push(Scalar::one());
                return poly;
            }
        }
        powers.push(flat);
        p = p.mul(m);
        assert!(powers.len() <= n + 1, "minimal polynomial search overran");
    }
}

/// Rational roots of a rational-coefficient polynomial, requiring that the
/// polynomial splits completely into distinct rational linear factors.
fn rational_roots_of_squarefree(poly: &[Scalar]) -> Result<Vec<Scalar>> {
    // clear denominators to an integer polynomial
    let mut lcm = BigInt::one();
    for c in poly {
        lcm = lcm.lcm(c.denom());
    }
    let mut int_poly: Vec<BigInt> = poly
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    while int_poly.last().is_some_and(|c| c.is_zero()) {
        int_poly.pop();
    }
    if int_poly.len() <= 1 {
        return Ok(Vec::new());
    }
    let mut roots = Vec::new();
    let mut start = 0;
    while int_poly[start].is_zero() {
        start += 1;
    }
    if start > 1 {
        // a repeated factor of x: not semisimple
        return Err(Error::NonSemisimpleCartan);
    }
    if start == 1 {
        roots.push(Scalar::zero());
        int_poly.drain(..start);
    }
    let degree_left = int_poly.len() - 1;
    if degree_left == 0 {
        return Ok(roots);
    }
    let a0 = int_poly[0].abs();
    let ad = int_poly.last().unwrap().abs();
    let p_divs = divisors(&a0)?;
    let q_divs = divisors(&ad)?;
    let eval = |poly: &[BigInt], x: &Scalar| -> Scalar {
        let mut acc = Scalar::zero();
        for c in poly.iter().rev() {
            acc = acc * x.clone() + Scalar::from_integer(c.clone());
        }
        acc
    };
    let mut found: Vec<Scalar> = Vec::new();
    for p in &p_divs {
        for q in &q_divs {
            for sign in [1i64, -1] {
                let cand = Scalar::new(p * BigInt::from(sign), q.clone());
                if found.contains(&cand) {
                    continue;
                }
                if eval(&int_poly, &cand).is_zero() {
                    found.push(cand);
                }
            }
        }
    }
    if found.len() != degree_left {
        return Err(Error::NonSemisimpleCartan);
    }
    roots.extend(found);
    roots.sort();
    Ok(roots)
}

/// All positive divisors of a nonzero integer by trial division; errors on
/// inputs too large for exact enumeration at desk scale.
fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    if n.is_zero() {
        return Err(Error::NonSemisimpleCartan);
    }
    let n: u128 = n.abs().try_into().map_err(|_| Error::NonSemisimpleCartan)?;
    let mut out = Vec::new();
    let mut d = 1u128;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d != n / d {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    out.sort();
    Ok(out)
}
