//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Every assertion is exact (no tolerances) and the stated time budgets are
//! enforced with wall-clock checks.
//!
//! Run with `cargo test -p hodgetate-cli --test acceptance` (add
//! `-- --nocapture` to see the per-criterion lines).

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hodgetate_cli::checks;
use hodgetate_cli::report::Verdict;

use hodgetate_core::clifford::{spinor_highest_weight_vector, spinor_module, CliffordAlgebra};
use hodgetate_core::degeneration::degeneration_data;
use hodgetate_core::hodge::{ks_polarization, weight_filtration};
use hodgetate_core::lie::{so_basis, HyperbolicBasis, LieType, SOElement};
use hodgetate_core::matrix::{vec_scale, Matrix};
use hodgetate_core::quad::QuadSpace;
use hodgetate_core::scalar::{int, Scalar};
use hodgetate_core::subspace::{QuotientSpace, Subspace};

struct Criterion {
    number: u32,
    name: &'static str,
    start: Instant,
}

impl Criterion {
    fn begin(number: u32, name: &'static str) -> Self {
        Criterion {
            number,
            name,
            start: Instant::now(),
        }
    }

    fn pass(self) {
        println!(
            "[acceptance] criterion {:>2} ({}): PASS ({:.2} s)",
            self.number,
            self.name,
            self.start.elapsed().as_secs_f64()
        );
    }

    fn elapsed(&self) -> f64 {
        self.start.elapsed().as_secs_f64()
    }
}

#[test]
fn criterion_01_lemma_n_reproduction() {
    let c = Criterion::begin(1, "maximally unipotent construction, dims 5..8");
    for dim in [5usize, 6, 7, 8] {
        let per_dim = Instant::now();
        let q = QuadSpace::preset_k3_like(dim).unwrap();
        let datum = degeneration_data(&q, 10).unwrap();
        let n = datum.n.matrix();
        let n2 = n.mul(n);
        let n3 = n2.mul(n);
        assert!(!n2.is_zero(), "N^2 must be nonzero at dim {dim}");
        assert!(n3.is_zero(), "N^3 must vanish at dim {dim}");
        // Gram of q on im N in the basis (v0, v3): [[0, 0], [0, positive]]
        assert_eq!(datum.vh.qv(&datum.v0_h), int(0));
        assert_eq!(datum.vh.q(&datum.v0_h, &datum.v3_h), int(0));
        assert!(datum.vh.qv(&datum.v3_h).is_positive());
        datum.validate().unwrap();
        assert!(
            per_dim.elapsed().as_secs_f64() < 1.0,
            "dim {dim} exceeded 1 s"
        );
    }
    c.pass();
}

#[test]
fn criterion_02_sign_convention_anchor() {
    let c = Criterion::begin(2, "N e1 = -e2-e2' and N^2 e1 = -2 e1'");
    for ty in [LieType::B, LieType::D] {
        let hb = HyperbolicBasis::standard(3, ty).unwrap();
        let n = hb.index3_nilpotent();
        let ne1 = n.apply(hb.e(0));
        let expect: Vec<Scalar> = hb
            .e(1)
            .iter()
            .zip(hb.eprime(1))
            .map(|(a, b)| -(a + b))
            .collect();
        assert_eq!(ne1, expect);
        let n2e1 = n.apply(&ne1);
        assert_eq!(n2e1, vec_scale(hb.eprime(0), &int(-2)));
    }
    c.pass();
}

#[test]
fn criterion_03_weight_filtration_against_jordan_oracle() {
    let c = Criterion::begin(3, "gr dims (1, 0, d-3, 0, 1) vs rank oracle");
    for dim in [5usize, 6, 7, 8] {
        let q = QuadSpace::preset_k3_like(dim).unwrap();
        let datum = degeneration_data(&q, 10).unwrap();
        let nmat = datum.n.matrix();
        let w = weight_filtration(nmat, 2).unwrap();
        let expected: Vec<(i64, usize)> =
            vec![(0, 1), (1, 0), (2, dim - 3), (3, 0), (4, 1)];
        assert_eq!(w.gr_dims(), expected, "dim {dim}");

        // independent oracle: blocks of size s from ranks of powers
        let vh_dim = dim - 1;
        let ranks: Vec<usize> = (0..=(vh_dim as u32 + 1)).map(|p| nmat.pow(p).rank()).collect();
        let mut oracle: BTreeMap<i64, usize> = BTreeMap::new();
        for s in 1..=vh_dim {
            let blocks = ranks[s - 1] + ranks[s + 1] - 2 * ranks[s];
            for b in 0..s {
                let weight = 2 - (s as i64 - 1) + 2 * b as i64;
                *oracle.entry(weight).or_insert(0) += blocks;
            }
        }
        for (k, d) in w.gr_dims() {
            assert_eq!(oracle.get(&k).copied().unwrap_or(0), d, "dim {dim}, weight {k}");
        }
    }
    c.pass();
}

#[test]
fn criterion_04_hodge_tate_limits_on_h2() {
    let c = Criterion::begin(4, "20 orbit samples per dim: Hodge-Tate, with control");
    for dim in [5usize, 6, 7, 8] {
        let r = checks::check_h2_limit(dim, 10, 20, 1, None);
        assert_eq!(r.verdict, Verdict::Pass, "dim {dim}: {}", r.witness);
        assert!(r.witness["accepted_count"].as_u64().unwrap() >= 1);
        for row in r.witness["samples"].as_array().unwrap() {
            assert_eq!(row["hodge_tate"], true);
        }
        // index-2 control: at least one accepted, none Hodge-Tate
        assert!(r.witness["control_accepted_count"].as_u64().unwrap() >= 1);
        for row in r.witness["control_samples"].as_array().unwrap() {
            assert_eq!(row["hodge_tate"], false);
        }
    }
    assert!(c.elapsed() < 10.0, "criterion 4 exceeded 10 s");
    c.pass();
}

#[test]
fn criterion_05_odd_unipotency_indices() {
    let c = Criterion::begin(5, "index 2k on S^{k-1}V (x) Spinor submodule");
    for l in [2usize, 3] {
        for ty in ["B", "D"] {
            for k in [1i64, 2] {
                let r = checks::check_odd_index(l, ty, k);
                assert_eq!(
                    r.verdict,
                    Verdict::Pass,
                    "l={l} type={ty} k={k}: {}",
                    r.witness
                );
                assert_eq!(r.witness["index_on_submodule"], 2 * k as u64);
                assert_eq!(r.witness["rho_n_pow_2k_zero_on_full_module"], true);
                assert_eq!(r.witness["n_pow_2k_minus_1_nonzero_at_generator"], true);
            }
        }
    }
    assert!(c.elapsed() < 60.0, "criterion 5 exceeded 60 s");
    c.pass();
}

#[test]
fn criterion_06_even_unipotency_indices() {
    let c = Criterion::begin(6, "index 2k+1 on the submodule of S^k V");
    for l in [2usize, 3] {
        for ty in ["B", "D"] {
            for k in [1i64, 2] {
                let r = checks::check_even_index(l, ty, k);
                assert_eq!(
                    r.verdict,
                    Verdict::Pass,
                    "l={l} type={ty} k={k}: {}",
                    r.witness
                );
                assert_eq!(r.witness["index_on_submodule"], 2 * k as u64 + 1);
                assert_eq!(r.witness["n_pow_2k_nonzero_at_generator"], true);
            }
        }
    }
    c.pass();
}

#[test]
fn criterion_07_spinor_facts() {
    let c = Criterion::begin(7, "N u multiple of e3^..^e_l, rho(N)^2 = 0, lift(N)^2 = 0");
    let hb = HyperbolicBasis::standard(3, LieType::B).unwrap();
    let s = spinor_module(&hb).unwrap();
    let n = hb.index3_nilpotent();
    let rho_n = s.act(&n).unwrap();
    let u = spinor_highest_weight_vector(3);
    let nu = rho_n.apply(&u);
    // e3 alone is the wedge word with mask 0b100
    let scalar = nu[4].clone();
    assert!(!scalar.is_zero(), "N u must be nonzero");
    let mut expect = vec![Scalar::zero(); 8];
    expect[4] = scalar;
    assert_eq!(nu, expect, "N u must be a multiple of e3");
    assert!(rho_n.mul(&rho_n).is_zero(), "rho(N)^2 must vanish");
    let ca = CliffordAlgebra::new(hb.space().clone()).unwrap();
    let lift = ca.lift(&n).unwrap();
    assert!(ca.mul(&lift, &lift).is_zero(), "lift(N)^2 must vanish");
    c.pass();
}

#[test]
fn criterion_08_kuga_satake_limits() {
    let c = Criterion::begin(8, "KS limit: half-dim F^0, Hodge-Tate, gr_{-1} = 0");
    for dim in [5usize, 6, 7] {
        let r = checks::check_ks_limit(dim, 10, 20, 1, None);
        assert_eq!(r.verdict, Verdict::Pass, "dim {dim}: {}", r.witness);
        let half = (1u64 << (dim - 1)) / 2;
        for row in r.witness["samples"].as_array().unwrap() {
            assert_eq!(row["f0_dim"], half);
            assert_eq!(row["hodge_tate"], true);
            // gr_{-1} = 0: recorded gr dims are [(-2, half), (-1, 0), (0, half)]
            assert_eq!(
                row["gr_dims"],
                serde_json::json!([[-2, half], [-1, 0], [0, half]])
            );
        }
        assert!(r.witness["accepted_count"].as_u64().unwrap() >= 1);
    }
    assert!(c.elapsed() < 120.0, "criterion 8 exceeded 120 s");
    c.pass();
}

#[test]
fn criterion_09_polarization_invariance() {
    let c = Criterion::begin(9, "omega invariance for every so-basis element");
    for dim in [5usize, 6, 7] {
        let q = QuadSpace::preset_k3_like(dim).unwrap();
        let datum = degeneration_data(&q, 10).unwrap();
        let d = datum.vh.dim();
        assert!(d <= 6);
        let ca = CliffordAlgebra::new(datum.vh.clone()).unwrap();
        let (p, diag) = datum.vh.diagonalizing_basis();
        let mut positives = (0..d).filter(|&i| diag[i].is_positive());
        let a1 = p.col(positives.next().unwrap());
        let a2 = p.col(positives.next().unwrap());
        let pol = ks_polarization(&ca, &a1, &a2).unwrap();
        for a in so_basis(&datum.vh) {
            let l = ca.left_mul_matrix(&ca.lift(&a).unwrap());
            assert!(
                pol.invariance_defect(&l).is_zero(),
                "invariance defect at dim {dim}"
            );
        }
    }
    c.pass();
}

#[test]
fn criterion_10_highest_weight_bookkeeping() {
    let c = Criterion::begin(10, "xi_1 = 1/2 forces spinor; weight string at n = 3");
    // xi_1 on the spinor highest weight is exactly 1/2
    assert_eq!(
        hodgetate_core::lie::xi1_of_highest_weight(LieType::B, &[0, 0, 1]).unwrap(),
        hodgetate_core::scalar::rat(1, 2)
    );
    for ty in ["B", "D"] {
        let r = checks::check_spinor_lemmas(2, ty, 3);
        assert_eq!(r.verdict, Verdict::Pass, "type {ty}: {}", r.witness);
        // the bounded enumeration finds exactly the (semi-)spinor weights
        let expected = if ty == "B" {
            serde_json::json!([[0, 1]])
        } else {
            serde_json::json!([[1, 0], [0, 1]])
        };
        assert_eq!(r.witness["half_solutions"], expected);
        // weight string mu - i alpha present for i = 0..n-2 at n = 3
        let mults = r.witness["weight_string_multiplicities"].as_array().unwrap();
        assert_eq!(mults.len(), 2);
        assert!(mults.iter().all(|m| m.as_u64().unwrap() >= 1));
        // xi_0 eigenvalue of the highest weight vector is (n-2) + 1/2
        assert_eq!(r.witness["xi0_on_generator"], "3/2");
    }
    c.pass();
}

#[test]
fn criterion_11_engine_property_suites() {
    let c = Criterion::begin(11, "filtration axioms, brackets, Clifford, signatures");
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce97);

    // -- 50 random nilpotents (dim <= 8): both filtration axioms and
    //    equivariance under unimodular conjugation
    for _ in 0..50 {
        let a = random_nilpotent(&mut rng, 8);
        let n = a.rows();
        let w = weight_filtration(&a, 0).unwrap();
        let (lo, hi) = w.range();
        for k in lo..=hi {
            for v in w.at(k).basis_rows() {
                assert!(w.at(k - 2).contains(&a.apply(&v)));
            }
        }
        for k in 1..=hi {
            let top = QuotientSpace::new(w.at(k), w.at(k - 1)).unwrap();
            let bot = QuotientSpace::new(w.at(-k), w.at(-k - 1)).unwrap();
            assert_eq!(top.dim(), bot.dim());
            let ak = a.pow(k as u32);
            let mut mat: Matrix<Scalar> = Matrix::zero(bot.dim(), top.dim());
            for (j, rep) in top.reps().iter().enumerate() {
                let coords = bot.project(&ak.apply(rep)).unwrap();
                for i in 0..bot.dim() {
                    mat.set(i, j, coords[i].clone());
                }
            }
            assert_eq!(mat.rank(), top.dim());
        }
        let g = random_unimodular(&mut rng, n);
        let gi = g.inverse().unwrap();
        let wc = weight_filtration(&g.mul(&a).mul(&gi), 0).unwrap();
        for k in lo..=hi {
            let moved = Subspace::from_rows(
                n,
                w.at(k).basis_rows().iter().map(|v| g.apply(v)).collect(),
            );
            assert_eq!(wc.at(k), moved);
        }
    }

    // -- bracket antisymmetry and Jacobi on 20 random triples
    let q = QuadSpace::preset_k3_like(5).unwrap();
    let basis = so_basis(&q);
    let random_so = |rng: &mut ChaCha8Rng| -> SOElement {
        let mut acc = SOElement::zero(q.clone());
        for b in &basis {
            acc = acc.add(&b.scale(&int(rng.random_range(-3..=3)))).unwrap();
        }
        acc
    };
    for _ in 0..20 {
        let (a, b, cc) = (random_so(&mut rng), random_so(&mut rng), random_so(&mut rng));
        assert_eq!(
            a.bracket(&b).unwrap().matrix(),
            b.bracket(&a).unwrap().scale(&int(-1)).matrix()
        );
        let jacobi = a
            .bracket(&b)
            .unwrap()
            .bracket(&cc)
            .unwrap()
            .add(&b.bracket(&cc).unwrap().bracket(&a).unwrap())
            .unwrap()
            .add(&cc.bracket(&a).unwrap().bracket(&b).unwrap())
            .unwrap();
        assert!(jacobi.is_zero());
    }

    // -- Clifford associativity on all basis triples, ambient dim 6
    let split6 = HyperbolicBasis::standard(3, LieType::D).unwrap();
    let ca = CliffordAlgebra::new(split6.space().clone()).unwrap();
    let words: Vec<_> = (0..ca.dim() as u32)
        .map(hodgetate_core::clifford::CliffordElement::basis_word)
        .collect();
    for i in 0..ca.dim() {
        for j in 0..ca.dim() {
            let ij = ca.mul(&words[i], &words[j]);
            for k in 0..ca.dim() {
                assert_eq!(
                    ca.mul(&ij, &words[k]),
                    ca.mul(&words[i], &ca.mul(&words[j], &words[k]))
                );
            }
        }
    }

    // -- signature invariance under 10 random unimodular changes of basis
    let q = QuadSpace::preset_k3_like(6).unwrap();
    let sig = q.signature();
    for _ in 0..10 {
        let g = random_unimodular(&mut rng, 6);
        let conj = QuadSpace::new(g.transpose().mul(q.gram()).mul(&g)).unwrap();
        assert_eq!(conj.signature(), sig);
    }

    assert!(c.elapsed() < 60.0, "criterion 11 exceeded 60 s");
    c.pass();
}

// -- helpers -----------------------------------------------------------

fn random_nilpotent(rng: &mut ChaCha8Rng, max_dim: usize) -> Matrix<Scalar> {
    let dim = rng.random_range(2..=max_dim);
    let mut sizes = Vec::new();
    let mut left = dim;
    while left > 0 {
        let s = rng.random_range(1..=left);
        sizes.push(s);
        left -= s;
    }
    let mut m: Matrix<Scalar> = Matrix::zero(dim, dim);
    let mut off = 0;
    for &s in &sizes {
        for k in 0..s.saturating_sub(1) {
            m.set(off + k, off + k + 1, Scalar::one());
        }
        off += s;
    }
    let g = random_unimodular(rng, dim);
    let gi = g.inverse().expect("unimodular");
    g.mul(&m).mul(&gi)
}

fn random_unimodular(rng: &mut ChaCha8Rng, dim: usize) -> Matrix<Scalar> {
    let mut g: Matrix<Scalar> = Matrix::identity(dim);
    for _ in 0..(3 * dim) {
        match rng.random_range(0..3) {
            0 => {
                let i = rng.random_range(0..dim);
                let j = rng.random_range(0..dim);
                if i != j {
                    let c = int(rng.random_range(-2..=2));
                    for k in 0..dim {
                        let v = g.at(i, k) + &(g.at(j, k) * &c);
                        g.set(i, k, v);
                    }
                }
            }
            1 => {
                let i = rng.random_range(0..dim);
                let j = rng.random_range(0..dim);
                if i != j {
                    for k in 0..dim {
                        let a = g.at(i, k).clone();
                        let b = g.at(j, k).clone();
                        g.set(i, k, b);
                        g.set(j, k, a);
                    }
                }
            }
            _ => {
                let i = rng.random_range(0..dim);
                for k in 0..dim {
                    let v = -g.at(i, k).clone();
                    g.set(i, k, v);
                }
            }
        }
    }
    g
}
