//! `ks-limit`: the limit mixed Hodge structure of the Kuga-Satake variation
//! on the Clifford algebra of `(V^h, q)` is of Hodge-Tate type, with
//! `F^0 = x0 . Cl` of half the algebra dimension and vanishing odd graded
//! piece; the polarization `w(x, y) = Tr(x a bar(y))` is exactly invariant
//! under the spin lift of the degeneration operator.

use num_traits::Signed;
use serde_json::{json, Map};

use hodgetate_core::clifford::CliffordAlgebra;
use hodgetate_core::degeneration::degeneration_data;
use hodgetate_core::hodge::{ks_limit_mhs, ks_polarization, orbit_test, NilpotentOrbitDatum};
use hodgetate_core::lie::so_basis;
use hodgetate_core::quad::QuadSpace;
use hodgetate_core::Error;

use crate::report::{cvector_json, gr_dims_json, hodge_numbers_json, matrix_json, vector_json, CheckReport};
use crate::sample::QuadricSampler;

use super::{derive_seed, resolve_space, run_check};

/// Ambient bound below which the polarization invariance is swept over the
/// whole Lie algebra basis (quartic cost in the Clifford dimension).
const FULL_INVARIANCE_DIM: usize = 6;

pub fn check_ks_limit(
    dim: usize,
    bound: i64,
    samples: usize,
    seed: u64,
    gram: Option<&QuadSpace>,
) -> CheckReport {
    let mut params = Map::new();
    params.insert("dim".into(), json!(dim));
    params.insert("bound".into(), json!(bound));
    params.insert("samples".into(), json!(samples));
    params.insert("seed".into(), json!(seed));
    run_check("ks-limit", params, || {
        if dim.saturating_sub(1) > hodgetate_core::clifford::CLIFFORD_DIM_CAP {
            return Err(Error::CapExceeded(format!(
                "Clifford algebra over dim {} exceeds cap {}",
                dim - 1,
                hodgetate_core::clifford::CLIFFORD_DIM_CAP
            )));
        }
        let space = resolve_space(dim, gram)?;
        let datum = degeneration_data(&space, bound)?;
        let d = datum.vh.dim();
        let ca = CliffordAlgebra::new(datum.vh.clone())?;
        let half_dim = ca.dim() / 2;
        let mut pass = true;

        // polarization data: a positive orthogonal pair from the exact
        // diagonalization of V^h (signature (2, d - 3))
        let (p, diag) = datum.vh.diagonalizing_basis();
        let mut positives = (0..d).filter(|&i| diag[i].is_positive());
        let ia = positives
            .next()
            .ok_or_else(|| Error::Precondition("no positive direction".into()))?;
        let ib = positives
            .next()
            .ok_or_else(|| Error::Precondition("only one positive direction".into()))?;
        let a1 = p.col(ia);
        let a2 = p.col(ib);
        let pol = ks_polarization(&ca, &a1, &a2)?;

        // exact spin invariance for the degeneration operator on the whole
        // word basis, and for every Lie algebra basis element when the
        // ambient dimension is small enough
        let lift_n = ca.lift(&datum.n)?;
        let ln = ca.left_mul_matrix(&lift_n);
        let n_invariant = pol.invariance_defect(&ln).is_zero();
        if !n_invariant {
            pass = false;
        }
        let full_invariance = if d <= FULL_INVARIANCE_DIM {
            let mut ok = true;
            for a in so_basis(&datum.vh) {
                let l = ca.left_mul_matrix(&ca.lift(&a)?);
                if !pol.invariance_defect(&l).is_zero() {
                    ok = false;
                }
            }
            if !ok {
                pass = false;
            }
            Some(ok)
        } else {
            None
        };

        let mut sampler = QuadricSampler::new(
            datum.vh.clone(),
            datum.v0_h.clone(),
            derive_seed(seed, 0x5a7a),
        );
        let mut rows = Vec::new();
        let mut accepted_count = 0usize;
        let mut sign_pattern = None;
        for _ in 0..samples {
            let x0 = sampler.next_point();
            let od = NilpotentOrbitDatum::new(datum.vh.clone(), datum.n.clone(), x0.clone())?;
            if !orbit_test(&od)?.accepted {
                continue;
            }
            accepted_count += 1;
            let mhs = ks_limit_mhs(&ca, &od)?;
            let f0 = mhs.hodge.at(0);
            let f0_ok = f0.dim() == half_dim;
            let table = mhs.hodge_numbers();
            let hodge_tate = table.keys().all(|(p, q)| p == q);
            let gr_minus1_zero = mhs.weight.gr_dim(-1) == 0;
            if !f0_ok || !hodge_tate || !gr_minus1_zero {
                pass = false;
            }
            if sign_pattern.is_none() {
                // reported, never asserted: which of +-w is compatible with
                // positivity on the weight -1 piece
                let values = pol.hermitian_values(&f0.basis_rows());
                let pos = values.iter().filter(|v| v.re.is_positive()).count();
                let neg = values.iter().filter(|v| v.re.is_negative()).count();
                let zero = values.len() - pos - neg;
                sign_pattern = Some(json!({
                    "positive": pos,
                    "negative": neg,
                    "zero": zero,
                }));
            }
            rows.push(json!({
                "x0": cvector_json(&x0),
                "f0_dim": f0.dim(),
                "expected_f0_dim": half_dim,
                "gr_dims": gr_dims_json(&mhs.weight.gr_dims()),
                "hodge_numbers": hodge_numbers_json(&table),
                "hodge_tate": hodge_tate,
            }));
        }
        if accepted_count == 0 {
            pass = false;
        }

        let witness = json!({
            "normalization": "weight -1 structure centered at -1; trace is the left-regular trace; omega sign reported, not asserted",
            "vh_gram": matrix_json(datum.vh.gram()),
            "n_matrix": matrix_json(datum.n.matrix()),
            "clifford_dim": ca.dim(),
            "a1": vector_json(&a1),
            "a2": vector_json(&a2),
            "n_invariance_exact": n_invariant,
            "full_so_invariance": full_invariance,
            "omega_sign_pattern": sign_pattern,
            "samples": rows,
            "accepted_count": accepted_count,
        });
        Ok((pass, witness))
    })
}
