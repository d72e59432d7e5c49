//! `nilp-orbit` and `h2-limit`: seeded quadric samples against the exact
//! orbit criterion, agreement with the definition via sampled values of
//! `q(exp(2itN) x, conj x)`, and the Hodge-Tate verdicts of the limit mixed
//! Hodge structures (with an index-2 control that must come out
//! non-Hodge-Tate).

use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};

use hodgetate_core::degeneration::{degeneration_data, index2_control};
use hodgetate_core::hodge::{k3_limit_mhs, orbit_test, NilpotentOrbitDatum};
use hodgetate_core::quad::QuadSpace;
use hodgetate_core::scalar::{int, Scalar};

use crate::report::{
    cvector_json, gr_dims_json, hodge_numbers_json, matrix_json, CheckReport,
};
use crate::sample::QuadricSampler;

use super::{derive_seed, resolve_space, run_check};

/// Threshold beyond which an honest negative must give a nonpositive value:
/// the largest requested sample point or the polynomial's root bound,
/// whichever is larger.
fn negative_check_point(coeffs: &[Scalar]) -> Scalar {
    let mut bound = int(1000);
    if let Some(lead) = coeffs.last() {
        if !lead.is_zero() {
            let sum: Scalar = coeffs[..coeffs.len() - 1]
                .iter()
                .map(|c| c.abs())
                .fold(Scalar::from_integer(0.into()), |a, b| a + b);
            let cauchy = int(1) + sum / lead.abs();
            if cauchy > bound {
                bound = cauchy;
            }
        }
    }
    bound
}

pub fn check_nilp_orbit(
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
    run_check("nilp-orbit", params, || {
        let space = resolve_space(dim, gram)?;
        let datum = degeneration_data(&space, bound)?;
        let mut sampler = QuadricSampler::new(
            datum.vh.clone(),
            datum.v0_h.clone(),
            derive_seed(seed, 0x0b17),
        );
        let mut pass = true;
        let mut accepted_count = 0usize;
        let mut rows = Vec::new();
        for _ in 0..samples {
            let x0 = sampler.next_point();
            let od = NilpotentOrbitDatum::new(datum.vh.clone(), datum.n.clone(), x0.clone())?;
            let t = orbit_test(&od)?;
            let eventual = od.is_orbit_eventually();
            let mut row = Map::new();
            row.insert("x0".into(), cvector_json(&x0));
            row.insert(
                "criterion_value".into(),
                json!(t.criterion_value.to_string()),
            );
            row.insert("accepted".into(), json!(t.accepted));
            // the algebraic criterion must agree with eventual positivity
            if t.accepted != eventual {
                row.insert("criterion_vs_definition".into(), json!("disagree"));
                pass = false;
            }
            if t.accepted {
                accepted_count += 1;
                let t0 = t.t0.clone().expect("accepted data carry a threshold");
                row.insert("t0".into(), json!(t0.to_string()));
                // independent confirmation through the actual exponential
                let mut confirmations = Vec::new();
                for mult in [1i64, 2] {
                    let tt = (t0.clone() + int(1)) * int(mult);
                    let val = od.orbit_value_at(&tt)?;
                    confirmations.push(json!({
                        "t": tt.to_string(),
                        "value": val.to_string(),
                    }));
                    if !val.is_positive() {
                        pass = false;
                    }
                }
                row.insert("confirmations".into(), Value::Array(confirmations));
            } else {
                // record the requested sample points and check the honest one
                let coeffs = od.orbit_polynomial();
                let mut sampled = Vec::new();
                for tt in [int(10), int(100), int(1000)] {
                    sampled.push(json!({
                        "t": tt.to_string(),
                        "value": od.orbit_value_at(&tt)?.to_string(),
                    }));
                }
                let far = negative_check_point(&coeffs);
                let far_val = od.orbit_value_at(&far)?;
                sampled.push(json!({
                    "t": far.to_string(),
                    "value": far_val.to_string(),
                }));
                row.insert("sampled".into(), Value::Array(sampled));
                if far_val.is_positive() {
                    pass = false;
                }
            }
            rows.push(Value::Object(row));
        }
        if accepted_count == 0 {
            pass = false; // the accepted set must be non-empty
        }
        let witness = json!({
            "vh_gram": matrix_json(datum.vh.gram()),
            "n_matrix": matrix_json(datum.n.matrix()),
            "samples": rows,
            "accepted_count": accepted_count,
        });
        Ok((pass, witness))
    })
}

pub fn check_h2_limit(
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
    run_check("h2-limit", params, || {
        let space = resolve_space(dim, gram)?;
        let datum = degeneration_data(&space, bound)?;
        let d = space.dim();
        let mut pass = true;

        // maximally unipotent branch: accepted samples must be Hodge-Tate
        let mut sampler = QuadricSampler::new(
            datum.vh.clone(),
            datum.v0_h.clone(),
            derive_seed(seed, 0x42_1117),
        );
        let mut rows = Vec::new();
        let mut accepted_count = 0usize;
        for _ in 0..samples {
            let x0 = sampler.next_point();
            let od = NilpotentOrbitDatum::new(datum.vh.clone(), datum.n.clone(), x0.clone())?;
            let t = orbit_test(&od)?;
            if !t.accepted {
                continue;
            }
            accepted_count += 1;
            let mhs = k3_limit_mhs(&od)?;
            let table = mhs.hodge_numbers();
            let hodge_tate = table.keys().all(|(p, q)| p == q);
            let gr = mhs.weight.gr_dims();
            let expected_gr: Vec<(i64, usize)> =
                vec![(0, 1), (1, 0), (2, d - 3), (3, 0), (4, 1)];
            let gr_ok = gr == expected_gr;
            if !hodge_tate || !gr_ok {
                pass = false;
            }
            rows.push(json!({
                "x0": cvector_json(&x0),
                "hodge_numbers": hodge_numbers_json(&table),
                "gr_dims": gr_dims_json(&gr),
                "hodge_tate": hodge_tate,
            }));
        }
        if accepted_count == 0 {
            pass = false;
        }

        // index-2 control: accepted samples must NOT be Hodge-Tate
        let ctrl = index2_control(&datum.vh, bound)?;
        let mut ctrl_sampler = QuadricSampler::new(
            datum.vh.clone(),
            ctrl.w1.clone(),
            derive_seed(seed, 0xc0_1111),
        );
        let mut ctrl_rows = Vec::new();
        let mut ctrl_accepted = 0usize;
        for _ in 0..samples {
            let x0 = ctrl_sampler.next_point();
            let od = NilpotentOrbitDatum::new(datum.vh.clone(), ctrl.n.clone(), x0.clone())?;
            if !od.is_orbit_eventually() {
                continue;
            }
            ctrl_accepted += 1;
            let mhs = k3_limit_mhs(&od)?;
            let table = mhs.hodge_numbers();
            let hodge_tate = table.keys().all(|(p, q)| p == q);
            let gr = mhs.weight.gr_dims();
            // type II: odd graded pieces are nonzero
            let odd_nonzero = mhs.weight.gr_dim(1) > 0 || mhs.weight.gr_dim(3) > 0;
            if hodge_tate || !odd_nonzero {
                pass = false;
            }
            ctrl_rows.push(json!({
                "x0": cvector_json(&x0),
                "hodge_numbers": hodge_numbers_json(&table),
                "gr_dims": gr_dims_json(&gr),
                "hodge_tate": hodge_tate,
            }));
        }
        if ctrl_accepted == 0 {
            pass = false;
        }

        let witness = json!({
            "normalization": "Hodge filtration of the orbit point itself (Weil operator convention: eigenvalues +-2i on the period plane)",
            "vh_gram": matrix_json(datum.vh.gram()),
            "n_matrix": matrix_json(datum.n.matrix()),
            "samples": rows,
            "accepted_count": accepted_count,
            "control_n_matrix": matrix_json(ctrl.n.matrix()),
            "control_samples": ctrl_rows,
            "control_accepted_count": ctrl_accepted,
        });
        Ok((pass, witness))
    })
}
