//! Independent re-verification of pass verdicts from the witness payload.
//!
//! For the sampling checks the witness carries the exact data (Gram matrix,
//! operator, quadric points, recorded values); re-verification recomputes
//! the asserted identities from those alone. For the deterministic algebraic
//! checks the parameter record pins the whole construction; re-verification
//! reruns it and compares the full witness.

use serde_json::Value;

use hodgetate_core::degeneration::DegenerationDatum;
use hodgetate_core::hodge::{k3_limit_mhs, ks_limit_mhs, NilpotentOrbitDatum};
use hodgetate_core::lie::SOElement;
use hodgetate_core::clifford::CliffordAlgebra;
use hodgetate_core::quad::QuadSpace;
use hodgetate_core::scalar::CScalar;
use hodgetate_core::subspace::Subspace;

use crate::checks;
use crate::report::{
    cvector_from_json, hodge_numbers_json, matrix_from_json, vector_from_json, CheckReport,
    Verdict,
};

type VerifyResult = Result<(), String>;

fn fail(msg: impl Into<String>) -> VerifyResult {
    Err(msg.into())
}

fn get<'a>(w: &'a Value, key: &str) -> Result<&'a Value, String> {
    w.get(key).ok_or_else(|| format!("witness missing `{key}`"))
}

fn parse_space(w: &Value, key: &str) -> Result<QuadSpace, String> {
    let m = matrix_from_json(get(w, key)?).ok_or_else(|| format!("bad matrix in `{key}`"))?;
    QuadSpace::new(m).map_err(|e| e.to_string())
}

fn parse_operator(space: &QuadSpace, w: &Value, key: &str) -> Result<SOElement, String> {
    let m = matrix_from_json(get(w, key)?).ok_or_else(|| format!("bad matrix in `{key}`"))?;
    SOElement::new(space.clone(), m).map_err(|e| e.to_string())
}

/// Re-verify a pass verdict from the report alone. Fail and skipped
/// verdicts carry nothing to re-establish.
pub fn reverify(report: &CheckReport) -> VerifyResult {
    if report.verdict != Verdict::Pass {
        return Ok(());
    }
    match report.check.as_str() {
        "lemma-n" => reverify_lemma_n(report),
        "nilp-orbit" => reverify_nilp_orbit(report),
        "h2-limit" => reverify_h2_limit(report),
        "ks-limit" => reverify_ks_limit(report),
        "odd-index" | "even-index" | "spinor-lemmas" => reverify_by_rerun(report),
        other => fail(format!("unknown check `{other}`")),
    }
}

fn reverify_lemma_n(report: &CheckReport) -> VerifyResult {
    let w = &report.witness;
    let ambient = parse_space(w, "gram")?;
    let vh_basis =
        matrix_from_json(get(w, "vh_basis")?).ok_or("bad vh_basis")?;
    let vh_gram = vh_basis.mul(ambient.gram()).mul(&vh_basis.transpose());
    let vh = QuadSpace::new(vh_gram).map_err(|e| e.to_string())?;
    let n = parse_operator(&vh, w, "n_matrix")?;
    let take = |key: &str| -> Result<Vec<_>, String> {
        vector_from_json(get(w, key)?).ok_or_else(|| format!("bad vector `{key}`"))
    };
    let v0 = take("v0")?;
    let v3 = take("v3")?;
    let bt = vh_basis.transpose();
    let v0_h = bt.solve(&v0).ok_or("v0 outside V^h")?;
    let v3_h = bt.solve(&v3).ok_or("v3 outside V^h")?;
    // the operator must be the recorded bivector
    let expect = SOElement::bivector(vh.clone(), &v0_h, &v3_h);
    if &expect != &n {
        return fail("n_matrix is not the bivector v0 ^ v3");
    }
    let datum = DegenerationDatum {
        ambient,
        h: take("h")?,
        v0,
        v1: take("v1")?,
        v2: take("v2")?,
        v3,
        vh,
        vh_basis,
        v0_h,
        v3_h,
        n,
    };
    datum.validate().map_err(|e| e.to_string())
}

fn parse_samples(w: &Value, key: &str) -> Result<Vec<Value>, String> {
    Ok(get(w, key)?
        .as_array()
        .ok_or_else(|| format!("`{key}` is not an array"))?
        .clone())
}

fn sample_point(row: &Value) -> Result<Vec<CScalar>, String> {
    cvector_from_json(get(row, "x0")?).ok_or_else(|| "bad sample point".into())
}

fn reverify_nilp_orbit(report: &CheckReport) -> VerifyResult {
    let w = &report.witness;
    let vh = parse_space(w, "vh_gram")?;
    let n = parse_operator(&vh, w, "n_matrix")?;
    let samples = parse_samples(w, "samples")?;
    let mut accepted = 0usize;
    for row in &samples {
        let x0 = sample_point(row)?;
        let od = NilpotentOrbitDatum::new(vh.clone(), n.clone(), x0)
            .map_err(|e| e.to_string())?;
        let t = hodgetate_core::hodge::orbit_test(&od).map_err(|e| e.to_string())?;
        let recorded = get(row, "criterion_value")?
            .as_str()
            .ok_or("criterion_value not a string")?;
        if t.criterion_value.to_string() != recorded {
            return fail("criterion value mismatch");
        }
        let recorded_accept = get(row, "accepted")?.as_bool().ok_or("bad accepted flag")?;
        if t.accepted != recorded_accept {
            return fail("acceptance flag mismatch");
        }
        if t.accepted {
            accepted += 1;
        }
    }
    if accepted == 0 {
        return fail("no accepted sample: non-emptiness fails");
    }
    if Some(accepted as u64) != get(w, "accepted_count")?.as_u64() {
        return fail("accepted_count mismatch");
    }
    Ok(())
}

fn reverify_h2_limit(report: &CheckReport) -> VerifyResult {
    let w = &report.witness;
    let vh = parse_space(w, "vh_gram")?;
    let n = parse_operator(&vh, w, "n_matrix")?;
    for row in &parse_samples(w, "samples")? {
        let od = NilpotentOrbitDatum::new(vh.clone(), n.clone(), sample_point(row)?)
            .map_err(|e| e.to_string())?;
        let mhs = k3_limit_mhs(&od).map_err(|e| e.to_string())?;
        let table = mhs.hodge_numbers();
        if !table.keys().all(|(p, q)| p == q) {
            return fail("recorded sample is not Hodge-Tate on recomputation");
        }
        if &hodge_numbers_json(&table) != get(row, "hodge_numbers")? {
            return fail("hodge number table mismatch");
        }
    }
    let ctrl_n = parse_operator(&vh, w, "control_n_matrix")?;
    let ctrl_rows = parse_samples(w, "control_samples")?;
    if ctrl_rows.is_empty() {
        return fail("control sample set is empty");
    }
    for row in &ctrl_rows {
        let od = NilpotentOrbitDatum::new(vh.clone(), ctrl_n.clone(), sample_point(row)?)
            .map_err(|e| e.to_string())?;
        let mhs = k3_limit_mhs(&od).map_err(|e| e.to_string())?;
        let table = mhs.hodge_numbers();
        if table.keys().all(|(p, q)| p == q) {
            return fail("control sample is Hodge-Tate on recomputation");
        }
        if &hodge_numbers_json(&table) != get(row, "hodge_numbers")? {
            return fail("control hodge number table mismatch");
        }
    }
    Ok(())
}

fn reverify_ks_limit(report: &CheckReport) -> VerifyResult {
    let w = &report.witness;
    let vh = parse_space(w, "vh_gram")?;
    let n = parse_operator(&vh, w, "n_matrix")?;
    let ca = CliffordAlgebra::new(vh.clone()).map_err(|e| e.to_string())?;
    // polarization invariance for the recorded pair
    let a1 = vector_from_json(get(w, "a1")?).ok_or("bad a1")?;
    let a2 = vector_from_json(get(w, "a2")?).ok_or("bad a2")?;
    let pol =
        hodgetate_core::hodge::ks_polarization(&ca, &a1, &a2).map_err(|e| e.to_string())?;
    let ln = ca.left_mul_matrix(&ca.lift(&n).map_err(|e| e.to_string())?);
    if !pol.invariance_defect(&ln).is_zero() {
        return fail("polarization is not N-invariant on recomputation");
    }
    for row in &parse_samples(w, "samples")? {
        let od = NilpotentOrbitDatum::new(vh.clone(), n.clone(), sample_point(row)?)
            .map_err(|e| e.to_string())?;
        let mhs = ks_limit_mhs(&ca, &od).map_err(|e| e.to_string())?;
        let f0_dim = mhs.hodge.at(0).dim();
        if Some(f0_dim as u64) != get(row, "f0_dim")?.as_u64() {
            return fail("F^0 dimension mismatch");
        }
        if f0_dim != ca.dim() / 2 {
            return fail("F^0 is not half-dimensional");
        }
        if !mhs.hodge_numbers().keys().all(|(p, q)| p == q) {
            return fail("recorded sample is not Hodge-Tate on recomputation");
        }
        if mhs.weight.gr_dim(-1) != 0 {
            return fail("gr_{-1} is nonzero on recomputation");
        }
    }
    let _ = Subspace::<CScalar>::zero(0);
    Ok(())
}

/// Deterministic parameter-pinned checks: rerun and compare everything but
/// the timing.
fn reverify_by_rerun(report: &CheckReport) -> VerifyResult {
    let p = &report.params;
    let geti = |key: &str| -> Result<i64, String> {
        p.get(key)
            .and_then(Value::as_i64)
            .ok_or_else(|| format!("param `{key}` missing"))
    };
    let gets = |key: &str| -> Result<String, String> {
        Ok(p.get(key)
            .and_then(Value::as_str)
            .ok_or_else(|| format!("param `{key}` missing"))?
            .to_string())
    };
    let rerun = match report.check.as_str() {
        "odd-index" => checks::check_odd_index(geti("l")? as usize, &gets("type")?, geti("k")?),
        "even-index" => checks::check_even_index(geti("l")? as usize, &gets("type")?, geti("k")?),
        "spinor-lemmas" => {
            checks::check_spinor_lemmas(geti("l")? as usize, &gets("type")?, geti("n")? as usize)
        }
        other => return fail(format!("unexpected check `{other}`")),
    };
    if rerun.verdict != report.verdict {
        return fail("verdict differs on rerun");
    }
    if rerun.witness != report.witness {
        return fail("witness differs on rerun");
    }
    Ok(())
}
