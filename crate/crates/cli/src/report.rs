//! Check reports and their deterministic JSON serialization.
//!
//! `serde_json` maps are ordered (BTree-backed), so serializing a report is
//! byte-deterministic apart from the timing field; `canonical_json` zeroes
//! the timing for byte-identity comparisons under a fixed seed.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use hodgetate_core::scalar::{CScalar, Scalar};
use hodgetate_core::matrix::Matrix;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub params: Map<String, Value>,
    pub verdict: Verdict,
    pub witness: Value,
    pub elapsed_ms: f64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Serialization with the timing zeroed: byte-identical for identical
    /// inputs and seeds.
    pub fn canonical_json(&self) -> String {
        let mut copy = self.clone();
        copy.elapsed_ms = 0.0;
        serde_json::to_string_pretty(&copy).expect("reports serialize")
    }
}

/// The aggregate output of a grid run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportDocument {
    pub preamble: Value,
    pub reports: Vec<CheckReport>,
}

impl ReportDocument {
    pub fn new(reports: Vec<CheckReport>) -> Self {
        ReportDocument {
            preamble: json!({
                "tool": "hodgetate",
                "out_of_scope": [
                    "the integer power k making the full-cohomology monodromy equal exp(kN) is not effective and is not estimated",
                    "finite-index bounds for cohomology automorphism groups are not estimated",
                ],
            }),
            reports,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.reports
            .iter()
            .all(|r| r.verdict != Verdict::Fail)
    }

    pub fn canonical_json(&self) -> String {
        let mut copy = self.clone();
        for r in &mut copy.reports {
            r.elapsed_ms = 0.0;
        }
        serde_json::to_string_pretty(&copy).expect("documents serialize")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from("| check | params | verdict | elapsed_ms |\n|---|---|---|---|\n");
        for r in &self.reports {
            let params = serde_json::to_string(&r.params).unwrap_or_default();
            out.push_str(&format!(
                "| {} | `{}` | {} | {:.1} |\n",
                r.check,
                params,
                match r.verdict {
                    Verdict::Pass => "pass",
                    Verdict::Fail => "fail",
                    Verdict::Skipped => "skipped",
                },
                r.elapsed_ms
            ));
        }
        out
    }
}

// -- exact values in JSON: rationals as "p/q" strings ----------------------

pub fn scalar_json(x: &Scalar) -> Value {
    Value::String(x.to_string())
}

pub fn scalar_from_json(v: &Value) -> Option<Scalar> {
    match v {
        Value::String(s) => s.parse().ok(),
        Value::Number(n) => n.as_i64().map(hodgetate_core::scalar::int),
        _ => None,
    }
}

pub fn cscalar_json(z: &CScalar) -> Value {
    json!({ "re": z.re.to_string(), "im": z.im.to_string() })
}

pub fn cscalar_from_json(v: &Value) -> Option<CScalar> {
    let re = scalar_from_json(v.get("re")?)?;
    let im = scalar_from_json(v.get("im")?)?;
    Some(CScalar::new(re, im))
}

pub fn vector_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_json).collect())
}

pub fn vector_from_json(v: &Value) -> Option<Vec<Scalar>> {
    v.as_array()?.iter().map(scalar_from_json).collect()
}

pub fn cvector_json(v: &[CScalar]) -> Value {
    Value::Array(v.iter().map(cscalar_json).collect())
}

pub fn cvector_from_json(v: &Value) -> Option<Vec<CScalar>> {
    v.as_array()?.iter().map(cscalar_from_json).collect()
}

pub fn matrix_json(m: &Matrix<Scalar>) -> Value {
    Value::Array((0..m.rows()).map(|r| vector_json(&m.row(r))).collect())
}

pub fn matrix_from_json(v: &Value) -> Option<Matrix<Scalar>> {
    let rows: Option<Vec<Vec<Scalar>>> =
        v.as_array()?.iter().map(vector_from_json).collect();
    let rows = rows?;
    if rows.is_empty() {
        return None;
    }
    Some(Matrix::from_rows(rows))
}

/// Graded dimensions as `[[weight, dim], ...]`.
pub fn gr_dims_json(dims: &[(i64, usize)]) -> Value {
    Value::Array(
        dims.iter()
            .map(|(w, d)| json!([w, d]))
            .collect(),
    )
}

/// Hodge numbers as `{"p,q": h}` with sorted keys.
pub fn hodge_numbers_json(h: &std::collections::BTreeMap<(i64, i64), usize>) -> Value {
    let mut map = Map::new();
    for ((p, q), d) in h {
        map.insert(format!("{p},{q}"), json!(d));
    }
    Value::Object(map)
}
