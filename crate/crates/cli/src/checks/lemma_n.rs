//! `lemma-n`: the construction of a maximally unipotent nilpotent on the
//! complement of a polarization class, with every invariant checked
//! exactly and recorded in the witness.

use serde_json::{json, Map};

use hodgetate_core::degeneration::degeneration_data;
use hodgetate_core::hodge::weight_filtration;
use hodgetate_core::quad::QuadSpace;

use crate::report::{gr_dims_json, matrix_json, vector_json, CheckReport};

use super::{resolve_space, run_check};

pub fn check_lemma_n(dim: usize, bound: i64, gram: Option<&QuadSpace>) -> CheckReport {
    let mut params = Map::new();
    params.insert("dim".into(), json!(dim));
    params.insert("bound".into(), json!(bound));
    params.insert("preset".into(), json!(gram.is_none()));
    run_check("lemma-n", params, || {
        let space = resolve_space(dim, gram)?;
        let datum = degeneration_data(&space, bound)?;
        datum.validate()?;
        let w = weight_filtration(datum.n.matrix(), 2)?;
        let witness = json!({
            "gram": matrix_json(space.gram()),
            "h": vector_json(&datum.h),
            "v0": vector_json(&datum.v0),
            "v1": vector_json(&datum.v1),
            "v2": vector_json(&datum.v2),
            "v3": vector_json(&datum.v3),
            "vh_basis": matrix_json(&datum.vh_basis),
            "n_matrix": matrix_json(datum.n.matrix()),
            "q_v3": datum.ambient.qv(&datum.v3).to_string(),
            "gr_dims": gr_dims_json(&w.gr_dims()),
        });
        Ok((true, witness))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    #[test]
    fn passes_on_presets_and_skips_below_dim_5() {
        for dim in [5usize, 8] {
            let r = check_lemma_n(dim, 10, None);
            assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.witness);
            crate::reverify::reverify(&r).unwrap();
        }
        let r = check_lemma_n(4, 10, None);
        assert_eq!(r.verdict, Verdict::Skipped);
        assert_eq!(r.witness["reason"], "precondition");
    }
}
