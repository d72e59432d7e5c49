//! `odd-index` and `even-index`: exact unipotency indices of the monodromy
//! nilpotent on tensor and symmetric-power modules.
//!
//! Odd case: on the submodule of `S^{k-1} V (x) Spinor` generated by
//! `e1^{k-1} (x) u` the index is exactly `2k`. Even case: on the submodule
//! of `S^k V` generated by `e1^k` the index is `2k + 1`.

use num_traits::One;
use num_traits::Zero;
use serde_json::{json, Map};

use hodgetate_core::clifford::spinor_module;
use hodgetate_core::hodge::unipotency_index;
use hodgetate_core::lie::{so_basis, HyperbolicBasis, LieType};
use hodgetate_core::matrix::vec_is_zero;
use hodgetate_core::rep::{highest_weight_vectors, submodule_generated, RepModule};
use hodgetate_core::scalar::Scalar;
use hodgetate_core::Error;

use crate::report::CheckReport;

use super::run_check;

fn parse_type(ty: &str) -> Result<LieType, Error> {
    match ty {
        "B" => Ok(LieType::B),
        "D" => Ok(LieType::D),
        other => Err(Error::Precondition(format!(
            "unknown type {other}, expected B or D"
        ))),
    }
}

pub fn check_odd_index(l: usize, ty: &str, k: i64) -> CheckReport {
    let mut params = Map::new();
    params.insert("l".into(), json!(l));
    params.insert("type".into(), json!(ty));
    params.insert("k".into(), json!(k));
    run_check("odd-index", params, || {
        let ty = parse_type(ty)?;
        if l < 2 {
            return Err(Error::RankTooSmall(l));
        }
        if k < 1 {
            return Err(Error::Precondition("odd-index needs k >= 1".into()));
        }
        let k = k as usize;
        let hb = HyperbolicBasis::standard(l, ty)?;
        let space = hb.space().clone();
        let spinor = spinor_module(&hb)?;
        let skm1 = RepModule::standard(&space).sym_power(k - 1)?;
        let tensor = skm1.tensor(&spinor)?;
        let n = hb.index3_nilpotent();

        // generator e1^{k-1} (x) u: the sym word (e1..e1) is the first basis
        // word, u is the last spinor word
        let mut gen_vec = vec![Scalar::zero(); tensor.dim()];
        gen_vec[spinor.dim() - 1] = Scalar::one();

        let gens = so_basis(&space);
        let sub = submodule_generated(&tensor, &gen_vec, &gens)?;
        let n_sub = sub.module.act(&n)?;
        let index_sub = unipotency_index(&n_sub)?;

        // on the full module: rho(N)^{2k} = 0 and N^{2k-1} of the generator
        // is nonzero
        let n_full = tensor.act(&n)?;
        let full_2k = n_full.pow(2 * k as u32);
        let full_2km1 = n_full.pow(2 * k as u32 - 1);
        let nonzero_at_generator = !vec_is_zero(&full_2km1.apply(&gen_vec));

        // the generated module has highest weight (k-1) w1 + w_l, i.e.
        // epsilon coordinates ((k-1) + 1/2, 1/2, .., 1/2)
        let hws = highest_weight_vectors(&sub.module, &hb)?;
        let expected = {
            let half = hodgetate_core::scalar::rat(1, 2);
            let mut coords = vec![half.clone(); l];
            coords[0] = hodgetate_core::scalar::int(k as i64 - 1) + half;
            hodgetate_core::lie::WeightVector::new(coords, hb.indexing())
        };
        let hw_ok = hws.len() == 1 && hws[0].1 == expected;

        let pass =
            index_sub == 2 * k as u32 && full_2k.is_zero() && nonzero_at_generator && hw_ok;
        let witness = json!({
            "module_dim": tensor.dim(),
            "submodule_dim": sub.module.dim(),
            "index_on_submodule": index_sub,
            "expected_index": 2 * k,
            "rho_n_pow_2k_zero_on_full_module": full_2k.is_zero(),
            "n_pow_2k_minus_1_nonzero_at_generator": nonzero_at_generator,
            "highest_weights": hws
                .iter()
                .map(|(_, w)| json!(w
                    .coords()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()))
                .collect::<Vec<_>>(),
            "expected_highest_weight": expected
                .coords()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>(),
        });
        Ok((pass, witness))
    })
}

pub fn check_even_index(l: usize, ty: &str, k: i64) -> CheckReport {
    let mut params = Map::new();
    params.insert("l".into(), json!(l));
    params.insert("type".into(), json!(ty));
    params.insert("k".into(), json!(k));
    run_check("even-index", params, || {
        let ty = parse_type(ty)?;
        if l < 2 {
            return Err(Error::RankTooSmall(l));
        }
        if k < 0 {
            return Err(Error::Precondition("even-index needs k >= 0".into()));
        }
        let k = k as usize;
        let hb = HyperbolicBasis::standard(l, ty)?;
        let space = hb.space().clone();
        let sk = RepModule::standard(&space).sym_power(k)?;
        let n = hb.index3_nilpotent();

        // generator e1^k: the first basis word in lexicographic order
        let mut gen_vec = vec![Scalar::zero(); sk.dim()];
        gen_vec[0] = Scalar::one();

        let gens = so_basis(&space);
        let sub = submodule_generated(&sk, &gen_vec, &gens)?;
        let n_sub = sub.module.act(&n)?;
        let index_sub = unipotency_index(&n_sub)?;

        let n_full = sk.act(&n)?;
        let index_full = unipotency_index(&n_full)?;
        let nonzero = !vec_is_zero(&n_full.pow(2 * k as u32).apply(&gen_vec));

        let pass =
            index_sub == 2 * k as u32 + 1 && index_full == 2 * k as u32 + 1 && nonzero;
        let witness = json!({
            "module_dim": sk.dim(),
            "submodule_dim": sub.module.dim(),
            "index_on_submodule": index_sub,
            "index_on_full_module": index_full,
            "expected_index": 2 * k + 1,
            "n_pow_2k_nonzero_at_generator": nonzero,
        });
        Ok((pass, witness))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    #[test]
    fn odd_index_small_cases() {
        // k = 1, type D, l = 2: index 2 on the generated semi-spinor
        let r = check_odd_index(2, "D", 1);
        assert_eq!(r.verdict, Verdict::Pass, "{}", r.witness);
        assert_eq!(r.witness["index_on_submodule"], 2);
        // k = 2, type B, l = 2: index 4
        let r = check_odd_index(2, "B", 2);
        assert_eq!(r.verdict, Verdict::Pass, "{}", r.witness);
        assert_eq!(r.witness["index_on_submodule"], 4);
        crate::reverify::reverify(&r).unwrap();
    }

    #[test]
    fn even_index_small_cases() {
        // k = 1: index 3, matching N on V itself
        let r = check_even_index(2, "B", 1);
        assert_eq!(r.verdict, Verdict::Pass, "{}", r.witness);
        assert_eq!(r.witness["index_on_submodule"], 3);
        // k = 0: the trivial module has index 1
        let r = check_even_index(2, "D", 0);
        assert_eq!(r.verdict, Verdict::Pass, "{}", r.witness);
        assert_eq!(r.witness["index_on_submodule"], 1);
        crate::reverify::reverify(&r).unwrap();
    }

    #[test]
    fn bad_parameters_are_skipped() {
        assert_eq!(check_odd_index(1, "B", 1).verdict, Verdict::Skipped);
        assert_eq!(check_odd_index(2, "X", 1).verdict, Verdict::Skipped);
        assert_eq!(check_odd_index(2, "B", 0).verdict, Verdict::Skipped);
    }
}
