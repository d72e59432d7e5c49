//! The grid runner: every check across the configured parameter grid, with
//! the aggregate report ordered by check name and parameters.

use hodgetate_core::quad::QuadSpace;

use crate::config::GridConfig;
use crate::report::{CheckReport, ReportDocument};

use super::{
    check_even_index, check_h2_limit, check_ks_limit, check_lemma_n, check_nilp_orbit,
    check_odd_index, check_spinor_lemmas,
};

/// Run the whole grid. When a Gram override is given, the
/// dimension-parametrized checks run once on it instead of the presets.
pub fn full_report(config: &GridConfig, gram: Option<&QuadSpace>) -> ReportDocument {
    let mut reports: Vec<CheckReport> = Vec::new();
    let dims: Vec<usize> = match gram {
        Some(q) => vec![q.dim()],
        None => config.dims.clone(),
    };
    let ks_dims: Vec<usize> = match gram {
        Some(q) => vec![q.dim()],
        None => config.ks_dims.clone(),
    };

    for &dim in &dims {
        reports.push(check_lemma_n(dim, config.bound, gram));
    }
    for &dim in &dims {
        reports.push(check_nilp_orbit(
            dim,
            config.bound,
            config.samples,
            config.seed,
            gram,
        ));
    }
    for &dim in &dims {
        reports.push(check_h2_limit(
            dim,
            config.bound,
            config.samples,
            config.seed,
            gram,
        ));
    }
    for &l in &config.ls {
        for ty in &config.types {
            for &k in &config.ks {
                reports.push(check_odd_index(l, ty, k));
            }
        }
    }
    for &l in &config.ls {
        for ty in &config.types {
            for &k in &config.ks {
                reports.push(check_even_index(l, ty, k));
            }
        }
    }
    for &l in &config.ls {
        for ty in &config.types {
            for &n in &config.ns {
                reports.push(check_spinor_lemmas(l, ty, n));
            }
        }
    }
    for &dim in &ks_dims {
        reports.push(check_ks_limit(
            dim,
            config.bound,
            config.samples,
            config.seed,
            gram,
        ));
    }

    // fixed aggregation order: check name, then parameter record
    reports.sort_by(|a, b| {
        (a.check.as_str(), serde_json::to_string(&a.params).unwrap_or_default())
            .cmp(&(b.check.as_str(), serde_json::to_string(&b.params).unwrap_or_default()))
    });
    ReportDocument::new(reports)
}
