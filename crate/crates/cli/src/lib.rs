//! Named verification checks over the exact engine, each producing a
//! machine-readable [`report::CheckReport`] whose witness payload is rich
//! enough to re-verify the verdict independently (see [`reverify`]).
//!
//! Check names: `lemma-n`, `nilp-orbit`, `h2-limit`, `odd-index`,
//! `even-index`, `spinor-lemmas`, `ks-limit`. The `all` runner sweeps the
//! default parameter grid and aggregates the reports.

pub mod checks;
pub mod config;
pub mod gram;
pub mod report;
pub mod reverify;
pub mod sample;

pub use report::{CheckReport, Verdict};
