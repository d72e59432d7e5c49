#![no_main]

use libfuzzer_sys::fuzz_target;

use hodgetate_cli::report::CheckReport;
use hodgetate_cli::reverify::reverify;

// Report re-verification consumes externally produced JSON. For the checks
// whose reruns are cheap and capped, arbitrary reports must either verify or
// be rejected with an error, never panic. The heavy sampling checks are
// exercised by their own integration tests instead.
const FUZZED_CHECKS: [&str; 5] = [
    "lemma-n",
    "nilp-orbit",
    "odd-index",
    "even-index",
    "spinor-lemmas",
];

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(report) = serde_json::from_str::<CheckReport>(text) {
        if FUZZED_CHECKS.contains(&report.check.as_str()) {
            let _ = reverify(&report);
        }
    }
});
