#![no_main]

use libfuzzer_sys::fuzz_target;

use hodgetate_cli::config::GridConfig;

// Grid configuration files: arbitrary JSON must be rejected cleanly or
// produce a config that re-serializes and re-parses to itself.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(cfg) = serde_json::from_str::<GridConfig>(text) {
        let rendered = serde_json::to_string(&cfg).unwrap();
        let reparsed: GridConfig = serde_json::from_str(&rendered).unwrap();
        assert_eq!(serde_json::to_string(&reparsed).unwrap(), rendered);
    }
});
