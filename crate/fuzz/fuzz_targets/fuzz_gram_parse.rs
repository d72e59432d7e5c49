#![no_main]

use libfuzzer_sys::fuzz_target;

use hodgetate_cli::gram::parse_gram_str;

// Gram matrix files come from users: both the whitespace text format and the
// JSON array format must never panic, and an accepted matrix must satisfy
// its own invariants and survive a serialize/parse round trip.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(space) = parse_gram_str(text) {
        let n = space.dim();
        assert!(n > 0);
        assert!(space.gram().is_symmetric());
        // round trip through the JSON form
        let rendered = serde_json::to_string(
            &(0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| space.gram().at(r, c).to_string())
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let reparsed = parse_gram_str(&rendered).expect("round trip parses");
        assert_eq!(reparsed.gram(), space.gram());
    }
});
