#![no_main]

use libfuzzer_sys::fuzz_target;

use hodgetate_core::scalar::Scalar;

// "p/q" rational tokens: parsing must never panic, and an accepted value is
// canonical (display/parse is the identity on it).
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(x) = text.parse::<Scalar>() {
        let rendered = x.to_string();
        let reparsed: Scalar = rendered.parse().expect("canonical form parses");
        assert_eq!(reparsed, x);
    }
});
