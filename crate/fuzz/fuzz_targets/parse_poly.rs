//! The infix grammar must never panic, and anything it accepts must
//! round-trip through the display form.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = csa::parse::parse_poly(text) {
        let reparsed = csa::parse::parse_poly(&p.to_string()).expect("display reparses");
        assert_eq!(p, reparsed);
    }
});
