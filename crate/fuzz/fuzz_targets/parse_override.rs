//! Override tables: entries must be validated against the polynomial
//! degree without panicking on any input.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let _ = csa::doc::overrides_from_json(text);
});
