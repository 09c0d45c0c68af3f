//! Algebra documents: serde deserialization plus the semantic conversion
//! must reject garbage with errors, never panics.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(doc) = csa::doc::AlgebraDoc::from_json(text) {
        let _ = doc.to_csa();
        let _ = doc.to_quaternion();
    }
});
