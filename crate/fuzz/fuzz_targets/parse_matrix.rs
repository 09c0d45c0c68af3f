//! Matrix documents: decode, validate the shape, and round-trip accepted
//! matrices back through the document form.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(doc) = csa::doc::MatrixDoc::from_json(text) {
        if let Ok(m) = doc.to_matrix() {
            let back = csa::doc::MatrixDoc::from_matrix(&m);
            let again = back.to_matrix().expect("emitted documents convert");
            assert_eq!(m, again);
        }
    }
});
