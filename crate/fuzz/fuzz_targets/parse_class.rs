//! Class documents. Validation factors small-degree key polynomials, so
//! the conversion is only exercised at the coefficient scale it supports.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(doc) = csa::doc::ClassDoc::from_json(text) {
        let desk_scale = doc.assignments.iter().all(|a| {
            a.poly.len() <= 65
                && a.poly.iter().all(|c| c.len() <= 64)
                && a.partition.len() <= 64
        });
        if desk_scale {
            if let Ok(class) = doc.to_class() {
                let back = csa::doc::ClassDoc::from_class(&class);
                let again = back.to_class().expect("emitted documents convert");
                assert_eq!(class, again);
            }
        }
    }
});
