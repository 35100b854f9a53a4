#![no_main]

use detident::matrix_file::{emit_matrix_json, parse_matrix_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(a) = parse_matrix_json(text) {
        let emitted = emit_matrix_json(&a);
        assert_eq!(parse_matrix_json(&emitted).unwrap(), a);
    }
});
