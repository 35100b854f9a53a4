#![no_main]

use detident::matrix_file::{emit_matrix_text, parse_matrix_text};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(a) = parse_matrix_text(text) {
        let emitted = emit_matrix_text(&a);
        assert_eq!(parse_matrix_text(&emitted).unwrap(), a);
    }
});
