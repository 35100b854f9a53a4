#![no_main]

use detident::parse_scalar;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(x) = parse_scalar(text) {
        let printed = x.to_string();
        assert_eq!(parse_scalar(&printed).unwrap(), x);
    }
});
