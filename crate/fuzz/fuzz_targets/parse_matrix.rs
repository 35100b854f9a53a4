#![no_main]

use detident::matrix_file::parse_matrix;
use detident::{det_bareiss, det_dodgson, AntisymmetricMatrix};
use libfuzzer_sys::fuzz_target;

// Parsed square inputs also go through the engines and, when antisymmetric,
// the Pfaffian.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(a) = parse_matrix(text) else { return };
    if !a.is_square() || a.rows() > 8 {
        return;
    }
    let det = det_bareiss(&a).unwrap();
    assert_eq!(det_dodgson(&a).unwrap().value, det);
    if let Ok(skew) = AntisymmetricMatrix::from_matrix(&a) {
        assert_eq!(detident::pfaffian::pfaffian(&skew).square(), det);
    }
});
