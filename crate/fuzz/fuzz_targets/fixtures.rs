#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(f) = crr_core::fixtures::parse(text) {
            assert!(!f.rows.is_empty());
            assert!(f.rows.iter().all(|r| r.x_min <= r.x_max && r.param.is_finite()));
        }
    }
});
