#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(g) = crr_core::parse_grid(text) {
            assert!(!g.is_empty());
            assert!(g.iter().all(|v| v.is_finite()));
        }
    }
});
