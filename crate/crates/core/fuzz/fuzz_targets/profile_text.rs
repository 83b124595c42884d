#![no_main]

use libfuzzer_sys::fuzz_target;
use median_voting::format::{parse_profile, write_profile};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_profile(text) {
        let again = parse_profile(&write_profile(&p)).unwrap();
        assert_eq!(write_profile(&again), write_profile(&p));
    }
});
