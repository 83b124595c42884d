#![no_main]

use libfuzzer_sys::fuzz_target;
use median_voting::format::{profile_from_json, profile_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = profile_from_json(text) {
        assert_eq!(profile_from_json(&profile_to_json(&p)).unwrap(), p);
    }
});
