#![no_main]

use libfuzzer_sys::fuzz_target;
use median_voting::format::{parse_approval_sets, parse_profile};

// Input: a profile, a line holding only `---`, then one approval set per voter.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Some((profile, sets)) = text.split_once("\n---\n") else { return };
    let Ok(p) = parse_profile(profile) else { return };
    if let Ok(sets) = parse_approval_sets(sets, &p) {
        assert_eq!(sets.len(), p.n());
    }
});
