#![no_main]

use libfuzzer_sys::fuzz_target;
use median_voting::format::{parse_misrep_table, parse_profile};

// Input: a profile, a line holding only `---`, then a table for it.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Some((profile, table)) = text.split_once("\n---\n") else { return };
    let Ok(p) = parse_profile(profile) else { return };
    let _ = parse_misrep_table(table, &p);
});
