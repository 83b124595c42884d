#![no_main]

use libfuzzer_sys::fuzz_target;
use median_voting::format::read_profile;
use median_voting::graph::is_median_graph;
use median_voting::intermediate::is_intermediate;
use median_voting::recognition::recognize;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(p) = read_profile(text) else { return };
    if p.n() > 12 || p.m() > 8 {
        return;
    }
    let r = recognize(&p);
    if r.is_accepted() {
        assert!(is_median_graph(&r.graph));
        assert!(is_intermediate(&r.reduced, &r.graph).unwrap());
    }
});
