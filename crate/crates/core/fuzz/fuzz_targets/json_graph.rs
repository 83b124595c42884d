#![no_main]

use libfuzzer_sys::fuzz_target;
use median_voting::format::{graph_from_json, graph_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = graph_from_json(text) {
        assert_eq!(graph_from_json(&graph_to_json(&g)).unwrap(), g);
    }
});
