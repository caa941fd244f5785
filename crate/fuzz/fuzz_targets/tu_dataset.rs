#![no_main]

use coralprune::datasets::parse_tu;
use libfuzzer_sys::fuzz_target;

// the three files are separated by NUL bytes: edges, indicator, labels
fuzz_target!(|data: &[u8]| {
    let mut parts = data.splitn(3, |&b| b == 0);
    let edges = parts.next().unwrap_or_default();
    let indicator = parts.next().unwrap_or_default();
    let labels = parts.next().unwrap_or_default();
    if let Ok(set) = parse_tu("FUZZ", edges, indicator, labels) {
        for g in set.iter() {
            assert!(g.graph.edges().all(|(u, v)| u < v));
        }
    }
});
