#![no_main]

use coralprune::datasets::{load_edge_list, write_edge_list};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok((g, _)) = load_edge_list(data) {
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        let (again, _) = load_edge_list(buf.as_slice()).unwrap();
        assert_eq!(again, g);
    }
});
