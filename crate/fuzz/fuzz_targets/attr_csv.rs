#![no_main]

use coralprune::datasets::{load_attribute_csv, write_attribute_csv};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(f) = load_attribute_csv(data) {
        let mut buf = Vec::new();
        write_attribute_csv(&f, &mut buf).unwrap();
        assert_eq!(load_attribute_csv(buf.as_slice()).unwrap(), f);
    }
});
