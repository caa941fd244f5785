#![no_main]

use coralprune::datasets::load_manifest;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let _ = load_manifest(data);
});
