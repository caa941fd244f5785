#![no_main]

use coralprune::filtration::Filtration;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(filt) = Filtration::parse_text(data) {
        let mut buf = Vec::new();
        filt.write_text(&mut buf).unwrap();
        assert_eq!(Filtration::parse_text(buf.as_slice()).unwrap(), filt);
    }
});
