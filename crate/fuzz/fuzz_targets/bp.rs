#![no_main]

use bergman_core::format::{parse_bp, read_bp, write_bp};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    let _ = parse_bp(text);
    if let Ok(p) = read_bp(text) {
        let written = write_bp(&p);
        let again = read_bp(&written).expect("written presentation reads back");
        assert_eq!(again, p);
        assert_eq!(write_bp(&again), written);
    }
});
