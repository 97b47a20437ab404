#![no_main]

use bergman_core::format::{parse_dg, read_dg, write_dg};
use bergman_core::structures::digraph_to_bergman;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    let _ = parse_dg(text);
    if let Ok(d) = read_dg(text) {
        assert_eq!(read_dg(&write_dg(&d)).expect("written digraph reads back"), d);
        assert!(digraph_to_bergman(&d).is_basic());
    }
});
