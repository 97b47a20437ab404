#![no_main]

use bergman_core::format::{parse_bg, read_bg, write_bg};
use bergman_core::structures::{graph_to_pres, pres_to_graph};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    let _ = parse_bg(text);
    if let Ok(g) = read_bg(text) {
        assert_eq!(read_bg(&write_bg(&g)).expect("written graph reads back"), g);
        assert_eq!(pres_to_graph(&graph_to_pres(&g)), g);
    }
});
