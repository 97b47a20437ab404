#![no_main]

use bergman_core::format::{parse_anchors, read_bg, write_anchors};
use bergman_core::lpa::{Hypergraph, Lpa};
use libfuzzer_sys::fuzz_target;

const GRAPH: &str = "vertices u v w\nred f: u -> u w\nred g: w -> u\nred h: v -> u w w\n";

fuzz_target!(|text: &str| {
    let g = Hypergraph::from_graph(&read_bg(GRAPH).unwrap());
    if let Ok(a) = parse_anchors(&g, text) {
        assert_eq!(parse_anchors(&g, &write_anchors(&g, &a)).expect("written anchors parse"), a);
        assert!(Lpa::new(g, a).is_ok());
    }
});
