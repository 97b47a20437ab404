#![no_main]

use bergman_core::format::{parse_lpa_element, read_bg, write_lpa_element};
use bergman_core::lpa::{Hypergraph, Lpa};
use libfuzzer_sys::fuzz_target;

const GRAPH: &str = "vertices u v w\nred f: u -> u w\nred g: w -> u\nred h: v -> u w w\n";

fuzz_target!(|text: &str| {
    let g = Hypergraph::from_graph(&read_bg(GRAPH).unwrap());
    if let Ok(x) = parse_lpa_element(&g, text) {
        assert_eq!(parse_lpa_element(&g, &write_lpa_element(&g, &x)).expect("written element parses"), x);
        let lpa = Lpa::with_default_anchors(g).with_budget(10_000);
        if let Ok(nf) = lpa.reduce(&x) {
            assert_eq!(lpa.reduce(&nf), Ok(nf));
        }
    }
});
