#![no_main]

use bergman_core::monoid::parse_element;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(e) = parse_element(text) {
        assert_eq!(parse_element(&e.to_string()).expect("displayed element parses"), e);
    }
});
