#![no_main]

use bergman_core::format::parse_alg;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    let _ = parse_alg(text);
});
