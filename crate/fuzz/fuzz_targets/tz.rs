#![no_main]

use bergman_core::format::{parse_tz, write_tz};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(steps) = parse_tz(text, 8) {
        let again = parse_tz(&write_tz(&steps), 8).expect("written script reads back");
        let strip = |s: &[bergman_core::format::TzStep]| {
            s.iter().map(|x| x.transformation.clone()).collect::<Vec<_>>()
        };
        assert_eq!(strip(&again), strip(&steps));
    }
});
