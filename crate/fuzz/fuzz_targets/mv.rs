#![no_main]

use bergman_core::format::{parse_mv, write_mv};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(steps) = parse_mv(text) {
        let again = parse_mv(&write_mv(&steps)).expect("written script reads back");
        let strip = |s: &[bergman_core::format::ScriptStep]| {
            s.iter().map(|x| (x.command.clone(), x.bound)).collect::<Vec<_>>()
        };
        assert_eq!(strip(&again), strip(&steps));
    }
});
