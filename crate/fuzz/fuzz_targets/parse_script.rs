//! Fuzzes the construction-script parser: any byte soup must produce either a
//! script or diagnostics, never a panic. When parsing succeeds, the canonical
//! pretty-printed form must itself reparse to an equal script (the formatter
//! and the parser stay inverse to each other under fuzzing pressure).

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(script) = skewline::dsl::parse(text) {
        let pretty = script.pretty();
        let reparsed = skewline::dsl::parse(&pretty)
            .expect("canonical output of a parsed script must reparse");
        assert_eq!(reparsed, script, "pretty-printing changed the script");
    }
});
