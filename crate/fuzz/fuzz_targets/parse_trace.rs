//! Fuzzes the construction-trace JSON decoder: arbitrary text must yield
//! either a decoded trace or an error, never a panic. A successfully decoded
//! trace must survive an encode/decode round trip unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;
use skewline::trace::ConstructionTrace;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(trace) = ConstructionTrace::from_json_str(text) {
        let encoded = trace.to_json_pretty();
        let again = ConstructionTrace::from_json_str(&encoded)
            .expect("re-encoded trace must decode");
        assert_eq!(again, trace, "JSON round-trip changed the trace");
    }
});
