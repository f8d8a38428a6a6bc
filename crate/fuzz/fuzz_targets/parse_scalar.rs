//! Fuzzes the scalar literal parsers of all three coordinate rings. The first
//! byte picks the ring; the rest is the candidate literal. Parsing must never
//! panic, and an accepted literal must round-trip through its canonical form.

#![no_main]

use libfuzzer_sys::fuzz_target;
use skewline::RingDescriptor;

fuzz_target!(|data: &[u8]| {
    let Some((&selector, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let ring = match selector % 4 {
        0 => RingDescriptor::rational(),
        1 => RingDescriptor::prime_field(5).unwrap(),
        2 => RingDescriptor::prime_field(7).unwrap(),
        _ => RingDescriptor::quaternion(),
    };
    if let Ok(value) = ring.parse_scalar(text) {
        let canonical = value.canonical();
        let again = ring
            .parse_scalar(&canonical)
            .expect("canonical form of an accepted literal must parse");
        assert_eq!(again, value, "canonical round-trip changed the value");
    }
});
