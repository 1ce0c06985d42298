#![no_main]

use libfuzzer_sys::fuzz_target;
use orientkit::io::{parse_graph_bytes, parse_orientation_bytes, write_orientation};

// graph text, a NUL byte, then orientation text
fuzz_target!(|data: &[u8]| {
    let Some(cut) = data.iter().position(|&b| b == 0) else {
        return;
    };
    let Ok(g) = parse_graph_bytes(&data[..cut]) else {
        return;
    };
    if let Ok(d) = parse_orientation_bytes(&g, &data[cut + 1..]) {
        assert_eq!(d.indegrees().iter().sum::<usize>(), g.m());
        let again = orientkit::io::parse_orientation(&g, &write_orientation(&g, &d)).expect("round trip");
        assert_eq!(again, d);
    }
});
