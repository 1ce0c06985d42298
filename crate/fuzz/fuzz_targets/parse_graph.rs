#![no_main]

use libfuzzer_sys::fuzz_target;
use orientkit::io::{parse_graph_bytes, write_graph};

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = parse_graph_bytes(data) {
        let again = orientkit::io::parse_graph(&write_graph(&g)).expect("written graphs parse");
        assert_eq!(again, g);
    }
});
