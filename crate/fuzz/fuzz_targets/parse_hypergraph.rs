#![no_main]

use libfuzzer_sys::fuzz_target;

use pphf::Hypergraph;

// The text parser must never panic, and anything it accepts must survive a
// serialize/reparse round trip unchanged.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(graph) = Hypergraph::parse(text) {
        let serialized = graph.to_text();
        let reparsed = Hypergraph::parse(&serialized).expect("serialized form must reparse");
        assert_eq!(graph, reparsed);

        // accepted graphs satisfy the structural invariants
        for edge in graph.edges() {
            assert!(!edge.is_empty());
            assert!(edge.iter().all(|&v| v >= 1 && v <= graph.n()));
            assert!(edge.windows(2).all(|w| w[0] < w[1]));
        }
    }
});
