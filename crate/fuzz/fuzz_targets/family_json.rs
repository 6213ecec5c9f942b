#![no_main]

use libfuzzer_sys::fuzz_target;

use pphf::HashFamily;

// The family JSON decoder must never panic; accepted families round-trip
// and can be checked against a compatible hypergraph without panicking.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(family) = HashFamily::from_json(text) {
        let reparsed = HashFamily::from_json(&family.to_json()).expect("serialized form must reparse");
        assert_eq!(family, reparsed);

        for h in family.functions() {
            assert_eq!(h.n(), family.n());
            assert!(h.values().iter().all(|&v| v >= 1 && v <= family.bucket_count()));
        }

        // coverage verdicts must be computable for any accepted family
        if !family.is_empty() && family.n() >= 1 && family.n() <= 64 {
            let edges: Vec<Vec<usize>> = vec![(1..=family.n()).collect()];
            let graph = pphf::Hypergraph::new(family.n(), edges).unwrap();
            let report = family.covers(&graph, 2).unwrap();
            assert_eq!(report.covered.len(), 1);
        }
    }
});
