//! The committed decompositions under fixtures/ must stay reproducible: the
//! searches are deterministic, so rebuilding them has to give the same bytes.

use std::fs;
use std::path::PathBuf;

use symchain::necklace::{build_necklace_graph, lift_to_cube, search_disjoint_scds, SearchOutcome};

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn check(n: usize, want: usize, budget: u64) {
    let g = build_necklace_graph(n).unwrap();
    let SearchOutcome::Found(scds) = search_disjoint_scds(&g, want, budget) else {
        panic!("search for {want} disjoint decompositions of N_{n} should succeed");
    };
    assert_eq!(scds.len(), want);
    for (i, scd) in scds.iter().enumerate() {
        assert_eq!(
            scd.to_text(),
            fixture(&format!("n{n}_{i}.scd")),
            "necklace decomposition {i} of N_{n} drifted"
        );
    }
    let lifts = lift_to_cube(&scds).unwrap();
    for (i, lift) in lifts.iter().enumerate() {
        assert_eq!(
            lift.to_text(),
            fixture(&format!("q{n}_{i}.scd")),
            "lift {i} to Q_{n} drifted"
        );
    }
}

#[test]
fn committed_q5_fixtures_are_reproducible() {
    check(5, 3, 1_000_000);
}

#[test]
fn committed_q7_fixtures_are_reproducible() {
    check(7, 4, 50_000_000);
}
