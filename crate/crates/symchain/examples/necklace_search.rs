//! Searches the necklace posets N_5 and N_7 for pairwise edge-disjoint
//! symmetric chain decompositions and lifts them to the cubes Q_5 and Q_7.
//!
//! Pass `--write <dir>` to persist the results: `n5_<i>.scd` / `n7_<i>.scd`
//! hold the necklace chains with their flip positions, `q5_<i>.scd` /
//! `q7_<i>.scd` the lifted cube decompositions, one chain per line.

use std::path::Path;

use symchain::necklace::{build_necklace_graph, lift_to_cube, search_disjoint_scds, SearchOutcome};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let write_dir = match args.as_slice() {
        [] => None,
        [flag, dir] if flag == "--write" => Some(dir.clone()),
        _ => {
            eprintln!("usage: necklace_search [--write <dir>]");
            std::process::exit(2);
        }
    };

    for (n, want, budget) in [(5, 3, 1_000_000), (7, 4, 50_000_000)] {
        let g = build_necklace_graph(n).unwrap();
        println!("N_{n}: {} necklaces, searching for {want} disjoint decompositions", g.node_count());
        let scds = match search_disjoint_scds(&g, want, budget) {
            SearchOutcome::Found(scds) => scds,
            SearchOutcome::Impossible => {
                println!("  impossible");
                continue;
            }
            SearchOutcome::BudgetExceeded => {
                println!("  budget of {budget} attempts exceeded");
                continue;
            }
        };
        for (i, scd) in scds.iter().enumerate() {
            scd.verify(&g).unwrap();
            println!("  decomposition {i}:");
            for line in scd.to_text().lines() {
                println!("    {line}");
            }
        }
        let lifts = lift_to_cube(&scds).unwrap();
        for (i, lift) in lifts.iter().enumerate() {
            let report = lift.verify();
            assert!(report.is_valid());
            println!("  lift {i}: {} chains of Q_{n}, verified", lift.chains().len());
        }
        for (i, a) in lifts.iter().enumerate() {
            for b in &lifts[i + 1..] {
                assert!(a.shared_edge(b).is_none());
            }
        }
        println!("  lifts are pairwise edge-disjoint");

        if let Some(dir) = &write_dir {
            let dir = Path::new(dir);
            std::fs::create_dir_all(dir).unwrap();
            for (i, scd) in scds.iter().enumerate() {
                std::fs::write(dir.join(format!("n{n}_{i}.scd")), scd.to_text()).unwrap();
            }
            for (i, lift) in lifts.iter().enumerate() {
                std::fs::write(dir.join(format!("q{n}_{i}.scd")), lift.to_text()).unwrap();
            }
            println!("  wrote n{n}_*.scd and q{n}_*.scd to {}", dir.display());
        }
    }

    let g = build_necklace_graph(5).unwrap();
    match search_disjoint_scds(&g, 4, 10_000_000) {
        SearchOutcome::Impossible => println!("N_5: four disjoint decompositions are impossible"),
        _ => println!("N_5: the four-decomposition search did not finish"),
    }
}
