//! The special cycle factor on the middle four levels of an odd cube, built
//! from the two outermost lexical matchings, and its correspondence with
//! rotation orbits: the factor has exactly one cycle per orbit of path
//! starts under the tree rotation.

use symchain::middle4::{build_aux_graph, build_middle4_factor};

fn main() {
    for n in 1..=5 {
        let factor = build_middle4_factor(n).unwrap();
        let aux = build_aux_graph(n).unwrap();
        let label = if aux.orbit_count() == 1 { "orbit" } else { "orbits" };
        println!(
            "Q_{}: {} ({} rotation {label})",
            2 * n + 1,
            factor.census(),
            aux.orbit_count()
        );
    }

    let aux = build_aux_graph(3).unwrap();
    println!("rotation orbits of the path starts in Q_7:");
    for orbit in aux.orbits() {
        let words: Vec<String> = orbit.iter().map(|v| v.to_string()).collect();
        println!("  {}", words.join(" -> "));
    }
    println!(
        "flippable pairs linking the orbits of Q_7: {}",
        aux.edges().len()
    );
    for (x, y) in aux.spanning_tree() {
        println!("  joined through ({x}, {y})");
    }
}
