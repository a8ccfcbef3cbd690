//! Four pairwise edge-disjoint symmetric chain decompositions of an even
//! cube: the parenthesis decomposition, the second marker rule, and their
//! complements. For Q_6 the four together saturate the middle level: every
//! edge incident to level 3 is used exactly once.

use std::collections::HashSet;

use symchain::scd::{marker_scd, parenthesis_scd, MarkerRule};
use symchain::Vertex;

fn main() {
    let n = 6;
    let d0 = parenthesis_scd(n);
    let d1 = marker_scd(n, MarkerRule::Second).unwrap();
    let family = [
        ("d0", d0.clone()),
        ("d0c", d0.complemented()),
        ("d1", d1.clone()),
        ("d1c", d1.complemented()),
    ];

    for (name, scd) in &family {
        println!("{name}: {}", scd.verify());
    }
    for (i, (a, left)) in family.iter().enumerate() {
        for (b, right) in &family[i + 1..] {
            match left.shared_edge(right) {
                None => println!("{a} / {b}: disjoint"),
                Some((x, y)) => println!("{a} / {b}: share {x} - {y}"),
            }
        }
    }

    let mut middle_edges: HashSet<(Vertex, Vertex)> = HashSet::new();
    for (_, scd) in &family {
        middle_edges.extend(
            scd.edges()
                .filter(|&(a, b)| a.weight() == n / 2 || b.weight() == n / 2),
        );
    }
    let incident = 2 * 3 * 20;
    println!(
        "edges incident to the middle level used: {} of {}",
        middle_edges.len(),
        incident
    );
}
