//! The lexical matchings between consecutive levels of a small cube.
//!
//! Between levels k and k+1 there are max(k, n-k-1) + 1 of them. Each
//! matches every vertex of the smaller level; the example prints all of them
//! for one level pair and shows how a vertex's partner moves with the index.

use symchain::lexical::{lex_matching, lex_up, max_index};
use symchain::Vertex;

fn main() {
    let (n, k) = (5usize, 2usize);
    for i in 0..=max_index(n, k) {
        let matching = lex_matching(n, k, i).unwrap();
        println!("M^{i} between levels {k} and {} of Q_{n}:", k + 1);
        for (x, y) in &matching {
            println!("  {x} - {y}");
        }
    }

    let x: Vertex = "01010".parse().unwrap();
    println!("partners of {x} going up:");
    for i in 0..=max_index(n, k) {
        match lex_up(x, i).unwrap() {
            Some(y) => println!("  M^{i}: {y}"),
            None => println!("  M^{i}: unmatched"),
        }
    }
}
