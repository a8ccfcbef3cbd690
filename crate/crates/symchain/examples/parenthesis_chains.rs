//! Builds the parenthesis decomposition of a small cube and checks it against
//! the two other constructions that produce the same chains: the marker rule
//! and the union of all-zero lexical matchings.

use symchain::scd::{lexical_scd, marker_scd, parenthesis_scd, MarkerRule};

fn main() {
    let n = 4;
    let d0 = parenthesis_scd(n);
    println!("parenthesis decomposition of Q_{n}:");
    print!("{}", d0.to_text());
    println!("{}", d0.verify());

    let marker = marker_scd(n, MarkerRule::First).unwrap();
    let lexical = lexical_scd(n, &vec![0; n]).unwrap();
    println!("marker construction agrees: {}", marker == d0);
    println!("all-zero lexical union agrees: {}", lexical == d0);

    let complement = d0.complemented();
    println!("complemented copy:");
    print!("{}", complement.to_text());
    println!("{}", complement.verify());
}
