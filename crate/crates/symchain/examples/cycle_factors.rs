//! Cycle censuses of the factors on the middle 2*ell levels of odd cubes.
//!
//! Two edge-disjoint chain decompositions give one cycle factor per band
//! half-width ell. The first table uses the parenthesis decomposition and
//! its complement, the second the canonical product pair. Pass a number to
//! extend the tables beyond the default of five rows.

use symchain::factor::build_factor;
use symchain::product::product_scd_pair;
use symchain::scd::parenthesis_scd;

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("max row must be a number"))
        .unwrap_or(5);

    println!("cycle counts from the parenthesis pair, ell = 1..n+1:");
    for n in 1..=max_n {
        let dim = 2 * n + 1;
        let d = parenthesis_scd(dim);
        let dc = d.complemented();
        let counts: Vec<String> = (1..=n + 1)
            .map(|ell| build_factor(&d, &dc, ell).unwrap().census().count().to_string())
            .collect();
        println!("  Q_{dim}: {}", counts.join(" "));
    }

    println!("cycle counts from the product pair, ell = 1..n+1:");
    for n in 1..=max_n {
        let (d, dc) = product_scd_pair(n);
        let counts: Vec<String> = (1..=n + 1)
            .map(|ell| build_factor(&d, &dc, ell).unwrap().census().count().to_string())
            .collect();
        println!("  Q_{}: {}", 2 * n + 1, counts.join(" "));
    }

    let factor = build_factor(&parenthesis_scd(5), &parenthesis_scd(5).complemented(), 2).unwrap();
    println!("the middle four levels of Q_5 fall into: {}", factor.census());
}
