//! Builds the Hamilton cycle through the middle four levels of Q_{2n+1} and
//! verifies it: every vertex of levels n-1 through n+2 appears exactly once
//! and consecutive vertices differ in a single bit, wrapping around.
//!
//! Pass n to pick the cube (default 2, the thirty-vertex cycle in Q_5). The
//! full listing is printed for n up to 3, a summary beyond that.

use symchain::middle4::hamilton_middle4;

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("n must be a number"))
        .unwrap_or(2);

    let cycle = hamilton_middle4(n).expect("the construction verifies itself");
    println!(
        "Hamilton cycle through levels {}..{} of Q_{}: {} vertices",
        n - 1,
        n + 2,
        2 * n + 1,
        cycle.len()
    );
    if n <= 3 {
        for v in &cycle {
            println!("{v}");
        }
    } else {
        let show = 5;
        for v in &cycle[..show] {
            println!("{v}");
        }
        println!("... {} more ...", cycle.len() - show - 1);
        println!("{}", cycle.last().unwrap());
    }
}
