//! Four pairwise edge-disjoint symmetric chain decompositions of Q_13,
//! combined from the four marker-based decompositions of Q_6 and the four
//! necklace lifts of Q_7 shipped as fixtures.

use symchain::product::{product_scd_family, ProductRule};
use symchain::scd::{marker_scd, parenthesis_scd, ChainDecomposition, MarkerRule};

const Q7_LIFTS: [&str; 4] = [
    include_str!("../fixtures/q7_0.scd"),
    include_str!("../fixtures/q7_1.scd"),
    include_str!("../fixtures/q7_2.scd"),
    include_str!("../fixtures/q7_3.scd"),
];

fn main() {
    let d0 = parenthesis_scd(6);
    let d1 = marker_scd(6, MarkerRule::Second).unwrap();
    let left = vec![d0.clone(), d0.complemented(), d1.clone(), d1.complemented()];
    let right: Vec<ChainDecomposition> = Q7_LIFTS
        .iter()
        .map(|text| ChainDecomposition::from_text(text).unwrap())
        .collect();

    let products = product_scd_family(&left, &right, ProductRule::FirstCoordinate).unwrap();
    for (i, scd) in products.iter().enumerate() {
        println!("product {i}: {}", scd.verify());
    }
    for (i, a) in products.iter().enumerate() {
        for (j, b) in products.iter().enumerate().skip(i + 1) {
            match a.shared_edge(b) {
                None => println!("products {i} / {j}: disjoint"),
                Some((x, y)) => println!("products {i} / {j}: share {x} - {y}"),
            }
        }
    }
}
