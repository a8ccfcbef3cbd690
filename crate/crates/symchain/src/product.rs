//! Products of symmetric chain decompositions.
//!
//! Decompositions of Q_a and Q_b combine into one of Q_{a+b}: the product of
//! two chains is a grid, and each grid splits into nested L-shaped chains
//! that are again symmetric. Two splitting rules are available, differing in
//! which coordinate moves first. Edges of a product step in exactly one of
//! the two factors, so products of edge-disjoint families remain
//! edge-disjoint no matter which rule each product uses.

use crate::scd::{Chain, ChainDecomposition};
use crate::{Error, Result};

/// How to split each grid of chain pairs into chains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductRule {
    /// Each chain climbs the first factor, then finishes along the second.
    FirstCoordinate,
    /// Each chain climbs the second factor, then finishes along the first.
    LastCoordinate,
}

/// The product decomposition of Q_{a+b}, with the first factor occupying the
/// leftmost bits.
pub fn product_scd(
    a: &ChainDecomposition,
    b: &ChainDecomposition,
    rule: ProductRule,
) -> ChainDecomposition {
    let n = a.n() + b.n();
    let mut chains = Vec::new();
    for ca in a.chains() {
        for cb in b.chains() {
            grid_chains(ca, cb, rule, &mut chains);
        }
    }
    ChainDecomposition::sorted(n, chains)
}

/// Splits the grid spanned by a pair of chains into `min(alpha, beta)`
/// L-shaped chains, where `alpha` and `beta` are the chain lengths.
fn grid_chains(ca: &Chain, cb: &Chain, rule: ProductRule, out: &mut Vec<Chain>) {
    let xs = ca.vertices();
    let ys = cb.vertices();
    let (alpha, beta) = (xs.len(), ys.len());
    let start = out.len();
    for j in 1..=alpha.min(beta) {
        let mut vertices = Vec::with_capacity(alpha + beta + 1 - 2 * j);
        match rule {
            ProductRule::FirstCoordinate => {
                for x in &xs[..=alpha - j] {
                    vertices.push(x.concat(ys[j - 1]));
                }
                for y in &ys[j..] {
                    vertices.push(xs[alpha - j].concat(*y));
                }
            }
            ProductRule::LastCoordinate => {
                for y in &ys[..=beta - j] {
                    vertices.push(xs[j - 1].concat(*y));
                }
                for x in &xs[j..] {
                    vertices.push(x.concat(ys[beta - j]));
                }
            }
        }
        out.push(Chain::new_unchecked(vertices));
    }
    debug_assert!(covers_grid(&out[start..], alpha * beta));
}

fn covers_grid(chains: &[Chain], cells: usize) -> bool {
    let mut seen = std::collections::HashSet::new();
    let mut count = 0;
    for c in chains {
        for v in c.vertices() {
            count += 1;
            seen.insert(*v);
        }
    }
    count == cells && seen.len() == cells
}

/// Zips two equal-size families of decompositions into their products. If
/// both families are pairwise edge-disjoint, so is the result.
pub fn product_scd_family(
    left: &[ChainDecomposition],
    right: &[ChainDecomposition],
    rule: ProductRule,
) -> Result<Vec<ChainDecomposition>> {
    if left.len() != right.len() {
        return Err(Error::InvalidScd(format!(
            "cannot pair {} decompositions with {}",
            left.len(),
            right.len()
        )));
    }
    Ok(left
        .iter()
        .zip(right)
        .map(|(a, b)| product_scd(a, b, rule))
        .collect())
}

/// Two edge-disjoint decompositions of the odd cube Q_{2n+1}, built as
/// iterated [`ProductRule::FirstCoordinate`] products of Q_3 with n-1 copies
/// of Q_2: the first from parenthesis decompositions, the second from their
/// complements. Edges of the first project onto parenthesis edges in every
/// factor and edges of the second onto complement edges, which keeps the two
/// results edge-disjoint.
pub fn product_scd_pair(n: usize) -> (ChainDecomposition, ChainDecomposition) {
    assert!(n >= 1, "the smallest odd cube handled here is Q_3");
    let q2 = crate::scd::parenthesis_scd(2);
    let q2c = q2.complemented();
    let mut d = crate::scd::parenthesis_scd(3);
    let mut dc = d.complemented();
    for _ in 1..n {
        d = product_scd(&d, &q2, ProductRule::FirstCoordinate);
        dc = product_scd(&dc, &q2c, ProductRule::FirstCoordinate);
    }
    (d, dc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scd::{marker_scd, parenthesis_scd, MarkerRule};

    fn chain_strings(d: &ChainDecomposition) -> Vec<String> {
        d.chains().iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn both_rules_on_a_single_grid() {
        let q1 = parenthesis_scd(1);
        let first = product_scd(&q1, &q1, ProductRule::FirstCoordinate);
        assert_eq!(chain_strings(&first), ["00 10 11", "01"]);
        let last = product_scd(&q1, &q1, ProductRule::LastCoordinate);
        assert_eq!(chain_strings(&last), ["00 01 11", "10"]);
    }

    #[test]
    fn iterated_products_reproduce_the_parenthesis_rule() {
        let q1 = parenthesis_scd(1);
        let mut first = q1.clone();
        let mut last = q1.clone();
        for n in 2..=6 {
            first = product_scd(&first, &q1, ProductRule::FirstCoordinate);
            last = product_scd(&last, &q1, ProductRule::LastCoordinate);
            assert_eq!(first, parenthesis_scd(n), "n={n}");
            assert_eq!(last, parenthesis_scd(n).complemented(), "n={n}");
        }
    }

    #[test]
    fn products_of_symmetric_inputs_verify() {
        let a = parenthesis_scd(3);
        let b = parenthesis_scd(4);
        for rule in [ProductRule::FirstCoordinate, ProductRule::LastCoordinate] {
            let d = product_scd(&a, &b, rule);
            assert_eq!(d.n(), 7);
            let report = d.verify();
            assert!(report.is_valid(), "{rule:?}: {report}");
        }
    }

    #[test]
    fn odd_cube_pairs_are_disjoint_and_valid() {
        for n in 1..=4 {
            let (d, dc) = product_scd_pair(n);
            assert_eq!(d.n(), 2 * n + 1);
            assert!(d.verify().is_valid(), "n={n}");
            assert!(dc.verify().is_valid(), "n={n}");
            assert!(d.shared_edge(&dc).is_none(), "n={n}");
        }
    }

    #[test]
    fn families_multiply_without_sharing_edges() {
        let d0 = marker_scd(4, MarkerRule::First).unwrap();
        let d1 = marker_scd(4, MarkerRule::Second).unwrap();
        let triple = vec![d0.clone(), d0.complemented(), d1];
        let products =
            product_scd_family(&triple, &triple, ProductRule::FirstCoordinate).unwrap();
        assert_eq!(products.len(), 3);
        for p in &products {
            assert_eq!(p.n(), 8);
            assert!(p.verify().is_valid());
        }
        for i in 0..products.len() {
            for j in i + 1..products.len() {
                assert!(products[i].shared_edge(&products[j]).is_none());
            }
        }
        assert!(product_scd_family(&triple, &triple[..2], ProductRule::LastCoordinate).is_err());
    }
}
