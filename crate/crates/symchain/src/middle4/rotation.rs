//! The rotation on first vertices of paths, its inverse, and the map onto
//! rooted trivalent trees whose classes count the factor cycles.

use crate::tree::RootedTree;
use crate::vertex::{level, DyckClass, Vertex};
use crate::{Error, Result};

/// First vertices of paths in Q_{2n+1}: level-(n+1) lattice paths that stay
/// nonnegative and return to zero. Sorted ascending.
pub(crate) fn first_vertices(n: usize) -> Vec<Vertex> {
    level(2 * n + 1, n + 1)
        .filter(|x| x.classify() == DyckClass::TouchesZero)
        .collect()
}

/// The first vertex whose tree is a star with one pendant edge at the root:
/// `1 (10)^{n-1} 0 1`.
pub(crate) fn star_first_vertex(n: usize) -> Vertex {
    let mut x = Vertex::repeat(true, 1);
    for _ in 1..n {
        x = x.concat(Vertex::new(0b10, 2));
    }
    x.concat(Vertex::new(0b01, 2))
}

pub(crate) fn check_first_vertex(op: &'static str, x: Vertex) -> Result<()> {
    if x.len() < 3 || x.len().is_multiple_of(2) {
        return Err(Error::domain(op, x, "expected an odd length of at least three"));
    }
    if x.weight() != x.len().div_ceil(2) || x.classify() != DyckClass::TouchesZero {
        return Err(Error::domain(
            op,
            x,
            "expected a nonnegative path with one extra up-step that returns to zero",
        ));
    }
    Ok(())
}

/// Index of the last prefix with height zero.
pub(crate) fn last_zero_touch(x: Vertex) -> usize {
    let hs = x.heights();
    (0..hs.len())
        .rev()
        .find(|&j| hs[j] == 0)
        .expect("the empty prefix has height zero")
}

/// The leftmost subtree of `(x, 0)` has at least two edges.
pub(crate) fn left_heavy(x: Vertex) -> bool {
    let (u, _) = x.canonical_decompose().expect("first vertices touch zero");
    !u.is_empty()
}

/// The rightmost subtree of `(x, 0)` has at least two edges.
pub(crate) fn right_heavy(x: Vertex) -> bool {
    last_zero_touch(x) + 1 < x.len()
}

/// Splits a nonempty Dyck word around its last top-level block,
/// `x = (prefix, 1, interior, 0)`.
fn last_block_split(x: Vertex) -> (Vertex, Vertex) {
    debug_assert!(!x.is_empty() && x.is_dyck_word());
    let hs = x.heights();
    let s = (0..x.len())
        .rev()
        .find(|&j| hs[j] == 0)
        .expect("Dyck words return to height zero");
    (x.slice(0, s), x.slice(s + 1, x.len() - 1))
}

pub(crate) fn tree_of(x: Vertex) -> RootedTree {
    RootedTree::from_dyck(x.concat(Vertex::repeat(false, 1))).expect("first vertices close to tree words")
}

pub(crate) fn first_vertex_of(t: &RootedTree) -> Vertex {
    let w = t.to_dyck();
    w.slice(0, w.len() - 1)
}

pub(crate) fn tree_first_vertex(op: &'static str, t: &RootedTree) -> Result<Vertex> {
    let w = t.to_dyck();
    if w.is_empty() {
        return Err(Error::domain(op, w, "the trivial tree has no first vertex"));
    }
    let x = w.slice(0, w.len() - 1);
    check_first_vertex(op, x)?;
    Ok(x)
}

/// Rotates a first vertex to the first vertex of the next path on the same
/// factor cycle. Writing `x = (1, u, 0, v)` and splitting `v` at its last
/// return to zero into a balanced part `a` and a tail `(1, v3)`, the image
/// moves the leftmost subtree: when `a` is empty the result is
/// `(u, 1, 1, v3, 0)`, or `(1, 0, v3, 1)` for empty `u`; otherwise `a`
/// splits around its last block as `(v1, 1, v2, 0)` and the result is
/// `(u, 1, 1, v1, 0, v2, 1, v3, 0)`, or `(1, 1, v1, 0, v2, 0, v3, 1)` for
/// empty `u`.
pub fn rho_first_vertex(x: Vertex) -> Result<Vertex> {
    check_first_vertex("rho", x)?;
    let (u, v) = x.canonical_decompose()?;
    let t = last_zero_touch(v);
    let a = v.slice(0, t);
    let v3 = v.slice(t + 1, v.len());
    let one = Vertex::repeat(true, 1);
    let zero = Vertex::repeat(false, 1);
    Ok(if a.is_empty() {
        if u.is_empty() {
            Vertex::concat_all(&[one, zero, v3, one])
        } else {
            Vertex::concat_all(&[u, one, one, v3, zero])
        }
    } else {
        let (v1, v2) = last_block_split(a);
        if u.is_empty() {
            Vertex::concat_all(&[one, one, v1, zero, v2, zero, v3, one])
        } else {
            Vertex::concat_all(&[u, one, one, v1, zero, v2, one, v3, zero])
        }
    })
}

/// Inverse of [`rho_first_vertex`]. Splits `y` at its last return to zero
/// into a balanced part `u` and a tail `(1, z)` and undoes the four cases.
pub fn rho_inverse_first_vertex(y: Vertex) -> Result<Vertex> {
    check_first_vertex("rho_inverse", y)?;
    let t = last_zero_touch(y);
    let z = y.slice(t + 1, y.len());
    let one = Vertex::repeat(true, 1);
    let zero = Vertex::repeat(false, 1);
    Ok(if !z.is_empty() {
        let u = y.slice(0, t);
        let (v1, rest) = z.canonical_decompose()?;
        if rest.is_empty() {
            Vertex::concat_all(&[one, u, zero, one, v1])
        } else {
            let (v2, v3) = last_block_split(rest);
            Vertex::concat_all(&[one, u, zero, v1, one, v2, zero, one, v3])
        }
    } else {
        let u = y.slice(0, t);
        let (w, v3) = u.canonical_decompose()?;
        if w.is_empty() {
            Vertex::concat_all(&[one, zero, one, v3])
        } else {
            let (v1, v2) = w.canonical_decompose()?;
            Vertex::concat_all(&[one, zero, v1, one, v2, zero, one, v3])
        }
    })
}

/// Tree form of [`rho_first_vertex`].
pub fn rho(t: &RootedTree) -> Result<RootedTree> {
    let x = tree_first_vertex("rho", t)?;
    let y = rho_first_vertex(x)?;
    RootedTree::from_dyck(y.concat(Vertex::repeat(false, 1)))
}

/// Tree form of [`rho_inverse_first_vertex`].
pub fn rho_inverse(t: &RootedTree) -> Result<RootedTree> {
    let y = tree_first_vertex("rho_inverse", t)?;
    let x = rho_inverse_first_vertex(y)?;
    RootedTree::from_dyck(x.concat(Vertex::repeat(false, 1)))
}

/// A plane binary tree: every vertex has zero or two ordered children.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BinNode {
    Leaf,
    Node(Box<BinNode>, Box<BinNode>),
}

/// A trivalent tree rooted at an internal vertex, given by the three
/// subtrees hanging off the root in order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TrivalentTree {
    children: [BinNode; 3],
}

impl TrivalentTree {
    pub fn children(&self) -> &[BinNode; 3] {
        &self.children
    }
}

fn first_split_tree(x: Vertex) -> BinNode {
    if x.is_empty() {
        return BinNode::Leaf;
    }
    let (u, v) = x.canonical_decompose().expect("nonempty Dyck word");
    BinNode::Node(Box::new(first_split_tree(u)), Box::new(last_split_tree(v)))
}

fn last_split_tree(x: Vertex) -> BinNode {
    if x.is_empty() {
        return BinNode::Leaf;
    }
    let (pre, int) = last_block_split(x);
    BinNode::Node(Box::new(first_split_tree(pre)), Box::new(last_split_tree(int)))
}

/// Maps a tree word `(x, 0)` to a rooted trivalent tree. Writing the word
/// as `(1, u, 0, v, 1, w, 0)`, the root's subtrees are built from `u` by
/// peeling first blocks and from `v` and `w` by peeling last blocks. The
/// map is injective, and rotating a first vertex corresponds to re-rooting
/// the trivalent tree, so rotation orbits match unrooted plane trees.
pub fn tau(word: Vertex) -> Result<TrivalentTree> {
    if word.is_empty() || word.bit(word.len() - 1) {
        return Err(Error::domain(
            "tau",
            word,
            "expected a tree word ending in a down-step",
        ));
    }
    check_first_vertex("tau", word.slice(0, word.len() - 1))?;
    let (u, rest) = word.canonical_decompose()?;
    let (mid, w) = last_block_split(rest);
    Ok(TrivalentTree {
        children: [first_split_tree(u), last_split_tree(mid), last_split_tree(w)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial;
    use std::collections::HashSet;

    fn v(s: &str) -> Vertex {
        s.parse().unwrap()
    }

    fn catalan(k: usize) -> u128 {
        binomial(2 * k, k) / (k as u128 + 1)
    }

    #[test]
    fn the_rotation_cycles_three_first_vertices_of_q5() {
        assert_eq!(rho_first_vertex(v("11001")).unwrap(), v("10110"));
        assert_eq!(rho_first_vertex(v("10110")).unwrap(), v("10101"));
        assert_eq!(rho_first_vertex(v("10101")).unwrap(), v("11001"));
    }

    #[test]
    fn the_rotation_permutes_the_first_vertices() {
        for n in 1..=6 {
            let all = first_vertices(n);
            assert_eq!(all.len() as u128, catalan(n + 1) - catalan(n));
            let image: HashSet<Vertex> = all.iter().map(|&x| rho_first_vertex(x).unwrap()).collect();
            assert_eq!(image.len(), all.len());
            assert!(all.iter().all(|x| image.contains(x)));
            for &x in &all {
                assert_eq!(rho_inverse_first_vertex(rho_first_vertex(x).unwrap()).unwrap(), x);
                assert_eq!(rho_first_vertex(rho_inverse_first_vertex(x).unwrap()).unwrap(), x);
            }
        }
    }

    #[test]
    fn the_tree_form_matches_the_word_form() {
        for &x in first_vertices(3).iter() {
            let t = tree_of(x);
            assert_eq!(first_vertex_of(&rho(&t).unwrap()), rho_first_vertex(x).unwrap());
            assert_eq!(
                first_vertex_of(&rho_inverse(&t).unwrap()),
                rho_inverse_first_vertex(x).unwrap()
            );
        }
    }

    #[test]
    fn paths_outside_the_domain_are_rejected() {
        assert!(rho_first_vertex(v("1100")).is_err());
        assert!(rho_first_vertex(v("11000")).is_err());
        assert!(rho_first_vertex(v("10111")).is_err());
        assert!(rho_first_vertex(v("01101")).is_err());
    }

    #[test]
    fn star_vertices_oscillate_then_close() {
        assert_eq!(star_first_vertex(1), v("101"));
        assert_eq!(star_first_vertex(2), v("11001"));
        assert_eq!(star_first_vertex(3), v("1101001"));
        for n in 1..=6 {
            let s = star_first_vertex(n);
            assert!(check_first_vertex("test", s).is_ok());
        }
    }

    #[test]
    fn heaviness_looks_at_the_outer_subtrees() {
        assert!(left_heavy(v("11001")));
        assert!(!right_heavy(v("11001")));
        assert!(!left_heavy(v("10110")));
        assert!(right_heavy(v("10110")));
        assert!(!left_heavy(v("10101")));
        assert!(!right_heavy(v("10101")));
    }

    #[test]
    fn the_smallest_tree_maps_to_the_claw() {
        let t = tau(v("1010")).unwrap();
        assert_eq!(t.children(), &[BinNode::Leaf, BinNode::Leaf, BinNode::Leaf]);
    }

    #[test]
    fn trivalent_trees_distinguish_first_vertices() {
        for n in 1..=6 {
            let all = first_vertices(n);
            let images: HashSet<TrivalentTree> = all
                .iter()
                .map(|&x| tau(x.concat(Vertex::repeat(false, 1))).unwrap())
                .collect();
            assert_eq!(images.len(), all.len());
        }
    }

    #[test]
    fn tau_rejects_words_that_are_not_trees() {
        assert!(tau(v("10")).is_err());
        assert!(tau(v("1001")).is_err());
        assert!(tau(v("11001")).is_err());
    }
}
