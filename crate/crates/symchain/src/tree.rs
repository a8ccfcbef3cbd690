//! Ordered rooted trees in bijection with Dyck words.
//!
//! Reading a Dyck word left to right, a 1 descends to a new child and a 0
//! returns to the parent. The word `1010` is the star with two edges, the
//! word `1100` the path with two edges.

use crate::{Error, Result, Vertex};

/// An ordered rooted tree. Node 0 is the root; child lists run left to
/// right. Node ids are assigned in preorder at construction and survive
/// mutations.
#[derive(Clone, Debug)]
pub struct RootedTree {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
}

impl RootedTree {
    /// The tree with a single node and no edges.
    pub fn trivial() -> Self {
        RootedTree {
            parent: vec![None],
            children: vec![Vec::new()],
        }
    }

    pub fn from_dyck(x: Vertex) -> Result<Self> {
        if !x.is_dyck_word() {
            return Err(Error::domain("from_dyck", x, "not a Dyck word"));
        }
        let mut t = RootedTree::trivial();
        let mut stack = vec![0usize];
        for i in 0..x.len() {
            if x.bit(i) {
                let v = t.parent.len();
                let top = *stack.last().unwrap();
                t.parent.push(Some(top));
                t.children.push(Vec::new());
                t.children[top].push(v);
                stack.push(v);
            } else {
                stack.pop();
            }
        }
        debug_assert_eq!(stack, [0]);
        Ok(t)
    }

    pub fn to_dyck(&self) -> Vertex {
        fn rec(t: &RootedTree, v: usize, out: &mut Vec<Vertex>) {
            for &c in &t.children[v] {
                out.push(Vertex::repeat(true, 1));
                rec(t, c, out);
                out.push(Vertex::repeat(false, 1));
            }
        }
        let mut parts = Vec::new();
        rec(self, 0, &mut parts);
        Vertex::concat_all(&parts)
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    pub fn edge_count(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.children[v].is_empty()
    }

    pub fn depth(&self, v: usize) -> usize {
        let mut d = 0;
        let mut v = v;
        while let Some(p) = self.parent[v] {
            d += 1;
            v = p;
        }
        d
    }

    /// Position of `v` in its parent's child list.
    pub fn child_index(&self, v: usize) -> usize {
        let p = self.parent[v].expect("root has no siblings");
        self.children[p].iter().position(|&c| c == v).unwrap()
    }

    /// Nodes in preorder, children left to right.
    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.node_count());
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            out.push(v);
            for &c in self.children[v].iter().rev() {
                stack.push(c);
            }
        }
        out
    }

    /// Among the deepest leaves, the first in preorder.
    pub fn leftmost_deepest_leaf(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for v in self.preorder() {
            if self.is_leaf(v) && v != 0 {
                let d = self.depth(v);
                if best.is_none_or(|(bd, _)| d > bd) {
                    best = Some((d, v));
                }
            }
        }
        best.map(|(_, v)| v)
    }

    /// Detaches the leaf `leaf` and reattaches it under `new_parent` at
    /// child position `pos`.
    pub fn move_leaf(&mut self, leaf: usize, new_parent: usize, pos: usize) {
        assert!(self.is_leaf(leaf) && leaf != 0);
        let old = self.parent[leaf].unwrap();
        let idx = self.child_index(leaf);
        self.children[old].remove(idx);
        assert!(pos <= self.children[new_parent].len());
        self.children[new_parent].insert(pos, leaf);
        self.parent[leaf] = Some(new_parent);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex::level;

    fn v(s: &str) -> Vertex {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print_round_trip() {
        for m in 0..=5 {
            for x in level(2 * m, m).filter(Vertex::is_dyck_word) {
                let t = RootedTree::from_dyck(x).unwrap();
                assert_eq!(t.edge_count(), m);
                assert_eq!(t.to_dyck(), x);
            }
        }
        assert!(RootedTree::from_dyck(v("01")).is_err());
    }

    #[test]
    fn structure_queries() {
        let t = RootedTree::from_dyck(v("110010")).unwrap();
        assert_eq!(t.node_count(), 4);
        assert_eq!(t.children(0), [1, 3]);
        assert_eq!(t.children(1), [2]);
        assert_eq!(t.parent(2), Some(1));
        assert!(t.is_leaf(2) && t.is_leaf(3) && !t.is_leaf(1));
        assert_eq!(t.depth(2), 2);
        assert_eq!(t.child_index(3), 1);
        assert_eq!(t.preorder(), [0, 1, 2, 3]);
        assert_eq!(t.leftmost_deepest_leaf(), Some(2));
        assert_eq!(RootedTree::trivial().leftmost_deepest_leaf(), None);

        let t = RootedTree::from_dyck(v("110100")).unwrap();
        assert_eq!(t.children(0), [1]);
        assert_eq!(t.children(1), [2, 3]);
    }

    #[test]
    fn deepest_leaf_prefers_the_left() {
        let t = RootedTree::from_dyck(v("11011000110100")).unwrap();
        let l = t.leftmost_deepest_leaf().unwrap();
        assert_eq!(t.depth(l), 3);
        let pre = t.preorder();
        let deepest: Vec<usize> = pre
            .iter()
            .copied()
            .filter(|&u| t.is_leaf(u) && t.depth(u) == 3)
            .collect();
        assert_eq!(l, deepest[0]);
    }

    #[test]
    fn leaf_moves() {
        let mut t = RootedTree::from_dyck(v("110100")).unwrap();
        t.move_leaf(2, 0, 0);
        assert_eq!(t.to_dyck(), v("101100"));
        t.move_leaf(2, 1, 0);
        assert_eq!(t.to_dyck(), v("110100"));
        t.move_leaf(3, 0, 1);
        assert_eq!(t.to_dyck(), v("110010"));
    }
}
