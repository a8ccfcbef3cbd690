//! Joining the factor cycles into one Hamilton cycle: flippable pairs of
//! first vertices, the six-cycles that merge two factor cycles, the graph on
//! rotation orbits, and the move sequences that certify its connectivity.

use std::collections::{HashMap, HashSet, VecDeque};

use super::rotation::{
    first_vertex_of, first_vertices, left_heavy, rho_first_vertex, rho_inverse_first_vertex,
    right_heavy, star_first_vertex, tree_first_vertex, tree_of,
};
use super::{assemble_factor, build_e_sets, build_paths, ordered_edge, PathSystem};
use crate::tree::RootedTree;
use crate::vertex::{DyckClass, Vertex};
use crate::{Error, Result};

/// All pairs `(x, y)` of first vertices whose trees differ by one pull of a
/// pendant edge: `x` carries the pattern `110` at a position whose prefix
/// stays strictly positive, and `y` swaps it to `101`.
pub fn enumerate_flippable_pairs(n: usize) -> Vec<(Vertex, Vertex)> {
    let mut pairs = Vec::new();
    for x in first_vertices(n) {
        let hs = x.heights();
        for a in 0..x.len().saturating_sub(2) {
            if !(x.bit(a) && x.bit(a + 1) && !x.bit(a + 2)) {
                continue;
            }
            if (1..=a).any(|j| hs[j] <= 0) {
                continue;
            }
            let y = x.flip(a + 1).flip(a + 2);
            debug_assert_eq!(y.classify(), DyckClass::TouchesZero);
            pairs.push((x, y));
        }
    }
    pairs
}

fn flippable_offset(x: Vertex, y: Vertex) -> Option<usize> {
    if x.len() != y.len() {
        return None;
    }
    let hs = x.heights();
    (0..x.len().saturating_sub(2)).find(|&a| {
        x.bit(a)
            && x.bit(a + 1)
            && !x.bit(a + 2)
            && y == x.flip(a + 1).flip(a + 2)
            && (1..=a).all(|j| hs[j] > 0)
    })
}

/// Six vertices in levels n+1 and n+2 forming a cycle that shares two edges
/// with the path of `x` and one with the path of `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SixCycle {
    vertices: [Vertex; 6],
}

impl SixCycle {
    pub fn vertices(&self) -> &[Vertex; 6] {
        &self.vertices
    }

    /// The six edges in normalized order.
    pub fn edges(&self) -> [(Vertex, Vertex); 6] {
        let v = &self.vertices;
        std::array::from_fn(|i| ordered_edge(v[i], v[(i + 1) % 6]))
    }
}

/// Builds the six-cycle of a flippable pair. The common shape of `x` and
/// `y` around the differing positions leaves three free slots; substituting
/// the six non-constant triples in cyclic Gray order gives the cycle. The
/// overlap required of it is checked before returning.
pub fn six_cycle(ps: &PathSystem, x: Vertex, y: Vertex) -> Result<SixCycle> {
    let a = flippable_offset(x, y).ok_or_else(|| {
        Error::Verification(format!("({x}, {y}) is not a flippable pair"))
    })?;
    let hs = x.heights();
    let d = hs[a] as usize;

    let mut lifts = Vec::with_capacity(d + 1);
    for i in 1..=d {
        let l = (0..a)
            .rev()
            .find(|&p| hs[p] == i as i32 - 1)
            .expect("the prefix climbs through every height");
        lifts.push(l);
    }
    lifts.push(a);
    let ups: Vec<Vertex> = (0..d).map(|i| x.slice(lifts[i] + 1, lifts[i + 1])).collect();

    let mut idx = a + 3;
    let mut downs = Vec::with_capacity(d + 1);
    for target in (0..=d as i32).rev() {
        let stop = (idx..x.len())
            .find(|&t| hs[t + 1] == target)
            .expect("the suffix descends through every height");
        downs.push(x.slice(idx, stop));
        idx = stop + 1;
    }
    let tail = x.slice(idx, x.len());

    let mut template: Vec<Option<bool>> = Vec::with_capacity(x.len());
    let push_word = |template: &mut Vec<Option<bool>>, w: Vertex| {
        for i in 0..w.len() {
            template.push(Some(w.bit(i)));
        }
    };
    for &u in &ups {
        push_word(&mut template, u);
        template.push(Some(false));
    }
    template.push(Some(true));
    template.push(None);
    template.push(None);
    push_word(&mut template, downs[0]);
    template.push(None);
    for &p in &downs[1..] {
        push_word(&mut template, p);
        template.push(Some(true));
    }
    push_word(&mut template, tail);
    debug_assert_eq!(template.len(), x.len());
    debug_assert_eq!(template.iter().filter(|s| s.is_none()).count(), 3);

    const TRIPLES: [[bool; 3]; 6] = [
        [true, false, false],
        [true, true, false],
        [false, true, false],
        [false, true, true],
        [false, false, true],
        [true, false, true],
    ];
    let vertices: [Vertex; 6] = std::array::from_fn(|i| {
        let mut star = 0;
        let mut bits = 0u128;
        for slot in &template {
            let b = slot.unwrap_or_else(|| {
                star += 1;
                TRIPLES[i][star - 1]
            });
            bits = (bits << 1) | b as u128;
        }
        Vertex::new(bits, template.len())
    });

    let path_edges = |first: Vertex| -> Result<HashSet<(Vertex, Vertex)>> {
        let path = ps.path_starting_at(first).ok_or_else(|| {
            Error::Verification(format!("{first} does not start a path"))
        })?;
        Ok(path.windows(2).map(|p| ordered_edge(p[0], p[1])).collect())
    };
    let px = path_edges(x)?;
    let py = path_edges(y)?;
    let cycle = SixCycle { vertices };
    let shared_x: Vec<(Vertex, Vertex)> =
        cycle.edges().into_iter().filter(|e| px.contains(e)).collect();
    let shared_y = cycle.edges().into_iter().filter(|e| py.contains(e)).count();
    let endpoints: HashSet<Vertex> = shared_x.iter().flat_map(|&(a, b)| [a, b]).collect();
    if shared_x.len() != 2 || endpoints.len() != 4 || shared_y != 1 {
        return Err(Error::Verification(format!(
            "the six-cycle of ({x}, {y}) shares {} edges with the path of x and {} with the path of y",
            shared_x.len(),
            shared_y
        )));
    }
    Ok(cycle)
}

/// The graph whose nodes are rotation orbits of first vertices and whose
/// edges are the flippable pairs. Building it checks connectivity.
pub struct AuxGraph {
    n: usize,
    orbits: Vec<Vec<Vertex>>,
    orbit_of: HashMap<Vertex, usize>,
    edges: Vec<(usize, usize, (Vertex, Vertex))>,
}

impl AuxGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    /// Each orbit in rotation order, starting from its smallest member.
    pub fn orbits(&self) -> &[Vec<Vertex>] {
        &self.orbits
    }

    pub fn orbit_of(&self, x: Vertex) -> Option<usize> {
        self.orbit_of.get(&x).copied()
    }

    /// Labeled edges, one per flippable pair; self-loops are kept.
    pub fn edges(&self) -> &[(usize, usize, (Vertex, Vertex))] {
        &self.edges
    }

    /// Breadth-first spanning tree rooted at the orbit of the star tree.
    /// Parallel edges collapse to the smallest labeled pair. The result
    /// lists one flippable pair per tree edge, in discovery order.
    pub fn spanning_tree(&self) -> Vec<(Vertex, Vertex)> {
        let mut best: HashMap<(usize, usize), (Vertex, Vertex)> = HashMap::new();
        for &(a, b, pair) in &self.edges {
            if a == b {
                continue;
            }
            let key = (a.min(b), a.max(b));
            let entry = best.entry(key).or_insert(pair);
            if pair < *entry {
                *entry = pair;
            }
        }
        let mut adjacency = vec![Vec::new(); self.orbits.len()];
        for &(a, b) in best.keys() {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        let root = self.orbit_of[&star_first_vertex(self.n)];
        let mut seen = vec![false; self.orbits.len()];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        let mut tree = Vec::with_capacity(self.orbits.len().saturating_sub(1));
        while let Some(a) = queue.pop_front() {
            for &b in &adjacency[a] {
                if !seen[b] {
                    seen[b] = true;
                    tree.push(best[&(a.min(b), a.max(b))]);
                    queue.push_back(b);
                }
            }
        }
        assert!(seen.iter().all(|&s| s), "the orbit graph is connected");
        tree
    }
}

pub fn build_aux_graph(n: usize) -> Result<AuxGraph> {
    if n == 0 {
        return Err(Error::BadDimension {
            op: "build_aux_graph",
            n,
            detail: "first vertices need dimension at least three",
        });
    }
    let mut orbits = Vec::new();
    let mut orbit_of = HashMap::new();
    for x in first_vertices(n) {
        if orbit_of.contains_key(&x) {
            continue;
        }
        let id = orbits.len();
        let mut orbit = Vec::new();
        let mut cur = x;
        loop {
            orbit.push(cur);
            orbit_of.insert(cur, id);
            cur = rho_first_vertex(cur)?;
            if cur == x {
                break;
            }
        }
        orbits.push(orbit);
    }
    let edges: Vec<(usize, usize, (Vertex, Vertex))> = enumerate_flippable_pairs(n)
        .into_iter()
        .map(|(x, y)| (orbit_of[&x], orbit_of[&y], (x, y)))
        .collect();

    let mut adjacency = vec![Vec::new(); orbits.len()];
    for &(a, b, _) in &edges {
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    let mut seen = vec![false; orbits.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(a) = queue.pop_front() {
        for &b in &adjacency[a] {
            if !seen[b] {
                seen[b] = true;
                queue.push_back(b);
            }
        }
    }
    if !seen.iter().all(|&s| s) {
        return Err(Error::Verification(
            "a rotation orbit is unreachable through flippable pairs".into(),
        ));
    }
    Ok(AuxGraph { n, orbits, orbit_of, edges })
}

fn cycle_from_edges(edges: &HashSet<(Vertex, Vertex)>) -> Result<Vec<Vertex>> {
    let mut adjacency: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    for &(a, b) in edges {
        adjacency.entry(a).or_default().push(b);
        adjacency.entry(b).or_default().push(a);
    }
    for (v, nbrs) in &adjacency {
        if nbrs.len() != 2 {
            return Err(Error::Verification(format!(
                "vertex {v} has degree {} after joining, expected two",
                nbrs.len()
            )));
        }
    }
    let start = *adjacency.keys().min().expect("joined graph is nonempty");
    let mut cycle = vec![start];
    let first = &adjacency[&start];
    let mut prev = start;
    let mut cur = *first.iter().min().expect("degree two");
    while cur != start {
        cycle.push(cur);
        let nbrs = &adjacency[&cur];
        let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
        prev = cur;
        cur = next;
    }
    if cycle.len() != adjacency.len() {
        return Err(Error::Verification(format!(
            "joining left {} of {} vertices on separate cycles",
            adjacency.len() - cycle.len(),
            adjacency.len()
        )));
    }
    Ok(cycle)
}

fn verify_hamilton(n: usize, cycle: &[Vertex]) -> Result<()> {
    let dim = 2 * n + 1;
    let expected: usize = (n - 1..=n + 2).map(|k| crate::binomial(dim, k) as usize).sum();
    if cycle.len() != expected {
        return Err(Error::Verification(format!(
            "the cycle visits {} vertices, the middle four levels of Q_{dim} hold {expected}",
            cycle.len()
        )));
    }
    let distinct: HashSet<Vertex> = cycle.iter().copied().collect();
    if distinct.len() != cycle.len() {
        return Err(Error::Verification("the cycle repeats a vertex".into()));
    }
    for (i, &a) in cycle.iter().enumerate() {
        let b = cycle[(i + 1) % cycle.len()];
        let differ = (a.bits() ^ b.bits()).count_ones();
        if a.len() != dim || differ != 1 {
            return Err(Error::Verification(format!("{a} and {b} are not adjacent in Q_{dim}")));
        }
        let w = a.weight();
        if w + 1 < n || w > n + 2 {
            return Err(Error::Verification(format!("{a} lies outside the middle four levels")));
        }
    }
    Ok(())
}

/// A Hamilton cycle through the middle four levels of Q_{2n+1}: the cycle
/// factor with one six-cycle toggled per spanning-tree edge of the orbit
/// graph. The result is fully verified before it is returned and starts at
/// the smallest vertex, moving toward its smaller neighbor.
pub fn hamilton_middle4(n: usize) -> Result<Vec<Vertex>> {
    let ps = build_paths(n)?;
    let es = build_e_sets(&ps)?;
    let factor = assemble_factor(&ps, &es)?;
    let aux = build_aux_graph(n)?;
    if aux.orbit_count() != factor.cycle_count() {
        return Err(Error::Verification(format!(
            "expected one factor cycle per rotation orbit, found {} cycles and {} orbits",
            factor.cycle_count(),
            aux.orbit_count()
        )));
    }
    let mut edges = factor.edge_set();
    for (x, y) in aux.spanning_tree() {
        for e in six_cycle(&ps, x, y)?.edges() {
            if !edges.remove(&e) {
                edges.insert(e);
            }
        }
    }
    let cycle = cycle_from_edges(&edges)?;
    verify_hamilton(n, &cycle)?;
    Ok(cycle)
}

/// One step of the normalization that witnesses connectivity of the orbit
/// graph. Rotations act at the root; pulls move a pendant edge between a
/// vertex of the leftmost subtree and its predecessor, and carry the first
/// vertices before and after the move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    HeavyRot,
    LightRot,
    InvHeavyRot,
    InvLightRot,
    Pull { from: Vertex, to: Vertex },
    InvPull { from: Vertex, to: Vertex },
}

/// Applies one move to a first vertex, checking that the move is legal
/// there.
pub fn apply_move(x: Vertex, mv: &Move) -> Result<Vertex> {
    super::rotation::check_first_vertex("apply_move", x)?;
    match *mv {
        Move::HeavyRot => {
            if !left_heavy(x) {
                return Err(Error::domain(
                    "apply_move",
                    x,
                    "a heavy rotation needs at least two edges in the leftmost subtree",
                ));
            }
            rho_first_vertex(x)
        }
        Move::LightRot => {
            if left_heavy(x) {
                return Err(Error::domain(
                    "apply_move",
                    x,
                    "a light rotation needs a single pendant edge on the left",
                ));
            }
            rho_first_vertex(x)
        }
        Move::InvHeavyRot => {
            if !right_heavy(x) {
                return Err(Error::domain(
                    "apply_move",
                    x,
                    "an inverse heavy rotation needs at least two edges in the rightmost subtree",
                ));
            }
            rho_inverse_first_vertex(x)
        }
        Move::InvLightRot => {
            if right_heavy(x) {
                return Err(Error::domain(
                    "apply_move",
                    x,
                    "an inverse light rotation needs a single pendant edge on the right",
                ));
            }
            rho_inverse_first_vertex(x)
        }
        Move::Pull { from, to } => {
            if x != from || flippable_offset(from, to).is_none() {
                return Err(Error::domain("apply_move", x, "not a valid pull here"));
            }
            Ok(to)
        }
        Move::InvPull { from, to } => {
            if x != from || flippable_offset(to, from).is_none() {
                return Err(Error::domain("apply_move", x, "not a valid inverse pull here"));
            }
            Ok(to)
        }
    }
}

fn deepest_leaf_below(t: &RootedTree, v: usize, depth: usize, best: &mut (usize, Option<usize>)) {
    if t.is_leaf(v) {
        if depth > best.0 {
            *best = (depth, Some(v));
        }
        return;
    }
    for &c in t.children(v) {
        deepest_leaf_below(t, c, depth + 1, best);
    }
}

/// Pulls pendant edges up until the leftmost subtree is a star.
fn starify(x: &mut Vertex, moves: &mut Vec<Move>) {
    loop {
        let mut t = tree_of(*x);
        let root1 = t.children(t.root())[0];
        let mut best = (1usize, None);
        deepest_leaf_below(&t, root1, 1, &mut best);
        let (depth, leaf) = best;
        if depth < 3 {
            return;
        }
        let r = leaf.expect("a leaf at depth three exists");
        let q = t.parent(r).expect("depth three");
        debug_assert_eq!(t.children(q)[0], r);
        let p = t.parent(q).expect("depth two");
        let pos = t.child_index(q);
        t.move_leaf(r, p, pos);
        let next = first_vertex_of(&t);
        moves.push(Move::Pull { from: *x, to: next });
        *x = next;
    }
}

/// Inverse pulls that turn a star-shaped leftmost subtree into a path: each
/// round takes the pendant child directly left of the growing chain and
/// sinks it to the chain's end.
fn pathify(x: &mut Vertex, moves: &mut Vec<Move>) {
    loop {
        let mut t = tree_of(*x);
        let root1 = t.children(t.root())[0];
        let children = t.children(root1).to_vec();
        if children.len() <= 1 {
            return;
        }
        let r = children[children.len() - 2];
        debug_assert!(t.is_leaf(r));
        loop {
            let parent = t.parent(r).expect("pendant edges have a parent");
            let siblings = t.children(parent);
            let i = siblings.iter().position(|&c| c == r).expect("child of its parent");
            if i + 1 == siblings.len() {
                break;
            }
            let q = siblings[i + 1];
            t.move_leaf(r, q, 0);
            let next = first_vertex_of(&t);
            moves.push(Move::InvPull { from: *x, to: next });
            *x = next;
        }
    }
}

/// A sequence of moves carrying `t` to the star tree with one pendant edge
/// at the root. A heavy leftmost subtree is first pulled into a star, then
/// rearranged into a path that heavy rotations consume one edge at a time;
/// a heavy rightmost subtree is sent to that case by one inverse rotation.
/// Two light rotations then expose the final shape, which pulls finish off.
pub fn normalize_to_star(t: &RootedTree) -> Result<Vec<Move>> {
    let mut x = tree_first_vertex("normalize_to_star", t)?;
    let n = (x.len() - 1) / 2;
    let star = star_first_vertex(n);
    let mut moves = Vec::new();
    if x == star {
        return Ok(moves);
    }
    if !left_heavy(x) && right_heavy(x) {
        moves.push(Move::InvHeavyRot);
        x = rho_inverse_first_vertex(x)?;
    }
    if left_heavy(x) {
        starify(&mut x, &mut moves);
        pathify(&mut x, &mut moves);
        while left_heavy(x) {
            moves.push(Move::HeavyRot);
            x = rho_first_vertex(x)?;
        }
        moves.push(Move::LightRot);
        x = rho_first_vertex(x)?;
    }
    debug_assert!(!left_heavy(x) && !right_heavy(x));
    moves.push(Move::LightRot);
    x = rho_first_vertex(x)?;
    starify(&mut x, &mut moves);
    if x != star {
        return Err(Error::Verification(format!(
            "normalization ended at {x} instead of the star tree"
        )));
    }
    Ok(moves)
}
