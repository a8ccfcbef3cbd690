//! A Hamilton cycle through the middle four levels of an odd cube.
//!
//! The two outermost lexical matchings between levels n+1 and n+2 of
//! Q_{2n+1} form disjoint paths. Adding the mirror image of those paths
//! under complement-reverse plus a handful of down-edges closes everything
//! into a cycle factor on levels n-1 through n+2. The cycles correspond to
//! rotation orbits of the path starts, and toggling one six-cycle per edge
//! of a spanning tree of the orbit graph joins them into a single cycle.

mod joining;
mod rotation;

pub use joining::{
    apply_move, build_aux_graph, enumerate_flippable_pairs, hamilton_middle4, normalize_to_star,
    six_cycle, AuxGraph, Move, SixCycle,
};
pub use rotation::{
    rho, rho_first_vertex, rho_inverse, rho_inverse_first_vertex, tau, BinNode, TrivalentTree,
};

use std::collections::{HashMap, HashSet};

use crate::factor::Census;
use crate::lexical::{lex_down, lex_matching};
use crate::vertex::{level, DyckClass, Vertex};
use crate::{Error, Result};

/// The paths formed by the union of the two lexical matchings between
/// levels n+1 and n+2 of Q_{2n+1}. Each path is listed from the end whose
/// vertex returns to height zero; level-(n+1) vertices missed by both
/// matchings are kept separately.
pub struct PathSystem {
    n: usize,
    paths: Vec<Vec<Vertex>>,
    index: HashMap<Vertex, usize>,
    isolated: Vec<Vertex>,
}

impl PathSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        2 * self.n + 1
    }

    /// All paths, sorted by their first vertex.
    pub fn paths(&self) -> &[Vec<Vertex>] {
        &self.paths
    }

    /// Vertices of level n+1 on no path, sorted.
    pub fn isolated(&self) -> &[Vertex] {
        &self.isolated
    }

    pub fn path_starting_at(&self, x: Vertex) -> Option<&[Vertex]> {
        self.index.get(&x).map(|&i| self.paths[i].as_slice())
    }

    pub fn firsts(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.paths.iter().map(|p| p[0])
    }

    pub fn lasts(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.paths.iter().map(|p| *p.last().expect("paths are nonempty"))
    }
}

/// Builds the path system of Q_{2n+1}.
pub fn build_paths(n: usize) -> Result<PathSystem> {
    if n == 0 {
        return Err(Error::BadDimension {
            op: "build_paths",
            n,
            detail: "the middle four levels need dimension at least three",
        });
    }
    let dim = 2 * n + 1;
    let low = lex_matching(dim, n + 1, n)?;
    let high = lex_matching(dim, n + 1, n + 1)?;
    let up_low: HashMap<Vertex, Vertex> = low.iter().copied().collect();
    let up_high: HashMap<Vertex, Vertex> = high.iter().copied().collect();
    let down_low: HashMap<Vertex, Vertex> = low.iter().map(|&(x, y)| (y, x)).collect();
    let down_high: HashMap<Vertex, Vertex> = high.iter().map(|&(x, y)| (y, x)).collect();

    let upper_total = level(dim, n + 2).count();
    if down_low.len() != upper_total || down_high.len() != upper_total {
        return Err(Error::Verification(format!(
            "expected both matchings to cover level {} of Q_{dim} completely",
            n + 2
        )));
    }

    let mut paths = Vec::new();
    let mut isolated = Vec::new();
    let mut covered_upper = 0usize;
    for x in level(dim, n + 1) {
        let in_low = up_low.contains_key(&x);
        let in_high = up_high.contains_key(&x);
        if !in_low && !in_high {
            isolated.push(x);
            continue;
        }
        if (in_low && in_high) || x.classify() != DyckClass::TouchesZero {
            continue;
        }
        let (ups, downs) = if in_low {
            (&up_low, &down_high)
        } else {
            (&up_high, &down_low)
        };
        let mut path = vec![x];
        let mut cur = x;
        loop {
            let upper = ups[&cur];
            let next = downs[&upper];
            path.push(upper);
            path.push(next);
            if !ups.contains_key(&next) {
                break;
            }
            cur = next;
        }
        covered_upper += (path.len() - 1) / 2;
        paths.push(path);
    }
    if covered_upper != upper_total {
        return Err(Error::Verification(format!(
            "paths from the zero-touching ends cover {covered_upper} of {upper_total} vertices at level {}",
            n + 2
        )));
    }
    paths.sort_by_key(|p| p[0]);
    let index = paths.iter().enumerate().map(|(i, p)| (p[0], i)).collect();
    Ok(PathSystem { n, paths, index, isolated })
}

/// The down-edges from level n+1 to level n that complete the paths and
/// their mirror images into a cycle factor. Pairs are stored as
/// `(upper, lower)`, sorted by the upper vertex, grouped by the index of
/// the lexical matching that produced them.
pub struct EdgeSets {
    n: usize,
    index_n: Vec<(Vertex, Vertex)>,
    index_n_minus_1: Vec<(Vertex, Vertex)>,
    index_n_minus_2: Vec<(Vertex, Vertex)>,
}

impl EdgeSets {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges of M^n at the path ends, the plain lasts and the isolated
    /// vertices.
    pub fn index_n(&self) -> &[(Vertex, Vertex)] {
        &self.index_n
    }

    /// Edges of M^{n-1}: the second edge of each isolated vertex.
    pub fn index_n_minus_1(&self) -> &[(Vertex, Vertex)] {
        &self.index_n_minus_1
    }

    /// Edges of M^{n-2} at the lasts whose tail returns to zero.
    pub fn index_n_minus_2(&self) -> &[(Vertex, Vertex)] {
        &self.index_n_minus_2
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.index_n
            .iter()
            .chain(&self.index_n_minus_1)
            .chain(&self.index_n_minus_2)
            .copied()
    }
}

fn down_edges(dim: usize, i: usize, uppers: &[Vertex]) -> Result<Vec<(Vertex, Vertex)>> {
    uppers
        .iter()
        .map(|&y| {
            let lower = lex_down(y, i)?.ok_or_else(|| Error::MissingDownMatch {
                n: dim,
                k: y.weight(),
                i,
                vertex: y.to_string(),
            })?;
            Ok((y, lower))
        })
        .collect()
}

/// Picks the extra down-edges for a path system.
pub fn build_e_sets(ps: &PathSystem) -> Result<EdgeSets> {
    let n = ps.n();
    let dim = ps.dimension();
    let mut main: Vec<Vertex> = ps.firsts().collect();
    let mut tail_swapped = Vec::new();
    for last in ps.lasts() {
        let (_, v) = last.below_once_decompose()?;
        if v.classify() == DyckClass::TouchesZero {
            tail_swapped.push(last);
        } else {
            main.push(last);
        }
    }
    main.extend_from_slice(ps.isolated());
    main.sort();
    tail_swapped.sort();

    let index_n = down_edges(dim, n, &main)?;
    let index_n_minus_1 = down_edges(dim, n - 1, ps.isolated())?;
    let index_n_minus_2 = if tail_swapped.is_empty() {
        Vec::new()
    } else {
        let i = n.checked_sub(2).ok_or_else(|| {
            Error::Verification("a tail-swapped last vertex appeared in dimension three".into())
        })?;
        down_edges(dim, i, &tail_swapped)?
    };
    Ok(EdgeSets { n, index_n, index_n_minus_1, index_n_minus_2 })
}

/// Disjoint cycles covering levels n-1 through n+2 of Q_{2n+1}.
pub struct MiddleFourFactor {
    n: usize,
    cycles: Vec<Vec<Vertex>>,
}

impl MiddleFourFactor {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        2 * self.n + 1
    }

    /// Cycles sorted by length, then by their smallest vertex; each starts
    /// at its smallest vertex and moves toward the smaller neighbor.
    pub fn cycles(&self) -> &[Vec<Vertex>] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn census(&self) -> Census {
        Census {
            lengths: self.cycles.iter().map(|c| c.len()).collect(),
        }
    }

    /// All cycle edges, normalized.
    pub fn edge_set(&self) -> HashSet<(Vertex, Vertex)> {
        let mut edges = HashSet::new();
        for cycle in &self.cycles {
            for (i, &a) in cycle.iter().enumerate() {
                edges.insert(ordered_edge(a, cycle[(i + 1) % cycle.len()]));
            }
        }
        edges
    }

    /// Checks from scratch that the cycles partition the middle four levels
    /// and only use cube edges.
    pub fn verify(&self) -> Result<()> {
        let n = self.n;
        let dim = self.dimension();
        let expected: usize = (n - 1..=n + 2).map(|k| crate::binomial(dim, k) as usize).sum();
        let mut seen = HashSet::with_capacity(expected);
        for cycle in &self.cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if !seen.insert(a) {
                    return Err(Error::Verification(format!("{a} appears on two cycles")));
                }
                if a.len() != dim || a.weight() + 1 < n || a.weight() > n + 2 {
                    return Err(Error::Verification(format!(
                        "{a} lies outside the middle four levels of Q_{dim}"
                    )));
                }
                let b = cycle[(i + 1) % cycle.len()];
                if (a.bits() ^ b.bits()).count_ones() != 1 {
                    return Err(Error::Verification(format!("{a} and {b} are not adjacent")));
                }
            }
        }
        if seen.len() != expected {
            return Err(Error::Verification(format!(
                "the cycles cover {} of {expected} vertices",
                seen.len()
            )));
        }
        Ok(())
    }
}

pub(crate) fn ordered_edge(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn factor_edges(ps: &PathSystem, es: &EdgeSets) -> Vec<(Vertex, Vertex)> {
    let mut edges = Vec::new();
    for path in ps.paths() {
        for pair in path.windows(2) {
            edges.push((pair[0], pair[1]));
        }
    }
    let mirrored: Vec<(Vertex, Vertex)> = edges
        .iter()
        .map(|&(a, b)| (a.comp_rev(), b.comp_rev()))
        .collect();
    edges.extend(mirrored);
    edges.extend(es.edges());
    edges
}

fn adjacency(edges: &[(Vertex, Vertex)]) -> Result<HashMap<Vertex, Vec<Vertex>>> {
    let mut adjacency: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    for &(a, b) in edges {
        adjacency.entry(a).or_default().push(b);
        adjacency.entry(b).or_default().push(a);
    }
    for (x, nbrs) in &adjacency {
        if nbrs.len() != 2 {
            return Err(Error::Verification(format!(
                "vertex {x} has degree {} in the factor, expected two",
                nbrs.len()
            )));
        }
    }
    Ok(adjacency)
}

pub(crate) fn assemble_factor(ps: &PathSystem, es: &EdgeSets) -> Result<MiddleFourFactor> {
    let adjacency = adjacency(&factor_edges(ps, es))?;
    let mut order: Vec<Vertex> = adjacency.keys().copied().collect();
    order.sort();
    let mut seen = HashSet::with_capacity(order.len());
    let mut cycles = Vec::new();
    for &start in &order {
        if seen.contains(&start) {
            continue;
        }
        let mut cycle = vec![start];
        seen.insert(start);
        let nbrs = &adjacency[&start];
        let mut prev = start;
        let mut cur = *nbrs.iter().min().expect("degree two");
        while cur != start {
            seen.insert(cur);
            cycle.push(cur);
            let nbrs = &adjacency[&cur];
            let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
            prev = cur;
            cur = next;
        }
        cycles.push(cycle);
    }
    cycles.sort_by_key(|c| (c.len(), c[0]));
    let factor = MiddleFourFactor { n: ps.n(), cycles };
    factor.verify()?;
    Ok(factor)
}

/// Builds the cycle factor on the middle four levels of Q_{2n+1}.
pub fn build_middle4_factor(n: usize) -> Result<MiddleFourFactor> {
    let ps = build_paths(n)?;
    let es = build_e_sets(&ps)?;
    assemble_factor(&ps, &es)
}

/// Walks the factor from the start of the path of `x`, in the direction of
/// that path, to the start of the next path on the same cycle.
pub fn next_first_vertex(ps: &PathSystem, es: &EdgeSets, x: Vertex) -> Result<Vertex> {
    if ps.path_starting_at(x).is_none() {
        return Err(Error::domain("next_first_vertex", x, "not the first vertex of a path"));
    }
    let adjacency = adjacency(&factor_edges(ps, es))?;
    Ok(walk_to_next_first(ps, &adjacency, x).0)
}

/// Walk used by [`next_first_vertex`]; also reports whether it passed
/// through an isolated vertex.
pub(crate) fn walk_to_next_first(
    ps: &PathSystem,
    adjacency: &HashMap<Vertex, Vec<Vertex>>,
    x: Vertex,
) -> (Vertex, bool) {
    let path = ps.path_starting_at(x).expect("x starts a path");
    let mut prev = x;
    let mut cur = path[1];
    let mut through_isolated = false;
    loop {
        if ps.path_starting_at(cur).is_some() {
            return (cur, through_isolated);
        }
        if ps.isolated().binary_search(&cur).is_ok() {
            through_isolated = true;
        }
        let nbrs = &adjacency[&cur];
        let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
        prev = cur;
        cur = next;
    }
}

fn check_end_classes(ps: &PathSystem) -> Result<()> {
    let by_class = |class: DyckClass| -> Vec<Vertex> {
        level(ps.dimension(), ps.n() + 1)
            .filter(|x| x.classify() == class)
            .collect()
    };
    let mut firsts: Vec<Vertex> = ps.firsts().collect();
    firsts.sort();
    if firsts != by_class(DyckClass::TouchesZero) {
        return Err(Error::Verification(
            "the path starts are not the paths returning to height zero".into(),
        ));
    }
    let mut lasts: Vec<Vertex> = ps.lasts().collect();
    lasts.sort();
    if lasts != by_class(DyckClass::BelowOnce) {
        return Err(Error::Verification(
            "the path ends are not the paths dipping below zero once".into(),
        ));
    }
    if ps.isolated() != by_class(DyckClass::StrictlyPositive) {
        return Err(Error::Verification(
            "the isolated vertices are not the strictly positive paths".into(),
        ));
    }
    Ok(())
}

fn check_path_ends(ps: &PathSystem) -> Result<()> {
    for p in ps.paths() {
        let (u, tail) = p[0].canonical_decompose()?;
        let expected = Vertex::concat_all(&[
            u,
            Vertex::repeat(false, 1),
            Vertex::repeat(true, 1),
            tail,
        ]);
        if *p.last().expect("paths are nonempty") != expected {
            return Err(Error::Verification(format!(
                "the path of {} ends at {} instead of {expected}",
                p[0],
                p.last().unwrap()
            )));
        }
    }
    Ok(())
}

fn check_mirror_pairing(es: &EdgeSets) -> Result<()> {
    for group in [es.index_n(), es.index_n_minus_1(), es.index_n_minus_2()] {
        let edges: HashSet<(Vertex, Vertex)> = group.iter().copied().collect();
        for &(upper, lower) in group {
            let image = (lower.comp_rev(), upper.comp_rev());
            if !edges.contains(&image) {
                return Err(Error::Verification(format!(
                    "the mirror of the extra edge ({upper}, {lower}) is not an extra edge of the same index"
                )));
            }
        }
    }
    Ok(())
}

fn check_rotation(ps: &PathSystem, es: &EdgeSets) -> Result<()> {
    let adjacency = adjacency(&factor_edges(ps, es))?;
    for x in ps.firsts() {
        let (next, _) = walk_to_next_first(ps, &adjacency, x);
        let rotated = rotation::rho_first_vertex(x)?;
        if next != rotated {
            return Err(Error::Verification(format!(
                "walking the factor from {x} reaches {next}, the tree rotation gives {rotated}"
            )));
        }
    }
    Ok(())
}

/// Runs the structural checks behind the Hamilton cycle construction for one
/// dimension, reporting each as a named pass/fail item.
pub fn structure_checks(n: usize) -> Vec<(&'static str, Result<()>)> {
    let mut out: Vec<(&'static str, Result<()>)> = Vec::new();
    let ps = match build_paths(n) {
        Ok(ps) => ps,
        Err(e) => {
            out.push(("matchings form disjoint paths", Err(e)));
            return out;
        }
    };
    out.push(("matchings form disjoint paths", Ok(())));
    out.push(("path ends classify by zero behaviour", check_end_classes(&ps)));
    out.push(("paths end where their starts dictate", check_path_ends(&ps)));
    let es = match build_e_sets(&ps) {
        Ok(es) => es,
        Err(e) => {
            out.push(("extra edges close the paths", Err(e)));
            return out;
        }
    };
    out.push(("extra edges close the paths", Ok(())));
    out.push(("extra edges pair the mirrored classes", check_mirror_pairing(&es)));
    out.push((
        "paths, mirrors and extra edges form a cycle factor",
        assemble_factor(&ps, &es).map(|_| ()),
    ));
    out.push(("walking the factor rotates the trees", check_rotation(&ps, &es)));
    out.push((
        "flippable pairs connect the rotation orbits",
        joining::build_aux_graph(n).map(|_| ()),
    ));
    out.push((
        "six-cycle joins yield a Hamilton cycle",
        hamilton_middle4(n).map(|_| ()),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::rotation::{first_vertices, left_heavy};
    use super::*;
    use crate::binomial;

    fn v(s: &str) -> Vertex {
        s.parse().unwrap()
    }

    fn path(s: &str) -> Vec<Vertex> {
        s.split_whitespace().map(|w| w.parse().unwrap()).collect()
    }

    #[test]
    fn the_q5_matchings_form_three_paths() {
        let ps = build_paths(2).unwrap();
        assert_eq!(
            ps.paths(),
            &[
                path("10101 11101 01101"),
                path("10110 11110 01110"),
                path("11001 11011 01011 01111 00111 10111 10011"),
            ]
        );
        assert_eq!(ps.isolated(), &[v("11010"), v("11100")]);
    }

    #[test]
    fn first_vertices_determine_their_path_ends() {
        for n in 1..=6 {
            let ps = build_paths(n).unwrap();
            for p in ps.paths() {
                let (u, tail) = p[0].canonical_decompose().unwrap();
                let expected = Vertex::concat_all(&[
                    u,
                    Vertex::repeat(false, 1),
                    Vertex::repeat(true, 1),
                    tail,
                ]);
                assert_eq!(*p.last().unwrap(), expected, "n = {n}");
            }
        }
    }

    #[test]
    fn path_ends_sort_by_their_zero_behaviour() {
        for n in 1..=6 {
            let dim = 2 * n + 1;
            let ps = build_paths(n).unwrap();
            let by_class = |class: DyckClass| -> Vec<Vertex> {
                level(dim, n + 1).filter(|x| x.classify() == class).collect()
            };
            let mut firsts: Vec<Vertex> = ps.firsts().collect();
            firsts.sort();
            assert_eq!(firsts, by_class(DyckClass::TouchesZero), "n = {n}");
            let mut lasts: Vec<Vertex> = ps.lasts().collect();
            lasts.sort();
            assert_eq!(lasts, by_class(DyckClass::BelowOnce), "n = {n}");
            assert_eq!(ps.isolated(), by_class(DyckClass::StrictlyPositive), "n = {n}");
        }
    }

    #[test]
    fn firsts_split_by_their_last_symbol() {
        for n in 1..=6 {
            let ps = build_paths(n).unwrap();
            for first in ps.firsts() {
                let stem = first.slice(0, first.len() - 1);
                if first.bit(first.len() - 1) {
                    assert_eq!(stem.classify(), DyckClass::TouchesZero);
                    assert_eq!(stem.weight(), n, "n = {n}");
                } else {
                    assert_eq!(stem.classify(), DyckClass::TouchesZero);
                    assert_eq!(stem.weight(), n + 1, "n = {n}");
                }
            }
        }
    }

    #[test]
    fn the_q5_extra_edges_by_hand() {
        let ps = build_paths(2).unwrap();
        let es = build_e_sets(&ps).unwrap();
        let pairs = |s: &str| -> Vec<(Vertex, Vertex)> {
            s.split(',')
                .map(|p| {
                    let mut it = p.split_whitespace();
                    (it.next().unwrap().parse().unwrap(), it.next().unwrap().parse().unwrap())
                })
                .collect()
        };
        assert_eq!(
            es.index_n(),
            pairs(
                "01110 00110,10011 10001,10101 10100,10110 10010,\
                 11001 11000,11010 01010,11100 01100"
            )
        );
        assert_eq!(es.index_n_minus_1(), pairs("11010 11000,11100 10100"));
        assert_eq!(es.index_n_minus_2(), pairs("01101 01001"));
    }

    #[test]
    fn extra_edges_pair_up_the_mirrored_classes() {
        for n in 1..=6 {
            let ps = build_paths(n).unwrap();
            let es = build_e_sets(&ps).unwrap();
            let firsts: HashSet<Vertex> = ps.firsts().collect();
            let isolated: HashSet<Vertex> = ps.isolated().iter().copied().collect();
            let mut plain_lasts = HashSet::new();
            let mut tail_swapped = HashSet::new();
            for last in ps.lasts() {
                let (_, tail) = last.below_once_decompose().unwrap();
                if tail.classify() == DyckClass::TouchesZero {
                    tail_swapped.insert(last);
                } else {
                    plain_lasts.insert(last);
                }
            }
            let ends_in_zero = |x: Vertex| !x.bit(x.len() - 1);

            let mut images: HashMap<&str, HashSet<Vertex>> = HashMap::new();
            for &(upper, lower) in es.index_n() {
                let mirror = lower.comp_rev();
                let kind = if firsts.contains(&upper) {
                    if ends_in_zero(upper) {
                        assert!(firsts.contains(&mirror) && ends_in_zero(mirror), "n = {n}");
                        "first0"
                    } else {
                        assert!(isolated.contains(&mirror), "n = {n}");
                        "first1"
                    }
                } else if isolated.contains(&upper) {
                    assert!(firsts.contains(&mirror) && !ends_in_zero(mirror), "n = {n}");
                    "isolated"
                } else {
                    assert!(plain_lasts.contains(&upper), "n = {n}");
                    assert!(plain_lasts.contains(&mirror), "n = {n}");
                    "last"
                };
                assert!(images.entry(kind).or_default().insert(mirror), "n = {n}");
            }
            let first0: HashSet<Vertex> = firsts.iter().copied().filter(|&x| ends_in_zero(x)).collect();
            let first1: HashSet<Vertex> = firsts.iter().copied().filter(|&x| !ends_in_zero(x)).collect();
            assert_eq!(images.remove("first0").unwrap_or_default(), first0, "n = {n}");
            assert_eq!(images.remove("first1").unwrap_or_default(), isolated, "n = {n}");
            assert_eq!(images.remove("isolated").unwrap_or_default(), first1, "n = {n}");
            assert_eq!(images.remove("last").unwrap_or_default(), plain_lasts, "n = {n}");

            let second: HashSet<Vertex> = es
                .index_n_minus_1()
                .iter()
                .map(|&(upper, lower)| {
                    assert!(isolated.contains(&upper), "n = {n}");
                    lower.comp_rev()
                })
                .collect();
            assert_eq!(second, isolated, "n = {n}");

            let third: HashSet<Vertex> = es
                .index_n_minus_2()
                .iter()
                .map(|&(upper, lower)| {
                    assert!(tail_swapped.contains(&upper), "n = {n}");
                    lower.comp_rev()
                })
                .collect();
            assert_eq!(third, tail_swapped, "n = {n}");
        }
    }

    #[test]
    fn the_q3_factor_is_one_eight_cycle() {
        let factor = build_middle4_factor(1).unwrap();
        assert_eq!(factor.census().to_string(), "1 cycle: 8");
        assert_eq!(factor.cycles()[0][0], v("000"));
        factor.verify().unwrap();
    }

    #[test]
    fn the_q5_factor_is_one_thirty_cycle() {
        let factor = build_middle4_factor(2).unwrap();
        assert_eq!(factor.census().to_string(), "1 cycle: 30");
        factor.verify().unwrap();
    }

    #[test]
    fn small_factors_verify() {
        for n in 1..=6 {
            let factor = build_middle4_factor(n).unwrap();
            factor.verify().unwrap();
            let expected: usize = (n - 1..=n + 2)
                .map(|k| binomial(2 * n + 1, k) as usize)
                .sum();
            let total: usize = factor.cycles().iter().map(|c| c.len()).sum();
            assert_eq!(total, expected, "n = {n}");
        }
    }

    #[test]
    fn walking_the_factor_matches_the_rotation() {
        for n in 1..=6 {
            let ps = build_paths(n).unwrap();
            let es = build_e_sets(&ps).unwrap();
            let adjacency = adjacency(&factor_edges(&ps, &es)).unwrap();
            for x in first_vertices(n) {
                let (next, _) = walk_to_next_first(&ps, &adjacency, x);
                assert_eq!(next, super::rotation::rho_first_vertex(x).unwrap(), "n = {n}");
            }
        }
        let ps = build_paths(2).unwrap();
        let es = build_e_sets(&ps).unwrap();
        assert_eq!(next_first_vertex(&ps, &es, v("11001")).unwrap(), v("10110"));
        assert!(next_first_vertex(&ps, &es, v("11010")).is_err());
    }

    #[test]
    fn light_rotations_walk_through_isolated_vertices() {
        for n in 1..=5 {
            let ps = build_paths(n).unwrap();
            let es = build_e_sets(&ps).unwrap();
            let adjacency = adjacency(&factor_edges(&ps, &es)).unwrap();
            for x in first_vertices(n) {
                let (_, through_isolated) = walk_to_next_first(&ps, &adjacency, x);
                assert_eq!(through_isolated, !left_heavy(x), "n = {n}, x = {x}");
            }
        }
    }

    #[test]
    fn dimension_one_is_rejected() {
        assert!(matches!(build_paths(0), Err(Error::BadDimension { .. })));
    }

    #[test]
    fn the_structure_checks_all_pass() {
        for n in 1..=4 {
            let report = structure_checks(n);
            assert_eq!(report.len(), 9, "n = {n}");
            for (name, result) in report {
                assert!(result.is_ok(), "n = {n}: {name}");
            }
        }
        assert_eq!(structure_checks(0).len(), 1);
    }
}
