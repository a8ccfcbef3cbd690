//! The necklace poset N_n and its symmetric chain decompositions.
//!
//! Nodes are rotation orbits of bitstrings of length `n`, restricted to the
//! interior levels `1..n-1` and named by their lexicographically smallest
//! rotation. Two necklaces are joined by one edge instance per position of
//! the lower representative whose flip lands in the upper orbit, so parallel
//! edges are common and disjointness is tracked per instance.
//!
//! [`search_disjoint_scds`] looks for several pairwise instance-disjoint
//! symmetric chain decompositions of the poset by a deterministic
//! depth-first search, and [`lift_to_cube`] expands such decompositions into
//! edge-disjoint decompositions of Q_n when `n` is prime.

use std::collections::{HashMap, HashSet};

use crate::scd::{Chain, ChainDecomposition};
use crate::vertex::{level, Vertex};
use crate::{Error, Result};

/// The lexicographically smallest rotation of `v`.
pub fn canonical_necklace(v: Vertex) -> Vertex {
    (0..v.len()).map(|r| v.rotate_left(r)).min().unwrap_or(v)
}

/// Whether `v` is the representative of its rotation orbit.
pub fn is_necklace(v: Vertex) -> bool {
    canonical_necklace(v) == v
}

/// An edge instance: the lower representative together with the flipped
/// position. Distinct positions with the same endpoints are distinct
/// instances.
pub type EdgeInstance = (Vertex, usize);

/// The quotient of the interior of Q_n under rotation, with multiedges.
pub struct NecklaceGraph {
    n: usize,
    levels: Vec<Vec<Vertex>>,
    ups: HashMap<Vertex, Vec<(usize, Vertex)>>,
}

/// Builds N_n for `n >= 2`: representatives at levels `1..n-1` and, for each
/// of them, the upward edge instances in position order.
pub fn build_necklace_graph(n: usize) -> Result<NecklaceGraph> {
    if n < 2 {
        return Err(Error::BadDimension {
            op: "build_necklace_graph",
            n,
            detail: "the poset needs at least one interior level",
        });
    }
    let levels: Vec<Vec<Vertex>> = (0..=n)
        .map(|k| {
            if k == 0 || k == n {
                Vec::new()
            } else {
                level(n, k).filter(|&v| is_necklace(v)).collect()
            }
        })
        .collect();
    let mut ups = HashMap::new();
    for lvl in &levels[1..n - 1] {
        for &x in lvl {
            let targets = (0..n)
                .filter(|&p| !x.bit(p))
                .map(|p| (p, canonical_necklace(x.flip(p))))
                .collect();
            ups.insert(x, targets);
        }
    }
    Ok(NecklaceGraph { n, levels, ups })
}

impl NecklaceGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn node_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    /// Representatives at level `k`, ascending. Empty for `k = 0` and `k = n`.
    pub fn nodes(&self, k: usize) -> &[Vertex] {
        assert!(k <= self.n);
        &self.levels[k]
    }

    /// Upward edge instances of a representative, in position order.
    pub fn up_instances(&self, x: Vertex) -> &[(usize, Vertex)] {
        self.ups.get(&x).map(Vec::as_slice).unwrap_or(&[])
    }

    /// The number of parallel edges between `x` and the necklace one level up.
    pub fn multiplicity(&self, x: Vertex, y: Vertex) -> usize {
        self.up_instances(x).iter().filter(|&&(_, up)| up == y).count()
    }
}

/// A chain of necklaces on consecutive levels. `steps[j]` is the position of
/// `reps[j]` whose flip reaches the orbit of `reps[j + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecklaceChain {
    reps: Vec<Vertex>,
    steps: Vec<usize>,
}

impl NecklaceChain {
    pub fn reps(&self) -> &[Vertex] {
        &self.reps
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    pub fn instances(&self) -> impl Iterator<Item = EdgeInstance> + '_ {
        self.reps.iter().zip(&self.steps).map(|(&x, &p)| (x, p))
    }
}

/// A symmetric chain decomposition of N_n: chains spanning levels
/// `[k, n - k]` that partition the interior representatives, with every edge
/// instance used at most once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecklaceScd {
    n: usize,
    chains: Vec<NecklaceChain>,
}

impl NecklaceScd {
    pub(crate) fn from_parts(n: usize, chains: Vec<NecklaceChain>) -> Self {
        NecklaceScd { n, chains }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chains(&self) -> &[NecklaceChain] {
        &self.chains
    }

    pub fn instances(&self) -> impl Iterator<Item = EdgeInstance> + '_ {
        self.chains.iter().flat_map(NecklaceChain::instances)
    }

    /// An edge instance used by both decompositions, if any.
    pub fn shared_instance(&self, other: &NecklaceScd) -> Option<EdgeInstance> {
        let mine: HashSet<EdgeInstance> = self.instances().collect();
        other.instances().find(|e| mine.contains(e))
    }

    /// Checks chain structure, symmetric spans, the node partition, and that
    /// no edge instance repeats.
    pub fn verify(&self, g: &NecklaceGraph) -> Result<()> {
        if self.n != g.n {
            return Err(Error::Verification(format!(
                "decomposition of N_{} checked against N_{}",
                self.n, g.n
            )));
        }
        let mut seen = HashSet::new();
        let mut used = HashSet::new();
        for chain in &self.chains {
            let reps = &chain.reps;
            if reps.is_empty() || chain.steps.len() + 1 != reps.len() {
                return Err(Error::Verification("malformed chain".into()));
            }
            if reps[0].weight() + reps[reps.len() - 1].weight() != self.n {
                return Err(Error::Verification(format!(
                    "chain from level {} to level {} is not symmetric",
                    reps[0].weight(),
                    reps[reps.len() - 1].weight()
                )));
            }
            for (j, &p) in chain.steps.iter().enumerate() {
                let x = reps[j];
                if p >= self.n || x.bit(p) || canonical_necklace(x.flip(p)) != reps[j + 1] {
                    return Err(Error::Verification(format!(
                        "flipping position {} of {} does not reach {}",
                        p + 1,
                        x,
                        reps[j + 1]
                    )));
                }
                if !used.insert((x, p)) {
                    return Err(Error::Verification(format!(
                        "edge instance ({}, {}) repeats",
                        x,
                        p + 1
                    )));
                }
            }
            for &x in reps {
                if !is_necklace(x) || x.len() != self.n {
                    return Err(Error::Verification(format!("{x} is not a representative")));
                }
                if !seen.insert(x) {
                    return Err(Error::Verification(format!("{x} appears twice")));
                }
            }
        }
        if seen.len() != g.node_count() {
            return Err(Error::Verification(format!(
                "{} of {} necklaces covered",
                seen.len(),
                g.node_count()
            )));
        }
        Ok(())
    }

    /// One chain per line; each step shows its 1-based flip position, as in
    /// `00001 -1> 00011`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for chain in &self.chains {
            for (j, x) in chain.reps.iter().enumerate() {
                if j > 0 {
                    out.push_str(&format!(" -{}> ", chain.steps[j - 1] + 1));
                }
                out.push_str(&x.to_string());
            }
            out.push('\n');
        }
        out
    }
}

impl std::fmt::Display for NecklaceScd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// The result of a bounded exhaustive search.
#[derive(Debug)]
pub enum SearchOutcome {
    /// The requested number of pairwise instance-disjoint decompositions.
    Found(Vec<NecklaceScd>),
    /// The whole search space was exhausted without success.
    Impossible,
    /// The node budget ran out before the space was exhausted.
    BudgetExceeded,
}

/// Searches for `want` pairwise instance-disjoint symmetric chain
/// decompositions of the necklace poset.
///
/// The search runs depth first from the middle level outward, extending all
/// partial chains one symmetric level pair at a time, and branches in
/// lexicographic order, so the outcome is deterministic. `budget` bounds the
/// number of assignment attempts; exceeding it is reported separately from
/// genuine impossibility.
pub fn search_disjoint_scds(g: &NecklaceGraph, want: usize, budget: u64) -> SearchOutcome {
    assert!(want >= 1, "at least one decomposition must be requested");
    let mut search = Search {
        g,
        want,
        used: HashSet::new(),
        found: Vec::new(),
        budget,
    };
    match search.next_scd() {
        Step::Found => SearchOutcome::Found(search.found),
        Step::Exhausted => SearchOutcome::Impossible,
        Step::OutOfBudget => SearchOutcome::BudgetExceeded,
    }
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

type Rec = (Vec<Vertex>, Vec<usize>);

struct Search<'a> {
    g: &'a NecklaceGraph,
    want: usize,
    used: HashSet<EdgeInstance>,
    found: Vec<NecklaceScd>,
    budget: u64,
}

struct Stage {
    lv: usize,
    lows: Vec<Vertex>,
    ups: Vec<Vertex>,
    chains: Vec<Rec>,
    done: Vec<Rec>,
    bottom_of: HashMap<Vertex, usize>,
    down_pick: Vec<(usize, usize)>,
    up_pick: Vec<(usize, usize)>,
    down_taken: Vec<bool>,
    up_taken: Vec<bool>,
}

impl<'a> Search<'a> {
    fn tick(&mut self) -> bool {
        if self.budget == 0 {
            return false;
        }
        self.budget -= 1;
        true
    }

    fn next_scd(&mut self) -> Step {
        if self.found.len() == self.want {
            return Step::Found;
        }
        let n = self.g.n;
        if n % 2 == 1 {
            let m = (n - 1) / 2;
            if !self.middle_is_feasible(m) {
                return Step::Exhausted;
            }
            let lows = self.g.nodes(m).to_vec();
            let mut taken = vec![false; self.g.nodes(m + 1).len()];
            let mut chains = Vec::new();
            self.match_middle(&lows, 0, &mut taken, &mut chains)
        } else {
            let m = n / 2;
            let chains = self.g.nodes(m).iter().map(|&x| (vec![x], Vec::new())).collect();
            self.stage(m - 1, chains, Vec::new())
        }
    }

    /// Every remaining decomposition needs one fresh middle instance per
    /// middle necklace, so too few free instances ends the branch early.
    fn middle_is_feasible(&self, m: usize) -> bool {
        let free: usize = self
            .g
            .nodes(m)
            .iter()
            .map(|&x| {
                self.g
                    .up_instances(x)
                    .iter()
                    .filter(|&&(p, _)| !self.used.contains(&(x, p)))
                    .count()
            })
            .sum();
        free >= (self.want - self.found.len()) * self.g.nodes(m).len()
    }

    fn match_middle(
        &mut self,
        lows: &[Vertex],
        i: usize,
        taken: &mut [bool],
        chains: &mut Vec<Rec>,
    ) -> Step {
        if i == lows.len() {
            let m = (self.g.n - 1) / 2;
            return self.stage(m - 1, chains.clone(), Vec::new());
        }
        let x = lows[i];
        let options = self.g.up_instances(x).to_vec();
        for (p, y) in options {
            if self.used.contains(&(x, p)) {
                continue;
            }
            let idx = self.g.nodes(y.weight()).binary_search(&y).expect("known node");
            if taken[idx] {
                continue;
            }
            if !self.tick() {
                return Step::OutOfBudget;
            }
            taken[idx] = true;
            self.used.insert((x, p));
            chains.push((vec![x, y], vec![p]));
            let step = self.match_middle(lows, i + 1, taken, chains);
            chains.pop();
            self.used.remove(&(x, p));
            taken[idx] = false;
            if !matches!(step, Step::Exhausted) {
                return step;
            }
        }
        Step::Exhausted
    }

    fn stage(&mut self, lv: usize, chains: Vec<Rec>, done: Vec<Rec>) -> Step {
        if lv == 0 {
            return self.complete(chains, done);
        }
        let lows = self.g.nodes(lv).to_vec();
        let ups = self.g.nodes(self.g.n - lv).to_vec();
        debug_assert_eq!(lows.len(), ups.len());
        let bottom_of = chains
            .iter()
            .enumerate()
            .map(|(c, rec)| (rec.0[0], c))
            .collect();
        let count = chains.len();
        let mut stage = Stage {
            lv,
            lows,
            ups,
            chains,
            done,
            bottom_of,
            down_pick: Vec::new(),
            up_pick: Vec::new(),
            down_taken: vec![false; count],
            up_taken: vec![false; count],
        };
        self.assign_lower(&mut stage, 0)
    }

    fn assign_lower(&mut self, stage: &mut Stage, i: usize) -> Step {
        if i == stage.lows.len() {
            return self.assign_upper(stage, 0);
        }
        let x = stage.lows[i];
        let options = self.g.up_instances(x).to_vec();
        for (p, y) in options {
            if self.used.contains(&(x, p)) {
                continue;
            }
            let Some(&c) = stage.bottom_of.get(&y) else {
                continue;
            };
            if stage.down_taken[c] {
                continue;
            }
            if !self.tick() {
                return Step::OutOfBudget;
            }
            stage.down_taken[c] = true;
            self.used.insert((x, p));
            stage.down_pick.push((c, p));
            let step = self.assign_lower(stage, i + 1);
            stage.down_pick.pop();
            self.used.remove(&(x, p));
            stage.down_taken[c] = false;
            if !matches!(step, Step::Exhausted) {
                return step;
            }
        }
        Step::Exhausted
    }

    fn assign_upper(&mut self, stage: &mut Stage, j: usize) -> Step {
        if j == stage.ups.len() {
            return self.descend(stage);
        }
        let u = stage.ups[j];
        let mut options = Vec::new();
        for (c, rec) in stage.chains.iter().enumerate() {
            if !stage.down_taken[c] || stage.up_taken[c] {
                continue;
            }
            let top = *rec.0.last().expect("chains are never empty");
            for &(p, y) in self.g.up_instances(top) {
                if y == u && !self.used.contains(&(top, p)) {
                    options.push((top, p, c));
                }
            }
        }
        options.sort();
        for (top, p, c) in options {
            if !self.tick() {
                return Step::OutOfBudget;
            }
            stage.up_taken[c] = true;
            self.used.insert((top, p));
            stage.up_pick.push((c, p));
            let step = self.assign_upper(stage, j + 1);
            stage.up_pick.pop();
            self.used.remove(&(top, p));
            stage.up_taken[c] = false;
            if !matches!(step, Step::Exhausted) {
                return step;
            }
        }
        Step::Exhausted
    }

    fn descend(&mut self, stage: &Stage) -> Step {
        let mut next = stage.chains.clone();
        for (i, &(c, p)) in stage.down_pick.iter().enumerate() {
            next[c].0.insert(0, stage.lows[i]);
            next[c].1.insert(0, p);
        }
        for (j, &(c, p)) in stage.up_pick.iter().enumerate() {
            next[c].0.push(stage.ups[j]);
            next[c].1.push(p);
        }
        let mut done = stage.done.clone();
        let mut active = Vec::new();
        for (c, rec) in next.into_iter().enumerate() {
            if stage.down_taken[c] {
                active.push(rec);
            } else {
                done.push(rec);
            }
        }
        self.stage(stage.lv - 1, active, done)
    }

    fn complete(&mut self, chains: Vec<Rec>, done: Vec<Rec>) -> Step {
        let mut all: Vec<NecklaceChain> = chains
            .into_iter()
            .chain(done)
            .map(|(reps, steps)| NecklaceChain { reps, steps })
            .collect();
        all.sort_by_key(|c| (c.reps[0].weight(), c.reps[0]));
        self.found.push(NecklaceScd::from_parts(self.g.n, all));
        let step = self.next_scd();
        if matches!(step, Step::Exhausted) {
            self.found.pop();
        }
        step
    }
}

/// Expands each decomposition of N_n into a decomposition of Q_n by taking
/// all `n` rotations of every chain. Instance-disjoint inputs lift to
/// edge-disjoint outputs on the interior levels; each input additionally
/// extends one rotation copy of its full-length chain by the all-zero and
/// all-one vertices, with the copy chosen so that the four new edges of
/// different inputs never coincide. Requires prime `n`, since only then is
/// every interior rotation orbit full.
pub fn lift_to_cube(scds: &[NecklaceScd]) -> Result<Vec<ChainDecomposition>> {
    let n = match scds.first() {
        Some(s) => s.n,
        None => return Err(Error::InvalidScd("nothing to lift".into())),
    };
    if !is_prime(n) {
        return Err(Error::BadDimension {
            op: "lift_to_cube",
            n,
            detail: "rotated chains only tile the cube for prime lengths",
        });
    }
    let mut used_bottoms = HashSet::new();
    let mut used_tops = HashSet::new();
    let mut out = Vec::new();
    for scd in scds {
        if scd.n != n {
            return Err(Error::InvalidScd("mixed necklace lengths".into()));
        }
        let mut full_chains = scd.chains.iter().filter(|c| c.reps.len() == n - 1);
        let full = match (full_chains.next(), full_chains.next()) {
            (Some(chain), None) => chain,
            _ => {
                return Err(Error::InvalidScd(
                    "expected exactly one chain spanning levels 1 through n - 1".into(),
                ))
            }
        };
        let full_copies = lift_chain_rotations(full, n)?;
        let extend = (0..n)
            .find(|&r| {
                !used_bottoms.contains(&full_copies[r][0])
                    && !used_tops.contains(full_copies[r].last().expect("nonempty"))
            })
            .ok_or_else(|| {
                Error::InvalidScd("no rotation copy keeps the extension edges disjoint".into())
            })?;
        used_bottoms.insert(full_copies[extend][0]);
        used_tops.insert(*full_copies[extend].last().expect("nonempty"));
        let mut chains = Vec::new();
        for chain in &scd.chains {
            let copies = if std::ptr::eq(chain, full) {
                full_copies.clone()
            } else {
                lift_chain_rotations(chain, n)?
            };
            for (r, mut verts) in copies.into_iter().enumerate() {
                if std::ptr::eq(chain, full) && r == extend {
                    verts.insert(0, Vertex::repeat(false, n));
                    verts.push(Vertex::repeat(true, n));
                }
                chains.push(Chain::from_vertices(verts)?);
            }
        }
        out.push(ChainDecomposition::from_chains(chains)?);
    }
    Ok(out)
}

/// The `n` rotated cube chains covering the orbit of a necklace chain. Copy
/// `r` starts at the representative rotated left by `r`; each flip is carried
/// along by tracking the rotation offset against the next representative.
fn lift_chain_rotations(chain: &NecklaceChain, n: usize) -> Result<Vec<Vec<Vertex>>> {
    let mut copies = Vec::with_capacity(n);
    for r in 0..n {
        let mut s = r;
        let mut verts = vec![chain.reps[0].rotate_left(s)];
        for (j, &p) in chain.steps.iter().enumerate() {
            let flipped = chain.reps[j].flip(p);
            verts.push(flipped.rotate_left(s));
            let c = (0..n)
                .find(|&c| flipped.rotate_left(c) == chain.reps[j + 1])
                .ok_or_else(|| {
                    Error::InvalidScd(format!(
                        "{} is not a rotation of {}",
                        chain.reps[j + 1],
                        flipped
                    ))
                })?;
            s = (s + n - c) % n;
            debug_assert_eq!(verts[verts.len() - 1], chain.reps[j + 1].rotate_left(s));
        }
        copies.push(verts);
    }
    Ok(copies)
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Vertex {
        s.parse().unwrap()
    }

    fn spans(scd: &NecklaceScd) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = scd
            .chains()
            .iter()
            .map(|c| {
                (
                    c.reps()[0].weight(),
                    c.reps()[c.reps().len() - 1].weight(),
                )
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn representatives_of_the_five_necklace() {
        let g = build_necklace_graph(5).unwrap();
        assert_eq!(g.node_count(), 6);
        assert_eq!(g.nodes(1), [v("00001")]);
        assert_eq!(g.nodes(2), [v("00011"), v("00101")]);
        assert_eq!(g.nodes(3), [v("00111"), v("01011")]);
        assert_eq!(g.nodes(4), [v("01111")]);
        assert!(build_necklace_graph(1).is_err());
    }

    #[test]
    fn parallel_edges_come_from_distinct_positions() {
        let g = build_necklace_graph(5).unwrap();
        let x = canonical_necklace(v("10000"));
        let y = canonical_necklace(v("11000"));
        assert_eq!(x, v("00001"));
        assert_eq!(y, v("00011"));
        assert_eq!(g.multiplicity(x, y), 2);
        let positions: Vec<usize> = g
            .up_instances(x)
            .iter()
            .filter(|&&(_, up)| up == y)
            .map(|&(p, _)| p)
            .collect();
        assert_eq!(positions, [0, 3]);
    }

    #[test]
    fn degrees_count_zeros_up_and_ones_down() {
        for n in 2..=9 {
            let g = build_necklace_graph(n).unwrap();
            let mut down = HashMap::new();
            for k in 1..n - 1 {
                for &x in g.nodes(k) {
                    assert_eq!(g.up_instances(x).len(), n - k);
                    for &(_, y) in g.up_instances(x) {
                        *down.entry(y).or_insert(0usize) += 1;
                    }
                }
            }
            // the down count needs full orbits, so only prime lengths
            if !is_prime(n) {
                continue;
            }
            for k in 2..n {
                for &y in g.nodes(k) {
                    assert_eq!(down[&y], k, "down degree of {y} in N_{n}");
                }
            }
        }
    }

    #[test]
    fn level_sizes_match_the_orbit_counting_formula() {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        fn phi(m: usize) -> usize {
            (1..=m).filter(|&j| gcd(j, m) == 1).count()
        }
        for n in 2..=10 {
            let g = build_necklace_graph(n).unwrap();
            for k in 1..n {
                let expected: u128 = (1..=gcd(n, k))
                    .filter(|&d| n % d == 0 && k % d == 0)
                    .map(|d| phi(d) as u128 * crate::vertex::binomial(n / d, k / d))
                    .sum::<u128>()
                    / n as u128;
                assert_eq!(g.nodes(k).len() as u128, expected, "N_{n} level {k}");
            }
        }
    }

    #[test]
    fn three_disjoint_decompositions_of_the_five_necklace() {
        let g = build_necklace_graph(5).unwrap();
        let SearchOutcome::Found(scds) = search_disjoint_scds(&g, 3, 1_000_000) else {
            panic!("three decompositions of N_5 exist");
        };
        assert_eq!(scds.len(), 3);
        for scd in &scds {
            scd.verify(&g).unwrap();
            assert_eq!(spans(scd), [(1, 4), (2, 3)]);
        }
        for a in 0..3 {
            for b in a + 1..3 {
                assert_eq!(scds[a].shared_instance(&scds[b]), None);
            }
        }
    }

    #[test]
    fn four_decompositions_of_the_five_necklace_are_impossible() {
        let g = build_necklace_graph(5).unwrap();
        assert!(matches!(
            search_disjoint_scds(&g, 4, 10_000_000),
            SearchOutcome::Impossible
        ));
    }

    #[test]
    fn a_tiny_budget_is_reported_as_exhausted() {
        let g = build_necklace_graph(5).unwrap();
        assert!(matches!(
            search_disjoint_scds(&g, 3, 3),
            SearchOutcome::BudgetExceeded
        ));
    }

    #[test]
    fn four_disjoint_decompositions_of_the_seven_necklace() {
        let g = build_necklace_graph(7).unwrap();
        let SearchOutcome::Found(scds) = search_disjoint_scds(&g, 4, 50_000_000) else {
            panic!("four decompositions of N_7 exist");
        };
        for scd in &scds {
            scd.verify(&g).unwrap();
            assert_eq!(spans(scd), [(1, 6), (2, 5), (2, 5), (3, 4), (3, 4)]);
        }
        for a in 0..4 {
            for b in a + 1..4 {
                assert_eq!(scds[a].shared_instance(&scds[b]), None);
            }
        }
    }

    #[test]
    fn search_results_are_reproducible() {
        let g = build_necklace_graph(5).unwrap();
        let SearchOutcome::Found(first) = search_disjoint_scds(&g, 3, 1_000_000) else {
            panic!("search succeeds");
        };
        let SearchOutcome::Found(second) = search_disjoint_scds(&g, 3, 1_000_000) else {
            panic!("search succeeds");
        };
        assert_eq!(first, second);
    }

    #[test]
    fn lifting_fills_the_five_cube() {
        let g = build_necklace_graph(5).unwrap();
        let SearchOutcome::Found(scds) = search_disjoint_scds(&g, 3, 1_000_000) else {
            panic!("search succeeds");
        };
        let lifted = lift_to_cube(&scds).unwrap();
        assert_eq!(lifted.len(), 3);
        for d in &lifted {
            assert_eq!(d.chains().len(), 10);
            let report = d.verify();
            assert!(report.is_valid(), "{report}");
        }
        for a in 0..3 {
            for b in a + 1..3 {
                assert_eq!(lifted[a].shared_edge(&lifted[b]), None);
            }
        }
    }

    #[test]
    fn lifted_copies_close_under_rotation() {
        let chain = NecklaceChain {
            reps: vec![v("00001"), v("00011"), v("00111"), v("01111")],
            steps: vec![0, 2, 1],
        };
        let copies = lift_chain_rotations(&chain, 5).unwrap();
        assert_eq!(copies.len(), 5);
        for r in 0..5 {
            let rotated: Vec<Vertex> = copies[r].iter().map(|w| w.rotate_left(1)).collect();
            assert_eq!(rotated, copies[(r + 1) % 5]);
        }
    }

    #[test]
    fn tiny_prime_lengths_lift_too() {
        for n in [2usize, 3] {
            let g = build_necklace_graph(n).unwrap();
            let SearchOutcome::Found(scds) = search_disjoint_scds(&g, 1, 10_000) else {
                panic!("N_{n} has a decomposition");
            };
            let lifted = lift_to_cube(&scds).unwrap();
            assert_eq!(lifted[0].chains().len() as u128, crate::vertex::binomial(n, n / 2));
            assert!(lifted[0].verify().is_valid());
        }
    }

    #[test]
    fn composite_lengths_are_rejected() {
        let g = build_necklace_graph(4).unwrap();
        let SearchOutcome::Found(scds) = search_disjoint_scds(&g, 1, 10_000) else {
            panic!("N_4 has a decomposition");
        };
        assert!(matches!(
            lift_to_cube(&scds),
            Err(Error::BadDimension { n: 4, .. })
        ));
        assert!(lift_to_cube(&[]).is_err());
    }

    #[test]
    fn chain_text_shows_flip_positions() {
        let scd = NecklaceScd::from_parts(
            5,
            vec![
                NecklaceChain {
                    reps: vec![v("00001"), v("00011"), v("00111"), v("01111")],
                    steps: vec![0, 2, 1],
                },
                NecklaceChain {
                    reps: vec![v("00101"), v("01011")],
                    steps: vec![1],
                },
            ],
        );
        let g = build_necklace_graph(5).unwrap();
        scd.verify(&g).unwrap();
        assert_eq!(
            scd.to_text(),
            "00001 -1> 00011 -3> 00111 -2> 01111\n00101 -2> 01011\n"
        );
    }
}
