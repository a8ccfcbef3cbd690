//! Symmetric chain decompositions of the hypercube.
//!
//! A symmetric chain in Q_n is a path `x_k, x_{k+1}, ..., x_{n-k}` in which
//! `x_i` has weight `i` and consecutive vertices differ in a single bit. A
//! symmetric chain decomposition (SCD) partitions all `2^n` vertices into such
//! chains. Three constructions live here:
//!
//! * [`parenthesis_scd`], the classic rule that pairs up bits by parenthesis
//!   matching and grows chains through the unmatched positions,
//! * [`marker_scd`], two label-propagation rules on lattice paths; the first
//!   reproduces the parenthesis decomposition, while the second yields one
//!   that is edge-disjoint from it,
//! * [`lexical_scd`], chains threaded through the ranked matchings of
//!   [`crate::lexical`], one matching index per level.
//!
//! Complementing every vertex of an SCD and reading its chains top-down gives
//! another SCD. For even n at least 6, the two marker decompositions together
//! with their complements are pairwise edge-disjoint.

use std::collections::HashSet;
use std::fmt;

use crate::lexical::{lex_down, lex_up, max_index};
use crate::vertex::{binomial, level, Vertex};
use crate::{Error, Result};

/// A saturated chain of distinct vertices, stored bottom-up: each vertex is
/// obtained from its predecessor by flipping a single 0 to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    vertices: Vec<Vertex>,
}

impl Chain {
    /// Builds a chain after checking that the vertices form an upward path.
    pub fn from_vertices(vertices: Vec<Vertex>) -> Result<Chain> {
        let first = *vertices
            .first()
            .ok_or_else(|| Error::InvalidChain("a chain needs at least one vertex".into()))?;
        for pair in vertices.windows(2) {
            if pair[0].len() != first.len() || !is_up_edge(pair[0], pair[1]) {
                return Err(Error::InvalidChain(format!(
                    "{} does not cover {}",
                    pair[1], pair[0]
                )));
            }
        }
        Ok(Chain { vertices })
    }

    pub(crate) fn new_unchecked(vertices: Vec<Vertex>) -> Chain {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| is_up_edge(w[0], w[1])));
        Chain { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn bottom(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn top(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    /// Number of vertices on the chain.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Edges of the chain as (lower, upper) pairs.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn is_up_edge(lo: Vertex, hi: Vertex) -> bool {
    lo.len() == hi.len()
        && hi.weight() == lo.weight() + 1
        && (lo.bits() ^ hi.bits()).count_ones() == 1
}

/// A set of chains over the vertices of Q_n, kept sorted by bottom vertex.
///
/// Construction only checks that each chain is an upward path of the right
/// length; whether the chains form a symmetric chain decomposition is the job
/// of [`ChainDecomposition::verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    n: usize,
    chains: Vec<Chain>,
}

impl ChainDecomposition {
    pub fn from_chains(chains: Vec<Chain>) -> Result<ChainDecomposition> {
        let first = chains
            .first()
            .ok_or_else(|| Error::InvalidScd("no chains given".into()))?;
        let n = first.bottom().len();
        for c in &chains {
            if c.bottom().len() != n {
                return Err(Error::InvalidScd(format!(
                    "chain starting at {} lives in Q_{}, expected Q_{n}",
                    c.bottom(),
                    c.bottom().len()
                )));
            }
        }
        Ok(Self::sorted(n, chains))
    }

    pub(crate) fn sorted(n: usize, mut chains: Vec<Chain>) -> ChainDecomposition {
        chains.sort_unstable_by_key(|c| c.bottom());
        ChainDecomposition { n, chains }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chains(&self) -> &[Chain] {
        &self.chains
    }

    /// The decomposition obtained by complementing every vertex; chains flip
    /// upside down in the process.
    pub fn complemented(&self) -> ChainDecomposition {
        let chains = self
            .chains
            .iter()
            .map(|c| Chain {
                vertices: c.vertices.iter().rev().map(|v| v.complement()).collect(),
            })
            .collect();
        Self::sorted(self.n, chains)
    }

    /// All chain edges as (lower, upper) pairs.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.chains.iter().flat_map(|c| c.edges())
    }

    /// Some edge used by both decompositions, if one exists.
    pub fn shared_edge(&self, other: &ChainDecomposition) -> Option<(Vertex, Vertex)> {
        let mine: HashSet<(Vertex, Vertex)> = self.edges().collect();
        other.edges().find(|e| mine.contains(e))
    }

    /// Checks the defining properties of a symmetric chain decomposition and
    /// reports every violation found.
    pub fn verify(&self) -> ScdReport {
        let n = self.n;
        let mut failures = Vec::new();
        let expected = binomial(n, n / 2);
        if self.chains.len() as u128 != expected {
            failures.push(format!(
                "count: {} chains, expected {expected}",
                self.chains.len()
            ));
        }
        let mut seen: HashSet<Vertex> = HashSet::new();
        let mut total: u128 = 0;
        for chain in &self.chains {
            let bottom = chain.bottom();
            for pair in chain.vertices.windows(2) {
                if !is_up_edge(pair[0], pair[1]) {
                    failures.push(format!(
                        "steps: chain starting at {bottom} jumps from {} to {}",
                        pair[0], pair[1]
                    ));
                }
            }
            let lo = bottom.weight();
            let hi = chain.top().weight();
            if lo + hi != n {
                failures.push(format!(
                    "symmetry: chain starting at {bottom} spans levels {lo}..{hi}, expected {lo}..{}",
                    n - lo
                ));
            }
            for v in &chain.vertices {
                total += 1;
                if !seen.insert(*v) {
                    failures.push(format!("partition: vertex {v} appears more than once"));
                }
            }
        }
        if total != 1u128 << n {
            failures.push(format!(
                "partition: {total} vertices listed, Q_{n} has {}",
                1u128 << n
            ));
        }
        const MAX_REPORTED: usize = 16;
        if failures.len() > MAX_REPORTED {
            let more = failures.len() - MAX_REPORTED;
            failures.truncate(MAX_REPORTED);
            failures.push(format!("... and {more} further failures"));
        }
        ScdReport {
            n,
            chain_count: self.chains.len(),
            failures,
        }
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parses the line-per-chain text format produced by [`Self::to_text`].
    pub fn from_text(text: &str) -> Result<ChainDecomposition> {
        let mut chains = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let vertices = line
                .split_whitespace()
                .map(|w| w.parse())
                .collect::<Result<Vec<Vertex>>>()?;
            chains.push(Chain::from_vertices(vertices)?);
        }
        Self::from_chains(chains)
    }
}

impl fmt::Display for ChainDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.chains {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Outcome of [`ChainDecomposition::verify`].
#[derive(Clone, Debug)]
pub struct ScdReport {
    pub n: usize,
    pub chain_count: usize,
    pub failures: Vec<String>,
}

impl ScdReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for ScdReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(
                f,
                "valid symmetric chain decomposition of Q_{}: {} chains",
                self.n, self.chain_count
            )
        } else {
            writeln!(
                f,
                "not a symmetric chain decomposition of Q_{} ({} chains):",
                self.n, self.chain_count
            )?;
            for line in &self.failures {
                writeln!(f, "  {line}")?;
            }
            Ok(())
        }
    }
}

/// The parenthesis matching decomposition.
///
/// Reading a vertex left to right, every 0 opens a bracket and every 1 closes
/// the nearest open one. The chain through a middle-level vertex keeps all
/// matched positions fixed: it starts from the vertex with every unmatched 1
/// cleared, re-adds those 1s left to right, then turns the unmatched 0s into
/// 1s left to right.
pub fn parenthesis_scd(n: usize) -> ChainDecomposition {
    let mut chains = Vec::new();
    for x in level(n, n / 2) {
        chains.push(parenthesis_chain(x));
    }
    ChainDecomposition::sorted(n, chains)
}

fn parenthesis_chain(x: Vertex) -> Chain {
    let n = x.len();
    let mut open = Vec::new();
    let mut close = Vec::new();
    for p in 0..n {
        if !x.bit(p) {
            open.push(p);
        } else if open.pop().is_none() {
            close.push(p);
        }
    }
    let mut v = x;
    for &p in &close {
        v = v.flip(p);
    }
    let mut vertices = vec![v];
    for &p in close.iter().chain(open.iter()) {
        v = v.flip(p);
        vertices.push(v);
    }
    Chain { vertices }
}

/// Which of the two marker rules to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MarkerRule {
    /// One label per visited node; reproduces [`parenthesis_scd`].
    First,
    /// Two labels per descent step, offset from the marker; edge-disjoint
    /// from the first rule.
    Second,
}

/// Builds an SCD by running a marker over the lattice path of every
/// middle-level vertex, in both directions.
///
/// The labels collected on the way mark the bits flipped above and below the
/// vertex, in label order. Only even dimensions have the single middle level
/// the marker starts from.
pub fn marker_scd(n: usize, rule: MarkerRule) -> Result<ChainDecomposition> {
    if !n.is_multiple_of(2) {
        return Err(Error::BadDimension {
            op: "marker_scd",
            n,
            detail: "the marker rules walk paths with equally many rises and falls, so n must be even",
        });
    }
    let mut chains = Vec::new();
    for x in level(n, n / 2) {
        let (up, down) = match rule {
            MarkerRule::First => (first_up_labels(x), first_down_labels(x)),
            MarkerRule::Second => (second_up_labels(x), second_down_labels(x)),
        };
        let mut vertices = vec![x];
        let mut v = x;
        for &p in &down {
            debug_assert!(v.bit(p));
            v = v.flip(p);
            vertices.push(v);
        }
        vertices.reverse();
        let mut v = x;
        for &p in &up {
            debug_assert!(!v.bit(p));
            v = v.flip(p);
            vertices.push(v);
        }
        chains.push(Chain { vertices });
    }
    Ok(ChainDecomposition::sorted(n, chains))
}

fn rightmost_max(h: &[i32]) -> usize {
    let mut best = 0;
    for (i, &v) in h.iter().enumerate() {
        if v >= h[best] {
            best = i;
        }
    }
    best
}

fn leftmost_max(h: &[i32]) -> usize {
    let mut best = 0;
    for (i, &v) in h.iter().enumerate() {
        if v > h[best] {
            best = i;
        }
    }
    best
}

/// First rule, upward direction. The marker starts on the rightmost highest
/// node, labels the fall leaving it, and hops to the rightmost fall starting
/// one level further down. A virtual fall appended at height 0 absorbs the
/// marker at the end without being labeled.
fn first_up_labels(x: Vertex) -> Vec<usize> {
    let n = x.len();
    let h = x.heights();
    debug_assert_eq!(h[n], 0);
    let mut labels = Vec::new();
    let mut m = rightmost_max(&h);
    while h[m] >= 1 {
        debug_assert!(!x.bit(m));
        labels.push(m);
        let want = h[m] - 1;
        if want == 0 {
            break;
        }
        m = (0..n)
            .rev()
            .find(|&p| !x.bit(p) && h[p] == want)
            .expect("every height below the maximum starts a fall");
    }
    labels
}

/// Mirror image of [`first_up_labels`]: leftmost highest node, rises
/// identified by their end node, hops to the leftmost rise ending one level
/// down, with the virtual rise prepended at height 0.
fn first_down_labels(x: Vertex) -> Vec<usize> {
    let n = x.len();
    let h = x.heights();
    debug_assert_eq!(h[n], 0);
    let mut labels = Vec::new();
    let mut m = leftmost_max(&h);
    while h[m] >= 1 {
        debug_assert!(x.bit(m - 1));
        labels.push(m - 1);
        let want = h[m] - 1;
        if want == 0 {
            break;
        }
        m = (1..=n)
            .find(|&q| x.bit(q - 1) && h[q] == want)
            .expect("every height below the maximum ends a rise");
    }
    labels
}

/// Second rule, upward direction. From the rightmost highest node the marker
/// first labels the nearest fall to its left at its own height, if any. Then,
/// while at least two levels up, it labels the rightmost fall one level down,
/// labels the second-from-the-right candidate among the falls two levels down
/// that lie right of it plus the marker's own fall, and hops to the rightmost
/// fall two levels down. The appended virtual fall at height 0 takes part in
/// the candidate sets and in the final hop but never receives a label.
fn second_up_labels(x: Vertex) -> Vec<usize> {
    let n = x.len();
    let h = x.heights();
    debug_assert_eq!(h[n], 0);
    let mut labels = Vec::new();
    let mut m = rightmost_max(&h);
    if let Some(p) = (0..m).rev().find(|&p| !x.bit(p) && h[p] == h[m]) {
        labels.push(p);
    }
    while h[m] >= 2 {
        let p1 = (0..n)
            .rev()
            .find(|&p| !x.bit(p) && h[p] == h[m] - 1)
            .expect("every height below the maximum starts a fall");
        labels.push(p1);
        let want = h[m] - 2;
        let mut s: Vec<usize> = ((p1 + 1)..n).filter(|&p| !x.bit(p) && h[p] == want).collect();
        if want == 0 {
            s.push(n);
        }
        s.push(m);
        s.sort_unstable();
        let pick = s[s.len() - 2];
        debug_assert!(pick < n && !x.bit(pick));
        labels.push(pick);
        if want == 0 {
            break;
        }
        m = (0..n)
            .rev()
            .find(|&p| !x.bit(p) && h[p] == want)
            .expect("every height below the maximum starts a fall");
    }
    labels
}

/// Mirror image of [`second_up_labels`], with rises identified by their end
/// node and the virtual rise prepended before the path.
fn second_down_labels(x: Vertex) -> Vec<usize> {
    let n = x.len();
    let h = x.heights();
    debug_assert_eq!(h[n], 0);
    let mut labels = Vec::new();
    let mut m = leftmost_max(&h);
    if let Some(q) = ((m + 1)..=n).find(|&q| x.bit(q - 1) && h[q] == h[m]) {
        labels.push(q - 1);
    }
    while h[m] >= 2 {
        let q1 = (1..=n)
            .find(|&q| x.bit(q - 1) && h[q] == h[m] - 1)
            .expect("every height below the maximum ends a rise");
        labels.push(q1 - 1);
        let want = h[m] - 2;
        let mut s: Vec<usize> = (1..q1).filter(|&q| x.bit(q - 1) && h[q] == want).collect();
        if want == 0 {
            s.push(0);
        }
        s.push(m);
        s.sort_unstable();
        let pick = s[1];
        debug_assert!(pick >= 1 && x.bit(pick - 1));
        labels.push(pick - 1);
        if want == 0 {
            break;
        }
        m = (1..=n)
            .find(|&q| x.bit(q - 1) && h[q] == want)
            .expect("every height below the maximum ends a rise");
    }
    labels
}

/// Threads chains through one ranked matching per level: `indices[k]` selects
/// the matching used between levels k and k+1. Chains start at the vertices
/// left unmatched from below and follow the matchings upward as far as they
/// go.
///
/// Every choice of indices yields a partition into chains, but not every
/// choice yields symmetric ones; [`ChainDecomposition::verify`] tells them
/// apart. The all-zero choice reproduces [`parenthesis_scd`].
pub fn lexical_scd(n: usize, indices: &[usize]) -> Result<ChainDecomposition> {
    if indices.len() != n {
        return Err(Error::InvalidScd(format!(
            "expected {n} matching indices for Q_{n}, got {}",
            indices.len()
        )));
    }
    for (k, &i) in indices.iter().enumerate() {
        if i > max_index(n, k) {
            return Err(Error::InvalidMatching { n, k, i });
        }
    }
    let mut chains = Vec::new();
    for k in 0..=n {
        for x in level(n, k) {
            if k > 0 && lex_down(x, indices[k - 1])?.is_some() {
                continue;
            }
            let mut vertices = vec![x];
            let mut cur = x;
            for &i in &indices[k..] {
                match lex_up(cur, i)? {
                    Some(y) => {
                        vertices.push(y);
                        cur = y;
                    }
                    None => break,
                }
            }
            chains.push(Chain { vertices });
        }
    }
    Ok(ChainDecomposition::sorted(n, chains))
}
