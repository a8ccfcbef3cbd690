//! Cycle factors through the middle levels of an odd cube.
//!
//! Clip a symmetric chain decomposition of Q_{2n+1} to the middle 2ℓ levels
//! and every chain leaves behind a path with an even number of vertices;
//! keeping every other edge of each path gives a perfect matching on the
//! band. Doing this with two edge-disjoint decompositions and taking the
//! union of the two matchings yields a set of vertex-disjoint cycles that
//! together cover the band.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::scd::ChainDecomposition;
use crate::vertex::{level, Vertex};
use crate::{Error, Result};

/// Restriction of a decomposition's chains to the levels `lo..=hi`. Chains
/// that miss the band entirely are dropped; the rest shrink to paths.
pub fn restrict_chains(d: &ChainDecomposition, lo: usize, hi: usize) -> Vec<Vec<Vertex>> {
    let mut paths = Vec::new();
    for c in d.chains() {
        let path: Vec<Vertex> = c
            .vertices()
            .iter()
            .copied()
            .filter(|v| (lo..=hi).contains(&v.weight()))
            .collect();
        if !path.is_empty() {
            paths.push(path);
        }
    }
    paths
}

/// Keeps the first, third, fifth, ... edge of every path. This covers each
/// path's vertices perfectly exactly when the vertex count is even.
pub fn alternating_matching(paths: &[Vec<Vertex>]) -> Result<Vec<(Vertex, Vertex)>> {
    let mut edges = Vec::new();
    for p in paths {
        if p.len() % 2 != 0 {
            return Err(Error::InvalidChain(format!(
                "a path on {} vertices starting at {} has no perfect alternating matching",
                p.len(),
                p[0]
            )));
        }
        for pair in p.chunks_exact(2) {
            edges.push((pair[0], pair[1]));
        }
    }
    Ok(edges)
}

/// A spanning set of vertex-disjoint cycles through a band of levels.
///
/// Cycles are stored in traversal order without repeating the first vertex,
/// each starting at its smallest vertex, and are sorted by length and then by
/// that vertex.
#[derive(Clone, Debug)]
pub struct CycleFactor {
    dim: usize,
    lo: usize,
    hi: usize,
    cycles: Vec<Vec<Vertex>>,
}

/// Builds the cycle factor of the middle 2ℓ levels of Q_{2n+1} from two
/// edge-disjoint decompositions. Disjointness is checked up front; every
/// structural defect in the inputs surfaces as an error rather than a
/// malformed factor.
pub fn build_factor(
    d1: &ChainDecomposition,
    d2: &ChainDecomposition,
    ell: usize,
) -> Result<CycleFactor> {
    let dim = d1.n();
    if d2.n() != dim {
        return Err(Error::InvalidScd(format!(
            "dimension mismatch: Q_{dim} vs Q_{}",
            d2.n()
        )));
    }
    if dim.is_multiple_of(2) {
        return Err(Error::BadDimension {
            op: "build_factor",
            n: dim,
            detail: "the band is centered on the two middle levels, so the cube dimension must be odd",
        });
    }
    let half = dim / 2;
    if ell < 1 || ell > half + 1 {
        return Err(Error::BadDimension {
            op: "build_factor",
            n: dim,
            detail: "the band half-width must lie between 1 and (dimension + 1) / 2",
        });
    }
    if let Some((a, b)) = d1.shared_edge(d2) {
        return Err(Error::NotDisjoint {
            a: a.to_string(),
            b: b.to_string(),
        });
    }
    let lo = half + 1 - ell;
    let hi = half + ell;
    let m1 = matching_map(alternating_matching(&restrict_chains(d1, lo, hi))?)?;
    let m2 = matching_map(alternating_matching(&restrict_chains(d2, lo, hi))?)?;

    let mut order: Vec<Vertex> = m1.keys().copied().collect();
    order.sort_unstable();
    let mut visited: HashSet<Vertex> = HashSet::with_capacity(order.len());
    let mut cycles = Vec::new();
    for &start in &order {
        if visited.contains(&start) {
            continue;
        }
        let mut cycle = Vec::new();
        let mut cur = start;
        let mut take_first = true;
        loop {
            cycle.push(cur);
            visited.insert(cur);
            let partner = if take_first { &m1 } else { &m2 }
                .get(&cur)
                .copied()
                .ok_or_else(|| {
                    Error::Verification(format!("vertex {cur} is missing a matching partner"))
                })?;
            take_first = !take_first;
            if partner == start {
                break;
            }
            cur = partner;
        }
        cycles.push(cycle);
    }
    if visited.len() != m2.len() {
        return Err(Error::Verification(format!(
            "the two matchings cover {} and {} vertices",
            visited.len(),
            m2.len()
        )));
    }
    cycles.sort_by_key(|c| (c.len(), c[0]));
    Ok(CycleFactor {
        dim,
        lo,
        hi,
        cycles,
    })
}

fn matching_map(edges: Vec<(Vertex, Vertex)>) -> Result<HashMap<Vertex, Vertex>> {
    let mut map = HashMap::with_capacity(edges.len() * 2);
    for (a, b) in edges {
        if map.insert(a, b).is_some() {
            return Err(Error::InvalidScd(format!(
                "vertex {a} is matched twice in the band"
            )));
        }
        if map.insert(b, a).is_some() {
            return Err(Error::InvalidScd(format!(
                "vertex {b} is matched twice in the band"
            )));
        }
    }
    Ok(map)
}

impl CycleFactor {
    pub fn dimension(&self) -> usize {
        self.dim
    }

    /// The level band `(lo, hi)` the factor spans.
    pub fn band(&self) -> (usize, usize) {
        (self.lo, self.hi)
    }

    pub fn cycles(&self) -> &[Vec<Vertex>] {
        &self.cycles
    }

    pub fn census(&self) -> Census {
        Census {
            lengths: self.cycles.iter().map(|c| c.len()).collect(),
        }
    }

    /// Re-checks that the cycles are genuine, disjoint, and cover the band.
    pub fn verify(&self) -> Result<()> {
        let mut expected: HashSet<Vertex> = HashSet::new();
        for k in self.lo..=self.hi {
            expected.extend(level(self.dim, k));
        }
        let mut seen: HashSet<Vertex> = HashSet::with_capacity(expected.len());
        for cycle in &self.cycles {
            if cycle.len() < 4 || cycle.len() % 2 != 0 {
                return Err(Error::Verification(format!(
                    "cycle starting at {} has impossible length {}",
                    cycle[0],
                    cycle.len()
                )));
            }
            for i in 0..cycle.len() {
                let a = cycle[i];
                let b = cycle[(i + 1) % cycle.len()];
                if !is_cube_edge(a, b) {
                    return Err(Error::Verification(format!(
                        "{a} and {b} are not adjacent in the cube"
                    )));
                }
                if !expected.contains(&a) {
                    return Err(Error::Verification(format!("{a} lies outside the band")));
                }
                if !seen.insert(a) {
                    return Err(Error::Verification(format!(
                        "vertex {a} is visited more than once"
                    )));
                }
            }
        }
        if seen.len() != expected.len() {
            return Err(Error::Verification(format!(
                "cycles cover {} of {} band vertices",
                seen.len(),
                expected.len()
            )));
        }
        Ok(())
    }
}

fn is_cube_edge(a: Vertex, b: Vertex) -> bool {
    a.len() == b.len() && (a.bits() ^ b.bits()).count_ones() == 1
}

impl fmt::Display for CycleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Cycle count plus the sorted multiset of cycle lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub lengths: Vec<usize>,
}

impl Census {
    pub fn count(&self) -> usize {
        self.lengths.len()
    }
}

impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let noun = if self.count() == 1 { "cycle" } else { "cycles" };
        write!(f, "{} {noun}: ", self.count())?;
        for (i, len) in self.lengths.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{len}")?;
        }
        Ok(())
    }
}
