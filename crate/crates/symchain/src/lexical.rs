//! Lexical matchings between consecutive levels of the cube.
//!
//! Fix `n` and a level `k < n`. A vertex is read as a lattice path; to move
//! between levels `k` and `k + 1` one flips a single step. The matching
//! `M^i` selects which step to flip by ranking them:
//!
//! - going up from `x` at level `k`, extend the path by virtual down-steps
//!   on the right until it would end at height -1, then rank all down-steps
//!   by start height, highest first, ties broken right to left. `M^i` flips
//!   the rank-`i` down-step; if that rank falls on a virtual step, `x` is
//!   unmatched in `M^i`.
//! - going down from `y` at level `k + 1`, extend by virtual up-steps until
//!   the path would end at height +1, rank all up-steps by end height,
//!   highest first, ties broken left to right, and flip the rank-`i` step.
//!
//! Both rankings always contain exactly `max(k, n-k-1) + 1` steps, so the
//! matchings `M^0, ..., M^l` with `l = max(k, n-k-1)` partition all edges
//! between the two levels, and the two directions describe the same
//! matching.

use crate::vertex::{binomial, level, Vertex};
use crate::{Error, Result};

/// The largest valid matching index between levels `k` and `k + 1` of Q_n.
pub fn max_index(n: usize, k: usize) -> usize {
    assert!(k < n);
    k.max(n - k - 1)
}

/// One step of an extended lattice path, as used by the rankings.
///
/// For down-steps `height` is the height the step starts at, for up-steps
/// the height it ends at. Virtual extension steps carry positions past the
/// end of the word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankedStep {
    pub pos: usize,
    pub height: i32,
    pub appended: bool,
}

/// All down-steps of the extended path of `x`, best rank first.
pub fn ranked_down_steps(x: Vertex) -> Vec<RankedStep> {
    let n = x.len();
    let mut steps = Vec::with_capacity(n + 2);
    let mut h = 0i32;
    for pos in 0..n {
        if x.bit(pos) {
            h += 1;
        } else {
            steps.push(RankedStep {
                pos,
                height: h,
                appended: false,
            });
            h -= 1;
        }
    }
    let appended = (h + 1).max(0);
    for j in 0..appended {
        steps.push(RankedStep {
            pos: n + j as usize,
            height: h - j,
            appended: true,
        });
    }
    steps.sort_unstable_by(|a, b| b.height.cmp(&a.height).then(b.pos.cmp(&a.pos)));
    steps
}

/// All up-steps of the extended path of `y`, best rank first.
pub fn ranked_up_steps(y: Vertex) -> Vec<RankedStep> {
    let n = y.len();
    let mut steps = Vec::with_capacity(n + 2);
    let mut h = 0i32;
    for pos in 0..n {
        if y.bit(pos) {
            h += 1;
            steps.push(RankedStep {
                pos,
                height: h,
                appended: false,
            });
        } else {
            h -= 1;
        }
    }
    let appended = (1 - h).max(0);
    for j in 0..appended {
        steps.push(RankedStep {
            pos: n + j as usize,
            height: h + j + 1,
            appended: true,
        });
    }
    steps.sort_unstable_by(|a, b| b.height.cmp(&a.height).then(a.pos.cmp(&b.pos)));
    steps
}

/// The partner of `x` one level up in `M^i`, or `None` if `x` is unmatched.
pub fn lex_up(x: Vertex, i: usize) -> Result<Option<Vertex>> {
    let (n, k) = (x.len(), x.weight());
    if k >= n || i > max_index(n, k) {
        return Err(Error::InvalidMatching { n, k, i });
    }
    let step = ranked_down_steps(x)[i];
    Ok((!step.appended).then(|| x.flip(step.pos)))
}

/// The partner of `y` one level down in `M^i`, or `None` if `y` is unmatched.
pub fn lex_down(y: Vertex, i: usize) -> Result<Option<Vertex>> {
    let (n, w) = (y.len(), y.weight());
    if w == 0 || i > max_index(n, w - 1) {
        return Err(Error::InvalidMatching { n, k: w, i });
    }
    let step = ranked_up_steps(y)[i];
    Ok((!step.appended).then(|| y.flip(step.pos)))
}

/// All edges of `M^i` between levels `k` and `k + 1` of Q_n, as pairs
/// `(lower, upper)` sorted by lower vertex.
///
/// The matching saturates the smaller of the two levels, so it has exactly
/// `min(C(n,k), C(n,k+1))` edges.
pub fn lex_matching(n: usize, k: usize, i: usize) -> Result<Vec<(Vertex, Vertex)>> {
    if k + 1 > n || i > max_index(n, k) {
        return Err(Error::InvalidMatching { n, k, i });
    }
    let mut edges = Vec::new();
    if binomial(n, k) <= binomial(n, k + 1) {
        for x in level(n, k) {
            if let Some(y) = lex_up(x, i)? {
                edges.push((x, y));
            }
        }
    } else {
        for y in level(n, k + 1) {
            if let Some(x) = lex_down(y, i)? {
                edges.push((x, y));
            }
        }
        edges.sort_unstable();
    }
    Ok(edges)
}
