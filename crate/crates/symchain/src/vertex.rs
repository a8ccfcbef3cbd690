//! Bitstring vertices of the hypercube, viewed as lattice paths.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A vertex of Q_n: a bitstring of length `n`, at most 127 symbols.
///
/// Bits are stored MSB-first in a `u128`, so for equal lengths the derived
/// order agrees with the lexicographic order on strings. Positions are
/// 0-based from the left. Read as a lattice path, a 1 is a step up and a 0 a
/// step down.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    len: u8,
    bits: u128,
}

/// How a lattice path sits relative to the zero line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DyckClass {
    /// Every non-empty prefix has height at least 1; the empty word counts.
    StrictlyPositive,
    /// No prefix goes below zero and some non-empty prefix has height 0.
    TouchesZero,
    /// Exactly one prefix has negative height.
    BelowOnce,
    /// At least two prefixes have negative height.
    Other,
}

impl Vertex {
    pub const MAX_LEN: usize = 127;

    pub fn new(bits: u128, len: usize) -> Self {
        assert!(len <= Self::MAX_LEN, "vertex length {len} exceeds 127");
        assert!(
            len == 128 || bits < (1u128 << len),
            "bits 0x{bits:x} do not fit in length {len}"
        );
        Vertex {
            len: len as u8,
            bits,
        }
    }

    /// The empty bitstring, the single vertex of Q_0.
    pub fn empty() -> Self {
        Vertex { len: 0, bits: 0 }
    }

    /// `bit` repeated `count` times: `0^count` or `1^count`.
    pub fn repeat(bit: bool, count: usize) -> Self {
        assert!(count <= Self::MAX_LEN);
        let bits = if bit { (1u128 << count) - 1 } else { 0 };
        Vertex {
            len: count as u8,
            bits,
        }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// The symbol at position `i`, counted from the left.
    pub fn bit(&self, i: usize) -> bool {
        assert!(i < self.len(), "position {i} out of range for length {}", self.len);
        (self.bits >> (self.len() - 1 - i)) & 1 == 1
    }

    /// Number of 1s; the level of the vertex in the cube.
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn flip(&self, i: usize) -> Self {
        assert!(i < self.len());
        Vertex {
            len: self.len,
            bits: self.bits ^ (1u128 << (self.len() - 1 - i)),
        }
    }

    fn mask(&self) -> u128 {
        if self.len == 0 {
            0
        } else {
            (1u128 << self.len()) - 1
        }
    }

    /// Flips every symbol.
    pub fn complement(&self) -> Self {
        Vertex {
            len: self.len,
            bits: !self.bits & self.mask(),
        }
    }

    /// Reads the string right to left.
    pub fn reverse(&self) -> Self {
        if self.len == 0 {
            return *self;
        }
        Vertex {
            len: self.len,
            bits: self.bits.reverse_bits() >> (128 - self.len()),
        }
    }

    /// Complement composed with reversal: mirrors the lattice path.
    pub fn comp_rev(&self) -> Self {
        self.complement().reverse()
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: Self) -> Self {
        let len = self.len() + other.len();
        assert!(len <= Self::MAX_LEN);
        Vertex {
            len: len as u8,
            bits: (self.bits << other.len()) | other.bits,
        }
    }

    pub fn concat_all(parts: &[Vertex]) -> Self {
        parts.iter().fold(Vertex::empty(), |acc, p| acc.concat(*p))
    }

    /// The substring at positions `start..end`.
    pub fn slice(&self, start: usize, end: usize) -> Self {
        assert!(start <= end && end <= self.len());
        let len = end - start;
        if len == 0 {
            return Vertex::empty();
        }
        Vertex {
            len: len as u8,
            bits: (self.bits >> (self.len() - end)) & ((1u128 << len) - 1),
        }
    }

    /// Cyclic left rotation by `r` positions.
    pub fn rotate_left(&self, r: usize) -> Self {
        if self.len == 0 {
            return *self;
        }
        let r = r % self.len();
        if r == 0 {
            return *self;
        }
        Vertex {
            len: self.len,
            bits: ((self.bits << r) | (self.bits >> (self.len() - r))) & self.mask(),
        }
    }

    /// Heights of all prefixes: `len + 1` values starting from 0.
    pub fn heights(&self) -> Vec<i32> {
        let mut hs = Vec::with_capacity(self.len() + 1);
        let mut h = 0i32;
        hs.push(h);
        for i in 0..self.len() {
            h += if self.bit(i) { 1 } else { -1 };
            hs.push(h);
        }
        hs
    }

    pub fn end_height(&self) -> i32 {
        2 * self.weight() as i32 - self.len() as i32
    }

    pub fn min_height(&self) -> i32 {
        let mut h = 0i32;
        let mut min = 0i32;
        for i in 0..self.len() {
            h += if self.bit(i) { 1 } else { -1 };
            min = min.min(h);
        }
        min
    }

    pub fn classify(&self) -> DyckClass {
        let mut h = 0i32;
        let mut neg = 0u32;
        let mut touched = false;
        for i in 0..self.len() {
            h += if self.bit(i) { 1 } else { -1 };
            if h < 0 {
                neg += 1;
            } else if h == 0 {
                touched = true;
            }
        }
        match neg {
            0 if touched => DyckClass::TouchesZero,
            0 => DyckClass::StrictlyPositive,
            1 => DyckClass::BelowOnce,
            _ => DyckClass::Other,
        }
    }

    /// True for balanced words that never dip below zero; the empty word is one.
    pub fn is_dyck_word(&self) -> bool {
        self.is_empty() || (self.end_height() == 0 && self.min_height() >= 0)
    }

    /// Splits a path that touches zero as `x = 1 u 0 v`, cutting at the
    /// first return to height 0. `u` is a Dyck word.
    pub fn canonical_decompose(&self) -> Result<(Vertex, Vertex)> {
        if self.classify() != DyckClass::TouchesZero {
            return Err(Error::domain(
                "canonical_decompose",
                *self,
                "path must stay nonnegative and return to zero",
            ));
        }
        let mut h = 0i32;
        for t in 0..self.len() {
            h += if self.bit(t) { 1 } else { -1 };
            if h == 0 {
                return Ok((self.slice(1, t), self.slice(t + 1, self.len())));
            }
        }
        unreachable!("TouchesZero path with no return to zero")
    }

    /// Splits a path that dips below zero exactly once as `x = u 0 1 v`,
    /// cutting around the dip. `u` never goes below zero.
    pub fn below_once_decompose(&self) -> Result<(Vertex, Vertex)> {
        if self.classify() != DyckClass::BelowOnce {
            return Err(Error::domain(
                "below_once_decompose",
                *self,
                "path must go below zero exactly once",
            ));
        }
        let mut h = 0i32;
        for t in 0..self.len() {
            h += if self.bit(t) { 1 } else { -1 };
            if h < 0 {
                if t + 1 >= self.len() {
                    return Err(Error::domain(
                        "below_once_decompose",
                        *self,
                        "path ends inside its dip",
                    ));
                }
                return Ok((self.slice(0, t), self.slice(t + 2, self.len())));
            }
        }
        unreachable!("BelowOnce path with no dip")
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("()");
        }
        for i in 0..self.len() {
            f.write_str(if self.bit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "()" {
            return Ok(Vertex::empty());
        }
        if s.len() > Vertex::MAX_LEN {
            return Err(Error::ParseVertex(s.to_string()));
        }
        let mut bits = 0u128;
        for c in s.chars() {
            bits = (bits << 1)
                | match c {
                    '0' => 0,
                    '1' => 1,
                    _ => return Err(Error::ParseVertex(s.to_string())),
                };
        }
        Ok(Vertex {
            len: s.len() as u8,
            bits,
        })
    }
}

/// Binomial coefficient as a `u128`; exact for all `n <= 127`.
pub fn binomial(n: usize, k: usize) -> u128 {
    assert!(n <= Vertex::MAX_LEN);
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for _ in 0..n {
        for j in (1..=k).rev() {
            row[j] += row[j - 1];
        }
    }
    row[k]
}

/// All vertices of Q_n with weight `k`, in increasing lexicographic order.
pub fn level(n: usize, k: usize) -> Level {
    assert!(n <= Vertex::MAX_LEN);
    let cur = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u128 << k) - 1)
    };
    Level {
        n,
        k,
        cur,
    }
}

/// Iterator over one level of the cube. See [`level`].
pub struct Level {
    n: usize,
    k: usize,
    cur: Option<u128>,
}

impl Iterator for Level {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        let v = self.cur?;
        let item = Vertex::new(v, self.n);
        self.cur = if self.k == 0 || self.k == self.n {
            None
        } else {
            let u = v & v.wrapping_neg();
            let w = v + u;
            let next = w | (((v ^ w) / u) >> 2);
            (next < (1u128 << self.n)).then_some(next)
        };
        Some(item)
    }
}
