//! Symmetric chain decompositions of the n-cube and Gray-code-style cycle
//! structures built from them.
//!
//! The crate provides:
//!
//! - [`vertex`]: bitstring vertices of Q_n viewed as lattice paths, with the
//!   classification of paths relative to the zero line.
//! - [`lexical`]: the lexical matchings `M^i` between consecutive levels of
//!   the cube, defined by ranking the down-steps (resp. up-steps) of a path.
//! - [`scd`]: symmetric chain decompositions: the classic parenthesis
//!   matching, two marker-based decompositions, unions of lexical matchings,
//!   verification and edge-disjointness.
//! - [`product`]: grid products that combine chain decompositions of two
//!   factors into one of the product cube.
//! - [`necklace`]: chain decompositions of the necklace poset (orbits of
//!   levels under rotation) and their lifts back to the cube.
//! - [`factor`]: cycle factors on the middle `2l` levels of an odd cube,
//!   obtained by gluing two edge-disjoint chain decompositions.
//! - [`middle4`]: a Hamilton cycle through the middle four levels of
//!   Q_{2n+1}, built from a cycle factor and a spanning tree of an auxiliary
//!   graph whose nodes are rotation orbits of first vertices.

pub mod factor;
pub mod lexical;
pub mod middle4;
pub mod necklace;
pub mod product;
pub mod scd;
pub mod tree;
pub mod vertex;

pub use vertex::{binomial, level, DyckClass, Vertex};

/// Errors reported by the fallible library operations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("cannot parse vertex `{0}`: expected at most 127 symbols, each 0 or 1")]
    ParseVertex(String),

    #[error("{op}: {vertex}: {detail}")]
    Domain {
        op: &'static str,
        vertex: String,
        detail: &'static str,
    },

    #[error("no matching M^{i} between levels {k} and {} of Q_{n}", k + 1)]
    InvalidMatching { n: usize, k: usize, i: usize },

    #[error("{op} is not defined for n = {n}: {detail}")]
    BadDimension {
        op: &'static str,
        n: usize,
        detail: &'static str,
    },

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("invalid chain decomposition: {0}")]
    InvalidScd(String),

    #[error("inputs share the edge {a} - {b}")]
    NotDisjoint { a: String, b: String },

    #[error("vertex {vertex} has no partner in M^{i} of Q_{n} below level {k}")]
    MissingDownMatch {
        n: usize,
        k: usize,
        i: usize,
        vertex: String,
    },

    #[error("{0}")]
    Verification(String),
}

impl Error {
    pub(crate) fn domain(op: &'static str, vertex: Vertex, detail: &'static str) -> Self {
        Error::Domain {
            op,
            vertex: vertex.to_string(),
            detail,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
