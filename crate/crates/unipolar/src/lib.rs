//! Exact algorithms for unipolar and generalized split graphs.
//!
//! A graph is *unipolar* when its vertices split into a central clique plus
//! a disjoint union of cliques with no edges between the outer cliques; it is
//! *generalized split* when it or its complement is unipolar. This crate
//! recognizes both classes and returns the clique-split certificate, solves
//! maximum independent set, maximum clique, minimum clique cover, and minimum
//! proper coloring exactly on them, and provides perfect-code tooling: a
//! polynomial split-graph case, a desk-scale exact solver, and the gadget
//! construction translating one-in-three satisfiability into perfect-code
//! instances.
//!
//! Everything is deterministic: ties in every search are broken by fixed
//! rules, so identical inputs give identical certificates on every platform.
//! The [`oracle`] module holds brute-force reference implementations and the
//! seeded instance generators that the test suites check the fast algorithms
//! against.

#![forbid(unsafe_code)]

pub mod chordal;
pub mod check;
pub mod graph;
pub mod matching;
pub mod optimize;
pub mod oracle;
pub mod perfect_code;
pub mod recognition;
pub mod twosat;

pub use graph::{Graph, VertexSet};
pub use recognition::{CliqueSplit, GsResult};

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("edge ({u}, {v}) is out of range for a graph on {n} vertices")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop ({v}, {v}) is not allowed")]
    SelfLoop { v: usize },
    #[error("vertex {v} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("elimination order is not a certified perfect elimination ordering")]
    UncertifiedOrder,
    #[error("fill edge ({u}, {v}) already present in the base graph")]
    FillOverlapsBase { u: usize, v: usize },
    #[error("filled graph is not chordal")]
    FilledNotChordal,
    #[error("clique split does not validate against this graph")]
    InvalidSplit,
    #[error("graph is not generalized split")]
    NotGeneralizedSplit,
    #[error("instance has {n} vertices, over the exact-search bound of {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("invalid bipartition: {msg}")]
    InvalidBipartition { msg: String },
    #[error("invalid split-graph partition: {msg}")]
    InvalidSplitGraphPartition { msg: String },
    #[error("clause {index} is invalid: {msg}")]
    InvalidClause { index: usize, msg: String },
    #[error("assignment does not satisfy the formula with exactly one true variable per clause")]
    NotOneInThree,
    #[error("vertex set is not a perfect code of the reduction graph")]
    NotAPerfectCode,
    #[error("unknown named graph '{name}'; known names: P<k>, C<k> with k >= 3, K<n>, prism, G_c, and co-<name> for complements")]
    UnknownNamedGraph { name: String },
    #[error("center vertex {v} fits no peripheral clique; the clique split is internally inconsistent")]
    CoverPlacement { v: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
