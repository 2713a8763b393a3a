use std::fmt;

use thiserror::Error;

/// An ordered vertex pair `(a, b)` used as a witness in diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pair(pub usize, pub usize);

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

/// Hypotheses that gate the structural audits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    CompleteMultipartite,
    Disconnected,
    NotK211Free,
}

impl Hypothesis {
    pub fn as_str(self) -> &'static str {
        match self {
            Hypothesis::CompleteMultipartite => "complete_multipartite",
            Hypothesis::Disconnected => "disconnected",
            Hypothesis::NotK211Free => "not_k211_free",
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed relation table: {0}")]
    Malformed(String),

    #[error("not a partition of X x X: {0}")]
    NotAPartition(String),

    #[error("class {class} is not closed under transpose: pairs {first} and {second}")]
    NotClosedUnderTranspose { class: usize, first: Pair, second: Pair },

    #[error("p[{i}][{j}][{k}] is not constant: {count_a} at pair {pair_a} but {count_b} at pair {pair_b}")]
    NonConstantIntersection {
        i: usize,
        j: usize,
        k: usize,
        pair_a: Pair,
        count_a: u64,
        pair_b: Pair,
        count_b: u64,
    },

    #[error("not commutative: p[{i}][{j}][{k}] != p[{j}][{i}][{k}]")]
    NotCommutative { i: usize, j: usize, k: usize },

    #[error("class 0 is the identity relation and has no graph")]
    IdentityClassRequested,

    #[error("class {0} is out of range")]
    ClassOutOfRange(usize),

    #[error("operation requires a symmetric scheme")]
    NotSymmetric,

    #[error("size cap exceeded: {0}")]
    SizeCap(String),

    #[error("group table is not a group: {0}")]
    NotAGroup(String),

    #[error("graph is not distance-regular: pair {0} breaks the distance partition")]
    NotDistanceRegular(Pair),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertices {0} and {1} lie in different components")]
    DisconnectedPair(usize, usize),

    #[error("no lift exists for the class walk at step {0}")]
    LiftImpossible(usize),

    #[error("walk is not a walk in the graph at step {0}")]
    NotAWalk(usize),

    #[error("hypothesis not met: {0}")]
    HypothesisViolation(Hypothesis),

    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),

    #[error("precondition cannot be verified: {0}")]
    PreconditionUnverifiable(String),

    #[error("spectral refinement failed: {0}")]
    RefinementFailed(String),

    #[error("primitivity detectors disagree: {0}")]
    DetectorDisagreement(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// True for the errors that mean "the input is not a valid scheme".
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Malformed(_)
                | Error::NotAPartition(_)
                | Error::NotClosedUnderTranspose { .. }
                | Error::NonConstantIntersection { .. }
                | Error::NotCommutative { .. }
                | Error::NotAGroup(_)
                | Error::NotDistanceRegular(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
