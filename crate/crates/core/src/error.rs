use thiserror::Error;

use crate::parse::ParseError;
use crate::tree::CycleReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("position {position} out of range 1..={max}")]
    PositionOutOfRange { position: usize, max: usize },

    #[error("not a tree-shaped graph: {0}")]
    WrongShape(String),

    #[error("{0}")]
    HasCycle(CycleReport),

    #[error("not a bijection: {0}")]
    NotBijective(String),

    #[error("graph has no cycle, so no witness exists")]
    NoCycle,

    /// An allowable composite closed a loop. Allowable graphs are always
    /// compatible, so this indicates a bug rather than bad input.
    #[error("allowable composite produced {0} closed loop(s)")]
    InternalLoop(usize),

    #[error("composite has {0} closed loop(s)")]
    ClosedLoops(usize),

    #[error("invalid pairing: {0}")]
    InvalidPairing(String),

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
