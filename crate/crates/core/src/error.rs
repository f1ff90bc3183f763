use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("not a permutation of 0..{0}: {1}")]
    NotAPermutation(usize, String),
    #[error("group closure exceeds the element cap of {cap}")]
    ClosureExceedsCap { cap: usize },
    #[error("group is not transitive")]
    NotTransitive,
    #[error("group is trivial")]
    TrivialGroup,
    #[error("degree overflow: {0}")]
    Overflow(String),
    #[error("vertex count mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("automorphism search exceeded its budget")]
    SearchBudgetExceeded,
    #[error("digraph is not a loopless graph")]
    NotAGraph,
    #[error("digraph is not regular")]
    Irregular,
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("index set is not homogeneous")]
    NotHomogeneous,
    #[error("arity {0} too large for a factorial scan")]
    ArityTooLarge(usize),
    #[error("digraph has only the trivial automorphism")]
    RigidGraph,
    #[error("digraph has no arcs")]
    NoArcs,
    #[error("no family matches a primitive digraph of relative fixity {0}")]
    NoFamilyMatch(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// Budget-type failures (cap or search time) as opposed to bad input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::ClosureExceedsCap { .. } | Error::SearchBudgetExceeded
        )
    }
}
