use thiserror::Error;

use cuberig::cube::{CubeError, FaceletError, MoveParseError, Verdict};
use cuberig::twophase::SolveError;

/// Everything the pipeline can refuse. [`Rejection::name`] is the verdict
/// string reported to clients.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Rejection {
    #[error(transparent)]
    Facelet(#[from] FaceletError),
    #[error("{0}")]
    Cubie(String, &'static str),
    #[error("state is not solvable: {}", .0.name())]
    Unsolvable(Verdict),
    #[error(transparent)]
    Moves(#[from] MoveParseError),
    #[error("no solution of at most {0} moves")]
    NoSolution(usize),
    #[error("face string must be 9 characters from URFDLB")]
    BadFaceString,
    #[error("two different face strings with center {0}")]
    DuplicateCenterConflict(char),
    #[error("faces missing: {0}")]
    IncompleteCapture(String),
    #[error("unknown session {0}")]
    UnknownSession(String),
    #[error("user moves are only accepted at the end of the user moves; step back to it first")]
    MoveNotAllowedMidPlayback,
}

impl Rejection {
    pub fn name(&self) -> &'static str {
        match self {
            Rejection::Facelet(e) => e.name(),
            Rejection::Cubie(_, name) => name,
            Rejection::Unsolvable(v) => v.name(),
            Rejection::Moves(_) => "BadToken",
            Rejection::NoSolution(_) => "NoSolutionWithinBound",
            Rejection::BadFaceString => "BadFaceString",
            Rejection::DuplicateCenterConflict(_) => "DuplicateCenterConflict",
            Rejection::IncompleteCapture(_) => "IncompleteCapture",
            Rejection::UnknownSession(_) => "UnknownSession",
            Rejection::MoveNotAllowedMidPlayback => "MoveNotAllowedMidPlayback",
        }
    }
}

impl From<CubeError> for Rejection {
    fn from(e: CubeError) -> Self {
        let name = match &e {
            CubeError::Facelet(f) => return Rejection::Facelet(*f),
            CubeError::UnrecognizedCubie(_) => "UnrecognizedCubie",
            CubeError::DuplicateCubie(_) => "DuplicateCubie",
            CubeError::NotAPermutation => "NotAPermutation",
        };
        Rejection::Cubie(e.to_string(), name)
    }
}

impl From<SolveError> for Rejection {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::InvalidState(v) => Rejection::Unsolvable(v),
            SolveError::NoSolutionWithinBound(n) => Rejection::NoSolution(n),
        }
    }
}
