//! Cube state representations and the move algebra shared by the solver,
//! the rig compiler and the simulator.
//!
//! Two representations are kept:
//!
//! * [`FaceletState`]: the 54-sticker surface string, faces in the order
//!   `U R F D L B`, each face read row-major while looking at it with `U` on
//!   top and `F` towards the viewer (for `U` the back row comes first, for `D`
//!   the front row comes first).
//! * [`CubieState`]: permutation and orientation of the 8 corners and 12 edges.
//!
//! Both are labelled by face name, never by colour.

mod cubie;
mod facelet;
mod moves;
mod random;

pub use cubie::{Corner, CubieState, Edge, Verdict};
pub use facelet::{FaceletError, FaceletState, SOLVED_FACELETS};
pub use moves::{Amount, Move, MoveParseError, MoveSequence};
pub use random::{random_sequence, random_state};

use std::fmt;

use thiserror::Error;

/// One of the six faces of the cube, in the canonical `U R F D L B` order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Face {
    U,
    R,
    F,
    D,
    L,
    B,
}

impl Face {
    pub const ALL: [Face; 6] = [Face::U, Face::R, Face::F, Face::D, Face::L, Face::B];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    #[inline]
    pub fn from_index(i: usize) -> Face {
        Face::ALL[i]
    }

    pub fn opposite(self) -> Face {
        match self {
            Face::U => Face::D,
            Face::R => Face::L,
            Face::F => Face::B,
            Face::D => Face::U,
            Face::L => Face::R,
            Face::B => Face::F,
        }
    }

    pub fn from_char(c: char) -> Option<Face> {
        match c {
            'U' => Some(Face::U),
            'R' => Some(Face::R),
            'F' => Some(Face::F),
            'D' => Some(Face::D),
            'L' => Some(Face::L),
            'B' => Some(Face::B),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        ['U', 'R', 'F', 'D', 'L', 'B'][self.index()]
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Errors raised while decoding or constructing cube states.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubeError {
    #[error("{0}")]
    Facelet(#[from] FaceletError),
    #[error("no physical piece matches the stickers at {0}")]
    UnrecognizedCubie(String),
    #[error("piece at {0} appears more than once")]
    DuplicateCubie(String),
    #[error("permutation or orientation arrays are malformed")]
    NotAPermutation,
}
