use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::cubie::{Corner, CubieState, Edge};
use super::{CubeError, Face};

pub const SOLVED_FACELETS: &str = "UUUUUUUUURRRRRRRRRFFFFFFFFFDDDDDDDDDLLLLLLLLLBBBBBBBBB";

const CENTERS: [usize; 6] = [4, 13, 22, 31, 40, 49];

// Sticker positions of each corner slot, U/D sticker first, clockwise.
const CORNER_FACELETS: [[usize; 3]; 8] = [
    [8, 9, 20],
    [6, 18, 38],
    [0, 36, 47],
    [2, 45, 11],
    [29, 26, 15],
    [27, 44, 24],
    [33, 53, 42],
    [35, 17, 51],
];

const EDGE_FACELETS: [[usize; 2]; 12] = [
    [5, 10],
    [7, 19],
    [3, 37],
    [1, 46],
    [32, 16],
    [28, 25],
    [30, 43],
    [34, 52],
    [23, 12],
    [21, 41],
    [50, 39],
    [48, 14],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum FaceletError {
    #[error("facelet string must have 54 characters, got {0}")]
    BadLength(usize),
    #[error("invalid facelet character at position {0}")]
    BadCharacter(usize),
    #[error("face {0} appears {1} times instead of 9")]
    BadCount(Face, usize),
    #[error("center facelets must read U R F D L B")]
    BadCenters,
}

impl FaceletError {
    pub fn name(&self) -> &'static str {
        match self {
            FaceletError::BadLength(_) => "BadLength",
            FaceletError::BadCharacter(_) => "BadCharacter",
            FaceletError::BadCount(..) => "BadCount",
            FaceletError::BadCenters => "BadCenters",
        }
    }
}

/// The 54-sticker surface description.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FaceletState([Face; 54]);

impl FaceletState {
    pub fn solved() -> Self {
        let mut f = [Face::U; 54];
        for (i, x) in f.iter_mut().enumerate() {
            *x = Face::from_index(i / 9);
        }
        FaceletState(f)
    }

    /// Checks length, alphabet, label counts and centers, in that order.
    pub fn parse(text: &str) -> Result<Self, FaceletError> {
        let n = text.chars().count();
        if n != 54 {
            return Err(FaceletError::BadLength(n));
        }
        let mut f = [Face::U; 54];
        for (i, c) in text.chars().enumerate() {
            f[i] = Face::from_char(c).ok_or(FaceletError::BadCharacter(i))?;
        }
        let mut counts = [0usize; 6];
        for x in &f {
            counts[x.index()] += 1;
        }
        for face in Face::ALL {
            if counts[face.index()] != 9 {
                return Err(FaceletError::BadCount(face, counts[face.index()]));
            }
        }
        if CENTERS.iter().enumerate().any(|(i, &p)| f[p] != Face::from_index(i)) {
            return Err(FaceletError::BadCenters);
        }
        Ok(FaceletState(f))
    }

    pub fn facelets(&self) -> &[Face; 54] {
        &self.0
    }

    /// Identifies every corner and edge by its sticker set.
    pub fn to_cubies(&self) -> Result<CubieState, CubeError> {
        let f = &self.0;
        let mut cp = [0u8; 8];
        let mut co = [0u8; 8];
        let mut seen_c = [false; 8];
        for (slot, stickers) in CORNER_FACELETS.iter().enumerate() {
            let unknown = || CubeError::UnrecognizedCubie(Corner::ALL[slot].to_string());
            let ori = (0..3)
                .find(|&o| matches!(f[stickers[o]], Face::U | Face::D))
                .ok_or_else(unknown)?;
            let a = f[stickers[(ori + 1) % 3]];
            let b = f[stickers[(ori + 2) % 3]];
            let ud = f[stickers[ori]];
            let piece = Corner::ALL
                .iter()
                .position(|c| c.faces() == [ud, a, b])
                .ok_or_else(unknown)?;
            if seen_c[piece] {
                return Err(CubeError::DuplicateCubie(Corner::ALL[slot].to_string()));
            }
            seen_c[piece] = true;
            cp[slot] = piece as u8;
            co[slot] = ori as u8;
        }

        let mut ep = [0u8; 12];
        let mut eo = [0u8; 12];
        let mut seen_e = [false; 12];
        for (slot, stickers) in EDGE_FACELETS.iter().enumerate() {
            let pair = [f[stickers[0]], f[stickers[1]]];
            let found = Edge::ALL.iter().enumerate().find_map(|(piece, e)| {
                let faces = e.faces();
                if faces == pair {
                    Some((piece, 0))
                } else if faces == [pair[1], pair[0]] {
                    Some((piece, 1))
                } else {
                    None
                }
            });
            let (piece, flip) =
                found.ok_or_else(|| CubeError::UnrecognizedCubie(Edge::ALL[slot].to_string()))?;
            if seen_e[piece] {
                return Err(CubeError::DuplicateCubie(Edge::ALL[slot].to_string()));
            }
            seen_e[piece] = true;
            ep[slot] = piece as u8;
            eo[slot] = flip;
        }
        CubieState::new(cp, co, ep, eo)
    }

    pub fn from_cubies(c: &CubieState) -> FaceletState {
        let mut f = Self::solved().0;
        for slot in 0..8 {
            let faces = Corner::ALL[c.cp[slot] as usize].faces();
            let ori = c.co[slot] as usize;
            for k in 0..3 {
                f[CORNER_FACELETS[slot][(k + ori) % 3]] = faces[k];
            }
        }
        for slot in 0..12 {
            let faces = Edge::ALL[c.ep[slot] as usize].faces();
            let flip = c.eo[slot] as usize;
            for k in 0..2 {
                f[EDGE_FACELETS[slot][(k + flip) % 2]] = faces[k];
            }
        }
        FaceletState(f)
    }
}

impl FromStr for FaceletState {
    type Err = FaceletError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FaceletState::parse(s)
    }
}

impl fmt::Display for FaceletState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.0 {
            write!(f, "{}", x.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for FaceletState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FaceletState({self})")
    }
}

impl From<&CubieState> for FaceletState {
    fn from(c: &CubieState) -> Self {
        FaceletState::from_cubies(c)
    }
}
