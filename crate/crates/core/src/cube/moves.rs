use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::Face;

/// Turn amount, face-turn metric.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Amount {
    /// 90° clockwise, looking at the face.
    Cw,
    Half,
    /// 90° counter-clockwise, written with an apostrophe.
    Ccw,
}

impl Amount {
    pub const ALL: [Amount; 3] = [Amount::Cw, Amount::Half, Amount::Ccw];

    pub fn inverse(self) -> Amount {
        match self {
            Amount::Cw => Amount::Ccw,
            Amount::Half => Amount::Half,
            Amount::Ccw => Amount::Cw,
        }
    }

    /// Number of clockwise quarter turns (1, 2 or 3).
    pub fn quarter_turns(self) -> u8 {
        self as u8 + 1
    }

    /// Inverse of [`quarter_turns`](Self::quarter_turns) modulo 4; `None` for 0.
    pub fn from_quarter_turns(q: u8) -> Option<Amount> {
        match q % 4 {
            1 => Some(Amount::Cw),
            2 => Some(Amount::Half),
            3 => Some(Amount::Ccw),
            _ => None,
        }
    }

    fn suffix(self) -> &'static str {
        match self {
            Amount::Cw => "",
            Amount::Half => "2",
            Amount::Ccw => "'",
        }
    }
}

/// A single face turn.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Move {
    pub face: Face,
    pub amount: Amount,
}

impl Move {
    pub const fn new(face: Face, amount: Amount) -> Move {
        Move { face, amount }
    }

    /// `face * 3 + amount`, in `0..18`.
    #[inline]
    pub fn index(self) -> usize {
        self.face as usize * 3 + self.amount as usize
    }

    pub fn from_index(i: usize) -> Move {
        Move::new(Face::from_index(i / 3), Amount::ALL[i % 3])
    }

    /// All 18 moves in canonical order: faces `U R F D L B`, amounts
    /// clockwise, half, counter-clockwise.
    pub fn all() -> impl Iterator<Item = Move> {
        (0..18).map(Move::from_index)
    }

    pub fn inverse(self) -> Move {
        Move::new(self.face, self.amount.inverse())
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.face, self.amount.suffix())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum MoveParseError {
    /// Character offset of the offending token.
    #[error("bad move token at position {0}")]
    BadToken(usize),
}

impl FromStr for Move {
    type Err = MoveParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let seq: MoveSequence = s.parse()?;
        match seq.as_slice() {
            [m] => Ok(*m),
            _ => Err(MoveParseError::BadToken(0)),
        }
    }
}

/// An ordered list of face turns. Redundant neighbours such as `U' U'` are
/// kept as written.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MoveSequence(Vec<Move>);

impl MoveSequence {
    pub fn new(moves: Vec<Move>) -> Self {
        MoveSequence(moves)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Move> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Move] {
        &self.0
    }

    pub fn push(&mut self, m: Move) {
        self.0.push(m);
    }

    pub fn into_vec(self) -> Vec<Move> {
        self.0
    }

    /// Reversed order with every amount inverted.
    pub fn inverse(&self) -> MoveSequence {
        MoveSequence(self.0.iter().rev().map(|m| m.inverse()).collect())
    }

    /// Merges runs of same-face moves modulo four, dropping runs that
    /// cancel out. Repeats until no adjacent pair shares a face.
    pub fn simplified(&self) -> MoveSequence {
        let mut out: Vec<Move> = Vec::with_capacity(self.0.len());
        for &m in &self.0 {
            match out.last().copied() {
                Some(prev) if prev.face == m.face => {
                    out.pop();
                    let q = prev.amount.quarter_turns() + m.amount.quarter_turns();
                    if let Some(amount) = Amount::from_quarter_turns(q) {
                        out.push(Move::new(m.face, amount));
                    }
                }
                _ => out.push(m),
            }
        }
        MoveSequence(out)
    }

    /// Tokens run together without separators, the way the GUI panel shows
    /// them (`LUD'`).
    pub fn compact(&self) -> String {
        self.0.iter().map(|m| m.to_string()).collect()
    }
}

impl From<Vec<Move>> for MoveSequence {
    fn from(v: Vec<Move>) -> Self {
        MoveSequence(v)
    }
}

impl FromIterator<Move> for MoveSequence {
    fn from_iter<T: IntoIterator<Item = Move>>(iter: T) -> Self {
        MoveSequence(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a MoveSequence {
    type Item = &'a Move;
    type IntoIter = std::slice::Iter<'a, Move>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for MoveSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl FromStr for MoveSequence {
    type Err = MoveParseError;

    /// Accepts whitespace-separated tokens (`R' B U2`) as well as tokens run
    /// together (`LUD'`, `D2R'F`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let chars: Vec<char> = s.chars().collect();
        let mut moves = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let start = i;
            let face = Face::from_char(c).ok_or(MoveParseError::BadToken(start))?;
            i += 1;
            let amount = match chars.get(i) {
                Some('\'') | Some('\u{2019}') => {
                    i += 1;
                    Amount::Ccw
                }
                Some('2') => {
                    i += 1;
                    Amount::Half
                }
                _ => Amount::Cw,
            };
            match chars.get(i) {
                None => {}
                Some(&n) if n.is_whitespace() || Face::from_char(n).is_some() => {}
                Some(_) => return Err(MoveParseError::BadToken(start)),
            }
            moves.push(Move::new(face, amount));
        }
        Ok(MoveSequence(moves))
    }
}
