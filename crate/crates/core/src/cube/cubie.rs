use std::fmt;

use super::{CubeError, Face, Move};

/// Corner slots, named by the faces they touch.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Corner {
    URF,
    UFL,
    ULB,
    UBR,
    DFR,
    DLF,
    DBL,
    DRB,
}

/// Edge slots. `FR FL BL BR` form the middle (UD) slice.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Edge {
    UR,
    UF,
    UL,
    UB,
    DR,
    DF,
    DL,
    DB,
    FR,
    FL,
    BL,
    BR,
}

impl Corner {
    pub const ALL: [Corner; 8] = [
        Corner::URF,
        Corner::UFL,
        Corner::ULB,
        Corner::UBR,
        Corner::DFR,
        Corner::DLF,
        Corner::DBL,
        Corner::DRB,
    ];

    /// Sticker faces of the piece, starting with its U/D sticker and going
    /// clockwise around the corner.
    pub fn faces(self) -> [Face; 3] {
        use Face::*;
        match self {
            Corner::URF => [U, R, F],
            Corner::UFL => [U, F, L],
            Corner::ULB => [U, L, B],
            Corner::UBR => [U, B, R],
            Corner::DFR => [D, F, R],
            Corner::DLF => [D, L, F],
            Corner::DBL => [D, B, L],
            Corner::DRB => [D, R, B],
        }
    }
}

impl Edge {
    pub const ALL: [Edge; 12] = [
        Edge::UR,
        Edge::UF,
        Edge::UL,
        Edge::UB,
        Edge::DR,
        Edge::DF,
        Edge::DL,
        Edge::DB,
        Edge::FR,
        Edge::FL,
        Edge::BL,
        Edge::BR,
    ];

    pub fn faces(self) -> [Face; 2] {
        use Face::*;
        match self {
            Edge::UR => [U, R],
            Edge::UF => [U, F],
            Edge::UL => [U, L],
            Edge::UB => [U, B],
            Edge::DR => [D, R],
            Edge::DF => [D, F],
            Edge::DL => [D, L],
            Edge::DB => [D, B],
            Edge::FR => [F, R],
            Edge::FL => [F, L],
            Edge::BL => [B, L],
            Edge::BR => [B, R],
        }
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Outcome of the solvability check.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Valid,
    /// Corner twists do not sum to 0 mod 3.
    TwistSum,
    /// Edge flips do not sum to 0 mod 2.
    FlipSum,
    /// Corner and edge permutations have different parity.
    PermParity,
}

impl Verdict {
    pub fn is_valid(self) -> bool {
        self == Verdict::Valid
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::Valid => "Valid",
            Verdict::TwistSum => "TwistSum",
            Verdict::FlipSum => "FlipSum",
            Verdict::PermParity => "PermParity",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Piece-level cube state.
///
/// `corner_perm[i]` is the corner currently sitting in slot `i` and
/// `corner_orient[i]` its twist; edges likewise. Permutations are always
/// bijections, but orientations and parities may be inconsistent so that
/// impossible states can be represented and rejected by [`CubieState::validate`].
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct CubieState {
    pub(crate) cp: [u8; 8],
    pub(crate) co: [u8; 8],
    pub(crate) ep: [u8; 12],
    pub(crate) eo: [u8; 12],
}

impl Default for CubieState {
    fn default() -> Self {
        Self::SOLVED
    }
}

impl fmt::Debug for CubieState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CubieState")
            .field("cp", &self.cp)
            .field("co", &self.co)
            .field("ep", &self.ep)
            .field("eo", &self.eo)
            .finish()
    }
}

fn is_permutation(p: &[u8]) -> bool {
    let mut seen = 0u32;
    for &x in p {
        if x as usize >= p.len() || seen & (1 << x) != 0 {
            return false;
        }
        seen |= 1 << x;
    }
    true
}

/// Parity of a permutation (true = odd), by counting inversions.
pub(crate) fn odd_parity(p: &[u8]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

impl CubieState {
    pub const SOLVED: CubieState = CubieState {
        cp: [0, 1, 2, 3, 4, 5, 6, 7],
        co: [0; 8],
        ep: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11],
        eo: [0; 12],
    };

    /// Builds a state from raw arrays. Permutations must be bijections and
    /// orientations in range; the laws checked by [`validate`](Self::validate)
    /// are not enforced here.
    pub fn new(
        corner_perm: [u8; 8],
        corner_orient: [u8; 8],
        edge_perm: [u8; 12],
        edge_orient: [u8; 12],
    ) -> Result<Self, CubeError> {
        if !is_permutation(&corner_perm)
            || !is_permutation(&edge_perm)
            || corner_orient.iter().any(|&o| o > 2)
            || edge_orient.iter().any(|&o| o > 1)
        {
            return Err(CubeError::NotAPermutation);
        }
        Ok(CubieState {
            cp: corner_perm,
            co: corner_orient,
            ep: edge_perm,
            eo: edge_orient,
        })
    }

    pub fn corner_perm(&self) -> [u8; 8] {
        self.cp
    }

    pub fn corner_orient(&self) -> [u8; 8] {
        self.co
    }

    pub fn edge_perm(&self) -> [u8; 12] {
        self.ep
    }

    pub fn edge_orient(&self) -> [u8; 12] {
        self.eo
    }

    pub fn is_solved(&self) -> bool {
        *self == Self::SOLVED
    }

    /// Composition: the state reached by performing `self`, then `other`.
    pub fn then(&self, other: &CubieState) -> CubieState {
        let mut out = CubieState::SOLVED;
        for i in 0..8 {
            let from = other.cp[i] as usize;
            out.cp[i] = self.cp[from];
            out.co[i] = (self.co[from] + other.co[i]) % 3;
        }
        for i in 0..12 {
            let from = other.ep[i] as usize;
            out.ep[i] = self.ep[from];
            out.eo[i] = (self.eo[from] + other.eo[i]) % 2;
        }
        out
    }

    /// Group inverse, so that `s.then(&s.inverse())` is solved.
    pub fn inverse(&self) -> CubieState {
        let mut out = CubieState::SOLVED;
        for i in 0..8 {
            let piece = self.cp[i] as usize;
            out.cp[piece] = i as u8;
            out.co[piece] = (3 - self.co[i]) % 3;
        }
        for i in 0..12 {
            let piece = self.ep[i] as usize;
            out.ep[piece] = i as u8;
            out.eo[piece] = self.eo[i];
        }
        out
    }

    /// The state after turning `m.face` by `m.amount`.
    pub fn apply_move(&self, m: Move) -> CubieState {
        let turn = &MOVE_CUBES[m.index()];
        self.then(turn)
    }

    /// Left-to-right fold of [`apply_move`](Self::apply_move).
    pub fn apply_sequence<'a, I>(&self, moves: I) -> CubieState
    where
        I: IntoIterator<Item = &'a Move>,
    {
        moves.into_iter().fold(*self, |c, &m| c.apply_move(m))
    }

    pub fn twist_sum(&self) -> u32 {
        self.co.iter().map(|&o| o as u32).sum::<u32>() % 3
    }

    pub fn flip_sum(&self) -> u32 {
        self.eo.iter().map(|&o| o as u32).sum::<u32>() % 2
    }

    /// Reports the first broken law, checked in the order twist, flip, parity.
    pub fn validate(&self) -> Verdict {
        if self.twist_sum() != 0 {
            Verdict::TwistSum
        } else if self.flip_sum() != 0 {
            Verdict::FlipSum
        } else if odd_parity(&self.cp) != odd_parity(&self.ep) {
            Verdict::PermParity
        } else {
            Verdict::Valid
        }
    }
}

const fn quarter_turn(cp: [u8; 8], co: [u8; 8], ep: [u8; 12], eo: [u8; 12]) -> CubieState {
    CubieState { cp, co, ep, eo }
}

// Clockwise quarter turns, in U R F D L B order.
const BASIC_TURNS: [CubieState; 6] = {
    use Corner::*;
    use Edge::*;
    [
        quarter_turn(
            [UBR as u8, URF as u8, UFL as u8, ULB as u8, DFR as u8, DLF as u8, DBL as u8, DRB as u8],
            [0; 8],
            [UB as u8, UR as u8, UF as u8, UL as u8, DR as u8, DF as u8, DL as u8, DB as u8, FR as u8, FL as u8, BL as u8, BR as u8],
            [0; 12],
        ),
        quarter_turn(
            [DFR as u8, UFL as u8, ULB as u8, URF as u8, DRB as u8, DLF as u8, DBL as u8, UBR as u8],
            [2, 0, 0, 1, 1, 0, 0, 2],
            [FR as u8, UF as u8, UL as u8, UB as u8, BR as u8, DF as u8, DL as u8, DB as u8, DR as u8, FL as u8, BL as u8, UR as u8],
            [0; 12],
        ),
        quarter_turn(
            [UFL as u8, DLF as u8, ULB as u8, UBR as u8, URF as u8, DFR as u8, DBL as u8, DRB as u8],
            [1, 2, 0, 0, 2, 1, 0, 0],
            [UR as u8, FL as u8, UL as u8, UB as u8, DR as u8, FR as u8, DL as u8, DB as u8, UF as u8, DF as u8, BL as u8, BR as u8],
            [0, 1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0],
        ),
        quarter_turn(
            [URF as u8, UFL as u8, ULB as u8, UBR as u8, DLF as u8, DBL as u8, DRB as u8, DFR as u8],
            [0; 8],
            [UR as u8, UF as u8, UL as u8, UB as u8, DF as u8, DL as u8, DB as u8, DR as u8, FR as u8, FL as u8, BL as u8, BR as u8],
            [0; 12],
        ),
        quarter_turn(
            [URF as u8, ULB as u8, DBL as u8, UBR as u8, DFR as u8, UFL as u8, DLF as u8, DRB as u8],
            [0, 1, 2, 0, 0, 2, 1, 0],
            [UR as u8, UF as u8, BL as u8, UB as u8, DR as u8, DF as u8, FL as u8, DB as u8, FR as u8, UL as u8, DL as u8, BR as u8],
            [0; 12],
        ),
        quarter_turn(
            [URF as u8, UFL as u8, UBR as u8, DRB as u8, DFR as u8, DLF as u8, ULB as u8, DBL as u8],
            [0, 0, 1, 2, 0, 0, 2, 1],
            [UR as u8, UF as u8, UL as u8, BR as u8, DR as u8, DF as u8, DL as u8, BL as u8, FR as u8, FL as u8, UB as u8, DB as u8],
            [0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1],
        ),
    ]
};

const fn compose(a: &CubieState, b: &CubieState) -> CubieState {
    let mut out = CubieState::SOLVED;
    let mut i = 0;
    while i < 8 {
        let from = b.cp[i] as usize;
        out.cp[i] = a.cp[from];
        out.co[i] = (a.co[from] + b.co[i]) % 3;
        i += 1;
    }
    let mut i = 0;
    while i < 12 {
        let from = b.ep[i] as usize;
        out.ep[i] = a.ep[from];
        out.eo[i] = (a.eo[from] + b.eo[i]) % 2;
        i += 1;
    }
    out
}

/// All 18 face turns indexed by [`Move::index`].
static MOVE_CUBES: [CubieState; 18] = {
    let mut out = [CubieState::SOLVED; 18];
    let mut face = 0;
    while face < 6 {
        let q = BASIC_TURNS[face];
        let h = compose(&q, &q);
        let t = compose(&h, &q);
        out[face * 3] = q;
        out[face * 3 + 1] = h;
        out[face * 3 + 2] = t;
        face += 1;
    }
    out
};
