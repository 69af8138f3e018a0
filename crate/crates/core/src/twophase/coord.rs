//! Coordinate encodings for the two search phases.
//!
//! Phase 1 works on the quotient by the subgroup `<U, D, R2, L2, F2, B2>`:
//! corner twist, edge flip and the unordered positions of the four slice
//! edges. Phase 2 works inside that subgroup on the three permutations that
//! remain.

use std::fmt;

use thiserror::Error;

use crate::cube::CubieState;

pub const N_TWIST: usize = 2187;
pub const N_FLIP: usize = 2048;
pub const N_SLICE: usize = 495;
pub const N_CORNER_PERM: usize = 40320;
pub const N_UD_EDGE_PERM: usize = 40320;
pub const N_SLICE_PERM: usize = 24;

/// Slice edges live in edge slots 8..12 (FR FL BL BR).
const FIRST_SLICE_EDGE: u8 = 8;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Phase1Coord {
    pub twist: u16,
    pub flip: u16,
    pub slice: u16,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Phase2Coord {
    pub corner_perm: u16,
    pub ud_edge_perm: u16,
    pub slice_perm: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("state is not in the phase-2 subgroup")]
pub struct NotInSubgroup;

impl Phase1Coord {
    pub fn is_goal(self) -> bool {
        self == Phase1Coord::default()
    }
}

impl Phase2Coord {
    pub fn is_goal(self) -> bool {
        self == Phase2Coord::default()
    }
}

impl fmt::Display for Phase1Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.twist, self.flip, self.slice)
    }
}

/// Whether phase 1 is complete: orientations zero and slice edges home.
pub fn is_phase1_goal(p: Phase1Coord) -> bool {
    p.is_goal()
}

const fn binomial(n: u32, k: u32) -> u32 {
    if k > n {
        return 0;
    }
    let mut r = 1u32;
    let mut i = 0;
    while i < k {
        r = r * (n - i) / (i + 1);
        i += 1;
    }
    r
}

const FACTORIAL: [u32; 9] = [1, 1, 2, 6, 24, 120, 720, 5040, 40320];

/// Lehmer rank of a permutation of `0..n`, identity = 0.
pub(crate) fn perm_rank(p: &[u8]) -> u32 {
    let n = p.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller_after = p[i + 1..].iter().filter(|&&x| x < p[i]).count() as u32;
        rank += smaller_after * FACTORIAL[n - 1 - i];
    }
    rank
}

pub(crate) fn perm_unrank(mut rank: u32, out: &mut [u8]) {
    let n = out.len();
    let mut pool: Vec<u8> = (0..n as u8).collect();
    for i in 0..n {
        let f = FACTORIAL[n - 1 - i];
        let k = (rank / f) as usize;
        rank %= f;
        out[i] = pool.remove(k);
    }
}

pub fn twist(c: &CubieState) -> u16 {
    c.co[..7].iter().fold(0u16, |acc, &o| acc * 3 + o as u16)
}

pub fn flip(c: &CubieState) -> u16 {
    c.eo[..11].iter().fold(0u16, |acc, &o| acc * 2 + o as u16)
}

/// Rank of the set of slots holding slice edges; 0 when they are all home.
pub fn slice(c: &CubieState) -> u16 {
    let mut rank = 0;
    let mut seen = 0;
    for slot in (0..12).rev() {
        if c.ep[slot] >= FIRST_SLICE_EDGE {
            seen += 1;
            rank += binomial(11 - slot as u32, seen);
        }
    }
    rank as u16
}

pub fn corner_perm(c: &CubieState) -> u16 {
    perm_rank(&c.cp) as u16
}

pub fn encode_phase1(c: &CubieState) -> Phase1Coord {
    Phase1Coord {
        twist: twist(c),
        flip: flip(c),
        slice: slice(c),
    }
}

pub fn encode_phase2(c: &CubieState) -> Result<Phase2Coord, NotInSubgroup> {
    if !encode_phase1(c).is_goal() {
        return Err(NotInSubgroup);
    }
    let mut slice_edges = [0u8; 4];
    for (i, e) in c.ep[8..].iter().enumerate() {
        slice_edges[i] = e - FIRST_SLICE_EDGE;
    }
    Ok(Phase2Coord {
        corner_perm: corner_perm(c),
        ud_edge_perm: perm_rank(&c.ep[..8]) as u16,
        slice_perm: perm_rank(&slice_edges) as u8,
    })
}

// Decoders produce some representative of the coordinate's class; the other
// fields are left solved.

pub fn decode_twist(mut x: u16) -> CubieState {
    let mut c = CubieState::SOLVED;
    let mut sum = 0;
    for i in (0..7).rev() {
        c.co[i] = (x % 3) as u8;
        sum += c.co[i];
        x /= 3;
    }
    c.co[7] = (3 - sum % 3) % 3;
    c
}

pub fn decode_flip(mut x: u16) -> CubieState {
    let mut c = CubieState::SOLVED;
    let mut sum = 0;
    for i in (0..11).rev() {
        c.eo[i] = (x % 2) as u8;
        sum += c.eo[i];
        x /= 2;
    }
    c.eo[11] = sum % 2;
    c
}

pub fn decode_slice(x: u16) -> CubieState {
    decode_slice_with(x, 0)
}

/// Slice edges placed at the slots named by `slice_rank`, in the order
/// given by `slice_perm`; the other eight edges fill the rest in order.
fn decode_slice_with(slice_rank: u16, slice_perm: u8) -> CubieState {
    let mut order = [0u8; 4];
    perm_unrank(slice_perm as u32, &mut order);
    let mut c = CubieState::SOLVED;
    let mut is_slice = [false; 12];
    let mut rank = slice_rank as u32;
    let mut remaining = 4;
    for slot in 0..12u32 {
        if remaining == 0 {
            break;
        }
        let b = binomial(11 - slot, remaining);
        if rank >= b {
            rank -= b;
            is_slice[slot as usize] = true;
            remaining -= 1;
        }
    }
    let (mut next_slice, mut next_other) = (0, 0u8);
    for (slot, &in_slice) in c.ep.iter_mut().zip(&is_slice) {
        if in_slice {
            *slot = FIRST_SLICE_EDGE + order[next_slice];
            next_slice += 1;
        } else {
            *slot = next_other;
            next_other += 1;
        }
    }
    c
}

pub fn decode_corner_perm(x: u16) -> CubieState {
    let mut c = CubieState::SOLVED;
    perm_unrank(x as u32, &mut c.cp);
    c
}

pub fn decode_ud_edge_perm(x: u16) -> CubieState {
    let mut c = CubieState::SOLVED;
    perm_unrank(x as u32, &mut c.ep[..8]);
    c
}

pub fn decode_slice_perm(x: u8) -> CubieState {
    decode_slice_with(0, x)
}

pub fn slice_perm(c: &CubieState) -> u8 {
    let mut slice_edges = [0u8; 4];
    for (i, e) in c.ep[8..].iter().enumerate() {
        slice_edges[i] = e.saturating_sub(FIRST_SLICE_EDGE);
    }
    perm_rank(&slice_edges) as u8
}

pub fn ud_edge_perm(c: &CubieState) -> u16 {
    perm_rank(&c.ep[..8]) as u16
}

/// A state of the phase-1 coordinate class `p` (any representative).
pub fn decode_phase1(p: Phase1Coord) -> CubieState {
    let t = decode_twist(p.twist);
    let f = decode_flip(p.flip);
    let mut c = decode_slice(p.slice);
    c.co = t.co;
    c.eo = f.eo;
    c
}

/// The unique subgroup state with coordinates `p`, ignoring parity.
pub fn decode_phase2(p: Phase2Coord) -> CubieState {
    let mut c = decode_slice_perm(p.slice_perm);
    perm_unrank(p.corner_perm as u32, &mut c.cp);
    perm_unrank(p.ud_edge_perm as u32, &mut c.ep[..8]);
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::{random_state, Move};

    fn mv(s: &str) -> Move {
        s.parse().unwrap()
    }

    #[test]
    fn solved_is_goal_in_both_phases() {
        assert!(encode_phase1(&CubieState::SOLVED).is_goal());
        assert!(encode_phase2(&CubieState::SOLVED).unwrap().is_goal());
    }

    #[test]
    fn f_flips_edges() {
        let c = CubieState::SOLVED.apply_move(mv("F"));
        assert_ne!(encode_phase1(&c).flip, 0);
        assert!(!is_phase1_goal(encode_phase1(&c)));
        assert!(encode_phase2(&c).is_err());
        assert!(!is_phase1_goal(encode_phase1(&CubieState::SOLVED.apply_move(mv("F'")))));
    }

    #[test]
    fn u_stays_in_subgroup() {
        let c = CubieState::SOLVED.apply_move(mv("U"));
        assert!(encode_phase1(&c).is_goal());
        assert!(!encode_phase2(&c).unwrap().is_goal());
    }

    #[test]
    fn goal_predicate() {
        assert!(is_phase1_goal(Phase1Coord { twist: 0, flip: 0, slice: 0 }));
        assert!(!is_phase1_goal(Phase1Coord { twist: 1, flip: 0, slice: 0 }));
    }

    #[test]
    fn decoders_invert_encoders_on_full_ranges() {
        for x in 0..N_TWIST as u16 {
            assert_eq!(twist(&decode_twist(x)), x);
        }
        for x in 0..N_FLIP as u16 {
            assert_eq!(flip(&decode_flip(x)), x);
        }
        for x in 0..N_SLICE as u16 {
            assert_eq!(slice(&decode_slice(x)), x);
        }
        for x in (0..N_CORNER_PERM as u16).step_by(7) {
            assert_eq!(corner_perm(&decode_corner_perm(x)), x);
            assert_eq!(ud_edge_perm(&decode_ud_edge_perm(x)), x);
        }
        for x in 0..N_SLICE_PERM as u8 {
            assert_eq!(slice_perm(&decode_slice_perm(x)), x);
        }
    }

    #[test]
    fn coordinate_ranges_hold_on_random_states() {
        for seed in 0..500 {
            let p = encode_phase1(&random_state(seed));
            assert!((p.twist as usize) < N_TWIST);
            assert!((p.flip as usize) < N_FLIP);
            assert!((p.slice as usize) < N_SLICE);
        }
    }

    #[test]
    fn phase1_decode_is_a_projection() {
        for seed in 0..200 {
            let p = encode_phase1(&random_state(seed));
            assert_eq!(encode_phase1(&decode_phase1(p)), p);
        }
    }

    #[test]
    fn phase2_encode_is_injective_on_subgroup_samples() {
        use std::collections::HashMap;
        let moves: Vec<Move> = ["U", "D", "R2", "L2", "F2", "B2"].iter().map(|s| mv(s)).collect();
        let mut c = CubieState::SOLVED;
        let mut seen: HashMap<Phase2Coord, CubieState> = HashMap::new();
        let mut x: u64 = 12345;
        for _ in 0..5000 {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            c = c.apply_move(moves[(x >> 33) as usize % moves.len()]);
            let p = encode_phase2(&c).unwrap();
            assert_eq!(decode_phase2(p), c);
            if let Some(prev) = seen.insert(p, c) {
                assert_eq!(prev, c);
            }
        }
    }
}
