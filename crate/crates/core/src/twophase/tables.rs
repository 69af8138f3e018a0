//! Move tables and breadth-first pruning tables.

use std::sync::OnceLock;

use super::coord::{self, *};
use crate::cube::{CubieState, Move};

pub const N_MOVES: usize = 18;

/// Indices (into the 18 face turns) of the moves that keep the phase-2
/// subgroup: `U U2 U' R2 F2 D D2 D' L2 B2`.
pub const PHASE2_MOVES: [usize; 10] = [0, 1, 2, 4, 7, 9, 10, 11, 13, 16];
pub const N_PHASE2_MOVES: usize = PHASE2_MOVES.len();

/// Per-coordinate transition tables, `table[coord * moves + move]`.
#[derive(Clone)]
pub struct MoveTables {
    pub twist: Vec<u16>,
    pub flip: Vec<u16>,
    pub slice: Vec<u16>,
    /// Indexed by phase-2 move number (position in [`PHASE2_MOVES`]).
    pub corner_perm: Vec<u16>,
    pub ud_edge_perm: Vec<u16>,
    pub slice_perm: Vec<u8>,
}

fn build_table<T, D, E>(size: usize, moves: &[usize], decode: D, encode: E) -> Vec<T>
where
    D: Fn(usize) -> CubieState,
    E: Fn(&CubieState) -> T,
{
    let mut out = Vec::with_capacity(size * moves.len());
    for x in 0..size {
        let c = decode(x);
        for &m in moves {
            out.push(encode(&c.apply_move(Move::from_index(m))));
        }
    }
    out
}

impl MoveTables {
    pub fn build() -> Self {
        let all: Vec<usize> = (0..N_MOVES).collect();
        MoveTables {
            twist: build_table(N_TWIST, &all, |x| decode_twist(x as u16), coord::twist),
            flip: build_table(N_FLIP, &all, |x| decode_flip(x as u16), coord::flip),
            slice: build_table(N_SLICE, &all, |x| decode_slice(x as u16), coord::slice),
            corner_perm: build_table(
                N_CORNER_PERM,
                &PHASE2_MOVES,
                |x| decode_corner_perm(x as u16),
                coord::corner_perm,
            ),
            ud_edge_perm: build_table(
                N_UD_EDGE_PERM,
                &PHASE2_MOVES,
                |x| decode_ud_edge_perm(x as u16),
                coord::ud_edge_perm,
            ),
            slice_perm: build_table(
                N_SLICE_PERM,
                &PHASE2_MOVES,
                |x| decode_slice_perm(x as u8),
                coord::slice_perm,
            ),
        }
    }

    #[inline]
    pub fn phase1(&self, p: Phase1Coord, m: usize) -> Phase1Coord {
        Phase1Coord {
            twist: self.twist[p.twist as usize * N_MOVES + m],
            flip: self.flip[p.flip as usize * N_MOVES + m],
            slice: self.slice[p.slice as usize * N_MOVES + m],
        }
    }

    /// `m` is a phase-2 move number in `0..10`.
    #[inline]
    pub fn phase2(&self, p: Phase2Coord, m: usize) -> Phase2Coord {
        Phase2Coord {
            corner_perm: self.corner_perm[p.corner_perm as usize * N_PHASE2_MOVES + m],
            ud_edge_perm: self.ud_edge_perm[p.ud_edge_perm as usize * N_PHASE2_MOVES + m],
            slice_perm: self.slice_perm[p.slice_perm as usize * N_PHASE2_MOVES + m],
        }
    }
}

/// Distance lower bounds over paired coordinate spaces. Each entry is the
/// exact distance to the goal pair in that projection, which bounds the true
/// distance from below.
#[derive(Clone, PartialEq, Eq)]
pub struct PruneTables {
    /// `twist * 495 + slice`
    pub phase1_twist_slice: Vec<u8>,
    /// `flip * 495 + slice`
    pub phase1_flip_slice: Vec<u8>,
    /// `corner_perm * 24 + slice_perm`
    pub phase2_corner_slice: Vec<u8>,
    /// `ud_edge_perm * 24 + slice_perm`
    pub phase2_edge_slice: Vec<u8>,
}

impl std::fmt::Debug for PruneTables {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PruneTables")
            .field("phase1_twist_slice", &self.phase1_twist_slice.len())
            .field("phase1_flip_slice", &self.phase1_flip_slice.len())
            .field("phase2_corner_slice", &self.phase2_corner_slice.len())
            .field("phase2_edge_slice", &self.phase2_edge_slice.len())
            .finish()
    }
}

const UNSEEN: u8 = u8::MAX;

/// Breadth-first distances from `(0, 0)` in the product space `a × b`.
fn bfs_pair<A, B>(n_a: usize, n_b: usize, n_moves: usize, next_a: A, next_b: B) -> Vec<u8>
where
    A: Fn(usize, usize) -> usize,
    B: Fn(usize, usize) -> usize,
{
    let mut dist = vec![UNSEEN; n_a * n_b];
    dist[0] = 0;
    let mut frontier = vec![0usize];
    let mut depth = 0u8;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &idx in &frontier {
            let (a, b) = (idx / n_b, idx % n_b);
            for m in 0..n_moves {
                let j = next_a(a, m) * n_b + next_b(b, m);
                if dist[j] == UNSEEN {
                    dist[j] = depth + 1;
                    next.push(j);
                }
            }
        }
        frontier = next;
        depth += 1;
    }
    dist
}

impl PruneTables {
    pub fn build(mv: &MoveTables) -> Self {
        let p1 = N_MOVES;
        let p2 = N_PHASE2_MOVES;
        PruneTables {
            phase1_twist_slice: bfs_pair(
                N_TWIST,
                N_SLICE,
                p1,
                |a, m| mv.twist[a * p1 + m] as usize,
                |b, m| mv.slice[b * p1 + m] as usize,
            ),
            phase1_flip_slice: bfs_pair(
                N_FLIP,
                N_SLICE,
                p1,
                |a, m| mv.flip[a * p1 + m] as usize,
                |b, m| mv.slice[b * p1 + m] as usize,
            ),
            phase2_corner_slice: bfs_pair(
                N_CORNER_PERM,
                N_SLICE_PERM,
                p2,
                |a, m| mv.corner_perm[a * p2 + m] as usize,
                |b, m| mv.slice_perm[b * p2 + m] as usize,
            ),
            phase2_edge_slice: bfs_pair(
                N_UD_EDGE_PERM,
                N_SLICE_PERM,
                p2,
                |a, m| mv.ud_edge_perm[a * p2 + m] as usize,
                |b, m| mv.slice_perm[b * p2 + m] as usize,
            ),
        }
    }

    /// Expected entry counts, in file order.
    pub const LENGTHS: [usize; 4] = [
        N_TWIST * N_SLICE,
        N_FLIP * N_SLICE,
        N_CORNER_PERM * N_SLICE_PERM,
        N_UD_EDGE_PERM * N_SLICE_PERM,
    ];

    pub fn as_slices(&self) -> [&[u8]; 4] {
        [
            &self.phase1_twist_slice,
            &self.phase1_flip_slice,
            &self.phase2_corner_slice,
            &self.phase2_edge_slice,
        ]
    }

    #[inline]
    pub fn phase1_bound(&self, p: Phase1Coord) -> u8 {
        let s = p.slice as usize;
        self.phase1_twist_slice[p.twist as usize * N_SLICE + s]
            .max(self.phase1_flip_slice[p.flip as usize * N_SLICE + s])
    }

    #[inline]
    pub fn phase2_bound(&self, p: Phase2Coord) -> u8 {
        let s = p.slice_perm as usize;
        self.phase2_corner_slice[p.corner_perm as usize * N_SLICE_PERM + s]
            .max(self.phase2_edge_slice[p.ud_edge_perm as usize * N_SLICE_PERM + s])
    }
}

/// Everything the search needs. Immutable once built; share freely.
#[derive(Clone)]
pub struct Tables {
    pub moves: MoveTables,
    pub prune: PruneTables,
}

impl Tables {
    pub fn build() -> Self {
        let moves = MoveTables::build();
        let prune = PruneTables::build(&moves);
        Tables { moves, prune }
    }

    pub fn from_prune(prune: PruneTables) -> Self {
        Tables {
            moves: MoveTables::build(),
            prune,
        }
    }

    /// Process-wide instance, built in memory on first use.
    pub fn shared() -> &'static Tables {
        static TABLES: OnceLock<Tables> = OnceLock::new();
        TABLES.get_or_init(Tables::build)
    }
}
