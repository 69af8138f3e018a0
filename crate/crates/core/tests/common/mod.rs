//! Independent oracles shared by the integration tests and the acceptance
//! target. Nothing here touches the solver's move tables, the search or the
//! rig orientation code. Face turns come from 3D sticker geometry, or from
//! the cubie model where that model has itself been checked against the
//! sticker geometry.

#![allow(dead_code)]

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cuberig::compiler::{CostModel, MachineProgram, Orientation, Primitive, Station};
use cuberig::cube::{CubieState, Face, FaceletState, Move};
use cuberig::twophase::coord::{self, Phase1Coord, Phase2Coord, N_SLICE, N_SLICE_PERM};
use cuberig::twophase::tables::PHASE2_MOVES;
use cuberig::twophase::PruneTables;

pub type Vec3 = [i8; 3];
pub type Mat3 = [[i8; 3]; 3];

pub const PUBLISHED_ROWS: [(&str, f64); 5] = [
    ("R' B U2 B D L F2 R' B' D' U' U' F' F U L' D2 F2 B2 R B U L2", 140967.0),
    ("U B' D F U2 R B' L' F2 R2 D' D2 B2 B2 F2 L D2 L' F2 L' L U2", 132163.0),
    ("L2 R' L D' F2 D2 F F' U2 R' U D2 D' U R2 D D2 L' F F D' B", 134797.0),
    ("U F2 L' D2 D2 R2 B L' R' D D2 B' D D R' U2 F' R2 B' B2", 115738.0),
    ("L2 L2 B D2 U R B2 D R U U' D' D2 R F2 L' B' R' B' U2 U2 L2 L2", 131460.0),
];

pub const PUBLISHED_MEAN_MS: f64 = 128366.108;

pub fn normal(face: Face) -> Vec3 {
    match face {
        Face::U => [0, 1, 0],
        Face::R => [1, 0, 0],
        Face::F => [0, 0, 1],
        Face::D => [0, -1, 0],
        Face::L => [-1, 0, 0],
        Face::B => [0, 0, -1],
    }
}

pub fn station_vector(s: Station) -> Vec3 {
    match s {
        Station::Up => [0, 1, 0],
        Station::Down => [0, -1, 0],
        Station::Front => [0, 0, 1],
        Station::Back => [0, 0, -1],
        Station::Left => [-1, 0, 0],
        Station::Right => [1, 0, 0],
    }
}

/// Cubie position and outward normal of sticker `i` in the 54-character
/// layout: faces U R F D L B, each read row by row as seen from outside
/// with U up (or F up, for U and D).
pub fn sticker_geometry(i: usize) -> (Vec3, Vec3) {
    let (r, c) = ((i % 9 / 3) as i8, (i % 3) as i8);
    let face = Face::from_index(i / 9);
    let pos = match face {
        Face::U => [c - 1, 1, r - 1],
        Face::R => [1, 1 - r, 1 - c],
        Face::F => [c - 1, 1 - r, 1],
        Face::D => [c - 1, -1, 1 - r],
        Face::L => [-1, 1 - r, c - 1],
        Face::B => [1 - c, 1 - r, -1],
    };
    (pos, normal(face))
}

pub fn sticker_at(pos: Vec3, n: Vec3) -> usize {
    (0..54)
        .find(|&i| sticker_geometry(i) == (pos, n))
        .expect("no sticker with this position and normal")
}

pub fn mat_vec(m: &Mat3, v: Vec3) -> Vec3 {
    let mut out = [0; 3];
    for (i, row) in m.iter().enumerate() {
        out[i] = row[0] * v[0] + row[1] * v[1] + row[2] * v[2];
    }
    out
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn dot(a: Vec3, b: Vec3) -> i8 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Quarter turn that looks clockwise when viewed from the tip of `n`.
pub fn quarter_turn(n: Vec3) -> Mat3 {
    // Rotation by -90 degrees about n: v -> n (n.v) - n x v.
    let image = |v: Vec3| -> Vec3 {
        let d = dot(n, v);
        let cross = [
            n[1] * v[2] - n[2] * v[1],
            n[2] * v[0] - n[0] * v[2],
            n[0] * v[1] - n[1] * v[0],
        ];
        [n[0] * d - cross[0], n[1] * d - cross[1], n[2] * d - cross[2]]
    };
    let cols = [image([1, 0, 0]), image([0, 1, 0]), image([0, 0, 1])];
    let mut m = [[0; 3]; 3];
    for (j, col) in cols.iter().enumerate() {
        for i in 0..3 {
            m[i][j] = col[i];
        }
    }
    m
}

pub fn power(m: &Mat3, k: usize) -> Mat3 {
    let mut out = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    for _ in 0..k {
        out = mat_mul(m, &out);
    }
    out
}

/// The 24 proper rotations, generated by quarter turns about x and y.
pub fn all_rotations() -> Vec<Mat3> {
    let gens = [quarter_turn([1, 0, 0]), quarter_turn([0, 1, 0])];
    let mut seen = vec![power(&gens[0], 0)];
    let mut i = 0;
    while i < seen.len() {
        for g in &gens {
            let next = mat_mul(g, &seen[i]);
            if !seen.contains(&next) {
                seen.push(next);
            }
        }
        i += 1;
    }
    seen
}

/// A sticker permutation: `perm[i]` is where the sticker at `i` goes.
pub fn sticker_perm(rot: &Mat3, layer: Option<Vec3>) -> [usize; 54] {
    let mut perm = [0; 54];
    for (i, p) in perm.iter_mut().enumerate() {
        let (pos, n) = sticker_geometry(i);
        *p = match layer {
            Some(axis) if dot(pos, axis) != 1 => i,
            _ => sticker_at(mat_vec(rot, pos), mat_vec(rot, n)),
        };
    }
    perm
}

/// A cube as 54 labelled stickers, moved by rigid 3D rotations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StickerCube(pub [u8; 54]);

impl StickerCube {
    pub fn parse(s: &str) -> Self {
        StickerCube(s.as_bytes().try_into().expect("54 stickers"))
    }

    pub fn solved() -> Self {
        Self::parse("UUUUUUUUURRRRRRRRRFFFFFFFFFDDDDDDDDDLLLLLLLLLBBBBBBBBB")
    }

    pub fn permute(&self, perm: &[usize; 54]) -> Self {
        let mut out = [0; 54];
        for i in 0..54 {
            out[perm[i]] = self.0[i];
        }
        StickerCube(out)
    }

    pub fn as_string(&self) -> String {
        String::from_utf8(self.0.to_vec()).unwrap()
    }

    pub fn center_at(&self, v: Vec3) -> u8 {
        self.0[sticker_at(v, v)]
    }

    /// Turns the layer whose outward normal is `n` by `quarters` clockwise
    /// quarter turns.
    pub fn turn_layer(&self, n: Vec3, quarters: usize) -> Self {
        self.permute(&sticker_perm(&power(&quarter_turn(n), quarters), Some(n)))
    }

    pub fn rotate_whole(&self, rot: &Mat3) -> Self {
        self.permute(&sticker_perm(rot, None))
    }

    pub fn apply_move(&self, m: Move) -> Self {
        self.turn_layer(normal(m.face), m.amount.quarter_turns() as usize)
    }

    /// Rotates the whole cube so that the U center is on top and the F
    /// center faces front.
    pub fn standardized(&self) -> Self {
        all_rotations()
            .iter()
            .map(|r| self.rotate_whole(r))
            .find(|c| c.center_at([0, 1, 0]) == b'U' && c.center_at([0, 0, 1]) == b'F')
            .expect("some rotation standardizes the centers")
    }
}

/// Physical rig model on stickers: whole-cube primitives rotate everything,
/// bottom turns rotate the layer at y = -1.
pub fn physical_step(c: &StickerCube, p: Primitive) -> StickerCube {
    match p {
        // Down -> Back -> Up -> Front: a quarter turn about the left-right
        // axis with the same sense as an L turn.
        Primitive::Flip => c.rotate_whole(&quarter_turn([-1, 0, 0])),
        Primitive::RotCw => c.rotate_whole(&quarter_turn([0, 1, 0])),
        Primitive::RotCcw => c.rotate_whole(&power(&quarter_turn([0, 1, 0]), 3)),
        Primitive::BotCw => c.turn_layer([0, -1, 0], 1),
        Primitive::Bot2 => c.turn_layer([0, -1, 0], 2),
        Primitive::BotCcw => c.turn_layer([0, -1, 0], 3),
    }
}

pub fn rotation_of(p: Primitive) -> Option<Mat3> {
    match p {
        Primitive::Flip => Some(quarter_turn([-1, 0, 0])),
        Primitive::RotCw => Some(quarter_turn([0, 1, 0])),
        Primitive::RotCcw => Some(power(&quarter_turn([0, 1, 0]), 3)),
        _ => None,
    }
}

/// Cheapest whole-cube primitive sequence (up to `max_len` steps) that moves
/// `target` to the bottom from orientation `o`, by exhaustive enumeration.
/// Returns the minimum cost and the cheapest cost among sequences of
/// exactly `max_len + 1` steps, which bounds anything longer.
pub fn brute_force_reorientation(o: Orientation, target: Face, cost: &CostModel, max_len: usize) -> (f64, f64) {
    let prims = [Primitive::Flip, Primitive::RotCw, Primitive::RotCcw];
    let start = station_vector(o.station_of(target));
    let mut best = f64::INFINITY;
    let mut frontier = vec![(start, 0.0f64)];
    for len in 0..=max_len {
        for &(v, c) in &frontier {
            if v == [0, -1, 0] {
                best = best.min(c);
            }
        }
        if len == max_len {
            break;
        }
        let mut next = Vec::with_capacity(frontier.len() * 3);
        for &(v, c) in &frontier {
            for p in prims {
                next.push((mat_vec(&rotation_of(p).unwrap(), v), c + cost.cost(p)));
            }
        }
        frontier = next;
    }
    let cheapest_step = prims.iter().map(|&p| cost.cost(p)).fold(f64::INFINITY, f64::min);
    (best, cheapest_step * (max_len + 1) as f64)
}

/// Exact distances from solved for every state within `depth` face turns.
pub fn bfs_ball(depth: u8) -> HashMap<CubieState, u8> {
    let mut dist = HashMap::new();
    dist.insert(CubieState::SOLVED, 0u8);
    let mut frontier = vec![CubieState::SOLVED];
    for d in 1..=depth {
        let mut next = Vec::new();
        for c in &frontier {
            for m in Move::all() {
                let n = c.apply_move(m);
                if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(n) {
                    e.insert(d);
                    next.push(n);
                }
            }
        }
        frontier = next;
    }
    dist
}

/// Exact distances in a paired coordinate space up to `depth`, stepping
/// through full cube states rather than the move tables.
pub fn coord_ball<D, E>(moves: &[usize], depth: u8, decode: D, encode: E) -> HashMap<(u16, u16), u8>
where
    D: Fn((u16, u16)) -> CubieState,
    E: Fn(&CubieState) -> (u16, u16),
{
    let mut dist = HashMap::from([((0, 0), 0u8)]);
    let mut frontier = vec![(0u16, 0u16)];
    for d in 1..=depth {
        let mut next = Vec::new();
        for &x in &frontier {
            let c = decode(x);
            for &m in moves {
                let y = encode(&c.apply_move(Move::from_index(m)));
                dist.entry(y).or_insert_with(|| {
                    next.push(y);
                    d
                });
            }
        }
        frontier = next;
    }
    dist
}

/// Checks one pairwise table against its depth-6 ball: never above the true
/// distance, and zero only at the goal. Returns the number of states checked.
pub fn check_admissible(table: &[u8], width: usize, ball: &HashMap<(u16, u16), u8>) -> Result<usize, String> {
    for (&(a, b), &d) in ball {
        let h = table[a as usize * width + b as usize];
        if h > d {
            return Err(format!("entry {h} exceeds distance {d} at ({a}, {b})"));
        }
    }
    if table[0] != 0 {
        return Err("goal entry is not zero".into());
    }
    let zeros = table.iter().filter(|&&x| x == 0).count();
    if zeros != 1 {
        return Err(format!("{zeros} zero entries"));
    }
    Ok(ball.len())
}

/// The four pruning tables checked within depth 6 of the goal.
pub fn admissibility(prune: &PruneTables) -> Vec<(&'static str, Result<usize, String>)> {
    let all: Vec<usize> = (0..18).collect();
    let twist = coord_ball(
        &all,
        6,
        |(t, s)| coord::decode_phase1(Phase1Coord { twist: t, flip: 0, slice: s }),
        |c| (coord::twist(c), coord::slice(c)),
    );
    let flip = coord_ball(
        &all,
        6,
        |(f, s)| coord::decode_phase1(Phase1Coord { twist: 0, flip: f, slice: s }),
        |c| (coord::flip(c), coord::slice(c)),
    );
    let corner = coord_ball(
        &PHASE2_MOVES,
        6,
        |(p, s)| coord::decode_phase2(Phase2Coord { corner_perm: p, ud_edge_perm: 0, slice_perm: s as u8 }),
        |c| (coord::corner_perm(c), coord::slice_perm(c) as u16),
    );
    let edge = coord_ball(
        &PHASE2_MOVES,
        6,
        |(p, s)| coord::decode_phase2(Phase2Coord { corner_perm: 0, ud_edge_perm: p, slice_perm: s as u8 }),
        |c| (coord::ud_edge_perm(c), coord::slice_perm(c) as u16),
    );
    vec![
        ("twist x slice", check_admissible(&prune.phase1_twist_slice, N_SLICE, &twist)),
        ("flip x slice", check_admissible(&prune.phase1_flip_slice, N_SLICE, &flip)),
        ("corner x slice perm", check_admissible(&prune.phase2_corner_slice, N_SLICE_PERM, &corner)),
        ("edge x slice perm", check_admissible(&prune.phase2_edge_slice, N_SLICE_PERM, &edge)),
    ]
}

/// 200 states of known distance: all 18 at distance 1, then 182 drawn
/// over distances 2 to 5.
pub fn sample_known_distance(ball: &HashMap<CubieState, u8>, seed: u64) -> Vec<(CubieState, usize)> {
    let mut by_depth: Vec<Vec<CubieState>> = vec![Vec::new(); 6];
    for (c, &d) in ball {
        if (d as usize) < by_depth.len() {
            by_depth[d as usize].push(*c);
        }
    }
    let quota = [0, 18, 46, 46, 45, 45];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (k, states) in by_depth.iter_mut().enumerate().skip(1) {
        states.sort_by_cached_key(|c| FaceletState::from(c).to_string());
        out.extend(states.choose_multiple(&mut rng, quota[k]).map(|&c| (c, k)));
    }
    out
}

/// Replays `prog` on the physical sticker model from `start`, checks that
/// the simulator's final orientation matches the physical centers, and
/// compares the standardized cube with `expected`.
pub fn physical_agrees(start: &CubieState, prog: &MachineProgram, final_orientation: Orientation, expected: &CubieState) -> bool {
    let mut physical = StickerCube::parse(&FaceletState::from(start).to_string());
    for &p in prog.primitives() {
        physical = physical_step(&physical, p);
    }
    let centers_ok = Face::ALL.into_iter().all(|face| {
        physical.center_at(station_vector(final_orientation.station_of(face))) == face.as_char() as u8
    });
    centers_ok && physical.standardized().as_string() == FaceletState::from(expected).to_string()
}
