use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::cubie::odd_parity;
use super::{Amount, CubieState, Face, Move, MoveSequence};

/// Uniformly random solvable state, deterministic per seed.
///
/// Permutations and orientations are drawn freely, then the last corner
/// twist, the last edge flip and (if parities disagree) one edge
/// transposition are fixed up so the state obeys all three laws.
pub fn random_state(seed: u64) -> CubieState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cp: [u8; 8] = std::array::from_fn(|i| i as u8);
    let mut ep: [u8; 12] = std::array::from_fn(|i| i as u8);
    cp.shuffle(&mut rng);
    ep.shuffle(&mut rng);

    let mut co = [0u8; 8];
    for o in co.iter_mut().take(7) {
        *o = rng.gen_range(0..3);
    }
    co[7] = ((3 - co[..7].iter().map(|&o| o as u32).sum::<u32>() % 3) % 3) as u8;

    let mut eo = [0u8; 12];
    for o in eo.iter_mut().take(11) {
        *o = rng.gen_range(0..2);
    }
    eo[11] = (eo[..11].iter().map(|&o| o as u32).sum::<u32>() % 2) as u8;

    if odd_parity(&cp) != odd_parity(&ep) {
        ep.swap(10, 11);
    }
    CubieState { cp, co, ep, eo }
}

/// Random face-turn sequence with no two consecutive turns of the same face.
pub fn random_sequence(seed: u64, length: usize) -> MoveSequence {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(length);
    let mut last: Option<Face> = None;
    while out.len() < length {
        let face = Face::from_index(rng.gen_range(0..6));
        if Some(face) == last {
            continue;
        }
        let amount = Amount::ALL[rng.gen_range(0..3)];
        out.push(Move::new(face, amount));
        last = Some(face);
    }
    MoveSequence::new(out)
}
