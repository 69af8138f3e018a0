use std::cmp::Ordering;

use super::orientation::{Orientation, Station};
use super::primitive::{CostModel, Primitive};
use crate::cube::{Amount, Face, Move, MoveSequence};

const REORIENTATIONS: [Primitive; 3] = [Primitive::Flip, Primitive::RotCw, Primitive::RotCcw];

/// What a primitive in a [`MachineProgram`] is for.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Annotation {
    /// The bottom-layer turn realizing move `n` of the lowered sequence.
    Move(usize),
    /// Repositioning ahead of move `n`.
    Reorientation(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct MachineProgram {
    primitives: Vec<Primitive>,
    annotations: Vec<Annotation>,
    total_ms: f64,
}

impl Default for MachineProgram {
    fn default() -> Self {
        MachineProgram {
            primitives: Vec::new(),
            annotations: Vec::new(),
            total_ms: 0.0,
        }
    }
}

impl MachineProgram {
    /// Prices `primitives` and annotates them: the k-th layer turn serves
    /// move k, and every whole-cube move before it prepares move k.
    pub fn from_primitives(primitives: Vec<Primitive>, cost: &CostModel) -> Self {
        let mut move_index = 0;
        let mut annotations = Vec::with_capacity(primitives.len());
        for p in &primitives {
            if p.is_layer_turn() {
                annotations.push(Annotation::Move(move_index));
                move_index += 1;
            } else {
                annotations.push(Annotation::Reorientation(move_index));
            }
        }
        let total_ms = primitives.iter().fold(0.0, |acc, &p| acc + cost.cost(p));
        MachineProgram {
            primitives,
            annotations,
            total_ms,
        }
    }

    pub fn primitives(&self) -> &[Primitive] {
        &self.primitives
    }

    pub fn annotations(&self) -> &[Annotation] {
        &self.annotations
    }

    pub fn total_ms(&self) -> f64 {
        self.total_ms
    }

    pub fn len(&self) -> usize {
        self.primitives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primitives.is_empty()
    }

    /// Concatenation; totals add up.
    pub fn concat(&self, other: &MachineProgram, cost: &CostModel) -> MachineProgram {
        let mut prims = self.primitives.clone();
        prims.extend_from_slice(&other.primitives);
        MachineProgram::from_primitives(prims, cost)
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.primitives.iter().map(|p| p.name()).collect()
    }
}

/// Key ordering for plans: cost, then length, then lexicographic by
/// primitive order.
fn plan_cmp(a: (f64, &[Primitive]), b: (f64, &[Primitive])) -> Ordering {
    a.0.total_cmp(&b.0)
        .then(a.1.len().cmp(&b.1.len()))
        .then_with(|| a.1.cmp(b.1))
}

/// Cheapest flip/rotation sequence putting `target` at the bottom station.
///
/// Uniform-cost search over the 24 orientations. Extending two plans by the
/// same primitive preserves their order under [`plan_cmp`], so the first goal
/// settled is the minimum under cost, then length, then lexicographic order.
pub fn plan_reorientation(o: Orientation, target: Face, cost: &CostModel) -> (Vec<Primitive>, Orientation) {
    let mut settled: Vec<Orientation> = Vec::with_capacity(24);
    let mut open: Vec<(f64, Vec<Primitive>, Orientation)> = vec![(0.0, Vec::new(), o)];
    loop {
        let best = (0..open.len())
            .min_by(|&i, &j| plan_cmp((open[i].0, &open[i].1), (open[j].0, &open[j].1)))
            .expect("orientation graph is strongly connected");
        let (c, plan, here) = open.swap_remove(best);
        if settled.contains(&here) {
            continue;
        }
        if here.station_of(target) == Station::Down {
            return (plan, here);
        }
        settled.push(here);
        for p in REORIENTATIONS {
            let next = apply_reorientation(here, p);
            if settled.contains(&next) {
                continue;
            }
            let mut extended = plan.clone();
            extended.push(p);
            open.push((c + cost.cost(p), extended, next));
        }
    }
}

pub(crate) fn apply_reorientation(o: Orientation, p: Primitive) -> Orientation {
    match p {
        Primitive::Flip => o.flip(),
        Primitive::RotCw => o.rot_cw(),
        Primitive::RotCcw => o.rot_ccw(),
        _ => o,
    }
}

pub fn layer_turn(amount: Amount) -> Primitive {
    match amount {
        Amount::Cw => Primitive::BotCw,
        Amount::Ccw => Primitive::BotCcw,
        Amount::Half => Primitive::Bot2,
    }
}

/// Reorients so `m.face` is at the bottom, then turns the bottom layer.
/// Clockwise is judged looking at the face being turned.
pub fn lower_move(o: Orientation, m: Move, cost: &CostModel) -> (Vec<Primitive>, Orientation) {
    let (mut prims, o) = plan_reorientation(o, m.face, cost);
    prims.push(layer_turn(m.amount));
    (prims, o)
}

/// Lowers `moves` greedily, one move at a time, from the identity
/// orientation. With `simplify`, same-face neighbours are merged first.
pub fn compile(moves: &MoveSequence, cost: &CostModel, simplify: bool) -> MachineProgram {
    compile_from(Orientation::IDENTITY, moves, cost, simplify).0
}

/// [`compile`] from an arbitrary start orientation; also returns the final
/// orientation.
pub fn compile_from(
    start: Orientation,
    moves: &MoveSequence,
    cost: &CostModel,
    simplify: bool,
) -> (MachineProgram, Orientation) {
    let simplified;
    let moves = if simplify {
        simplified = moves.simplified();
        &simplified
    } else {
        moves
    };
    let mut o = start;
    let mut prims = Vec::new();
    for &m in moves {
        let (step, next) = lower_move(o, m, cost);
        prims.extend(step);
        o = next;
    }
    (MachineProgram::from_primitives(prims, cost), o)
}
