//! Discrete simulator of the three-motor rig.
//!
//! The machine state is the logical cube (in its own face frame), which face
//! sits at which station, and whether the cover is locking the top layers.
//! Whole-cube moves only change the orientation; a bottom-layer turn applies
//! the corresponding face turn to whichever logical face is at the bottom.

mod serial;

pub use serial::{decode_serial, encode_serial, SerialError};

use std::fmt::Write as _;

use thiserror::Error;

use crate::compiler::{apply_reorientation, CostModel, MachineProgram, Orientation, Primitive, Station};
use crate::cube::{Amount, CubieState, Move};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Cover {
    /// Top two layers locked; only the bottom layer can turn.
    Engaged,
    /// Cover lifted; the cube can be flipped or rotated whole.
    Raised,
}

#[derive(Copy, Clone, Debug, PartialEq)]
pub struct RigState {
    pub cube: CubieState,
    pub orientation: Orientation,
    pub cover: Cover,
    pub elapsed_ms: f64,
}

impl RigState {
    pub fn new(cube: CubieState) -> Self {
        RigState {
            cube,
            orientation: Orientation::IDENTITY,
            cover: Cover::Engaged,
            elapsed_ms: 0.0,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq)]
pub struct TraceEntry {
    pub primitive: Primitive,
    pub cover_before: Cover,
    pub cover_after: Cover,
    pub duration_ms: f64,
    pub cumulative_ms: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum SimError {
    /// A layer turn was commanded with the cover up; on the real rig the
    /// cube would slip out of the holder.
    #[error("{primitive} issued at step {step} with the cover raised")]
    CoverFault { step: usize, primitive: Primitive },
}

/// Executes primitives under a cost model.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Simulator {
    pub cost: CostModel,
    /// Refuse layer turns while the cover is raised instead of engaging it.
    pub strict: bool,
}

impl Default for Simulator {
    fn default() -> Self {
        Simulator::new(CostModel::default())
    }
}

impl Simulator {
    pub fn new(cost: CostModel) -> Self {
        Simulator { cost, strict: false }
    }

    pub fn strict(cost: CostModel) -> Self {
        Simulator { cost, strict: true }
    }

    pub fn exec_primitive(&self, r: &RigState, p: Primitive) -> Result<(RigState, TraceEntry), SimError> {
        self.exec_at(r, p, 0)
    }

    fn exec_at(&self, r: &RigState, p: Primitive, step: usize) -> Result<(RigState, TraceEntry), SimError> {
        let mut next = *r;
        if p.is_layer_turn() {
            if self.strict && r.cover == Cover::Raised {
                return Err(SimError::CoverFault { step, primitive: p });
            }
            next.cover = Cover::Engaged;
            let face = r.orientation.face_at(Station::Down);
            let amount = match p {
                Primitive::BotCw => Amount::Cw,
                Primitive::BotCcw => Amount::Ccw,
                _ => Amount::Half,
            };
            next.cube = r.cube.apply_move(Move::new(face, amount));
        } else {
            next.cover = Cover::Raised;
            next.orientation = apply_reorientation(r.orientation, p);
        }
        let duration_ms = self.cost.cost(p);
        next.elapsed_ms += duration_ms;
        let entry = TraceEntry {
            primitive: p,
            cover_before: r.cover,
            cover_after: next.cover,
            duration_ms,
            cumulative_ms: next.elapsed_ms,
        };
        Ok((next, entry))
    }

    pub fn run_program(&self, r: &RigState, prog: &MachineProgram) -> Result<(RigState, Vec<TraceEntry>), SimError> {
        let mut state = *r;
        let mut trace = Vec::with_capacity(prog.len());
        for (step, &p) in prog.primitives().iter().enumerate() {
            let (next, entry) = self.exec_at(&state, p, step)?;
            state = next;
            trace.push(entry);
        }
        Ok((state, trace))
    }
}

/// One line per entry: index, primitive name, duration, cumulative time,
/// tab-separated.
pub fn format_trace(trace: &[TraceEntry]) -> String {
    let mut out = String::new();
    for (i, e) in trace.iter().enumerate() {
        let _ = writeln!(out, "{i}\t{}\t{}\t{}", e.primitive, e.duration_ms, e.cumulative_ms);
    }
    out
}
