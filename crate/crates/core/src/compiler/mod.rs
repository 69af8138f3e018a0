//! Lowering face turns to rig primitives.
//!
//! The cover locks the top two layers, so the rig can only turn whichever
//! face is at the bottom station. Every move therefore becomes a (possibly
//! empty) run of flips and whole-cube rotations that brings the target face
//! down, followed by one bottom-layer turn. Each move is lowered greedily at
//! minimum cost under a [`CostModel`].

mod orientation;
mod primitive;
mod program;

pub use orientation::{Orientation, Station};
pub use primitive::{CostModel, CostModelError, Primitive, UnknownPrimitive};
pub use program::{
    compile, compile_from, layer_turn, lower_move, plan_reorientation, Annotation, MachineProgram,
};

pub(crate) use program::apply_reorientation;
