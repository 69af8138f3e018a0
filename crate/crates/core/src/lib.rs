//! Rubik's Cube solving pipeline for a three-motor rig.
//!
//! * [`cube`]: facelet and cubie representations, moves, validation.
//! * [`twophase`]: Kociemba's two-phase solver with coordinate tables.
//! * [`compiler`]: lowering face turns to rig primitives (flip, whole-cube
//!   rotation, bottom-layer turn) under a timing model.
//! * [`sim`]: deterministic rig simulator and the serial wire format.

pub mod compiler;
pub mod cube;
pub mod sim;
pub mod twophase;
