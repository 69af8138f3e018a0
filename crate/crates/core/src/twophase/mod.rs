//! Kociemba's two-phase algorithm.
//!
//! Phase 1 deepens iteratively over all 18 face turns until the cube lands
//! in the subgroup `<U, D, R2, L2, F2, B2>`; each such path is finished by an
//! IDA* search over the 10 subgroup moves. In improving mode the outer loop
//! keeps going while the phase-1 depth is below the best total length found.

pub mod cache;
pub mod coord;
mod search;
pub mod tables;

pub use cache::{CacheError, CacheStatus};
pub use coord::{encode_phase1, encode_phase2, is_phase1_goal, NotInSubgroup, Phase1Coord, Phase2Coord};
pub use search::{solve, SolveError, SolveOptions, SolveReport, Solver, DEFAULT_MAX_LENGTH};
pub use tables::{MoveTables, PruneTables, Tables};
