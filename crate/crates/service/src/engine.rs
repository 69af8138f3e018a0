use serde::{Deserialize, Serialize};

use cuberig::compiler::{compile, CostModel, MachineProgram, Primitive};
use cuberig::cube::{random_sequence, random_state, CubieState, FaceletState, MoveSequence};
use cuberig::sim::encode_serial;
use cuberig::twophase::{SolveOptions, Solver, Tables};

use crate::error::Rejection;

/// Node budget for improving searches unless configured otherwise.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;

/// Solver tables, cost model and search settings bundled for the pipeline.
#[derive(Clone)]
pub struct Engine {
    tables: &'static Tables,
    pub cost: CostModel,
    pub options: SolveOptions,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveOutcome {
    pub state: String,
    pub solution: String,
    pub length: usize,
    pub program: Vec<Primitive>,
    pub serial_hex: String,
    pub total_ms: f64,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScrambleMode {
    #[default]
    Virtual,
    Real,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScrambleOutcome {
    pub mode: ScrambleMode,
    pub seed: u64,
    pub state: String,
    /// Applied to a solved cube, produces `state`.
    pub moves: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub program: Option<Vec<Primitive>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub serial_hex: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_ms: Option<f64>,
}

/// Parses, decodes and validates a 54-character state.
pub fn parse_state(text: &str) -> Result<CubieState, Rejection> {
    let cube = FaceletState::parse(text.trim())?.to_cubies()?;
    let verdict = cube.validate();
    if !verdict.is_valid() {
        return Err(Rejection::Unsolvable(verdict));
    }
    Ok(cube)
}

pub fn facelets(c: &CubieState) -> String {
    FaceletState::from(c).to_string()
}

pub fn serial_hex(prog: &MachineProgram) -> String {
    hex::encode(encode_serial(prog))
}

impl Engine {
    pub fn new(tables: &'static Tables, cost: CostModel) -> Self {
        Engine {
            tables,
            cost,
            options: SolveOptions::improving(DEFAULT_NODE_BUDGET),
        }
    }

    /// Engine over the lazily built process-wide tables and default costs.
    pub fn shared() -> Self {
        Engine::new(Tables::shared(), CostModel::default())
    }

    pub fn with_options(mut self, options: SolveOptions) -> Self {
        self.options = options;
        self
    }

    pub fn tables(&self) -> &'static Tables {
        self.tables
    }

    pub fn solve(&self, c: &CubieState) -> Result<MoveSequence, Rejection> {
        Ok(Solver::new(self.tables).solve(c, &self.options)?.solution)
    }

    /// Literal lowering, one program step per move.
    pub fn compile(&self, moves: &MoveSequence) -> MachineProgram {
        compile(moves, &self.cost, false)
    }

    pub fn solve_cube(&self, c: &CubieState) -> Result<SolveOutcome, Rejection> {
        let solution = self.solve(c)?;
        let prog = self.compile(&solution);
        Ok(SolveOutcome {
            state: facelets(c),
            solution: solution.to_string(),
            length: solution.len(),
            program: prog.primitives().to_vec(),
            serial_hex: serial_hex(&prog),
            total_ms: prog.total_ms(),
        })
    }

    pub fn solve_text(&self, state: &str) -> Result<SolveOutcome, Rejection> {
        self.solve_cube(&parse_state(state)?)
    }

    /// Without `length`, a uniformly random state with the inverse of its
    /// solution as the generating sequence; with it, a random sequence of
    /// that many moves. Real mode adds the program that performs the
    /// scramble on a solved cube in the rig.
    pub fn scramble(&self, mode: ScrambleMode, seed: u64, length: Option<usize>) -> Result<ScrambleOutcome, Rejection> {
        let (state, moves) = match length {
            Some(n) => {
                let moves = random_sequence(seed, n);
                (CubieState::SOLVED.apply_sequence(moves.iter()), moves)
            }
            None => {
                let state = random_state(seed);
                (state, self.solve(&state)?.inverse())
            }
        };
        let mut out = ScrambleOutcome {
            mode,
            seed,
            state: facelets(&state),
            moves: moves.to_string(),
            program: None,
            serial_hex: None,
            total_ms: None,
        };
        if mode == ScrambleMode::Real {
            let prog = self.compile(&moves);
            out.program = Some(prog.primitives().to_vec());
            out.serial_hex = Some(serial_hex(&prog));
            out.total_ms = Some(prog.total_ms());
        }
        Ok(out)
    }
}
