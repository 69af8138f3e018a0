use std::time::{Duration, Instant};

use thiserror::Error;

use super::coord::{encode_phase1, encode_phase2, Phase1Coord, Phase2Coord};
use super::tables::{Tables, N_MOVES, PHASE2_MOVES};
use crate::cube::{CubieState, Move, MoveSequence, Verdict};

/// Default maximum solution length.
pub const DEFAULT_MAX_LENGTH: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOptions {
    pub max_length: usize,
    /// Keep deepening phase 1 after the first solution, tightening the bound,
    /// until no shorter solution can exist or the budget runs out.
    pub improve: bool,
    /// Search nodes (both phases) after which improvement stops and the best
    /// solution so far is returned. Deterministic. The search always runs
    /// until a first solution exists.
    pub node_budget: Option<u64>,
    /// Optional wall-clock cap on top of the node budget, same semantics.
    pub time_budget: Option<Duration>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_length: DEFAULT_MAX_LENGTH,
            improve: false,
            node_budget: None,
            time_budget: None,
        }
    }
}

impl SolveOptions {
    pub fn improving(node_budget: u64) -> Self {
        SolveOptions {
            improve: true,
            node_budget: Some(node_budget),
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub solution: MoveSequence,
    /// Every solution reported, in order; lengths strictly decrease.
    pub improvements: Vec<MoveSequence>,
    pub nodes: u64,
    /// The search stopped on its budget rather than finishing.
    pub budget_exhausted: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("unsolvable state: {0}")]
    InvalidState(Verdict),
    #[error("no solution of at most {0} moves")]
    NoSolutionWithinBound(usize),
}

#[derive(Copy, Clone, PartialEq, Eq)]
enum Flow {
    Continue,
    Stop,
}

/// Same face twice in a row is never useful, and of two commuting opposite
/// faces only the `U R F` before `D L B` order is searched.
#[inline]
fn allowed_after(last: Option<usize>, face: usize) -> bool {
    match last {
        None => true,
        Some(l) => face != l && !(l >= 3 && face == l - 3),
    }
}

struct Search<'t> {
    tables: &'t Tables,
    start: CubieState,
    max_length: usize,
    improve: bool,
    node_budget: u64,
    deadline: Option<Instant>,
    nodes: u64,
    aborted: bool,
    /// Length of the best solution so far, `usize::MAX` before the first.
    bound: usize,
    phase1_path: Vec<u8>,
    phase2_path: Vec<u8>,
    improvements: Vec<Vec<u8>>,
}

impl Search<'_> {
    #[inline]
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.improvements.is_empty() {
            return true;
        }
        if self.nodes > self.node_budget {
            self.aborted = true;
        } else if let Some(deadline) = self.deadline {
            if self.nodes.is_multiple_of(1024) && Instant::now() >= deadline {
                self.aborted = true;
            }
        }
        !self.aborted
    }

    fn run(&mut self) {
        let root = encode_phase1(&self.start);
        let mut depth = 0;
        while depth < self.bound && depth <= self.max_length {
            if self.tables.prune.phase1_bound(root) as usize <= depth
                && self.phase1(root, depth, None) == Flow::Stop
            {
                break;
            }
            depth += 1;
        }
    }

    fn phase1(&mut self, p: Phase1Coord, depth_left: usize, last: Option<usize>) -> Flow {
        if !self.tick() {
            return Flow::Stop;
        }
        if depth_left == 0 {
            return if p.is_goal() { self.phase2_from_leaf() } else { Flow::Continue };
        }
        for m in 0..N_MOVES {
            let face = m / 3;
            if !allowed_after(last, face) {
                continue;
            }
            let next = self.tables.moves.phase1(p, m);
            if self.tables.prune.phase1_bound(next) as usize >= depth_left {
                continue;
            }
            self.phase1_path.push(m as u8);
            let flow = self.phase1(next, depth_left - 1, Some(face));
            self.phase1_path.pop();
            if flow == Flow::Stop {
                return Flow::Stop;
            }
        }
        Flow::Continue
    }

    /// A phase-1 path of the current depth reached the subgroup; finish with
    /// the shortest phase-2 continuation that beats the bound.
    fn phase2_from_leaf(&mut self) -> Flow {
        let depth = self.phase1_path.len();
        let ceiling = self.max_length.min(self.bound.saturating_sub(1));
        if ceiling < depth {
            return Flow::Stop;
        }
        let limit = ceiling - depth;
        let cube = self
            .phase1_path
            .iter()
            .fold(self.start, |c, &m| c.apply_move(Move::from_index(m as usize)));
        let p = encode_phase2(&cube).expect("phase-1 goal implies subgroup membership");
        let estimate = self.tables.prune.phase2_bound(p) as usize;
        if estimate > limit {
            return Flow::Continue;
        }
        let last = self.phase1_path.last().map(|&m| m as usize / 3);
        for len in estimate..=limit {
            self.phase2_path.clear();
            if self.phase2(p, len, last) {
                return self.report();
            }
            if self.aborted {
                return Flow::Stop;
            }
        }
        Flow::Continue
    }

    fn phase2(&mut self, p: Phase2Coord, depth_left: usize, last: Option<usize>) -> bool {
        if !self.tick() {
            return false;
        }
        if depth_left == 0 {
            return p.is_goal();
        }
        for (k, &m) in PHASE2_MOVES.iter().enumerate() {
            let face = m / 3;
            if !allowed_after(last, face) {
                continue;
            }
            let next = self.tables.moves.phase2(p, k);
            if self.tables.prune.phase2_bound(next) as usize >= depth_left {
                continue;
            }
            self.phase2_path.push(m as u8);
            if self.phase2(next, depth_left - 1, Some(face)) {
                return true;
            }
            self.phase2_path.pop();
            if self.aborted {
                return false;
            }
        }
        false
    }

    fn report(&mut self) -> Flow {
        let mut solution = self.phase1_path.clone();
        solution.extend_from_slice(&self.phase2_path);
        self.bound = solution.len();
        self.improvements.push(solution);
        if self.improve && self.bound > self.phase1_path.len() {
            Flow::Continue
        } else {
            Flow::Stop
        }
    }
}

fn to_sequence(path: &[u8]) -> MoveSequence {
    path.iter().map(|&m| Move::from_index(m as usize)).collect()
}

/// Two-phase solver bound to a set of tables.
#[derive(Clone, Copy)]
pub struct Solver<'t> {
    tables: &'t Tables,
}

impl<'t> Solver<'t> {
    pub fn new(tables: &'t Tables) -> Self {
        Solver { tables }
    }

    pub fn tables(&self) -> &'t Tables {
        self.tables
    }

    pub fn solve(&self, c: &CubieState, opts: &SolveOptions) -> Result<SolveReport, SolveError> {
        let verdict = c.validate();
        if !verdict.is_valid() {
            return Err(SolveError::InvalidState(verdict));
        }
        let mut search = Search {
            tables: self.tables,
            start: *c,
            max_length: opts.max_length,
            improve: opts.improve,
            node_budget: opts.node_budget.unwrap_or(u64::MAX),
            deadline: opts.time_budget.map(|d| Instant::now() + d),
            nodes: 0,
            aborted: false,
            bound: usize::MAX,
            phase1_path: Vec::with_capacity(opts.max_length),
            phase2_path: Vec::with_capacity(opts.max_length),
            improvements: Vec::new(),
        };
        search.run();
        match search.improvements.last() {
            Some(best) => Ok(SolveReport {
                solution: to_sequence(best),
                improvements: search.improvements.iter().map(|p| to_sequence(p)).collect(),
                nodes: search.nodes,
                budget_exhausted: search.aborted,
            }),
            None => Err(SolveError::NoSolutionWithinBound(opts.max_length)),
        }
    }
}

/// Solves `c` with the process-wide tables, building them on first use.
pub fn solve(c: &CubieState, max_length: usize, improve: bool) -> Result<MoveSequence, SolveError> {
    let opts = SolveOptions {
        max_length,
        improve,
        ..Default::default()
    };
    Solver::new(Tables::shared()).solve(c, &opts).map(|r| r.solution)
}
