use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use serde::Serialize;

use cuberig::cube::random_state;

use crate::engine::Engine;
use crate::error::Rejection;

/// Solves random states from consecutive seeds until `n` solutions with a
/// length in `lengths` are collected, and reports their compiled times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    pub n: usize,
    pub first_seed: u64,
    pub lengths: RangeInclusive<usize>,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            n: 1000,
            first_seed: 0,
            lengths: 18..=24,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchReport {
    /// Solution length histogram over every solve, kept or not.
    pub histogram: BTreeMap<usize, usize>,
    pub solved: usize,
    pub kept: usize,
    pub mean_length: f64,
    pub mean_ms: f64,
    pub min_ms: f64,
    pub max_ms: f64,
}

pub fn bench(engine: &Engine, cfg: &BenchConfig) -> Result<BenchReport, Rejection> {
    let mut histogram = BTreeMap::new();
    let mut times = Vec::with_capacity(cfg.n);
    let mut lengths = 0usize;
    let mut solved = 0;
    // Gives up on ranges that are (nearly) never hit.
    let max_attempts = cfg.n * 50 + 1000;
    let mut seed = cfg.first_seed;
    while times.len() < cfg.n && solved < max_attempts {
        let solution = engine.solve(&random_state(seed))?;
        seed += 1;
        solved += 1;
        *histogram.entry(solution.len()).or_insert(0) += 1;
        if cfg.lengths.contains(&solution.len()) {
            lengths += solution.len();
            times.push(engine.compile(&solution).total_ms());
        }
    }
    let kept = times.len();
    let mean = |total: f64| if kept == 0 { 0.0 } else { total / kept as f64 };
    Ok(BenchReport {
        histogram,
        solved,
        kept,
        mean_length: mean(lengths as f64),
        mean_ms: mean(times.iter().fold(0.0, |a, t| a + t)),
        min_ms: times.iter().copied().reduce(f64::min).unwrap_or(0.0),
        max_ms: times.iter().copied().reduce(f64::max).unwrap_or(0.0),
    })
}
