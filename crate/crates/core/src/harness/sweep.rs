use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checks::verify_run;
use super::config::{AmplitudeSpec, BackendKind, ExperimentConfig};
use crate::backends::{AnalyticBackend, CircuitBackend, OracleBackend};
use crate::estimator::{Estimator, RunResult};
use crate::schedule::{derive_schedule, Schedule, ScheduleInputs};
use crate::theory::{bound_report, BoundReport};
use crate::{Error, Result};

/// Independent stream for run `index` under `seed`.
pub fn run_stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn make_backend(
    kind: BackendKind,
    amplitude: f64,
    n_qubits: usize,
) -> Result<Box<dyn OracleBackend>> {
    Ok(match kind {
        BackendKind::Analytic => Box::new(AnalyticBackend::new(amplitude)?),
        BackendKind::Circuit => Box::new(CircuitBackend::new(amplitude, n_qubits)?),
    })
}

/// Schedule the estimator runs with for a user-facing `(q, ε, γ)`.
pub fn cell_schedule(config: &ExperimentConfig, q: f64, epsilon: f64) -> Result<Schedule> {
    derive_schedule(ScheduleInputs::new(
        q,
        config.effective_epsilon(epsilon),
        config.gamma,
    )?)
}

/// One run, with estimates mapped back to the user's amplitude.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub cell: usize,
    pub rep: usize,
    pub run_index: u64,
    pub q: f64,
    pub epsilon: f64,
    pub amplitude: f64,
    pub estimate: f64,
    pub low: f64,
    pub high: f64,
    pub n_oracle_grover: u64,
    pub n_oracle_a: u64,
    pub k_last: u64,
    pub iterations: usize,
    pub contained: bool,
    /// Effective-space trace, kept when tracing is enabled.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<RunResult>,
}

/// Runs the estimator once and checks its trace.
///
/// Property violations come back as [`Error::PropertyViolation`] carrying the
/// serialized trace.
pub fn execute_run(
    schedule: &Schedule,
    backend: &dyn OracleBackend,
    rng: &mut dyn RngCore,
) -> Result<RunResult> {
    let result = match Estimator::new(schedule, backend).run(rng) {
        Ok(r) => r,
        Err(Error::IterationLimit { limit, trace }) => {
            return Err(Error::PropertyViolation {
                property: "iterations",
                detail: format!("loop exceeded {limit} iterations"),
                trace: serde_json::to_string_pretty(&trace)?,
            })
        }
        Err(e) => return Err(e),
    };
    if let Some(v) = verify_run(schedule, &result).into_iter().next() {
        return Err(Error::PropertyViolation {
            property: v.property,
            detail: v.detail,
            trace: serde_json::to_string_pretty(&result)?,
        });
    }
    Ok(result)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    pub mean: f64,
    pub min: f64,
    pub max: f64,
}

impl Stats {
    pub fn from_values(values: impl IntoIterator<Item = f64>) -> Self {
        let (mut n, mut sum, mut min, mut max) = (0usize, 0.0, f64::INFINITY, f64::NEG_INFINITY);
        for v in values {
            n += 1;
            sum += v;
            min = min.min(v);
            max = max.max(v);
        }
        Self {
            mean: sum / n as f64,
            min,
            max,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellSummary {
    pub q: f64,
    pub epsilon: f64,
    pub schedule: Schedule,
    pub repetitions: usize,
    pub n_oracle_grover: Stats,
    pub n_oracle_a: Stats,
    pub k_last: Stats,
    pub iterations: Stats,
    pub failure_count: usize,
    /// Theory overlay for the schedule actually run.
    pub bounds: BoundReport,
}

impl CellSummary {
    pub fn from_runs(q: f64, epsilon: f64, schedule: Schedule, runs: &[RunRecord]) -> Result<Self> {
        Ok(Self {
            q,
            epsilon,
            schedule,
            repetitions: runs.len(),
            n_oracle_grover: Stats::from_values(runs.iter().map(|r| r.n_oracle_grover as f64)),
            n_oracle_a: Stats::from_values(runs.iter().map(|r| r.n_oracle_a as f64)),
            k_last: Stats::from_values(runs.iter().map(|r| r.k_last as f64)),
            iterations: Stats::from_values(runs.iter().map(|r| r.iterations as f64)),
            failure_count: runs.iter().filter(|r| !r.contained).count(),
            bounds: bound_report(schedule.q(), schedule.epsilon(), schedule.gamma())?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub cells: Vec<CellSummary>,
    pub total_runs: usize,
    pub total_failures: usize,
}

impl SweepSummary {
    pub fn failure_rate(&self) -> f64 {
        self.total_failures as f64 / self.total_runs as f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sweep {
    pub config: ExperimentConfig,
    pub summary: SweepSummary,
    pub runs: Vec<RunRecord>,
}

struct Cell {
    q: f64,
    epsilon: f64,
    schedule: Schedule,
}

fn run_one(
    config: &ExperimentConfig,
    cells: &[Cell],
    cell: usize,
    rep: usize,
) -> Result<RunRecord> {
    let Cell {
        q,
        epsilon,
        schedule,
    } = &cells[cell];
    let run_index = (cell * config.repetitions + rep) as u64;
    let mut rng = run_stream(config.seed, run_index);
    let amplitude = match config.amplitude {
        AmplitudeSpec::Fixed(a) => a,
        AmplitudeSpec::Uniform(lo, hi) => rng.random_range(lo..=hi),
    };
    let backend = make_backend(config.backend, amplitude, config.n_qubits)?;
    let result = execute_run(schedule, backend.as_ref(), &mut rng)?;
    let scale = backend.amplitude_scale();
    let (low, high) = (
        scale * result.interval.low(),
        scale * result.interval.high(),
    );
    Ok(RunRecord {
        cell,
        rep,
        run_index,
        q: *q,
        epsilon: *epsilon,
        amplitude,
        estimate: scale * result.estimate,
        low,
        high,
        n_oracle_grover: result.n_oracle_grover,
        n_oracle_a: result.n_oracle_a,
        k_last: result.k_last(),
        iterations: result.iteration_count(),
        contained: low <= amplitude && amplitude <= high,
        trace: config.trace.then_some(result),
    })
}

/// Runs `repetitions` seeded runs in every `(q, ε)` cell, `q` outermost.
///
/// Each run is checked against the deterministic guarantees as it finishes;
/// the containment failure rate is checked against `γ` over the whole sweep.
/// Results depend only on the config, not on execution order.
pub fn run_sweep(config: &ExperimentConfig) -> Result<Sweep> {
    config.validate()?;
    let cells = config
        .q_grid
        .iter()
        .flat_map(|&q| config.epsilon_grid.iter().map(move |&epsilon| (q, epsilon)))
        .map(|(q, epsilon)| {
            Ok(Cell {
                q,
                epsilon,
                schedule: cell_schedule(config, q, epsilon)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let reps = config.repetitions;
    let runs = (0..cells.len() * reps)
        .into_par_iter()
        .map(|i| run_one(config, &cells, i / reps, i % reps))
        .collect::<Vec<_>>()
        .into_iter()
        .collect::<Result<Vec<_>>>()?;

    let summaries = cells
        .iter()
        .enumerate()
        .map(|(i, c)| {
            CellSummary::from_runs(c.q, c.epsilon, c.schedule, &runs[i * reps..(i + 1) * reps])
        })
        .collect::<Result<Vec<_>>>()?;
    let summary = SweepSummary {
        total_runs: runs.len(),
        total_failures: summaries.iter().map(|c| c.failure_count).sum(),
        cells: summaries,
    };
    if summary.failure_rate() > config.gamma {
        let failed: Vec<_> = runs.iter().filter(|r| !r.contained).collect();
        return Err(Error::PropertyViolation {
            property: "containment",
            detail: format!(
                "{} of {} runs missed the true amplitude (rate {} > gamma {})",
                summary.total_failures,
                summary.total_runs,
                summary.failure_rate(),
                config.gamma
            ),
            trace: serde_json::to_string_pretty(&failed)?,
        });
    }
    Ok(Sweep {
        config: config.clone(),
        summary,
        runs,
    })
}
