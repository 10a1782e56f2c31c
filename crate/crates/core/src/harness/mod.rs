//! Seeded experiment sweeps.
//!
//! A sweep runs independent estimations over a `(q, ε)` grid, verifies each
//! trace against the deterministic guarantees (amplification ratio on
//! uncapped steps, depth cap, iteration bound, oracle budget), aggregates
//! per-cell statistics, and writes them as `x y y-min y-max` tables. Every run
//! gets its own ChaCha stream selected by run index, so output files are
//! byte-identical for equal config and seed whatever the thread count.

mod bounds;
mod checks;
mod config;
mod output;
mod sweep;

pub use bounds::{bounds_table, log_spaced, BoundsRow};
pub use checks::{verify_run, Violation};
pub use config::{AmplitudeSpec, BackendKind, ExperimentConfig, DEFAULT_AMPLITUDE};
pub use output::{
    dat_file_name, emit_dat, format_row, render_bounds, render_dat, write_bounds, Metric,
};
pub use sweep::{
    cell_schedule, execute_run, make_backend, run_stream, run_sweep, CellSummary, RunRecord, Stats,
    Sweep, SweepSummary,
};
