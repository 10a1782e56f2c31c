//! Plot-ready data files.
//!
//! One whitespace-separated table per `(q, metric)` with header
//! `x y y-min y-max`: `x` is ε, `y` the mean over repetitions, and the last two
//! columns are the distances from the mean down to the minimum and up to the
//! maximum (error-bar form).

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use super::bounds::BoundsRow;
use super::sweep::{CellSummary, Stats, Sweep};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    OracleCalls,
    OracleCallsA,
    LastK,
    Iterations,
}

impl Metric {
    pub const ALL: [Metric; 4] = [
        Metric::OracleCalls,
        Metric::OracleCallsA,
        Metric::LastK,
        Metric::Iterations,
    ];

    pub fn file_stem(self) -> &'static str {
        match self {
            Metric::OracleCalls => "oracle_calls",
            Metric::OracleCallsA => "oracle_calls_A",
            Metric::LastK => "k",
            Metric::Iterations => "I",
        }
    }

    pub fn stats(self, cell: &CellSummary) -> Stats {
        match self {
            Metric::OracleCalls => cell.n_oracle_grover,
            Metric::OracleCallsA => cell.n_oracle_a,
            Metric::LastK => cell.k_last,
            Metric::Iterations => cell.iterations,
        }
    }
}

pub fn dat_file_name(q: f64, metric: Metric) -> String {
    format!("q{q}_{}.dat", metric.file_stem())
}

pub fn format_row(epsilon: f64, stats: &Stats) -> String {
    format!(
        "{epsilon} {} {} {}",
        stats.mean,
        stats.mean - stats.min,
        stats.max - stats.mean
    )
}

pub fn render_dat(cells: &[&CellSummary], metric: Metric) -> String {
    let mut out = String::from("x y y-min y-max\n");
    for cell in cells {
        out.push_str(&format_row(cell.epsilon, &metric.stats(cell)));
        out.push('\n');
    }
    out
}

fn write(path: PathBuf, contents: &str) -> Result<PathBuf> {
    fs::write(&path, contents).map_err(Error::io(&path))?;
    Ok(path)
}

/// Writes every `.dat` table plus `sweep.json` (config, summary, runs) into
/// `dir` and returns the written paths.
pub fn emit_dat(sweep: &Sweep, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(Error::io(dir))?;
    let mut written = Vec::new();
    for &q in &sweep.config.q_grid {
        let cells: Vec<_> = sweep.summary.cells.iter().filter(|c| c.q == q).collect();
        for metric in Metric::ALL {
            written.push(write(
                dir.join(dat_file_name(q, metric)),
                &render_dat(&cells, metric),
            )?);
        }
    }
    let json = serde_json::to_string_pretty(sweep)?;
    written.push(write(dir.join("sweep.json"), &json)?);
    Ok(written)
}

pub fn render_bounds(rows: &[BoundsRow]) -> String {
    let mut out = String::from("epsilon k_max T n_oracle_bound inv_eps inv_eps2 iqae\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{} {} {} {} {} {} {}",
            r.epsilon,
            r.k_max,
            r.iterations_bound,
            r.n_oracle_bound,
            r.quadratic_cost,
            r.classical_cost,
            r.iqae_reference
        );
    }
    out
}

pub fn write_bounds(rows: &[BoundsRow], q: f64, dir: &Path) -> Result<PathBuf> {
    fs::create_dir_all(dir).map_err(Error::io(dir))?;
    write(dir.join(format!("bounds_q{q}.dat")), &render_bounds(rows))
}
