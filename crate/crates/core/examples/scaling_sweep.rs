//! Oracle calls against target precision for q ∈ {2, 10, 20}, 100 repetitions
//! per cell, written as plot-ready `.dat` tables.
//!
//! ```text
//! cargo run --release --example scaling_sweep -- out/scaling
//! ```

use std::path::PathBuf;

use rqae::harness::{emit_dat, run_sweep, ExperimentConfig};

fn main() -> rqae::Result<()> {
    let out = std::env::args()
        .nth(1)
        .map_or_else(|| PathBuf::from("rqae-out/scaling"), PathBuf::from);
    let config = ExperimentConfig {
        output_dir: out.clone(),
        ..ExperimentConfig::default()
    };
    let sweep = run_sweep(&config)?;
    println!("  q    epsilon   mean calls    max calls        bound  failures");
    for c in &sweep.summary.cells {
        println!(
            "{:>3} {:>10.0e} {:>12.0} {:>12.0} {:>12.0} {:>9}",
            c.q,
            c.epsilon,
            c.n_oracle_grover.mean,
            c.n_oracle_grover.max,
            c.bounds.n_oracle_bound,
            c.failure_count
        );
    }
    let written = emit_dat(&sweep, &out)?;
    println!(
        "{} files in {}, failure rate {:.4}",
        written.len(),
        out.display(),
        sweep.summary.failure_rate()
    );
    Ok(())
}
