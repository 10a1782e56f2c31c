//! Last amplification and iteration count for q = 20 across a wide precision
//! range: one iteration at coarse ε, then `k` following `k_max` up to the
//! `k₂ = 10` floor set by the policy, then a third iteration.

use rqae::harness::{log_spaced, run_sweep, ExperimentConfig};

fn main() -> rqae::Result<()> {
    let config = ExperimentConfig {
        epsilon_grid: log_spaced(1e-5, 1e-1, 17)?.into_iter().rev().collect(),
        q_grid: vec![20.0],
        repetitions: 50,
        ..ExperimentConfig::default()
    };
    let sweep = run_sweep(&config)?;
    println!("   epsilon  k_max  mean k_last  mean I");
    for c in &sweep.summary.cells {
        println!(
            "{:>10.3e} {:>6} {:>12.2} {:>7.2}",
            c.epsilon, c.schedule.k_max, c.k_last.mean, c.iterations.mean
        );
    }
    Ok(())
}
