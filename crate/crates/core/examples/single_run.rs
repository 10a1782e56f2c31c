//! One estimation run with the analytic oracle, printing the per-iteration trace.
//!
//! ```text
//! cargo run --example single_run -- 0.23 1e-3 2
//! ```

use rqae::backends::AnalyticBackend;
use rqae::estimator::Estimator;
use rqae::harness::run_stream;
use rqae::schedule::{derive_schedule, ScheduleInputs};

fn main() -> rqae::Result<()> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("numeric argument"))
        .collect();
    let a = args.first().copied().unwrap_or(0.23);
    let epsilon = args.get(1).copied().unwrap_or(1e-3);
    let q = args.get(2).copied().unwrap_or(2.0);

    let schedule = derive_schedule(ScheduleInputs::new(q, epsilon, 0.05)?)?;
    println!(
        "schedule: N_i = {}, eps_p_i = {:.6}, b1 = {:.6}, k_max = {}, T = {:.4}",
        schedule.shots,
        schedule.eps_p_i,
        schedule.first_shift,
        schedule.k_max,
        schedule.iterations_bound
    );

    let backend = AnalyticBackend::new(a)?;
    let result = Estimator::new(&schedule, &backend).run(&mut run_stream(42, 0))?;

    println!("  i      shift    k    p_hat        low         high");
    for it in &result.iterations {
        println!(
            "{:>3} {:>10.6} {:>4} {:>8.5} {:>11.7} {:>11.7}{}",
            it.index,
            it.shift,
            it.k,
            it.p_hat,
            it.interval.low(),
            it.interval.high(),
            if it.k_was_capped { "  (capped)" } else { "" }
        );
    }
    println!(
        "a = {a}, estimate = {:.7} +/- {:.2e}, Grover calls = {}, A calls = {}",
        result.estimate,
        result.interval.half_width(),
        result.n_oracle_grover,
        result.n_oracle_a
    );
    Ok(())
}
