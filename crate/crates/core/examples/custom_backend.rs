//! Plugging a user-defined oracle into the estimator.
//!
//! Any type implementing [`OracleBackend`] works; here the marked-state
//! probability comes from an amplitude that is itself the integral of a
//! function, the usual Monte Carlo use case.

use rqae::backends::{amplified_probability, OracleBackend};
use rqae::estimator::Estimator;
use rqae::harness::run_stream;
use rqae::schedule::{derive_schedule, ScheduleInputs};

/// Encodes `∫₀¹ f(x) dx / 4` for `f(x) = sin(2πx) + x − ½` discretized on a grid.
struct IntegralOracle {
    amplitude: f64,
}

impl IntegralOracle {
    fn new(points: usize) -> Self {
        let f = |x: f64| (2.0 * std::f64::consts::PI * x).sin() + x - 0.5 + 0.3 * x * x;
        let mean = (0..points)
            .map(|i| f((i as f64 + 0.5) / points as f64))
            .sum::<f64>()
            / points as f64;
        Self {
            amplitude: mean / 4.0,
        }
    }
}

impl OracleBackend for IntegralOracle {
    fn effective_amplitude(&self) -> f64 {
        self.amplitude
    }

    fn amplitude_scale(&self) -> f64 {
        4.0
    }

    fn hit_probability(&self, shift: f64, k: u64) -> rqae::Result<f64> {
        Ok(amplified_probability(self.amplitude + shift, k))
    }
}

fn main() -> rqae::Result<()> {
    let oracle = IntegralOracle::new(1 << 12);
    let schedule = derive_schedule(ScheduleInputs::new(2.0, 2.5e-4, 0.05)?)?;
    let r = Estimator::new(&schedule, &oracle).run(&mut run_stream(3, 0))?;
    let s = oracle.amplitude_scale();
    println!("exact integral  {:.6}", s * oracle.effective_amplitude());
    println!(
        "estimate        {:.6} in [{:.6}, {:.6}]",
        s * r.estimate,
        s * r.interval.low(),
        s * r.interval.high()
    );
    println!("Grover calls    {}", r.n_oracle_grover);
    Ok(())
}
