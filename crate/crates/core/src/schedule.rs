//! Static run parameters.
//!
//! Everything the estimator needs is fixed up front from the amplification
//! policy `q`, the target half-width `ε` and the failure probability `γ`:
//! the shot count `N_i` and realized Hoeffding half-width `ε^p_i` are the
//! same for every iteration.

use serde::{Deserialize, Serialize};

use crate::theory;
use crate::{Error, Result};

/// Validated `(q, ε, γ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScheduleInputs {
    q: f64,
    epsilon: f64,
    gamma: f64,
}

impl ScheduleInputs {
    pub fn new(q: f64, epsilon: f64, gamma: f64) -> Result<Self> {
        theory::check_policy(q)?;
        theory::check_epsilon(epsilon)?;
        theory::check_gamma(gamma)?;
        Ok(Self { q, epsilon, gamma })
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Schedule {
    pub inputs: ScheduleInputs,
    /// Planned probability half-width `ε^p`.
    pub eps_p: f64,
    /// Iteration bound `T`, kept real.
    pub iterations_bound: f64,
    /// Per-iteration failure probability `γ / T`.
    pub gamma_i: f64,
    /// Shots per iteration (per shifted state in the first iteration).
    pub shots: u64,
    /// Realized probability half-width `√(ln(2/γ_i) / (2 N_i))`.
    pub eps_p_i: f64,
    pub first_shift: f64,
    pub k_max: u64,
}

impl Schedule {
    pub fn q(&self) -> f64 {
        self.inputs.q
    }

    pub fn epsilon(&self) -> f64 {
        self.inputs.epsilon
    }

    pub fn gamma(&self) -> f64 {
        self.inputs.gamma
    }

    /// Hard cap used by the estimator's runaway guard: `⌈T⌉ + 2`.
    pub fn iteration_limit(&self) -> usize {
        self.iterations_bound.ceil() as usize + 2
    }
}

/// Hoeffding half-width for `shots` samples at failure probability `gamma`.
pub fn hoeffding_half_width(shots: u64, gamma: f64) -> f64 {
    ((2.0 / gamma).ln() / (2.0 * shots as f64)).sqrt()
}

pub fn derive_schedule(inputs: ScheduleInputs) -> Result<Schedule> {
    let ScheduleInputs { q, epsilon, gamma } = inputs;
    let eps_p = theory::planned_probability_precision(q);
    let iterations_bound = theory::iteration_bound(q, epsilon)?;
    if !(iterations_bound > 1.0) {
        return Err(Error::DegenerateSchedule { iterations_bound });
    }
    let gamma_i = gamma / iterations_bound;
    let shots = ((2.0 * iterations_bound / gamma).ln() / (2.0 * eps_p * eps_p)).ceil() as u64;
    let eps_p_i = hoeffding_half_width(shots, gamma_i);
    Ok(Schedule {
        inputs,
        eps_p,
        iterations_bound,
        gamma_i,
        shots,
        eps_p_i,
        first_shift: theory::first_shift(q),
        k_max: theory::depth_bound(q, epsilon)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn schedule(q: f64, epsilon: f64) -> Schedule {
        derive_schedule(ScheduleInputs::new(q, epsilon, 0.05).unwrap()).unwrap()
    }

    #[test]
    fn rejects_out_of_range_inputs() {
        assert!(ScheduleInputs::new(1.0, 1e-3, 0.05).is_err());
        assert!(ScheduleInputs::new(0.5, 1e-3, 0.05).is_err());
        assert!(ScheduleInputs::new(2.0, 0.0, 0.05).is_err());
        assert!(ScheduleInputs::new(2.0, 0.5, 0.05).is_err());
        assert!(ScheduleInputs::new(2.0, 1e-3, 0.0).is_err());
        assert!(ScheduleInputs::new(2.0, 1e-3, 1.0).is_err());
        assert!(ScheduleInputs::new(f64::NAN, 1e-3, 0.05).is_err());
    }

    #[test]
    fn rejects_single_iteration_schedules() {
        // q = 2: T = log2(π/(2 arcsin 2ε)) drops below 1 once 2ε > sin(π/4).
        let err = derive_schedule(ScheduleInputs::new(2.0, 0.4, 0.05).unwrap()).unwrap_err();
        assert!(matches!(err, Error::DegenerateSchedule { .. }));
        // ε = 0.25 still yields T = log2(3) > 1.
        let s = schedule(2.0, 0.25);
        assert!((s.iterations_bound - 3f64.log2()).abs() < 1e-12);
        assert_eq!(s.k_max, 0);
    }

    #[test]
    fn deterministic() {
        assert_eq!(schedule(10.0, 3e-4), schedule(10.0, 3e-4));
    }

    #[test]
    fn monotone_in_policy() {
        let s: Vec<_> = [2.0, 10.0, 20.0]
            .iter()
            .map(|&q| schedule(q, 1e-3))
            .collect();
        for w in s.windows(2) {
            assert!(w[1].eps_p < w[0].eps_p);
            assert!(w[1].first_shift < w[0].first_shift);
            assert!(w[1].shots >= w[0].shots);
        }
    }

    #[test]
    fn monotone_in_precision() {
        let grid = [1e-5, 1e-4, 1e-3, 1e-2, 0.1, 0.2];
        for q in [2.0, 10.0, 20.0] {
            let s: Vec<_> = grid.iter().map(|&e| schedule(q, e)).collect();
            for w in s.windows(2) {
                assert!(w[1].iterations_bound <= w[0].iterations_bound);
                assert!(w[1].k_max <= w[0].k_max);
            }
        }
    }
}
