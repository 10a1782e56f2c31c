//! The iterative estimation loop.
//!
//! The first iteration measures the oracle under shifts `+b₁` and `−b₁`; the
//! difference of the two hit rates is linear in `a`, which is where the sign
//! comes from. Every later iteration shifts the current interval so its lower
//! end sits at zero, amplifies with the largest Grover power that keeps the
//! whole confidence fan inside the first quadrant, measures, and maps the
//! probability bounds back to amplitude space.

use std::f64::consts::PI;

use rand::RngCore;
use serde::{Deserialize, Serialize};

use crate::backends::OracleBackend;
use crate::schedule::Schedule;
use crate::{Error, Result};

/// Closed amplitude interval inside `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConfidenceInterval {
    low: f64,
    high: f64,
}

impl ConfidenceInterval {
    pub fn new(low: f64, high: f64) -> Result<Self> {
        if !(-1.0 <= low && low <= high && high <= 1.0) {
            return Err(Error::InvalidParameter {
                name: "interval",
                value: low,
                reason: "requires -1 <= low <= high <= 1",
            });
        }
        Ok(Self { low, high })
    }

    /// Intersects `[low, high]` with `[-1, 1]`.
    pub fn clamped(low: f64, high: f64) -> Self {
        let high = high.clamp(-1.0, 1.0);
        Self {
            low: low.clamp(-1.0, high),
            high,
        }
    }

    pub fn low(&self) -> f64 {
        self.low
    }

    pub fn high(&self) -> f64 {
        self.high
    }

    pub fn center(&self) -> f64 {
        0.5 * (self.low + self.high)
    }

    pub fn half_width(&self) -> f64 {
        0.5 * (self.high - self.low)
    }

    pub fn contains(&self, value: f64) -> bool {
        self.low <= value && value <= self.high
    }
}

/// The `−b₁` measurement of the first iteration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SignProbe {
    pub hits: u64,
    pub p_hat: f64,
}

/// Trace of one pass through the loop.
///
/// For the first iteration `hits`, `p_hat`, `p_min` and `p_max` describe the
/// `+b₁` measurement and `sign_probe` holds the `−b₁` one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IterationRecord {
    pub index: usize,
    pub shift: f64,
    pub k: u64,
    pub shots: u64,
    pub hits: u64,
    pub p_hat: f64,
    pub p_min: f64,
    pub p_max: f64,
    pub interval: ConfidenceInterval,
    pub grover_calls_cum: u64,
    pub a_calls_cum: u64,
    pub k_was_capped: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign_probe: Option<SignProbe>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub estimate: f64,
    pub interval: ConfidenceInterval,
    pub iterations: Vec<IterationRecord>,
    /// `Σ N_i k_i`.
    pub n_oracle_grover: u64,
    /// Applications of `A` and `A†`, counted individually.
    pub n_oracle_a: u64,
    pub converged: bool,
}

impl RunResult {
    pub fn iteration_count(&self) -> usize {
        self.iterations.len()
    }

    pub fn k_last(&self) -> u64 {
        self.iterations.last().map_or(0, |r| r.k)
    }

    pub fn max_k(&self) -> u64 {
        self.iterations.iter().map(|r| r.k).max().unwrap_or(0)
    }
}

/// `[max(p̂ − ε, 0), min(p̂ + ε, 1)]`.
pub fn probability_bounds(p_hat: f64, half_width: f64) -> (f64, f64) {
    ((p_hat - half_width).max(0.0), (p_hat + half_width).min(1.0))
}

pub fn first_iteration(
    schedule: &Schedule,
    backend: &(impl OracleBackend + ?Sized),
    rng: &mut dyn RngCore,
) -> Result<IterationRecord> {
    let shift = schedule.first_shift;
    if shift == 0.0 {
        return Err(Error::InvalidParameter {
            name: "first_shift",
            value: shift,
            reason: "sign recovery needs a nonzero shift",
        });
    }
    let shots = schedule.shots;
    let hits_sum = backend.measure(shift, 0, shots, rng)?;
    let hits_diff = backend.measure(-shift, 0, shots, rng)?;
    let p_sum = hits_sum as f64 / shots as f64;
    let p_diff = hits_diff as f64 / shots as f64;

    // (a+b)² − (a−b)² = 4ab
    let estimate = (p_sum - p_diff) / (4.0 * shift);
    let spread = schedule.eps_p_i / (2.0 * shift).abs();
    let (p_min, p_max) = probability_bounds(p_sum, schedule.eps_p_i);
    Ok(IterationRecord {
        index: 1,
        shift,
        k: 0,
        shots,
        hits: hits_sum,
        p_hat: p_sum,
        p_min,
        p_max,
        interval: ConfidenceInterval::clamped(estimate - spread, estimate + spread),
        grover_calls_cum: 0,
        a_calls_cum: 2 * shots,
        k_was_capped: false,
        sign_probe: Some(SignProbe {
            hits: hits_diff,
            p_hat: p_diff,
        }),
    })
}

/// Shift that moves the interval's lower bound to zero.
pub fn choose_shift(previous: &ConfidenceInterval) -> f64 {
    -previous.low()
}

/// Largest `k` with `(2k+1) arcsin(2ε^a) ≤ π/2`, capped at `k_max`.
///
/// Returns the exponent and whether the cap was applied.
pub fn choose_k(previous_half_width: f64, k_max: u64) -> Result<(u64, bool)> {
    let fan = 2.0 * previous_half_width;
    if !(0.0..=1.0).contains(&fan) {
        return Err(Error::InvalidParameter {
            name: "half_width",
            value: previous_half_width,
            reason: "amplification needs 0 <= 2 * half_width <= 1",
        });
    }
    let ideal = (PI / (4.0 * fan.asin()) - 0.5 + 1e-12).floor();
    if ideal >= k_max as f64 {
        Ok((k_max, ideal > k_max as f64))
    } else {
        Ok((ideal.max(0.0) as u64, false))
    }
}

/// Undoes amplification `2k+1` and shift `b` on probability bounds.
pub fn refine_interval(p_min: f64, p_max: f64, k: u64, shift: f64) -> ConfidenceInterval {
    let factor = (2 * k + 1) as f64;
    let unamplify = |p: f64| (p.sqrt().asin() / factor).sin() - shift;
    ConfidenceInterval::clamped(unamplify(p_min), unamplify(p_max))
}

/// Runs the loop of a fixed [`Schedule`] against one oracle.
pub struct Estimator<'a, B: OracleBackend + ?Sized> {
    schedule: &'a Schedule,
    backend: &'a B,
}

impl<'a, B: OracleBackend + ?Sized> Estimator<'a, B> {
    pub fn new(schedule: &'a Schedule, backend: &'a B) -> Self {
        Self { schedule, backend }
    }

    pub fn run(&self, rng: &mut dyn RngCore) -> Result<RunResult> {
        let schedule = self.schedule;
        let shots = schedule.shots;
        let limit = schedule.iteration_limit();

        let first = first_iteration(schedule, self.backend, rng)?;
        let mut interval = first.interval;
        let mut grover_calls = first.grover_calls_cum;
        let mut a_calls = first.a_calls_cum;
        let mut iterations = vec![first];

        while interval.half_width() > schedule.epsilon() {
            if iterations.len() >= limit {
                return Err(Error::IterationLimit {
                    limit,
                    trace: Box::new(finish(interval, iterations, grover_calls, a_calls, false)),
                });
            }
            let shift = choose_shift(&interval);
            let (k, capped) = choose_k(interval.half_width(), schedule.k_max)?;
            let hits = self.backend.measure(shift, k, shots, rng)?;
            let p_hat = hits as f64 / shots as f64;
            let (p_min, p_max) = probability_bounds(p_hat, schedule.eps_p_i);
            interval = refine_interval(p_min, p_max, k, shift);
            grover_calls += shots * k;
            a_calls += shots * (2 * k + 1);
            iterations.push(IterationRecord {
                index: iterations.len() + 1,
                shift,
                k,
                shots,
                hits,
                p_hat,
                p_min,
                p_max,
                interval,
                grover_calls_cum: grover_calls,
                a_calls_cum: a_calls,
                k_was_capped: capped,
                sign_probe: None,
            });
        }
        Ok(finish(interval, iterations, grover_calls, a_calls, true))
    }
}

fn finish(
    interval: ConfidenceInterval,
    iterations: Vec<IterationRecord>,
    n_oracle_grover: u64,
    n_oracle_a: u64,
    converged: bool,
) -> RunResult {
    RunResult {
        estimate: interval.center(),
        interval,
        iterations,
        n_oracle_grover,
        n_oracle_a,
        converged,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_negates_lower_bound() {
        let ci = |lo, hi| ConfidenceInterval::new(lo, hi).unwrap();
        assert_eq!(choose_shift(&ci(-0.2, 0.1)), 0.2);
        assert_eq!(choose_shift(&ci(0.05, 0.07)), -0.05);
        assert_eq!(choose_shift(&ci(0.0, 0.3)), 0.0);
    }

    #[test]
    fn k_selection() {
        assert_eq!(choose_k(0.25, 98).unwrap(), (1, false));
        assert_eq!(choose_k(0.25, 0).unwrap(), (0, true));
        assert_eq!(choose_k(0.001, 98).unwrap(), (98, true));
        assert_eq!(choose_k(0.001, 500).unwrap(), (392, false));
        assert!(choose_k(0.6, 98).is_err());
        assert!(choose_k(-0.1, 98).is_err());
    }

    #[test]
    fn k_keeps_fan_in_first_quadrant() {
        for i in 1..2000 {
            let hw = i as f64 / 4000.0;
            let (k, _) = choose_k(hw, u64::MAX).unwrap();
            assert!(
                (2 * k + 1) as f64 * (2.0 * hw).asin() <= PI / 2.0 + 1e-12,
                "hw={hw}"
            );
        }
    }

    #[test]
    fn refine_examples() {
        let full = refine_interval(0.0, 1.0, 0, 0.0);
        assert_eq!((full.low(), full.high()), (0.0, 1.0));

        let p = (5.0 * PI / 20.0).sin().powi(2);
        let point = refine_interval(p, p, 2, 0.0);
        assert!((point.low() - (PI / 20.0).sin()).abs() < 1e-15);
        assert_eq!(point.low(), point.high());

        // sin(π/18) − 0.1 and sin(π/9) − 0.1, at 40 digits.
        let ci = refine_interval(0.25, 0.75, 1, 0.1);
        assert!((ci.low() - 0.073_648_177_666_930_35).abs() < 1e-15);
        assert!((ci.high() - 0.242_020_143_325_668_74).abs() < 1e-15);
    }

    #[test]
    fn interval_accessors() {
        let ci = ConfidenceInterval::new(-0.3, 0.1).unwrap();
        assert!((ci.center() + 0.1).abs() < 1e-15);
        assert!((ci.half_width() - 0.2).abs() < 1e-15);
        assert!(ConfidenceInterval::new(0.2, 0.1).is_err());
        assert!(ConfidenceInterval::new(-1.1, 0.1).is_err());
        let c = ConfidenceInterval::clamped(2.9, 3.1);
        assert_eq!((c.low(), c.high()), (1.0, 1.0));
    }

    #[test]
    fn probability_bounds_clamp() {
        assert_eq!(probability_bounds(0.01, 0.05), (0.0, 0.060000000000000005));
        assert_eq!(probability_bounds(0.99, 0.05).1, 1.0);
    }
}
