//! Closed-form guarantees of the static schedule.
//!
//! Depth ([`depth_bound`]) and iteration ([`iteration_bound`]) closed forms
//! live here and [`crate::schedule`] calls into them, so a run's schedule and
//! the plotted theoretical lines can never disagree.

use std::f64::consts::{E, FRAC_PI_4, PI};

use serde::{Deserialize, Serialize};

use crate::estimator::ConfidenceInterval;
use crate::{Error, Result};

pub(crate) fn check_policy(q: f64) -> Result<()> {
    if q.is_finite() && q > 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name: "q",
            value: q,
            reason: "amplification policy must satisfy q > 1",
        })
    }
}

pub(crate) fn check_epsilon(epsilon: f64) -> Result<()> {
    if epsilon > 0.0 && epsilon < 0.5 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name: "epsilon",
            value: epsilon,
            reason: "target half-width must lie in (0, 1/2)",
        })
    }
}

pub(crate) fn check_gamma(gamma: f64) -> Result<()> {
    if gamma > 0.0 && gamma < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name: "gamma",
            value: gamma,
            reason: "failure probability must lie in (0, 1)",
        })
    }
}

/// `π / (2(q+2))`, the angle every static parameter is built from.
pub fn base_angle(q: f64) -> f64 {
    PI / (2.0 * (q + 2.0))
}

/// Planned per-iteration probability half-width `½ sin²(π/(2(q+2)))`.
pub fn planned_probability_precision(q: f64) -> f64 {
    0.5 * base_angle(q).sin().powi(2)
}

/// First-iteration shift `½ sin(π/(2(q+2)))`.
pub fn first_shift(q: f64) -> f64 {
    0.5 * base_angle(q).sin()
}

/// `arcsin(√(2ε^p)) / arcsin(2ε)`, shared by the depth and iteration bounds.
fn precision_ratio(q: f64, epsilon: f64) -> f64 {
    (2.0 * planned_probability_precision(q)).sqrt().asin() / (2.0 * epsilon).asin()
}

/// Real-valued iteration bound `T = log_q(q² arcsin(√(2ε^p)) / arcsin(2ε))`.
///
/// Evaluated literally; [`crate::schedule::derive_schedule`] additionally
/// rejects `T ≤ 1`.
pub fn iteration_bound(q: f64, epsilon: f64) -> Result<f64> {
    check_policy(q)?;
    check_epsilon(epsilon)?;
    Ok((q * q * precision_ratio(q, epsilon)).ln() / q.ln())
}

/// Amplification cap `k_max = ⌈½ arcsin(√(2ε^p))/arcsin(2ε) − ½⌉`, floored at 0.
pub fn depth_bound(q: f64, epsilon: f64) -> Result<u64> {
    check_policy(q)?;
    check_epsilon(epsilon)?;
    let raw = (0.5 * precision_ratio(q, epsilon) - 0.5).ceil();
    Ok(if raw > 0.0 { raw as u64 } else { 0 })
}

/// Upper bound on the Grover-oracle call count `Σ N_i k_i` of a successful run.
pub fn oracle_call_bound(q: f64, epsilon: f64, gamma: f64) -> Result<f64> {
    check_policy(q)?;
    check_epsilon(epsilon)?;
    check_gamma(gamma)?;
    let reach = PI / (2.0 * (q + 2.0) * (2.0 * epsilon).asin());
    let log_q = (q * q * reach).ln() / q.ln();
    let shots_term = (2.0 * E.sqrt() * log_q / gamma).ln();
    Ok(shots_term / base_angle(q).sin().powi(4) * (reach + 2.0) * (1.0 + q / (q - 1.0)))
}

/// Reference IQAE cost curve `(50/ε) ln((2/γ) log₂(π/(4ε)))`, for plotting only.
pub fn iqae_reference_curve(epsilon: f64, gamma: f64) -> Result<f64> {
    if !(epsilon > 0.0 && epsilon < FRAC_PI_4) {
        return Err(Error::InvalidParameter {
            name: "epsilon",
            value: epsilon,
            reason: "reference curve needs 0 < epsilon < pi/4",
        });
    }
    check_gamma(gamma)?;
    Ok(50.0 / epsilon * (2.0 / gamma * (PI / (4.0 * epsilon)).log2()).ln())
}

/// Cost of unamplified sampling, `1/ε²`.
pub fn classical_cost(epsilon: f64) -> f64 {
    epsilon.powi(-2)
}

/// Cost at the ideal quadratic speedup, `1/ε`.
pub fn quadratic_cost(epsilon: f64) -> f64 {
    epsilon.recip()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub k_max: u64,
    pub iterations_bound: f64,
    pub n_oracle_bound: f64,
    pub classical_cost: f64,
    pub quadratic_cost: f64,
    pub iqae_reference: f64,
}

pub fn bound_report(q: f64, epsilon: f64, gamma: f64) -> Result<BoundReport> {
    Ok(BoundReport {
        k_max: depth_bound(q, epsilon)?,
        iterations_bound: iteration_bound(q, epsilon)?,
        n_oracle_bound: oracle_call_bound(q, epsilon, gamma)?,
        classical_cost: classical_cost(epsilon),
        quadratic_cost: quadratic_cost(epsilon),
        iqae_reference: iqae_reference_curve(epsilon, gamma)?,
    })
}

/// Converts an amplitude interval into an interval on `a²`.
///
/// Bounds must lie in `[-½, ½]`; that is what makes the probability interval
/// no wider than the amplitude interval.
pub fn amplitude_to_probability_interval(interval: &ConfidenceInterval) -> Result<(f64, f64)> {
    let (low, high) = (interval.low(), interval.high());
    for value in [low, high] {
        if value.abs() > 0.5 {
            return Err(Error::AmplitudeOutOfRange {
                value,
                min: -0.5,
                max: 0.5,
            });
        }
    }
    Ok(if low >= 0.0 {
        (low * low, high * high)
    } else if high <= 0.0 {
        (high * high, low * low)
    } else {
        let reach = low.abs().max(high.abs());
        (0.0, reach * reach)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn probability_interval_cases() {
        let cases = [
            ((0.1, 0.3), (0.01, 0.09)),
            ((-0.3, -0.1), (0.01, 0.09)),
            ((-0.1, 0.2), (0.0, 0.04)),
            ((-0.3, 0.2), (0.0, 0.09)),
        ];
        for ((lo, hi), (plo, phi)) in cases {
            let ci = ConfidenceInterval::new(lo, hi).unwrap();
            let (p0, p1) = amplitude_to_probability_interval(&ci).unwrap();
            assert!(
                (p0 - plo).abs() < 1e-15 && (p1 - phi).abs() < 1e-15,
                "{lo} {hi}"
            );
        }
    }

    #[test]
    fn probability_interval_rejects_wide_bounds() {
        let ci = ConfidenceInterval::new(-0.6, 0.1).unwrap();
        assert!(matches!(
            amplitude_to_probability_interval(&ci),
            Err(Error::AmplitudeOutOfRange { .. })
        ));
    }

    #[test]
    fn coarse_precision_needs_no_depth() {
        assert!(depth_bound(2.0, 0.25).unwrap() <= 1);
    }

    #[test]
    fn iteration_bound_shrinks_with_policy() {
        let t2 = iteration_bound(2.0, 1e-3).unwrap();
        let t20 = iteration_bound(20.0, 1e-3).unwrap();
        assert!(t20 < t2);
        let literal = (400.0 * (2.0 * planned_probability_precision(20.0)).sqrt().asin()
            / 0.002f64.asin())
        .ln()
            / 20f64.ln();
        assert!((t20 - literal).abs() < 1e-12);
    }

    #[test]
    fn iqae_curve_monotonicity() {
        let base = iqae_reference_curve(1e-3, 0.05).unwrap();
        let halved = iqae_reference_curve(5e-4, 0.05).unwrap();
        assert!(halved > 2.0 * base);
        assert!(iqae_reference_curve(1e-3, 0.01).unwrap() > base);
        assert!(iqae_reference_curve(FRAC_PI_4, 0.05).is_err());
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert!(oracle_call_bound(1.0, 1e-3, 0.05).is_err());
        assert!(oracle_call_bound(2.0, 0.5, 0.05).is_err());
        assert!(oracle_call_bound(2.0, 1e-3, 1.0).is_err());
        assert!(depth_bound(0.5, 1e-3).is_err());
    }
}
