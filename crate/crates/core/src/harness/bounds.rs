use serde::{Deserialize, Serialize};

use crate::theory;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundsRow {
    pub epsilon: f64,
    pub k_max: u64,
    pub iterations_bound: f64,
    pub n_oracle_bound: f64,
    pub quadratic_cost: f64,
    pub classical_cost: f64,
    pub iqae_reference: f64,
}

/// `points` values from `lo` to `hi`, evenly spaced in log scale.
pub fn log_spaced(lo: f64, hi: f64, points: usize) -> Result<Vec<f64>> {
    if !(lo > 0.0 && hi >= lo) || points == 0 {
        return Err(Error::Config(format!(
            "log grid needs 0 < lo <= hi and points >= 1 (got {lo}, {hi}, {points})"
        )));
    }
    if points == 1 {
        return Ok(vec![lo]);
    }
    let (a, b) = (lo.ln(), hi.ln());
    Ok((0..points)
        .map(|i| match i {
            0 => lo,
            i if i == points - 1 => hi,
            i => (a + (b - a) * i as f64 / (points - 1) as f64).exp(),
        })
        .collect())
}

pub fn bounds_table(q: f64, epsilons: &[f64], gamma: f64) -> Result<Vec<BoundsRow>> {
    epsilons
        .iter()
        .map(|&epsilon| {
            let r = theory::bound_report(q, epsilon, gamma)?;
            Ok(BoundsRow {
                epsilon,
                k_max: r.k_max,
                iterations_bound: r.iterations_bound,
                n_oracle_bound: r.n_oracle_bound,
                quadratic_cost: r.quadratic_cost,
                classical_cost: r.classical_cost,
                iqae_reference: r.iqae_reference,
            })
        })
        .collect()
}
