use rand::RngCore;

use super::OracleBackend;
use crate::{Error, Result};

/// `sin²((2k+1) arcsin(x))`.
pub fn amplified_probability(shifted_amplitude: f64, k: u64) -> f64 {
    ((2 * k + 1) as f64 * shifted_amplitude.asin())
        .sin()
        .powi(2)
}

fn check_shifted(shifted: f64) -> Result<()> {
    if shifted.abs() <= 1.0 {
        Ok(())
    } else {
        Err(Error::AmplitudeOutOfRange {
            value: shifted,
            min: -1.0,
            max: 1.0,
        })
    }
}

pub fn analytic_measure(
    amplitude: f64,
    shift: f64,
    k: u64,
    shots: u64,
    rng: &mut dyn RngCore,
) -> Result<u64> {
    AnalyticBackend::new(amplitude)?.measure(shift, k, shots, rng)
}

/// Exact binomial sampler for a hidden amplitude in `[-½, ½]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyticBackend {
    amplitude: f64,
}

impl AnalyticBackend {
    pub fn new(amplitude: f64) -> Result<Self> {
        if amplitude.abs() > 0.5 || amplitude.is_nan() {
            return Err(Error::AmplitudeOutOfRange {
                value: amplitude,
                min: -0.5,
                max: 0.5,
            });
        }
        Ok(Self { amplitude })
    }
}

impl OracleBackend for AnalyticBackend {
    fn effective_amplitude(&self) -> f64 {
        self.amplitude
    }

    fn hit_probability(&self, shift: f64, k: u64) -> Result<f64> {
        let shifted = self.amplitude + shift;
        check_shifted(shifted)?;
        Ok(amplified_probability(shifted, k))
    }
}
