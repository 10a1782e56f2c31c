//! Measurement oracles.
//!
//! A backend answers one question: measuring `A_b G^k |0⟩` `shots` times, how
//! often is the marked state observed? [`AnalyticBackend`] uses the closed-form
//! law `sin²((2k+1) arcsin(a+b))`; [`CircuitBackend`] builds the shifted
//! oracle and the Grover operator on a [`Statevector`] and reads the Born
//! probability off the simulated state. Both sample through [`sample_hits`],
//! so equal probabilities and equal random streams give equal hit counts.

mod analytic;
mod circuit;
mod statevector;

use rand::RngCore;

pub use analytic::{amplified_probability, analytic_measure, AnalyticBackend};
pub use circuit::{
    build_shifted_oracle, circuit_measure, CircuitBackend, GroverStep, ShiftedOracleCircuit,
    DEFAULT_QUBITS,
};
pub use statevector::{Control, Gate, GateKind, Statevector, MAX_QUBITS};

use crate::{Error, Result};

pub trait OracleBackend: Sync {
    /// The amplitude the estimator actually sees on the marked state.
    fn effective_amplitude(&self) -> f64;

    /// Factor mapping estimates in effective space back to the user's amplitude.
    fn amplitude_scale(&self) -> f64 {
        1.0
    }

    /// Exact probability of observing the marked state after shift `b` and `k`
    /// Grover applications.
    fn hit_probability(&self, shift: f64, k: u64) -> Result<f64>;

    fn measure(&self, shift: f64, k: u64, shots: u64, rng: &mut dyn RngCore) -> Result<u64> {
        if shots == 0 {
            return Err(Error::ZeroShots);
        }
        let p = self.hit_probability(shift, k)?;
        Ok(sample_hits(p, shots, rng))
    }
}

/// Counts how many of `shots` uniform draws fall below `p`.
///
/// Consumes exactly one `u64` per shot regardless of `p`, which keeps random
/// streams aligned across backends.
pub fn sample_hits(p: f64, shots: u64, rng: &mut dyn RngCore) -> u64 {
    const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
    let p = p.clamp(0.0, 1.0);
    (0..shots)
        .filter(|_| ((rng.next_u64() >> 11) as f64) * SCALE < p)
        .count() as u64
}
