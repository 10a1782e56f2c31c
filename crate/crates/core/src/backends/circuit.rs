use std::f64::consts::PI;

use num_complex::Complex64;
use rand::RngCore;

use super::statevector::{Gate, GateKind, Statevector, MAX_QUBITS};
use super::{sample_hits, OracleBackend};
use crate::{Error, Result};

pub const DEFAULT_QUBITS: usize = 5;

const AUX: usize = 0;
const DATA: usize = 1;
/// The marked state `|0)|0…0⟩`.
const MARKED: usize = 0;

/// One primitive of `G = −A_b R_{|0⟩} A_b† R_{|φ⟩}`, in application order.
#[derive(Debug, Clone, PartialEq)]
pub enum GroverStep {
    /// `1 − 2|i⟩⟨i|` on a basis state.
    Reflect(usize),
    Gate(Gate),
    /// The overall `−1`.
    GlobalPhase,
}

/// Shifted oracle `A_b` on an auxiliary qubit plus an `(n−1)`-qubit system.
///
/// The base oracle `G` puts amplitude `a` on the system's `|0…0⟩`: an `R_y` on
/// the first system qubit, then rotations on the remaining qubits conditioned
/// on it, so the orthogonal part spreads over the whole register. `A_b` is
/// `H`, controlled-`G`, anti-controlled rotation with `cos θ_b = 2b`, `H`, which
/// leaves `(a + cos θ_b)/2 = a/2 + b` on the marked state.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftedOracleCircuit {
    n_qubits: usize,
    base_amplitude: f64,
    shift: f64,
    theta_b: f64,
    gates: Vec<Gate>,
}

pub fn build_shifted_oracle(base_amplitude: f64, shift: f64) -> Result<ShiftedOracleCircuit> {
    ShiftedOracleCircuit::new(base_amplitude, shift, DEFAULT_QUBITS)
}

fn base_oracle(base_amplitude: f64, n_qubits: usize) -> Vec<Gate> {
    let mut gates = vec![Gate::new(GateKind::Ry(2.0 * base_amplitude.acos()), DATA)];
    gates.extend((DATA + 1..n_qubits).map(|q| {
        Gate::new(GateKind::Ry(PI * q as f64 / (n_qubits as f64 + 1.0)), q).controlled(DATA, true)
    }));
    gates
}

impl ShiftedOracleCircuit {
    pub fn new(base_amplitude: f64, shift: f64, n_qubits: usize) -> Result<Self> {
        if !(2..=MAX_QUBITS).contains(&n_qubits) {
            return Err(Error::QubitCount(n_qubits));
        }
        if !(base_amplitude.abs() <= 1.0) {
            return Err(Error::AmplitudeOutOfRange {
                value: base_amplitude,
                min: -1.0,
                max: 1.0,
            });
        }
        if !(shift.abs() <= 0.5) {
            return Err(Error::ShiftOutOfRange { shift });
        }
        let theta_b = (2.0 * shift).acos();
        let mut gates = vec![Gate::new(GateKind::Hadamard, AUX)];
        gates.extend(
            base_oracle(base_amplitude, n_qubits)
                .into_iter()
                .map(|g| g.controlled(AUX, true)),
        );
        // R_y(2θ) maps |0⟩ to cos θ|0⟩ + sin θ|1⟩.
        gates.push(Gate::new(GateKind::Ry(2.0 * theta_b), DATA).controlled(AUX, false));
        gates.push(Gate::new(GateKind::Hadamard, AUX));
        Ok(Self {
            n_qubits,
            base_amplitude,
            shift,
            theta_b,
            gates,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn base_amplitude(&self) -> f64 {
        self.base_amplitude
    }

    pub fn shift(&self) -> f64 {
        self.shift
    }

    pub fn theta_b(&self) -> f64 {
        self.theta_b
    }

    /// Gate sequence of `A_b`.
    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn marked_index(&self) -> usize {
        MARKED
    }

    /// `A_b|0⟩`.
    pub fn prepare(&self) -> Statevector {
        let mut sv = Statevector::zero(self.n_qubits).expect("qubit count validated");
        self.gates.iter().for_each(|g| sv.apply(g));
        sv
    }

    /// One Grover operator as primitive steps.
    pub fn grover_steps(&self) -> Vec<GroverStep> {
        let mut steps = vec![GroverStep::Reflect(MARKED)];
        steps.extend(
            self.gates
                .iter()
                .rev()
                .map(|g| GroverStep::Gate(g.inverse())),
        );
        steps.push(GroverStep::Reflect(0));
        steps.extend(self.gates.iter().cloned().map(GroverStep::Gate));
        steps.push(GroverStep::GlobalPhase);
        steps
    }

    pub fn apply_step(step: &GroverStep, state: &mut Statevector) {
        match step {
            GroverStep::Reflect(i) => state.reflect_basis(*i),
            GroverStep::Gate(g) => state.apply(g),
            GroverStep::GlobalPhase => state.scale(Complex64::new(-1.0, 0.0)),
        }
    }

    /// `G^k` applied to `state`.
    pub fn apply_grover(&self, mut state: Statevector, k: u64) -> Result<Statevector> {
        if state.n_qubits() != self.n_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.n_qubits,
                actual: state.n_qubits(),
            });
        }
        let steps = self.grover_steps();
        for _ in 0..k {
            steps.iter().for_each(|s| Self::apply_step(s, &mut state));
        }
        Ok(state)
    }

    pub fn marked_probability(&self, k: u64) -> f64 {
        self.apply_grover(self.prepare(), k)
            .expect("state built from this circuit")
            .probability(MARKED)
    }
}

/// Statevector oracle for base amplitude `a`; the estimator sees `a/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircuitBackend {
    base_amplitude: f64,
    n_qubits: usize,
}

impl CircuitBackend {
    pub fn new(base_amplitude: f64, n_qubits: usize) -> Result<Self> {
        ShiftedOracleCircuit::new(base_amplitude, 0.0, n_qubits)?;
        Ok(Self {
            base_amplitude,
            n_qubits,
        })
    }

    pub fn circuit(&self, shift: f64) -> Result<ShiftedOracleCircuit> {
        ShiftedOracleCircuit::new(self.base_amplitude, shift, self.n_qubits)
    }
}

impl OracleBackend for CircuitBackend {
    fn effective_amplitude(&self) -> f64 {
        self.base_amplitude / 2.0
    }

    fn amplitude_scale(&self) -> f64 {
        2.0
    }

    fn hit_probability(&self, shift: f64, k: u64) -> Result<f64> {
        Ok(self.circuit(shift)?.marked_probability(k))
    }
}

pub fn circuit_measure(
    base_amplitude: f64,
    shift: f64,
    k: u64,
    shots: u64,
    rng: &mut dyn RngCore,
) -> Result<u64> {
    if shots == 0 {
        return Err(Error::ZeroShots);
    }
    let p = build_shifted_oracle(base_amplitude, shift)?.marked_probability(k);
    Ok(sample_hits(p, shots, rng))
}
