use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub const MAX_QUBITS: usize = 20;

/// Dense `2^n` amplitude vector. Qubit `j` is bit `j` of the basis index.
#[derive(Debug, Clone, PartialEq)]
pub struct Statevector {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl Statevector {
    /// `|0…0⟩` on `n_qubits` qubits.
    pub fn zero(n_qubits: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::QubitCount(n_qubits));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amplitudes[0] = Complex64::new(1.0, 0.0);
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    pub fn probability(&self, index: usize) -> f64 {
        self.amplitudes[index].norm_sqr()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(Complex64::norm_sqr).sum()
    }

    /// `1 − 2|i⟩⟨i|`.
    pub fn reflect_basis(&mut self, index: usize) {
        self.amplitudes[index] = -self.amplitudes[index];
    }

    pub fn scale(&mut self, factor: Complex64) {
        self.amplitudes.iter_mut().for_each(|a| *a *= factor);
    }

    pub fn apply(&mut self, gate: &Gate) {
        let m = gate.kind.matrix();
        let bit = 1usize << gate.target;
        let (mask, want) = gate.controls.iter().fold((0usize, 0usize), |(m, w), c| {
            let b = 1usize << c.qubit;
            (m | b, if c.on { w | b } else { w })
        });
        for i in (0..self.amplitudes.len()).filter(|i| i & bit == 0 && i & mask == want) {
            let j = i | bit;
            let (x, y) = (self.amplitudes[i], self.amplitudes[j]);
            self.amplitudes[i] = m[0][0] * x + m[0][1] * y;
            self.amplitudes[j] = m[1][0] * x + m[1][1] * y;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Control {
    pub qubit: usize,
    /// `true` fires on `|1⟩`, `false` on `|0⟩` (anti-control).
    pub on: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum GateKind {
    Hadamard,
    /// `exp(−iθY/2)`: `|0⟩ ↦ cos(θ/2)|0⟩ + sin(θ/2)|1⟩`.
    Ry(f64),
}

impl GateKind {
    fn matrix(self) -> [[Complex64; 2]; 2] {
        let r = |x: f64| Complex64::new(x, 0.0);
        match self {
            GateKind::Hadamard => {
                let h = std::f64::consts::FRAC_1_SQRT_2;
                [[r(h), r(h)], [r(h), r(-h)]]
            }
            GateKind::Ry(theta) => {
                let (s, c) = (theta / 2.0).sin_cos();
                [[r(c), r(-s)], [r(s), r(c)]]
            }
        }
    }

    fn inverse(self) -> Self {
        match self {
            GateKind::Hadamard => GateKind::Hadamard,
            GateKind::Ry(theta) => GateKind::Ry(-theta),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Gate {
    pub kind: GateKind,
    pub target: usize,
    pub controls: Vec<Control>,
}

impl Gate {
    pub fn new(kind: GateKind, target: usize) -> Self {
        Self {
            kind,
            target,
            controls: Vec::new(),
        }
    }

    pub fn controlled(mut self, qubit: usize, on: bool) -> Self {
        self.controls.push(Control { qubit, on });
        self
    }

    pub fn inverse(&self) -> Self {
        Self {
            kind: self.kind.inverse(),
            ..self.clone()
        }
    }
}
