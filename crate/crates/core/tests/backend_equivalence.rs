use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rqae::backends::{
    amplified_probability, analytic_measure, build_shifted_oracle, circuit_measure,
    AnalyticBackend, CircuitBackend, OracleBackend, ShiftedOracleCircuit,
};

fn grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step).round() as usize;
    (0..=n).map(|i| lo + step * i as f64).collect()
}

#[test]
fn circuit_matches_closed_form_on_grid() {
    let mut checked = 0;
    for a in grid(-0.4, 0.4, 0.1) {
        for b in grid(-0.4, 0.4, 0.1) {
            let circuit = build_shifted_oracle(a, b).unwrap();
            for k in 0..=5u64 {
                let x = a / 2.0 + b;
                if x.abs() > (PI / (2.0 * (2 * k + 1) as f64)).sin() {
                    continue;
                }
                let p = circuit.marked_probability(k);
                assert!(
                    (p - amplified_probability(x, k)).abs() < 1e-10,
                    "a={a} b={b} k={k}: {p}"
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 200);
}

#[test]
fn norm_preserved_after_every_step() {
    for (a, b) in [(0.4, 0.1), (-0.3, 0.2), (0.0, -0.4), (0.25, 0.0)] {
        for n in [2, 5, 7] {
            let circuit = ShiftedOracleCircuit::new(a, b, n).unwrap();
            let mut state = rqae::backends::Statevector::zero(n).unwrap();
            for gate in circuit.gates() {
                state.apply(gate);
                assert!((state.norm_sqr() - 1.0).abs() < 1e-12);
            }
            let steps = circuit.grover_steps();
            for _ in 0..4 {
                for step in &steps {
                    ShiftedOracleCircuit::apply_step(step, &mut state);
                    assert!((state.norm_sqr() - 1.0).abs() < 1e-12);
                }
            }
        }
    }
}

#[test]
fn one_grover_step_triples_the_angle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let theta: f64 = rng.random_range(1e-6..PI / 6.0);
        let circuit = build_shifted_oracle(0.0, theta.sin()).unwrap();
        let p = circuit.marked_probability(1);
        assert!(
            (p - (3.0 * theta).sin().powi(2)).abs() < 1e-10,
            "theta={theta}"
        );
    }
}

#[test]
fn grover_reaches_quadrant_boundary() {
    let p = build_shifted_oracle(0.0, 0.5)
        .unwrap()
        .marked_probability(1);
    assert!((p - 1.0).abs() < 1e-10);
    let p = build_shifted_oracle(0.4, 0.0)
        .unwrap()
        .marked_probability(3);
    assert!((p - 0.974_210_059_632_64).abs() < 1e-10);
}

#[test]
fn auxiliary_branches_carry_opposite_sign() {
    for a in [-0.8, -0.3, 0.0, 0.45, 0.9] {
        let b = 0.2;
        let circuit = build_shifted_oracle(a, b).unwrap();
        let state = circuit.prepare();
        let marked = state.amplitude(circuit.marked_index());
        let flipped = state.amplitude(circuit.marked_index() | 1);
        assert!((marked.re - (a / 2.0 + b)).abs() < 1e-12);
        assert!((flipped.re - (-a / 2.0 + b)).abs() < 1e-12);
        assert!(marked.im.abs() < 1e-15 && flipped.im.abs() < 1e-15);
    }
}

#[test]
fn backends_draw_identical_hits() {
    let shots = 100_000;
    let circuit = circuit_measure(0.4, 0.1, 2, shots, &mut ChaCha8Rng::seed_from_u64(5)).unwrap();
    let analytic = analytic_measure(0.2, 0.1, 2, shots, &mut ChaCha8Rng::seed_from_u64(5)).unwrap();
    assert_eq!(circuit, analytic);

    let c = CircuitBackend::new(-0.3, 5).unwrap();
    let a = AnalyticBackend::new(-0.15).unwrap();
    assert_eq!(c.effective_amplitude(), a.effective_amplitude());
    for k in 0..4 {
        let hc = c
            .measure(0.2, k, 5000, &mut ChaCha8Rng::seed_from_u64(k))
            .unwrap();
        let ha = a
            .measure(0.2, k, 5000, &mut ChaCha8Rng::seed_from_u64(k))
            .unwrap();
        assert_eq!(hc, ha);
    }
}

#[test]
fn zero_shots_rejected() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    assert!(circuit_measure(0.2, 0.0, 0, 0, &mut rng).is_err());
    assert!(analytic_measure(0.2, 0.0, 0, 0, &mut rng).is_err());
}
