use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rqae::estimator::ConfidenceInterval;
use rqae::theory::{
    amplitude_to_probability_interval, classical_cost, iqae_reference_curve, oracle_call_bound,
    quadratic_cost,
};

#[test]
fn oracle_bound_reference_values() {
    let fine = oracle_call_bound(2.0, 1e-3, 0.05).unwrap();
    let coarse = oracle_call_bound(2.0, 1e-2, 0.05).unwrap();
    assert!((fine - 179_026.598_078_680_72).abs() / fine < 1e-10);
    assert!((coarse - 18_243.755_375_634_744).abs() / coarse < 1e-10);
    assert!((8.0..=13.0).contains(&(fine / coarse)));
    assert!(fine < classical_cost(1e-3));
    assert!(
        oracle_call_bound(2.0, 1e-4, 0.05).unwrap() < oracle_call_bound(20.0, 1e-4, 0.05).unwrap()
    );
}

#[test]
fn iqae_reference_value() {
    let v = iqae_reference_curve(1e-3, 0.05).unwrap();
    assert!((v - 297_622.048_879_529_76).abs() / v < 1e-10);
}

#[test]
fn bound_sits_between_linear_and_quadratic_costs() {
    let grid = rqae::harness::log_spaced(1e-5, 5e-3, 25).unwrap();
    for eps in grid {
        let bound = oracle_call_bound(2.0, eps, 0.05).unwrap();
        assert!(quadratic_cost(eps) < bound, "eps = {eps}");
        assert!(bound < classical_cost(eps), "eps = {eps}");
    }
}

#[test]
fn bound_crosses_quadratic_cost_near_coarse_precision() {
    assert!(oracle_call_bound(2.0, 5.5e-3, 0.05).unwrap() < classical_cost(5.5e-3));
    assert!(oracle_call_bound(2.0, 5.7e-3, 0.05).unwrap() > classical_cost(5.7e-3));
    assert!(oracle_call_bound(2.0, 1e-2, 0.05).unwrap() > classical_cost(1e-2));
}

fn check_conversion(a: f64, low: f64, high: f64) {
    let ci = ConfidenceInterval::new(low, high).unwrap();
    let (p_low, p_high) = amplitude_to_probability_interval(&ci).unwrap();
    assert!(p_low <= a * a && a * a <= p_high, "a={a} [{low}, {high}]");
    assert!(p_high - p_low <= high - low, "a={a} [{low}, {high}]");
}

#[test]
fn probability_interval_soundness_randomized() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    for _ in 0..10_000 {
        let x: f64 = rng.random_range(-0.5..=0.5);
        let y: f64 = rng.random_range(-0.5..=0.5);
        let (low, high) = (x.min(y), x.max(y));
        let a = rng.random_range(low..=high);
        check_conversion(a, low, high);
    }
}

proptest! {
    #[test]
    fn probability_interval_soundness(
        x in -0.5f64..=0.5,
        y in -0.5f64..=0.5,
        t in 0.0f64..=1.0,
    ) {
        let (low, high) = (x.min(y), x.max(y));
        check_conversion(low + t * (high - low), low, high);
    }
}
