use approx::assert_relative_eq;
use rqae::schedule::{derive_schedule, ScheduleInputs};
use rqae::theory;

struct Golden {
    q: f64,
    eps_p: f64,
    iterations_bound: f64,
    gamma_i: f64,
    shots: u64,
    eps_p_i: f64,
    first_shift: f64,
    k_max: u64,
}

const GOLDEN: [Golden; 3] = [
    Golden {
        q: 2.0,
        eps_p: 0.073_223_304_703_363_12,
        iterations_bound: 9.617_279_452_336_302,
        gamma_i: 0.005_198_975_474_072_725,
        shots: 556,
        eps_p_i: 0.073_163_614_305_598_44,
        first_shift: 0.191_341_716_182_544_9,
        k_max: 98,
    },
    Golden {
        q: 10.0,
        eps_p: 0.008_518_543_427_732_929,
        iterations_bound: 3.815_908_345_788_467_5,
        gamma_i: 0.013_103_040_080_924_343,
        shots: 34_645,
        eps_p_i: 0.008_518_534_112_361_743,
        first_shift: 0.065_263_096_110_025_8,
        k_max: 33,
    },
    Golden {
        q: 20.0,
        eps_p: 0.002_544_639_529_766_817,
        iterations_bound: 3.193_413_615_511_21,
        gamma_i: 0.015_657_226_410_364_593,
        shots: 374_505,
        eps_p_i: 0.002_544_636_272_552_213_3,
        first_shift: 0.035_669_591_599_616_17,
        k_max: 18,
    },
];

#[test]
fn matches_high_precision_table() {
    for g in &GOLDEN {
        let s = derive_schedule(ScheduleInputs::new(g.q, 1e-3, 0.05).unwrap()).unwrap();
        assert_relative_eq!(s.eps_p, g.eps_p, max_relative = 1e-12);
        assert_relative_eq!(s.iterations_bound, g.iterations_bound, max_relative = 1e-12);
        assert_relative_eq!(s.gamma_i, g.gamma_i, max_relative = 1e-12);
        assert_relative_eq!(s.eps_p_i, g.eps_p_i, max_relative = 1e-12);
        assert_relative_eq!(s.first_shift, g.first_shift, max_relative = 1e-12);
        assert_eq!(s.shots, g.shots, "q = {}", g.q);
        assert_eq!(s.k_max, g.k_max, "q = {}", g.q);
    }
}

#[test]
fn schedule_and_theory_agree() {
    for q in [2.0, 3.5, 10.0, 20.0] {
        for eps in [1e-5, 1e-4, 1e-3, 1e-2, 0.1] {
            let s = derive_schedule(ScheduleInputs::new(q, eps, 0.05).unwrap()).unwrap();
            assert_eq!(s.k_max, theory::depth_bound(q, eps).unwrap());
            assert_eq!(s.iterations_bound, theory::iteration_bound(q, eps).unwrap());
            assert!(s.eps_p_i <= s.eps_p);
        }
    }
}

#[test]
fn depth_stays_near_its_continuous_value() {
    for q in [2.0, 10.0, 20.0] {
        let reach = (2.0 * theory::planned_probability_precision(q))
            .sqrt()
            .asin();
        for eps in [1e-5, 3e-5, 1e-4, 1e-3, 1e-2, 3e-2] {
            let s = derive_schedule(ScheduleInputs::new(q, eps, 0.05).unwrap()).unwrap();
            let step = (2.0 * eps).asin();
            let scaled = s.k_max as f64 * step;
            assert!(scaled >= 0.5 * reach - step - 1e-15, "q={q} eps={eps}");
            assert!(scaled <= 0.5 * reach + step + 1e-15, "q={q} eps={eps}");
        }
    }
}
