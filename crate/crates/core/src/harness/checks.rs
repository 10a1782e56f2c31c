//! Per-run verification of the deterministic guarantees.
//!
//! Containment of the true amplitude is probabilistic and is checked in
//! aggregate by the sweep, not here.

use serde::{Deserialize, Serialize};

use crate::estimator::RunResult;
use crate::schedule::Schedule;
use crate::theory;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub property: &'static str,
    pub detail: String,
}

fn violation(property: &'static str, detail: String) -> Violation {
    Violation { property, detail }
}

/// Returns every violated property; empty means the run is consistent.
pub fn verify_run(schedule: &Schedule, run: &RunResult) -> Vec<Violation> {
    let mut out = Vec::new();
    let q = schedule.q();
    let records = &run.iterations;

    if schedule.eps_p_i > schedule.eps_p {
        out.push(violation(
            "precision",
            format!(
                "eps_p_i = {} exceeds eps_p = {}",
                schedule.eps_p_i, schedule.eps_p
            ),
        ));
    }

    for pair in records.windows(2) {
        let (prev, next) = (&pair[0], &pair[1]);
        let ratio = (2 * next.k + 1) as f64 / (2 * prev.k + 1) as f64;
        if !next.k_was_capped && ratio < q {
            out.push(violation(
                "amplification-policy",
                format!(
                    "iterations {} -> {}: (2k+1) ratio {ratio} < q = {q} (k {} -> {})",
                    prev.index, next.index, prev.k, next.k
                ),
            ));
        }
    }

    if run.max_k() > schedule.k_max {
        out.push(violation(
            "depth",
            format!("max k = {} exceeds k_max = {}", run.max_k(), schedule.k_max),
        ));
    }

    let count = run.iteration_count();
    if !((count as f64) < schedule.iterations_bound) {
        out.push(violation(
            "iterations",
            format!("I = {count} is not below T = {}", schedule.iterations_bound),
        ));
    }

    match theory::oracle_call_bound(q, schedule.epsilon(), schedule.gamma()) {
        Ok(bound) if (run.n_oracle_grover as f64) < bound => {}
        Ok(bound) => out.push(violation(
            "oracle-budget",
            format!(
                "n_oracle_grover = {} reaches bound {bound}",
                run.n_oracle_grover
            ),
        )),
        Err(e) => out.push(violation("oracle-budget", e.to_string())),
    }

    let shots = schedule.shots;
    let expected_grover: u64 = records.iter().skip(1).map(|r| r.shots * r.k).sum();
    let expected_a: u64 = 2 * shots
        + records
            .iter()
            .skip(1)
            .map(|r| r.shots * (2 * r.k + 1))
            .sum::<u64>();
    if run.n_oracle_grover != expected_grover || run.n_oracle_a != expected_a {
        out.push(violation(
            "oracle-accounting",
            format!(
                "counted (grover {}, A {}), trace implies ({expected_grover}, {expected_a})",
                run.n_oracle_grover, run.n_oracle_a
            ),
        ));
    }
    let all_shots: u64 = records.iter().map(|r| r.shots).sum();
    if run.n_oracle_a > 2 * run.n_oracle_grover + all_shots + shots {
        out.push(violation(
            "oracle-accounting",
            format!(
                "n_oracle_a = {} exceeds 2 N_oracle + sum N_i + N_1",
                run.n_oracle_a
            ),
        ));
    }

    if run.converged && run.interval.half_width() > schedule.epsilon() {
        out.push(violation(
            "precision",
            format!(
                "converged with half-width {} > epsilon {}",
                run.interval.half_width(),
                schedule.epsilon()
            ),
        ));
    }
    out
}
