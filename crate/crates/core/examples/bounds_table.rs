//! Theoretical curves: oracle-call bound against `1/ε` and `1/ε²`, plus depth
//! and iteration bounds, for several amplification policies.

use rqae::harness::{bounds_table, log_spaced};

fn main() -> rqae::Result<()> {
    let grid = log_spaced(1e-5, 1e-2, 7)?;
    for q in [2.0, 10.0, 20.0] {
        println!("q = {q}");
        println!("    epsilon  k_max      T       bound        1/eps      1/eps^2       IQAE");
        for row in bounds_table(q, &grid, 0.05)? {
            println!(
                "{:>11.3e} {:>6} {:>6.3} {:>11.4e} {:>11.4e} {:>11.4e} {:>11.4e}",
                row.epsilon,
                row.k_max,
                row.iterations_bound,
                row.n_oracle_bound,
                row.quadratic_cost,
                row.classical_cost,
                row.iqae_reference
            );
        }
    }
    Ok(())
}
