//! The statevector oracle: build the shifted state, inspect both auxiliary
//! branches, amplify, and then run the full estimator on the simulated circuit.

use rqae::backends::{amplified_probability, build_shifted_oracle, CircuitBackend, OracleBackend};
use rqae::estimator::Estimator;
use rqae::harness::run_stream;
use rqae::schedule::{derive_schedule, ScheduleInputs};

fn main() -> rqae::Result<()> {
    let (a, b) = (0.6, 0.25);
    let circuit = build_shifted_oracle(a, b)?;
    let state = circuit.prepare();
    println!(
        "{} qubits, theta_b = {:.6}, {} gates in A_b",
        circuit.n_qubits(),
        circuit.theta_b(),
        circuit.gates().len()
    );
    println!("amplitude on |0)|0>: {:.6}", state.amplitude(0).re);
    println!("amplitude on |1)|0>: {:.6}", state.amplitude(1).re);

    for k in 0..4 {
        println!(
            "k = {k}: circuit p = {:.12}, closed form = {:.12}",
            circuit.marked_probability(k),
            amplified_probability(a / 2.0 + b, k)
        );
    }

    let base = -0.34;
    let backend = CircuitBackend::new(base, 5)?;
    let schedule = derive_schedule(ScheduleInputs::new(2.0, 2.5e-3, 0.05)?)?;
    let result = Estimator::new(&schedule, &backend).run(&mut run_stream(8, 0))?;
    let scale = backend.amplitude_scale();
    println!(
        "estimate of a = {base}: {:.5} in [{:.5}, {:.5}] after {} iterations",
        scale * result.estimate,
        scale * result.interval.low(),
        scale * result.interval.high(),
        result.iteration_count()
    );
    Ok(())
}
