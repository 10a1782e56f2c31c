//! Amplitudes of equal magnitude and opposite sign give different, correctly
//! signed estimates, even though `a²` is identical.

use rqae::backends::AnalyticBackend;
use rqae::estimator::Estimator;
use rqae::harness::run_stream;
use rqae::schedule::{derive_schedule, ScheduleInputs};

fn main() -> rqae::Result<()> {
    let schedule = derive_schedule(ScheduleInputs::new(2.0, 1e-2, 0.05)?)?;
    let reps = 200;
    for a in [0.3, 0.1, 0.02, -0.02, -0.1, -0.3] {
        let backend = AnalyticBackend::new(a)?;
        let mut right = 0;
        let mut mean = 0.0;
        for i in 0..reps {
            let r = Estimator::new(&schedule, &backend).run(&mut run_stream(1, i))?;
            right += usize::from(r.estimate.signum() == a.signum());
            mean += r.estimate / reps as f64;
        }
        println!("a = {a:>6}: mean estimate {mean:>9.5}, sign correct in {right}/{reps}");
    }
    Ok(())
}
