//! Real quantum amplitude estimation.
//!
//! An iterative amplitude estimator that recovers the *sign* of a real
//! amplitude by measuring shifted copies of the oracle state, then narrows the
//! confidence interval with Grover amplification. The crate contains:
//!
//! - [`schedule`]: the static per-run parameters derived from `(q, ε, γ)`.
//! - [`estimator`]: the iterative loop and its per-iteration trace.
//! - [`backends`]: an exact binomial sampler and a dense statevector simulator
//!   that builds the shifted oracle and Grover operator gate by gate.
//! - [`theory`]: closed-form bounds (depth, iteration count, oracle calls) and
//!   the amplitude to probability interval conversion.
//! - [`harness`]: seeded experiment sweeps that check every run against the
//!   theoretical guarantees and write plot-ready data files.
//!
//! Runnable examples live in `examples/`: `single_run` (one traced run),
//! `sign_recovery`, `circuit_backend` (the statevector oracle),
//! `custom_backend` (implementing [`backends::OracleBackend`]),
//! `bounds_table`, `scaling_sweep` (oracle calls against precision) and
//! `plateau` (amplification and iteration count at `q = 20`).
//!
//! ```
//! use rand::SeedableRng;
//! use rqae::{backends::AnalyticBackend, estimator::Estimator, schedule::{derive_schedule, ScheduleInputs}};
//!
//! let schedule = derive_schedule(ScheduleInputs::new(2.0, 0.01, 0.05)?)?;
//! let backend = AnalyticBackend::new(-0.1)?;
//! let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
//! let result = Estimator::new(&schedule, &backend).run(&mut rng)?;
//! assert!(result.estimate < 0.0);
//! assert!(result.interval.half_width() <= 0.01);
//! # Ok::<(), rqae::Error>(())
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod backends;
pub mod error;
pub mod estimator;
pub mod harness;
pub mod schedule;
pub mod theory;

pub use error::{Error, Result};
