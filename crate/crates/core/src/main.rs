use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rqae::harness::{
    bounds_table, cell_schedule, emit_dat, execute_run, log_spaced, make_backend, render_bounds,
    run_stream, run_sweep, write_bounds, AmplitudeSpec, ExperimentConfig,
};
use rqae::Error;

#[derive(Parser)]
#[command(
    name = "rqae",
    version,
    about = "Sign-sensitive quantum amplitude estimation experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Seeded sweep over an (epsilon, q) grid; writes .dat tables and sweep.json.
    Run(ExperimentArgs),
    /// Closed-form bound tables over a log-spaced epsilon grid.
    Bounds(BoundsArgs),
    /// One traced run.
    Single(ExperimentArgs),
}

#[derive(Args)]
struct ExperimentArgs {
    /// Config file (JSON object or `key = value` lines); flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Comma-separated target half-widths.
    #[arg(long)]
    epsilon: Option<String>,
    /// Comma-separated amplification policies.
    #[arg(long)]
    q: Option<String>,
    #[arg(long)]
    gamma: Option<String>,
    #[arg(long)]
    reps: Option<String>,
    #[arg(long, conflicts_with = "amplitude_range", allow_hyphen_values = true)]
    amplitude: Option<String>,
    /// `lo,hi`: draw the amplitude uniformly per run.
    #[arg(long, allow_hyphen_values = true)]
    amplitude_range: Option<String>,
    /// analytic | circuit
    #[arg(long)]
    backend: Option<String>,
    #[arg(long)]
    qubits: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    #[arg(long)]
    out: Option<String>,
    /// Keep per-iteration traces (sweep.json for `run`, stdout JSON for `single`).
    #[arg(long)]
    trace: bool,
}

impl ExperimentArgs {
    fn into_config(self) -> rqae::Result<ExperimentConfig> {
        let mut config = match &self.config {
            Some(path) => ExperimentConfig::load(path)?,
            None => ExperimentConfig::default(),
        };
        let flags = [
            ("epsilon", self.epsilon),
            ("q", self.q),
            ("gamma", self.gamma),
            ("reps", self.reps),
            ("amplitude", self.amplitude),
            ("amplitude-range", self.amplitude_range),
            ("backend", self.backend),
            ("qubits", self.qubits),
            ("seed", self.seed),
            ("out", self.out),
        ];
        for (key, value) in flags {
            if let Some(value) = value {
                config.set(key, &value)?;
            }
        }
        config.trace |= self.trace;
        Ok(config)
    }
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long, default_value = "2")]
    q: String,
    /// Explicit comma-separated epsilon values (overrides the range).
    #[arg(long)]
    epsilon: Option<String>,
    #[arg(long, default_value = "1e-5,1e-2")]
    epsilon_range: String,
    #[arg(long, default_value_t = 31)]
    points: usize,
    #[arg(long, default_value_t = 0.05)]
    gamma: f64,
    /// Directory for `bounds_q<q>.dat`; printed to stdout otherwise.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn floats(text: &str) -> rqae::Result<Vec<f64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Error::Config(format!("not a number: `{s}`")))
        })
        .collect()
}

fn run(args: ExperimentArgs) -> rqae::Result<()> {
    let config = args.into_config()?;
    let sweep = run_sweep(&config)?;
    for path in emit_dat(&sweep, &config.output_dir)? {
        println!("wrote {}", path.display());
    }
    println!("q epsilon mean_n_oracle max_n_oracle bound mean_I mean_k_last failures");
    for c in &sweep.summary.cells {
        println!(
            "{} {} {} {} {:.1} {} {} {}",
            c.q,
            c.epsilon,
            c.n_oracle_grover.mean,
            c.n_oracle_grover.max,
            c.bounds.n_oracle_bound,
            c.iterations.mean,
            c.k_last.mean,
            c.failure_count
        );
    }
    Ok(())
}

fn single(args: ExperimentArgs) -> rqae::Result<()> {
    let config = args.into_config()?;
    let (&q, &epsilon) = match (config.q_grid.as_slice(), config.epsilon_grid.as_slice()) {
        ([q], [e]) => (q, e),
        _ => {
            return Err(Error::Config(
                "`single` takes exactly one --q and one --epsilon".into(),
            ))
        }
    };
    let amplitude = match config.amplitude {
        AmplitudeSpec::Fixed(a) => a,
        AmplitudeSpec::Uniform(..) => {
            return Err(Error::Config("`single` needs a fixed --amplitude".into()))
        }
    };
    let config = ExperimentConfig {
        repetitions: 1,
        epsilon_grid: vec![epsilon],
        q_grid: vec![q],
        ..config
    };
    config.validate()?;
    let schedule = cell_schedule(&config, q, epsilon)?;
    let backend = make_backend(config.backend, amplitude, config.n_qubits)?;
    let result = execute_run(&schedule, backend.as_ref(), &mut run_stream(config.seed, 0))?;
    let scale = backend.amplitude_scale();
    if config.trace {
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({
                "schedule": schedule,
                "amplitude_scale": scale,
                "result": result,
            }))?
        );
    }
    println!("backend     {}", config.backend);
    println!("amplitude   {amplitude}");
    println!("estimate    {}", scale * result.estimate);
    println!(
        "interval    [{}, {}]",
        scale * result.interval.low(),
        scale * result.interval.high()
    );
    println!(
        "iterations  {} (T = {})",
        result.iteration_count(),
        schedule.iterations_bound
    );
    println!(
        "k per step  {:?} (k_max = {})",
        result.iterations.iter().map(|r| r.k).collect::<Vec<_>>(),
        schedule.k_max
    );
    println!(
        "n_oracle    {} (A calls {})",
        result.n_oracle_grover, result.n_oracle_a
    );
    Ok(())
}

fn bounds(args: BoundsArgs) -> rqae::Result<()> {
    let grid = match &args.epsilon {
        Some(list) => floats(list)?,
        None => match floats(&args.epsilon_range)?.as_slice() {
            [lo, hi] => log_spaced(*lo, *hi, args.points)?,
            _ => return Err(Error::Config("--epsilon-range needs `lo,hi`".into())),
        },
    };
    for q in floats(&args.q)? {
        let rows = bounds_table(q, &grid, args.gamma)?;
        match &args.out {
            Some(dir) => println!("wrote {}", write_bounds(&rows, q, dir)?.display()),
            None => print!("# q = {q}\n{}", render_bounds(&rows)),
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let outcome = match Cli::parse().command {
        Command::Run(args) => run(args),
        Command::Bounds(args) => bounds(args),
        Command::Single(args) => single(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ Error::PropertyViolation { .. }) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
