use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::backends::DEFAULT_QUBITS;
use crate::schedule::{derive_schedule, ScheduleInputs};
use crate::{Error, Result};

/// Amplitude used when none is configured.
pub const DEFAULT_AMPLITUDE: f64 = 0.2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AmplitudeSpec {
    Fixed(f64),
    /// Drawn per run, uniformly in `[lo, hi]`.
    Uniform(f64, f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BackendKind {
    Analytic,
    Circuit,
}

impl FromStr for BackendKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "analytic" => Ok(BackendKind::Analytic),
            "circuit" => Ok(BackendKind::Circuit),
            other => Err(Error::Config(format!("unknown backend `{other}`"))),
        }
    }
}

impl fmt::Display for BackendKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BackendKind::Analytic => "analytic",
            BackendKind::Circuit => "circuit",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub epsilon_grid: Vec<f64>,
    pub q_grid: Vec<f64>,
    pub gamma: f64,
    pub repetitions: usize,
    pub amplitude: AmplitudeSpec,
    pub backend: BackendKind,
    pub n_qubits: usize,
    pub seed: u64,
    pub output_dir: PathBuf,
    /// Keep full per-iteration traces in the JSON sidecar.
    pub trace: bool,
    /// Smallest ε the circuit backend accepts in a sweep.
    pub circuit_min_epsilon: f64,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            epsilon_grid: vec![1e-2, 3e-3, 1e-3, 3e-4, 1e-4],
            q_grid: vec![2.0, 10.0, 20.0],
            gamma: 0.05,
            repetitions: 100,
            amplitude: AmplitudeSpec::Fixed(DEFAULT_AMPLITUDE),
            backend: BackendKind::Analytic,
            n_qubits: DEFAULT_QUBITS,
            seed: 2022,
            output_dir: PathBuf::from("rqae-out"),
            trace: false,
            circuit_min_epsilon: 1e-3,
        }
    }
}

fn parse_f64(key: &str, value: &str) -> Result<f64> {
    value
        .trim()
        .parse()
        .map_err(|_| Error::Config(format!("`{key}`: cannot parse `{value}` as a number")))
}

fn parse_list(key: &str, value: &str) -> Result<Vec<f64>> {
    value
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_f64(key, s))
        .collect()
}

fn parse_int<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .trim()
        .parse()
        .map_err(|_| Error::Config(format!("`{key}`: cannot parse `{value}` as an integer")))
}

fn parse_bool(key: &str, value: &str) -> Result<bool> {
    match value.trim() {
        "true" | "1" | "yes" => Ok(true),
        "false" | "0" | "no" => Ok(false),
        other => Err(Error::Config(format!(
            "`{key}`: expected a boolean, got `{other}`"
        ))),
    }
}

impl ExperimentConfig {
    /// Sets one key; keys mirror the CLI flags (`epsilon`, `q`, `gamma`,
    /// `reps`, `amplitude`, `amplitude-range`, `backend`, `qubits`, `seed`,
    /// `out`, `trace`, `circuit-min-epsilon`).
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key
            .trim()
            .trim_start_matches("--")
            .replace('_', "-")
            .as_str()
        {
            "epsilon" => self.epsilon_grid = parse_list(key, value)?,
            "q" => self.q_grid = parse_list(key, value)?,
            "gamma" => self.gamma = parse_f64(key, value)?,
            "reps" | "repetitions" => self.repetitions = parse_int(key, value)?,
            "amplitude" => self.amplitude = AmplitudeSpec::Fixed(parse_f64(key, value)?),
            "amplitude-range" => match parse_list(key, value)?.as_slice() {
                [lo, hi] => self.amplitude = AmplitudeSpec::Uniform(*lo, *hi),
                _ => return Err(Error::Config("`amplitude-range` needs `lo,hi`".into())),
            },
            "backend" => self.backend = value.parse()?,
            "qubits" => self.n_qubits = parse_int(key, value)?,
            "seed" => self.seed = parse_int(key, value)?,
            "out" => self.output_dir = PathBuf::from(value.trim()),
            "trace" => self.trace = parse_bool(key, value)?,
            "circuit-min-epsilon" => self.circuit_min_epsilon = parse_f64(key, value)?,
            other => return Err(Error::Config(format!("unknown key `{other}`"))),
        }
        Ok(())
    }

    /// Applies a config document: a JSON object, or `key = value` lines with
    /// `#` comments.
    pub fn apply_str(&mut self, text: &str) -> Result<()> {
        if text.trim_start().starts_with('{') {
            let object: serde_json::Map<String, serde_json::Value> = serde_json::from_str(text)?;
            for (key, value) in object {
                self.set(&key, &json_scalar(&key, &value)?)?;
            }
            return Ok(());
        }
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .or_else(|| line.split_once(':'))
                .ok_or_else(|| Error::Config(format!("line {}: expected `key = value`", n + 1)))?;
            self.set(key, value)?;
        }
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(Error::io(path))?;
        let mut config = Self::default();
        config.apply_str(&text)?;
        Ok(config)
    }

    /// Target half-width the estimator runs at. The circuit backend works on
    /// `a/2`, so it needs `ε/2` to deliver `ε` after rescaling.
    pub fn effective_epsilon(&self, epsilon: f64) -> f64 {
        match self.backend {
            BackendKind::Analytic => epsilon,
            BackendKind::Circuit => epsilon / 2.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.epsilon_grid.is_empty() || self.q_grid.is_empty() {
            return Err(Error::Config(
                "epsilon and q grids must be non-empty".into(),
            ));
        }
        if self.repetitions == 0 {
            return Err(Error::Config("repetitions must be at least 1".into()));
        }
        for &q in &self.q_grid {
            for &epsilon in &self.epsilon_grid {
                ScheduleInputs::new(q, epsilon, self.gamma)?;
                derive_schedule(ScheduleInputs::new(
                    q,
                    self.effective_epsilon(epsilon),
                    self.gamma,
                )?)?;
                if self.backend == BackendKind::Circuit && epsilon < self.circuit_min_epsilon {
                    return Err(Error::Config(format!(
                        "circuit backend sweeps are limited to epsilon >= {} (got {epsilon})",
                        self.circuit_min_epsilon
                    )));
                }
            }
        }
        let (lo, hi) = match self.amplitude {
            AmplitudeSpec::Fixed(a) => (a, a),
            AmplitudeSpec::Uniform(lo, hi) => (lo, hi),
        };
        if !(-0.5 <= lo && lo <= hi && hi <= 0.5) {
            return Err(Error::Config(format!(
                "amplitudes must satisfy -0.5 <= lo <= hi <= 0.5 (got [{lo}, {hi}])"
            )));
        }
        if self.backend == BackendKind::Circuit
            && !(2..=crate::backends::MAX_QUBITS).contains(&self.n_qubits)
        {
            return Err(Error::QubitCount(self.n_qubits));
        }
        Ok(())
    }
}

fn json_scalar(key: &str, value: &serde_json::Value) -> Result<String> {
    use serde_json::Value;
    Ok(match value {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Array(items) => items
            .iter()
            .map(|v| json_scalar(key, v))
            .collect::<Result<Vec<_>>>()?
            .join(","),
        _ => return Err(Error::Config(format!("`{key}`: unsupported value {value}"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_value_and_json_agree() {
        let mut text = ExperimentConfig::default();
        text.apply_str(
            "# sweep\nepsilon = 0.01, 0.001\nq = 2\nreps: 3\namplitude-range = -0.45,0.45\nbackend = circuit\nseed = 9\n",
        )
        .unwrap();
        let mut json = ExperimentConfig::default();
        json.apply_str(
            r#"{"epsilon": [0.01, 0.001], "q": [2], "reps": 3, "amplitude-range": [-0.45, 0.45], "backend": "circuit", "seed": 9}"#,
        )
        .unwrap();
        assert_eq!(text, json);
        assert_eq!(text.epsilon_grid, vec![0.01, 0.001]);
        assert_eq!(text.amplitude, AmplitudeSpec::Uniform(-0.45, 0.45));
        assert_eq!(text.backend, BackendKind::Circuit);
        text.validate().unwrap();
    }

    #[test]
    fn rejects_bad_config() {
        let mut c = ExperimentConfig::default();
        assert!(c.set("nonsense", "1").is_err());
        assert!(c.set("reps", "x").is_err());
        c.repetitions = 0;
        assert!(c.validate().is_err());

        let c = ExperimentConfig {
            backend: BackendKind::Circuit,
            ..ExperimentConfig::default()
        };
        assert!(
            c.validate().is_err(),
            "circuit sweep below 1e-3 must be rejected"
        );

        let c = ExperimentConfig {
            amplitude: AmplitudeSpec::Fixed(0.7),
            ..ExperimentConfig::default()
        };
        assert!(c.validate().is_err());
    }
}
