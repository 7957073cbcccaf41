//! Experiment configuration and the `key = value` config-file layer.

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("config error: {0}")]
    Invalid(String),
    #[error("config file line {line}: {message}")]
    File { line: usize, message: String },
    #[error(transparent)]
    Core(#[from] mscs_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, ConfigError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Cs,
    Mscs,
    Both,
}

impl Algorithm {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "cs" => Ok(Algorithm::Cs),
            "mscs" => Ok(Algorithm::Mscs),
            "both" => Ok(Algorithm::Both),
            other => Err(ConfigError::Invalid(format!(
                "unknown algorithm `{other}` (expected cs, mscs or both)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseName {
    Spring,
    Vessel,
    Reducer,
    Vibration,
    Iris,
}

impl CaseName {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "spring" => Ok(CaseName::Spring),
            "vessel" => Ok(CaseName::Vessel),
            "reducer" => Ok(CaseName::Reducer),
            "vibration" => Ok(CaseName::Vibration),
            "iris" => Ok(CaseName::Iris),
            other => Err(ConfigError::Invalid(format!(
                "unknown case `{other}` (expected spring, vessel, reducer, vibration or iris)"
            ))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CaseName::Spring => "spring",
            CaseName::Vessel => "vessel",
            CaseName::Reducer => "reducer",
            CaseName::Vibration => "vibration",
            CaseName::Iris => "iris",
        }
    }
}

/// Full experiment description; built from CLI flags, then optionally
/// overridden by a config file.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub algorithm: Algorithm,
    /// Benchmark id (`f1` .. `f7`, `f11` .. `f15`) for bench/trace.
    pub function: Option<String>,
    pub dim: usize,
    pub case: Option<CaseName>,
    pub trials: usize,
    /// Iteration cap; `None` means the per-context default (1000, or 100
    /// for the iris case).
    pub t_max: Option<usize>,
    pub max_fe: Option<u64>,
    pub master_seed: u64,
    pub out_dir: PathBuf,
    /// Seed for the benchmark suite's shift/rotation transforms.
    pub suite_seed: u64,
    /// Path to the iris data file.
    pub data_path: Option<PathBuf>,
    // algorithm parameter overrides
    pub cs_population: usize,
    pub p_a: f64,
    pub lambda: f64,
    pub alpha: f64,
    pub beta: f64,
    pub species_sizes: Vec<usize>,
    pub nests: usize,
    pub eggs_per_nest: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            algorithm: Algorithm::Both,
            function: None,
            dim: 10,
            case: None,
            trials: 100,
            t_max: None,
            max_fe: None,
            master_seed: 42,
            out_dir: PathBuf::from("out"),
            suite_seed: mscs_core::benchmarks::DEFAULT_SUITE_SEED,
            data_path: None,
            cs_population: 80,
            p_a: 0.25,
            lambda: 1.5,
            alpha: 0.01,
            beta: 0.01,
            species_sizes: vec![20, 20],
            nests: 20,
            eggs_per_nest: 4,
        }
    }
}

impl ExperimentConfig {
    pub fn levy(&self) -> mscs_core::cs::LevyParams {
        mscs_core::cs::LevyParams {
            lambda: self.lambda,
            alpha: self.alpha,
            beta: self.beta,
        }
    }

    pub fn cs_params(&self, seed: u64, t_max: usize, max_fe: Option<u64>) -> mscs_core::cs::CsParams {
        mscs_core::cs::CsParams {
            population: self.cs_population,
            p_a: self.p_a,
            levy: self.levy(),
            t_max,
            max_fe,
            seed,
        }
    }

    pub fn mscs_params(&self, seed: u64, t_max: usize) -> mscs_core::mscs::MscsParams {
        mscs_core::mscs::MscsParams {
            n_i: self.species_sizes.clone(),
            r: 1,
            w: self.nests,
            q: self.eggs_per_nest,
            p_a: self.p_a,
            levy: self.levy(),
            t_max,
            max_fe: self.max_fe,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(ConfigError::Invalid("trials must be at least 1".into()));
        }
        if self.dim < 2 {
            return Err(ConfigError::Invalid("dim must be at least 2".into()));
        }
        Ok(())
    }

    /// Apply one `key = value` override.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let bad = |what: &str| ConfigError::Invalid(format!("bad value `{value}` for {what}"));
        match key {
            "algo" => self.algorithm = Algorithm::parse(value)?,
            "function" => self.function = Some(value.to_string()),
            "dim" => self.dim = value.parse().map_err(|_| bad("dim"))?,
            "case" => self.case = Some(CaseName::parse(value)?),
            "trials" => self.trials = value.parse().map_err(|_| bad("trials"))?,
            "iters" => self.t_max = Some(value.parse().map_err(|_| bad("iters"))?),
            "max_fe" => self.max_fe = Some(value.parse().map_err(|_| bad("max_fe"))?),
            "seed" => self.master_seed = value.parse().map_err(|_| bad("seed"))?,
            "out" => self.out_dir = PathBuf::from(value),
            "suite_seed" => self.suite_seed = value.parse().map_err(|_| bad("suite_seed"))?,
            "data" => self.data_path = Some(PathBuf::from(value)),
            "n_cs" => self.cs_population = value.parse().map_err(|_| bad("n_cs"))?,
            "p_a" => self.p_a = value.parse().map_err(|_| bad("p_a"))?,
            "lambda" => self.lambda = value.parse().map_err(|_| bad("lambda"))?,
            "alpha" => self.alpha = value.parse().map_err(|_| bad("alpha"))?,
            "beta" => self.beta = value.parse().map_err(|_| bad("beta"))?,
            "n_i" => {
                let sizes: std::result::Result<Vec<usize>, _> =
                    value.split(',').map(|v| v.trim().parse()).collect();
                self.species_sizes = sizes.map_err(|_| bad("n_i"))?;
            }
            "nests" => self.nests = value.parse().map_err(|_| bad("nests"))?,
            "eggs" => self.eggs_per_nest = value.parse().map_err(|_| bad("eggs"))?,
            other => {
                return Err(ConfigError::Invalid(format!("unknown config key `{other}`")));
            }
        }
        Ok(())
    }

    /// Apply a `key = value` config file on top of the current settings.
    /// Blank lines and `#` comments are skipped.
    pub fn apply_file(&mut self, path: &std::path::Path) -> Result<()> {
        let text = std::fs::read_to_string(path)?;
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or(ConfigError::File {
                line: idx + 1,
                message: "expected `key = value`".into(),
            })?;
            self.set(key.trim(), value.trim())
                .map_err(|e| ConfigError::File {
                    line: idx + 1,
                    message: e.to_string(),
                })?;
        }
        Ok(())
    }

    /// Iteration cap for bench/trace campaigns.
    pub fn bench_t_max(&self) -> usize {
        self.t_max.unwrap_or(1000)
    }

    /// Iteration cap for a case study (the iris protocol caps at 100).
    pub fn case_t_max(&self, case: CaseName) -> usize {
        self.t_max
            .unwrap_or(if case == CaseName::Iris { 100 } else { 1000 })
    }
}

/// Trial-level seed: the first draw of the child stream `(master, index)`.
pub fn trial_seed(master_seed: u64, stream_index: u64) -> u64 {
    mscs_core::rng::RngStream::derive(master_seed, stream_index).next_u64()
}
