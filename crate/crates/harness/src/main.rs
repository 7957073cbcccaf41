use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use mscs_harness::{campaign, cases, config::ExperimentConfig, Algorithm, CaseName};

#[derive(Parser)]
#[command(
    name = "mscs",
    about = "Multi-species cuckoo search experiment harness",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Master seed; trial seeds derive from (seed, trial index)
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Output directory for CSV files
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// `key = value` config file overriding any flag
    #[arg(long)]
    config: Option<PathBuf>,
    /// Iteration cap (default 1000; the iris case defaults to 100)
    #[arg(long)]
    iters: Option<usize>,
    /// Evaluation budget per trial
    #[arg(long)]
    max_fe: Option<u64>,
    /// Discovery probability
    #[arg(long)]
    p_a: Option<f64>,
    /// Levy exponent
    #[arg(long)]
    lambda: Option<f64>,
    /// Levy step-size factor (fraction of domain width)
    #[arg(long)]
    alpha: Option<f64>,
    /// Local-walk scaling factor
    #[arg(long)]
    beta: Option<f64>,
    /// Baseline population size
    #[arg(long)]
    n_cs: Option<usize>,
    /// Per-species populations, comma separated (e.g. 20,20)
    #[arg(long)]
    n_i: Option<String>,
    /// Host nest count
    #[arg(long)]
    nests: Option<usize>,
    /// Eggs per nest
    #[arg(long)]
    eggs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Multi-trial benchmark campaign; writes results.csv and summary.csv
    Bench {
        /// Benchmark id: f1..f7, f11..f15
        #[arg(long)]
        function: String,
        #[arg(long, default_value_t = 10)]
        dim: usize,
        /// cs, mscs or both
        #[arg(long, default_value = "both")]
        algo: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Median convergence trace of both algorithms; writes trace.csv
    Trace {
        #[arg(long)]
        function: String,
        #[arg(long, default_value_t = 10)]
        dim: usize,
        /// Must remain `both`: the trace compares the two algorithms
        #[arg(long, default_value = "both")]
        algo: String,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// One case study over 20 seeded runs; writes case_<name>.csv
    Case {
        /// spring, vessel, reducer, vibration or iris
        #[arg(long)]
        name: String,
        /// Data file path (iris)
        #[arg(long)]
        data: Option<PathBuf>,
        #[command(flatten)]
        common: CommonOpts,
    },
}

fn apply_common(cfg: &mut ExperimentConfig, common: &CommonOpts) -> Result<(), mscs_harness::ConfigError> {
    cfg.master_seed = common.seed;
    cfg.out_dir = common.out.clone();
    cfg.t_max = common.iters;
    cfg.max_fe = common.max_fe;
    if let Some(v) = common.p_a {
        cfg.p_a = v;
    }
    if let Some(v) = common.lambda {
        cfg.lambda = v;
    }
    if let Some(v) = common.alpha {
        cfg.alpha = v;
    }
    if let Some(v) = common.beta {
        cfg.beta = v;
    }
    if let Some(v) = common.n_cs {
        cfg.cs_population = v;
    }
    if let Some(v) = &common.n_i {
        cfg.set("n_i", v)?;
    }
    if let Some(v) = common.nests {
        cfg.nests = v;
    }
    if let Some(v) = common.eggs {
        cfg.eggs_per_nest = v;
    }
    if let Some(path) = &common.config {
        cfg.apply_file(path)?;
    }
    Ok(())
}

fn run() -> Result<(), mscs_harness::ConfigError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Bench { function, dim, algo, trials, common } => {
            let mut cfg = ExperimentConfig::default();
            cfg.function = Some(function);
            cfg.dim = dim;
            cfg.algorithm = Algorithm::parse(&algo)?;
            cfg.trials = trials;
            apply_common(&mut cfg, &common)?;
            let out = campaign::run_campaign(&cfg)?;
            for row in &out.summary {
                println!(
                    "{} {}: best_e {} mean_e {} fe_mean {:.1}",
                    row.problem,
                    row.algo,
                    mscs_harness::format::sci4(row.best_e),
                    mscs_harness::format::sci4(row.mean_e),
                    row.fe_mean
                );
            }
            println!("wrote {}", cfg.out_dir.join("results.csv").display());
            println!("wrote {}", cfg.out_dir.join("summary.csv").display());
        }
        Command::Trace { function, dim, algo, trials, common } => {
            let mut cfg = ExperimentConfig::default();
            cfg.function = Some(function);
            cfg.dim = dim;
            cfg.algorithm = Algorithm::parse(&algo)?;
            cfg.trials = trials;
            apply_common(&mut cfg, &common)?;
            let out = campaign::emit_trace(&cfg)?;
            println!(
                "final medians after {} iterations: cs {} mscs {}",
                out.iterations,
                mscs_harness::format::sci4(*out.cs_median.last().unwrap()),
                mscs_harness::format::sci4(*out.mscs_median.last().unwrap())
            );
            println!("wrote {}", cfg.out_dir.join("trace.csv").display());
        }
        Command::Case { name, data, common } => {
            let mut cfg = ExperimentConfig::default();
            let case = CaseName::parse(&name)?;
            cfg.case = Some(case);
            cfg.data_path = data;
            apply_common(&mut cfg, &common)?;
            let case = cfg.case.expect("case set above");
            let report = cases::run_case(case, &cfg)?;
            print!("{}", cases::describe(&report));
            println!(
                "wrote {}",
                cfg.out_dir
                    .join(format!("case_{}.csv", case.as_str()))
                    .display()
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
