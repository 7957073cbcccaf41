//! Case-study runner: 20 independent MSCS runs per case, with per-case
//! extras (parameter estimates for the vibration problem, accuracy for the
//! iris clustering).

use rayon::prelude::*;

use mscs_core::cases::{
    clustering_accuracy, clustering_problem, load_iris, pressure_vessel_problem,
    speed_reducer_problem, spring_problem, vibration_problem, ClusterSolution, IrisDataset,
    VibrationDataset,
};
use mscs_core::mscs::mscs_run;
use mscs_core::Problem64;

use crate::config::{trial_seed, CaseName, ConfigError, ExperimentConfig, Result};
use crate::format;

/// Number of independent runs per case study.
pub const CASE_RUNS: usize = 20;

#[derive(Debug, Clone)]
pub struct CaseRun {
    pub run: usize,
    pub best_f: f64,
    pub fe_used: u64,
    pub best_x: Vec<f64>,
    /// Iris only: clustering accuracy of this run's solution.
    pub accuracy: Option<f64>,
}

#[derive(Debug)]
pub struct CaseReport {
    pub case: CaseName,
    pub runs: Vec<CaseRun>,
    /// Index of the run with the lowest objective.
    pub best_run: usize,
    /// Vibration only: mean (mu, nu) over the runs.
    pub mean_estimates: Option<(f64, f64)>,
    /// Iris only: best accuracy over the runs.
    pub best_accuracy: Option<f64>,
}

impl CaseReport {
    pub fn best(&self) -> &CaseRun {
        &self.runs[self.best_run]
    }
}

fn build_problem(
    case: CaseName,
    config: &ExperimentConfig,
) -> Result<(Problem64, Option<IrisDataset<f64>>)> {
    match case {
        CaseName::Spring => Ok((spring_problem(), None)),
        CaseName::Vessel => Ok((pressure_vessel_problem(), None)),
        CaseName::Reducer => Ok((speed_reducer_problem(), None)),
        CaseName::Vibration => Ok((vibration_problem(VibrationDataset::measured()), None)),
        CaseName::Iris => {
            let path = config.data_path.clone().ok_or_else(|| {
                ConfigError::Invalid("the iris case needs --data PATH".into())
            })?;
            let data = load_iris::<f64>(&path)?;
            let problem = clustering_problem(&data);
            Ok((problem, Some(data)))
        }
    }
}

/// Run one case study: 20 seeded MSCS runs under the experiment settings,
/// writing `case_<name>.csv` (plus `vibration_data.csv` for the vibration
/// case) into the output directory.
pub fn run_case(case: CaseName, config: &ExperimentConfig) -> Result<CaseReport> {
    let (problem, iris) = build_problem(case, config)?;
    let t_max = config.case_t_max(case);

    let outcomes: Vec<mscs_core::Result<CaseRun>> = (0..CASE_RUNS)
        .into_par_iter()
        .map(|run| {
            let seed = trial_seed(config.master_seed, run as u64 * 2);
            let params = config.mscs_params(seed, t_max);
            let r = mscs_run(&problem, &params)?;
            let accuracy = iris.as_ref().map(|data| {
                let sol = ClusterSolution::from_flat(&r.best_x, data)
                    .expect("search output stays within the data ranges");
                clustering_accuracy(&sol, data)
            });
            Ok(CaseRun {
                run,
                best_f: r.best_f,
                fe_used: r.fe_used,
                best_x: r.best_x,
                accuracy,
            })
        })
        .collect();

    let mut runs = Vec::with_capacity(CASE_RUNS);
    for o in outcomes {
        runs.push(o?);
    }
    runs.sort_by_key(|r| r.run);

    let best_run = runs
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.best_f.partial_cmp(&b.1.best_f).unwrap())
        .map(|(i, _)| i)
        .expect("at least one run");

    let mean_estimates = (case == CaseName::Vibration).then(|| {
        let n = runs.len() as f64;
        let mu = runs.iter().map(|r| r.best_x[0]).sum::<f64>() / n;
        let nu = runs.iter().map(|r| r.best_x[1]).sum::<f64>() / n;
        (mu, nu)
    });
    let best_accuracy = iris
        .is_some()
        .then(|| runs.iter().filter_map(|r| r.accuracy).fold(0.0, f64::max));

    std::fs::create_dir_all(&config.out_dir)?;
    write_case_csv(case, &runs, &config.out_dir)?;
    if case == CaseName::Vibration {
        std::fs::write(
            config.out_dir.join("vibration_data.csv"),
            VibrationDataset::<f64>::measured().to_csv(),
        )?;
    }

    Ok(CaseReport {
        case,
        runs,
        best_run,
        mean_estimates,
        best_accuracy,
    })
}

fn write_case_csv(case: CaseName, runs: &[CaseRun], out_dir: &std::path::Path) -> Result<()> {
    let mut out = String::new();
    match case {
        CaseName::Vibration => {
            out.push_str("case,run,best_f,fe_used,mu,nu\n");
            for r in runs {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    case.as_str(),
                    r.run,
                    format::full(r.best_f),
                    r.fe_used,
                    format::full(r.best_x[0]),
                    format::full(r.best_x[1])
                ));
            }
        }
        CaseName::Iris => {
            out.push_str("case,run,best_f,fe_used,accuracy\n");
            for r in runs {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    case.as_str(),
                    r.run,
                    format::full(r.best_f),
                    r.fe_used,
                    format::full(r.accuracy.unwrap_or(f64::NAN))
                ));
            }
        }
        _ => {
            out.push_str("case,run,best_f,fe_used,best_x\n");
            for r in runs {
                let x = r
                    .best_x
                    .iter()
                    .map(|&v| format::full(v))
                    .collect::<Vec<_>>()
                    .join(";");
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    case.as_str(),
                    r.run,
                    format::full(r.best_f),
                    r.fe_used,
                    x
                ));
            }
        }
    }
    std::fs::write(out_dir.join(format!("case_{}.csv", case.as_str())), out)?;
    Ok(())
}

/// Human-readable summary printed by the CLI.
pub fn describe(report: &CaseReport) -> String {
    let best = report.best();
    let mut s = format!(
        "case {}: best objective {:.9} (run {}, {} evaluations)\n",
        report.case.as_str(),
        best.best_f,
        best.run,
        best.fe_used
    );
    s.push_str(&format!(
        "  best point: ({})\n",
        best.best_x
            .iter()
            .map(|v| format!("{v:.7}"))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    if let Some((mu, nu)) = report.mean_estimates {
        s.push_str(&format!("  mean estimates over 20 runs: mu = {mu:.4}, nu = {nu:.4}\n"));
    }
    if let Some(acc) = report.best_accuracy {
        s.push_str(&format!("  best clustering accuracy: {:.1}%\n", acc * 100.0));
    }
    s
}
