//! Multi-trial campaigns over the benchmark suite: per-trial results,
//! summary statistics and median convergence traces.

use rayon::prelude::*;

use mscs_core::benchmarks::suite_problem;
use mscs_core::cs::cs_run;
use mscs_core::mscs::mscs_run;
use mscs_core::Problem64;

use crate::config::{trial_seed, Algorithm, ConfigError, ExperimentConfig, Result};
use crate::format;

/// One `results.csv` row.
#[derive(Debug, Clone)]
pub struct TrialRow {
    pub problem: String,
    pub algo: &'static str,
    pub trial: usize,
    pub best_f: f64,
    pub e_f: f64,
    pub fe_used: u64,
}

/// One `summary.csv` row.
#[derive(Debug, Clone)]
pub struct SummaryRow {
    pub problem: String,
    pub algo: &'static str,
    pub best_e: f64,
    pub mean_e: f64,
    pub fe_mean: f64,
}

#[derive(Debug)]
pub struct CampaignOutput {
    pub results: Vec<TrialRow>,
    pub summary: Vec<SummaryRow>,
}

/// Outcome of one paired trial; CS rows absent in mscs-only mode and
/// vice versa.
struct PairedTrial {
    mscs: Option<TrialRow>,
    cs: Option<TrialRow>,
}

fn resolve_problem(config: &ExperimentConfig) -> Result<(String, Problem64)> {
    let id = config
        .function
        .clone()
        .ok_or_else(|| ConfigError::Invalid("bench/trace needs --function".into()))?;
    let problem = suite_problem::<f64>(&id, config.dim, config.suite_seed)?;
    Ok((id, problem))
}

/// Run one paired trial. In `both` mode without an explicit `--max-fe`, the
/// CS run is capped at the paired MSCS run's evaluation count, which
/// operationalises equal-evaluation comparison.
fn run_trial(
    config: &ExperimentConfig,
    problem: &Problem64,
    id: &str,
    trial: usize,
) -> mscs_core::Result<PairedTrial> {
    let t_max = config.bench_t_max();
    let mscs_seed = trial_seed(config.master_seed, trial as u64 * 2);
    let cs_seed = trial_seed(config.master_seed, trial as u64 * 2 + 1);

    let mut mscs_row = None;
    let mut cs_budget = config.max_fe;
    if config.algorithm != Algorithm::Cs {
        let params = config.mscs_params(mscs_seed, t_max);
        let r = mscs_run(problem, &params)?;
        if config.algorithm == Algorithm::Both && cs_budget.is_none() {
            cs_budget = Some(r.fe_used);
        }
        mscs_row = Some(TrialRow {
            problem: id.to_string(),
            algo: "mscs",
            trial,
            best_f: r.best_f,
            e_f: r.e_f.expect("catalog problems declare their minimum"),
            fe_used: r.fe_used,
        });
    }

    let mut cs_row = None;
    if config.algorithm != Algorithm::Mscs {
        // when the budget binds, every iteration spends at least one
        // evaluation, so the cap itself bounds the iteration count
        let cs_t_max = match cs_budget {
            Some(cap) => cap as usize,
            None => t_max,
        };
        let params = config.cs_params(cs_seed, cs_t_max, cs_budget);
        let r = cs_run(problem, &params)?;
        cs_row = Some(TrialRow {
            problem: id.to_string(),
            algo: "cs",
            trial,
            best_f: r.best_f,
            e_f: r.e_f.expect("catalog problems declare their minimum"),
            fe_used: r.fe_used,
        });
    }
    Ok(PairedTrial { mscs: mscs_row, cs: cs_row })
}

fn summarize(rows: &[TrialRow], problem: &str, algo: &'static str) -> Option<SummaryRow> {
    let picked: Vec<&TrialRow> = rows.iter().filter(|r| r.algo == algo).collect();
    if picked.is_empty() {
        return None;
    }
    let best_e = picked.iter().map(|r| r.e_f).fold(f64::INFINITY, f64::min);
    let mean_e = picked.iter().map(|r| r.e_f).sum::<f64>() / picked.len() as f64;
    let fe_mean = picked.iter().map(|r| r.fe_used as f64).sum::<f64>() / picked.len() as f64;
    Some(SummaryRow {
        problem: problem.to_string(),
        algo,
        best_e,
        mean_e,
        fe_mean,
    })
}

/// Run `trials` independent trials per selected algorithm and write
/// `results.csv` and `summary.csv` into the output directory.
///
/// Trials execute in parallel; rows are ordered by (algorithm, trial), so
/// output bytes do not depend on scheduling.
pub fn run_campaign(config: &ExperimentConfig) -> Result<CampaignOutput> {
    config.validate()?;
    let (id, problem) = resolve_problem(config)?;

    let paired: Vec<mscs_core::Result<PairedTrial>> = (0..config.trials)
        .into_par_iter()
        .map(|t| run_trial(config, &problem, &id, t))
        .collect();

    let mut results: Vec<TrialRow> = Vec::with_capacity(config.trials * 2);
    let mut cs_rows = Vec::new();
    for p in paired {
        let p = p?;
        if let Some(r) = p.mscs {
            results.push(r);
        }
        if let Some(r) = p.cs {
            cs_rows.push(r);
        }
    }
    results.sort_by_key(|r| r.trial);
    cs_rows.sort_by_key(|r| r.trial);
    // fixed ordering: cs block first, then mscs
    let mut ordered = cs_rows;
    ordered.append(&mut results);
    let results = ordered;

    let mut summary = Vec::new();
    for algo in ["cs", "mscs"] {
        if let Some(row) = summarize(&results, &id, if algo == "cs" { "cs" } else { "mscs" }) {
            debug_assert!(row.best_e <= row.mean_e + 1e-30);
            summary.push(row);
        }
    }

    std::fs::create_dir_all(&config.out_dir)?;
    write_results_csv(&config.out_dir.join("results.csv"), &results)?;
    write_summary_csv(&config.out_dir.join("summary.csv"), &summary)?;
    Ok(CampaignOutput { results, summary })
}

pub fn write_results_csv(path: &std::path::Path, rows: &[TrialRow]) -> Result<()> {
    let mut out = String::from("problem,algo,trial,best_f,e_f,fe_used\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.problem,
            r.algo,
            r.trial,
            format::full(r.best_f),
            format::full(r.e_f),
            r.fe_used
        ));
    }
    std::fs::write(path, out)?;
    Ok(())
}

pub fn write_summary_csv(path: &std::path::Path, rows: &[SummaryRow]) -> Result<()> {
    let mut out = String::from("problem,algo,best_e,mean_e,fe_mean\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{:.1}\n",
            r.problem,
            r.algo,
            format::sci4(r.best_e),
            format::sci4(r.mean_e),
            r.fe_mean
        ));
    }
    std::fs::write(path, out)?;
    Ok(())
}

/// `trace.csv` content: per iteration, the median-over-trials best-so-far
/// of each algorithm.
#[derive(Debug)]
pub struct TraceOutput {
    pub iterations: usize,
    pub cs_median: Vec<f64>,
    pub mscs_median: Vec<f64>,
}

fn median_at(traces: &[Vec<f64>], iter: usize) -> f64 {
    let mut vals: Vec<f64> = traces
        .iter()
        .map(|t| {
            // pad short traces by carrying the last best-so-far forward
            *t.get(iter).unwrap_or_else(|| t.last().expect("nonempty trace"))
        })
        .collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = vals.len();
    if n % 2 == 1 {
        vals[n / 2]
    } else {
        0.5 * (vals[n / 2 - 1] + vals[n / 2])
    }
}

/// Run both algorithms for `trials` seeds at the full iteration budget and
/// write `trace.csv` (`iter,cs_best,mscs_best`, one row per iteration).
pub fn emit_trace(config: &ExperimentConfig) -> Result<TraceOutput> {
    config.validate()?;
    if config.algorithm != Algorithm::Both {
        return Err(ConfigError::Invalid(
            "trace compares both algorithms; use --algo both".into(),
        ));
    }
    let (_, problem) = resolve_problem(config)?;
    let t_max = config.bench_t_max();

    let runs: Vec<mscs_core::Result<(Vec<f64>, Vec<f64>)>> = (0..config.trials)
        .into_par_iter()
        .map(|t| {
            let mscs_seed = trial_seed(config.master_seed, t as u64 * 2);
            let cs_seed = trial_seed(config.master_seed, t as u64 * 2 + 1);
            let mr = mscs_run(&problem, &config.mscs_params(mscs_seed, t_max))?;
            let cr = cs_run(&problem, &config.cs_params(cs_seed, t_max, config.max_fe))?;
            Ok((cr.trace, mr.trace))
        })
        .collect();

    let mut cs_traces = Vec::with_capacity(config.trials);
    let mut mscs_traces = Vec::with_capacity(config.trials);
    for r in runs {
        let (c, m) = r?;
        cs_traces.push(c);
        mscs_traces.push(m);
    }

    let cs_median: Vec<f64> = (0..t_max).map(|i| median_at(&cs_traces, i)).collect();
    let mscs_median: Vec<f64> = (0..t_max).map(|i| median_at(&mscs_traces, i)).collect();

    std::fs::create_dir_all(&config.out_dir)?;
    let mut out = String::from("iter,cs_best,mscs_best\n");
    for i in 0..t_max {
        out.push_str(&format!(
            "{},{},{}\n",
            i + 1,
            format::full(cs_median[i]),
            format::full(mscs_median[i])
        ));
    }
    std::fs::write(config.out_dir.join("trace.csv"), out)?;
    Ok(TraceOutput {
        iterations: t_max,
        cs_median,
        mscs_median,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_config(dir: &str) -> ExperimentConfig {
        let mut cfg = ExperimentConfig::default();
        cfg.function = Some("f5".into());
        cfg.dim = 2;
        cfg.trials = 3;
        cfg.t_max = Some(30);
        cfg.master_seed = 7;
        cfg.out_dir = std::env::temp_dir().join(dir);
        cfg
    }

    #[test]
    fn campaign_outputs_are_deterministic_bytes() {
        let cfg = small_config("mscs_campaign_a");
        run_campaign(&cfg).unwrap();
        let r1 = std::fs::read(cfg.out_dir.join("results.csv")).unwrap();
        let s1 = std::fs::read(cfg.out_dir.join("summary.csv")).unwrap();
        let mut cfg2 = small_config("mscs_campaign_b");
        cfg2.trials = 3;
        run_campaign(&cfg2).unwrap();
        let r2 = std::fs::read(cfg2.out_dir.join("results.csv")).unwrap();
        let s2 = std::fs::read(cfg2.out_dir.join("summary.csv")).unwrap();
        assert_eq!(r1, r2);
        assert_eq!(s1, s2);
    }

    #[test]
    fn single_trial_best_equals_mean() {
        let mut cfg = small_config("mscs_campaign_single");
        cfg.trials = 1;
        let out = run_campaign(&cfg).unwrap();
        for row in &out.summary {
            assert_eq!(row.best_e, row.mean_e);
        }
    }

    #[test]
    fn both_mode_pairs_budgets() {
        let cfg = small_config("mscs_campaign_pair");
        let out = run_campaign(&cfg).unwrap();
        for t in 0..cfg.trials {
            let m = out
                .results
                .iter()
                .find(|r| r.algo == "mscs" && r.trial == t)
                .unwrap();
            let c = out
                .results
                .iter()
                .find(|r| r.algo == "cs" && r.trial == t)
                .unwrap();
            assert!(
                c.fe_used <= m.fe_used,
                "cs exceeded paired budget: {} > {}",
                c.fe_used,
                m.fe_used
            );
            // at most one generation's worth below the cap
            assert!(m.fe_used - c.fe_used <= 122);
        }
    }

    #[test]
    fn summary_cross_checks_against_results() {
        let cfg = small_config("mscs_campaign_xcheck");
        let out = run_campaign(&cfg).unwrap();
        for srow in &out.summary {
            let efs: Vec<f64> = out
                .results
                .iter()
                .filter(|r| r.algo == srow.algo)
                .map(|r| r.e_f)
                .collect();
            let min = efs.iter().cloned().fold(f64::INFINITY, f64::min);
            assert_eq!(srow.best_e, min);
            assert!(srow.best_e <= srow.mean_e);
        }
    }

    #[test]
    fn trace_shape_and_monotone() {
        let mut cfg = small_config("mscs_trace_small");
        cfg.trials = 4;
        let out = emit_trace(&cfg).unwrap();
        assert_eq!(out.iterations, 30);
        assert_eq!(out.cs_median.len(), 30);
        for w in out.cs_median.windows(2) {
            assert!(w[1] <= w[0]);
        }
        for w in out.mscs_median.windows(2) {
            assert!(w[1] <= w[0]);
        }
        let text = std::fs::read_to_string(cfg.out_dir.join("trace.csv")).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "iter,cs_best,mscs_best");
        assert_eq!(text.lines().count(), 31);
    }

    #[test]
    fn unknown_function_is_config_error() {
        let mut cfg = small_config("mscs_campaign_bad");
        cfg.function = Some("f9".into());
        assert!(run_campaign(&cfg).is_err());
    }
}
