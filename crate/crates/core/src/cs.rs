//! Standard single-species cuckoo search, the comparison baseline.
//!
//! Each iteration runs a global Lévy-flight phase (every solution proposes a
//! move, greedily accepted against a randomly chosen nest) followed by a
//! discovery phase (the worst `floor(p_a * n)` solutions propose replacements
//! through the gated local walk, greedily accepted in place). Elitism is
//! implied by greedy acceptance: the best solution can only be displaced by a
//! better one.

use crate::error::{Error, Result};
use crate::problem::{clamp_and_snap, Evaluator, ObjectiveProblem, PenaltyConfig};
use crate::rng::{LevySampler, RngStream};
use crate::scalar::Scalar;

/// Lévy-flight and local-walk scaling parameters.
#[derive(Debug, Clone, Copy)]
pub struct LevyParams {
    /// Power-law exponent, in (1, 2).
    pub lambda: f64,
    /// Step-size scaling factor, a fraction of domain width per dimension.
    pub alpha: f64,
    /// Local-walk scaling factor.
    pub beta: f64,
}

impl LevyParams {
    pub fn validate(&self) -> Result<()> {
        if !(1.0 < self.lambda && self.lambda < 2.0) {
            return Err(Error::ParameterDomain(format!(
                "lambda must lie in (1, 2), got {}",
                self.lambda
            )));
        }
        if !(self.alpha > 0.0) || !(self.beta > 0.0) {
            return Err(Error::ParameterDomain(
                "alpha and beta must be positive".into(),
            ));
        }
        Ok(())
    }
}

impl Default for LevyParams {
    /// The settings used throughout the experiments: `lambda = 1.5`,
    /// `alpha = beta = 0.01`.
    fn default() -> Self {
        Self { lambda: 1.5, alpha: 0.01, beta: 0.01 }
    }
}

/// Parameters of the baseline search.
#[derive(Debug, Clone)]
pub struct CsParams {
    pub population: usize,
    /// Discovery probability in [0, 1].
    pub p_a: f64,
    pub levy: LevyParams,
    pub t_max: usize,
    pub max_fe: Option<u64>,
    pub seed: u64,
}

impl CsParams {
    /// Standard experiment settings with `n_cs = 80`.
    pub fn standard(seed: u64) -> Self {
        Self {
            population: 80,
            p_a: 0.25,
            levy: LevyParams::default(),
            t_max: 1000,
            max_fe: None,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.population < 3 {
            return Err(Error::ParameterDomain(
                "population must be at least 3".into(),
            ));
        }
        if !(0.0..=1.0).contains(&self.p_a) {
            return Err(Error::ParameterDomain("p_a must lie in [0, 1]".into()));
        }
        if self.t_max < 1 {
            return Err(Error::ParameterDomain("t_max must be at least 1".into()));
        }
        self.levy.validate()
    }
}

/// Outcome of one independent run.
#[derive(Debug, Clone)]
pub struct TrialResult<R> {
    pub best_x: Vec<R>,
    pub best_f: R,
    /// `|best_f - known_min|` when the problem declares its minimum.
    pub e_f: Option<R>,
    /// Best-so-far fitness after each iteration; non-increasing.
    pub trace: Vec<R>,
    pub fe_used: u64,
}

/// Eq.-(1)-style local walk: `x_i + beta * s (x) H(p_a - eps) (x) (x_j - x_k)`
/// with `s` a per-dimension uniform [0,1) draw and `eps` a single uniform
/// draw per call.
pub fn local_walk<R: Scalar>(
    x_i: &[R],
    x_j: &[R],
    x_k: &[R],
    beta: f64,
    p_a: f64,
    rng: &mut RngStream,
) -> Vec<R> {
    let eps = rng.next_f64();
    if eps < p_a {
        local_walk_ungated(x_i, x_j, x_k, beta, rng)
    } else {
        // Heaviside factor zero: step gated off (uniform draws for s are
        // still consumed so the gate does not change downstream state)
        for _ in 0..x_i.len() {
            rng.next_f64();
        }
        x_i.to_vec()
    }
}

/// Local walk with the Heaviside factor taken as 1.
pub fn local_walk_ungated<R: Scalar>(
    x_i: &[R],
    x_j: &[R],
    x_k: &[R],
    beta: f64,
    rng: &mut RngStream,
) -> Vec<R> {
    debug_assert_eq!(x_i.len(), x_j.len());
    debug_assert_eq!(x_i.len(), x_k.len());
    let b = R::of(beta);
    x_i.iter()
        .zip(x_j.iter().zip(x_k.iter()))
        .map(|(&xi, (&xj, &xk))| xi + b * R::of(rng.next_f64()) * (xj - xk))
        .collect()
}

/// Eq.-(2) Lévy flight: `x_i + alpha_eff (x) L` with independent Mantegna
/// draws per dimension.
pub fn levy_flight<R: Scalar>(
    x_i: &[R],
    alpha_eff: &[R],
    sampler: &LevySampler,
    rng: &mut RngStream,
) -> Vec<R> {
    debug_assert_eq!(x_i.len(), alpha_eff.len());
    x_i.iter()
        .zip(alpha_eff.iter())
        .map(|(&xi, &a)| xi + a * sampler.sample::<R>(rng))
        .collect()
}

/// Run the baseline on one problem. Deterministic for a fixed
/// `(problem, params, seed)` triple.
pub fn cs_run<R: Scalar>(problem: &ObjectiveProblem<R>, params: &CsParams) -> Result<TrialResult<R>> {
    params.validate()?;
    problem.validate()?;
    let mut rng = RngStream::new(params.seed);
    let mut ev = Evaluator::new(problem, PenaltyConfig::default(), params.max_fe);
    let sampler = LevySampler::new(params.levy.lambda)?;
    let n = params.population;
    let dim = problem.dim;

    // per-dimension levy scale: a fixed fraction of the domain width
    let alpha_eff: Vec<R> = (0..dim)
        .map(|d| R::of(params.levy.alpha) * (problem.upper[d] - problem.lower[d]))
        .collect();

    let mut pop: Vec<Vec<R>> = Vec::with_capacity(n);
    let mut fit: Vec<R> = Vec::with_capacity(n);
    for _ in 0..n {
        if ev.exhausted() {
            break;
        }
        let x: Vec<R> = (0..dim)
            .map(|d| rng.uniform(problem.lower[d], problem.upper[d]))
            .collect();
        let x = clamp_and_snap(&x, problem);
        let f = ev.eval(&x, &mut rng)?;
        pop.push(x);
        fit.push(f);
    }

    let mut trace: Vec<R> = Vec::with_capacity(params.t_max);
    let discover = (params.p_a * n as f64).floor() as usize;

    for _ in 0..params.t_max {
        if ev.exhausted() || pop.len() < n {
            break;
        }
        // global levy phase
        for i in 0..n {
            if ev.exhausted() {
                break;
            }
            let cand = clamp_and_snap(&levy_flight(&pop[i], &alpha_eff, &sampler, &mut rng), problem);
            let f = ev.eval(&cand, &mut rng)?;
            let j = rng.below(n);
            if f < fit[j] {
                pop[j] = cand;
                fit[j] = f;
            }
        }
        // discovery phase: worst floor(p_a n) solutions propose via the
        // gated local walk, pairs drawn by random permutation
        if discover > 0 && !ev.exhausted() {
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by(|&a, &b| fit[a].partial_cmp(&fit[b]).unwrap());
            let perm_j = rng.permutation(n);
            let perm_k = rng.permutation(n);
            for (slot, &i) in order[n - discover..].iter().enumerate() {
                if ev.exhausted() {
                    break;
                }
                let (xj, xk) = (&pop[perm_j[slot]], &pop[perm_k[slot]]);
                let cand = clamp_and_snap(
                    &local_walk(&pop[i], xj, xk, params.levy.beta, params.p_a, &mut rng),
                    problem,
                );
                let f = ev.eval(&cand, &mut rng)?;
                if f < fit[i] {
                    pop[i] = cand;
                    fit[i] = f;
                }
            }
        }
        trace.push(ev.best().1);
    }

    let (best_x, best_f) = ev.best();
    let e_f = match problem.known_min {
        Some(m) => Some(crate::problem::error_metric(best_f, m)?.0),
        None => None,
    };
    Ok(TrialResult {
        best_x: best_x.to_vec(),
        best_f,
        e_f,
        trace,
        fe_used: ev.fe_used(),
    })
}
