//! Uniform optimization-problem representation: bounds, inequality
//! constraints, integer-grid dimensions, penalized evaluation and the error
//! metric used for benchmark reporting.

use crate::error::{Error, EvalSource, Result};
use crate::rng::RngStream;
use crate::scalar::Scalar;

/// Objective closure. Deterministic objectives ignore the stream; benchmarks
/// declared noisy consume it (keeping each trial reproducible from its seed).
pub type ObjectiveFn<R> = Box<dyn Fn(&[R], &mut RngStream) -> R + Send + Sync>;

/// Inequality constraint `g(x) <= 0`.
pub type ConstraintFn<R> = Box<dyn Fn(&[R]) -> R + Send + Sync>;

/// A dimension restricted to the grid `origin + k * step`.
#[derive(Debug, Clone, Copy)]
pub struct GridSpec<R> {
    pub dim: usize,
    pub step: R,
    pub origin: R,
}

/// An optimization problem over a box domain, to be minimized.
pub struct ObjectiveProblem<R> {
    pub name: String,
    pub dim: usize,
    pub lower: Vec<R>,
    pub upper: Vec<R>,
    pub objective: ObjectiveFn<R>,
    pub constraints: Vec<ConstraintFn<R>>,
    pub integer_dims: Vec<GridSpec<R>>,
    pub known_min: Option<R>,
}

impl<R: Scalar> ObjectiveProblem<R> {
    /// Unconstrained continuous problem from a plain closure.
    pub fn unconstrained(
        name: impl Into<String>,
        lower: Vec<R>,
        upper: Vec<R>,
        objective: impl Fn(&[R]) -> R + Send + Sync + 'static,
    ) -> Self {
        let dim = lower.len();
        Self {
            name: name.into(),
            dim,
            lower,
            upper,
            objective: Box::new(move |x, _| objective(x)),
            constraints: Vec::new(),
            integer_dims: Vec::new(),
            known_min: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.lower.len() != self.dim || self.upper.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: self.lower.len().min(self.upper.len()),
            });
        }
        for d in 0..self.dim {
            if !(self.lower[d] < self.upper[d]) {
                return Err(Error::ParameterDomain(format!(
                    "lower[{d}] must be below upper[{d}]"
                )));
            }
        }
        for g in &self.integer_dims {
            if g.dim >= self.dim || !(g.step > R::zero()) {
                return Err(Error::ParameterDomain(format!(
                    "bad integer grid on dimension {}",
                    g.dim
                )));
            }
        }
        Ok(())
    }

    /// Raw objective value, without penalty.
    pub fn raw_objective(&self, x: &[R], rng: &mut RngStream) -> R {
        (self.objective)(x, rng)
    }
}

/// Weight for squared constraint violations.
#[derive(Debug, Clone, Copy)]
pub struct PenaltyConfig<R> {
    pub coefficient: R,
}

impl<R: Scalar> PenaltyConfig<R> {
    pub fn new(coefficient: R) -> Result<Self> {
        if !(coefficient > R::zero()) {
            return Err(Error::ParameterDomain(
                "penalty coefficient must be positive".into(),
            ));
        }
        Ok(Self { coefficient })
    }
}

impl<R: Scalar> Default for PenaltyConfig<R> {
    /// Static exterior penalty; large enough that any violation of the case
    /// study constraints dominates their objective scale.
    fn default() -> Self {
        Self {
            coefficient: R::of(1e9),
        }
    }
}

/// Nonnegative benchmark error `|f_found - f_true|`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ErrorValue<R>(pub R);

/// `|f_found - f_true|`; errors on non-finite input.
pub fn error_metric<R: Scalar>(f_found: R, f_true: R) -> Result<ErrorValue<R>> {
    if !f_found.is_finite() || !f_true.is_finite() {
        return Err(Error::Evaluation {
            origin: EvalSource::Objective,
            fe: 0,
        });
    }
    Ok(ErrorValue((f_found - f_true).abs()))
}

/// Clip every component into bounds and snap integer dimensions to their
/// nearest in-bounds grid point. Idempotent.
pub fn clamp_and_snap<R: Scalar>(x: &[R], problem: &ObjectiveProblem<R>) -> Vec<R> {
    let mut out: Vec<R> = x
        .iter()
        .zip(problem.lower.iter().zip(problem.upper.iter()))
        .map(|(&v, (&lo, &hi))| {
            // NaN from overflowing arithmetic lands on the lower bound
            if v.is_nan() {
                lo
            } else {
                v.max(lo).min(hi)
            }
        })
        .collect();
    for g in &problem.integer_dims {
        let lo = problem.lower[g.dim];
        let hi = problem.upper[g.dim];
        let mut k = ((out[g.dim] - g.origin) / g.step).round();
        let mut snapped = g.origin + k * g.step;
        if snapped > hi {
            k = k - R::one();
            snapped = g.origin + k * g.step;
        }
        if snapped < lo {
            k = k + R::one();
            snapped = g.origin + k * g.step;
        }
        out[g.dim] = snapped;
    }
    out
}

/// `objective(x) + coefficient * sum(max(0, g_i(x))^2)`.
///
/// The caller is expected to have clamped/snapped `x` first.
pub fn evaluate_penalized<R: Scalar>(
    problem: &ObjectiveProblem<R>,
    x: &[R],
    penalty: &PenaltyConfig<R>,
    rng: &mut RngStream,
) -> Result<R> {
    let obj = problem.raw_objective(x, rng);
    if !obj.is_finite() {
        return Err(Error::Evaluation {
            origin: EvalSource::Objective,
            fe: 0,
        });
    }
    let mut total = obj;
    for (i, g) in problem.constraints.iter().enumerate() {
        let gv = g(x);
        if !gv.is_finite() {
            return Err(Error::Evaluation {
                origin: EvalSource::Constraint(i),
                fe: 0,
            });
        }
        if gv > R::zero() {
            total = total + penalty.coefficient * gv * gv;
        }
    }
    Ok(total)
}

/// Counting evaluation wrapper: tracks function evaluations, enforces an
/// optional budget and records the best solution ever seen.
pub struct Evaluator<'a, R> {
    problem: &'a ObjectiveProblem<R>,
    penalty: PenaltyConfig<R>,
    fe_used: u64,
    max_fe: Option<u64>,
    best_x: Vec<R>,
    best_f: R,
}

impl<'a, R: Scalar> Evaluator<'a, R> {
    pub fn new(problem: &'a ObjectiveProblem<R>, penalty: PenaltyConfig<R>, max_fe: Option<u64>) -> Self {
        Self {
            problem,
            penalty,
            fe_used: 0,
            max_fe,
            best_x: Vec::new(),
            best_f: R::infinity(),
        }
    }

    #[inline]
    pub fn exhausted(&self) -> bool {
        self.max_fe.map_or(false, |cap| self.fe_used >= cap)
    }

    /// Whether `n` further evaluations fit inside the budget.
    #[inline]
    pub fn has_budget(&self, n: u64) -> bool {
        self.max_fe.map_or(true, |cap| self.fe_used + n <= cap)
    }

    pub fn eval(&mut self, x: &[R], rng: &mut RngStream) -> Result<R> {
        let f = evaluate_penalized(self.problem, x, &self.penalty, rng).map_err(|e| match e {
            Error::Evaluation { origin, .. } => Error::Evaluation {
                origin,
                fe: self.fe_used,
            },
            other => other,
        })?;
        self.fe_used += 1;
        if f < self.best_f {
            self.best_f = f;
            self.best_x = x.to_vec();
        }
        Ok(f)
    }

    pub fn fe_used(&self) -> u64 {
        self.fe_used
    }

    pub fn best(&self) -> (&[R], R) {
        (&self.best_x, self.best_f)
    }

    pub fn problem(&self) -> &'a ObjectiveProblem<R> {
        self.problem
    }
}
