//! Benchmark test functions and the shift/rotate/bias transform wrapper.
//!
//! Every raw function here is nonnegative with its minimum of exactly zero at
//! the origin (the classic Rosenbrock is re-centred accordingly), so a
//! transformed problem `x -> raw(M (x - o)) + bias` attains `bias` at `x = o`.
//!
//! Shifts and rotations are generated locally from a fixed seed instead of
//! shipping the official CEC data files; the suite is reproducible but its
//! transforms are not bit-identical to the CEC distributions.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::problem::ObjectiveProblem;
use crate::rng::{random_orthogonal_matrix, RngStream};
use crate::scalar::Scalar;

/// Seed from which the default catalog draws its shift vectors and rotations.
pub const DEFAULT_SUITE_SEED: u64 = 0xCEC_5EED;

/// Weierstrass constants (a, b, k_max).
const WEIERSTRASS_A: f64 = 0.5;
const WEIERSTRASS_B: f64 = 3.0;
const WEIERSTRASS_KMAX: usize = 20;

/// Argument of the sine-sqrt Schwefel maximum; `g(Z0)` is subtracted per
/// dimension so the raw minimum is exactly zero at the origin.
const SCHWEFEL_Z0: f64 = 420.9687462275036;

/// The raw (untransformed) functions of the suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RawFunction {
    Sphere,
    Ackley,
    /// Yang's forest-like function `(sum |x_i|) exp(-sum sin(x_i^2))`.
    Forest,
    /// Schwefel problem 1.2, the cumulative-sum quadratic.
    SchwefelP12,
    /// Schwefel problem 2.22, `sum |x_i| + prod |x_i|`.
    SchwefelP222,
    /// Rosenbrock re-centred so the minimum sits at the origin.
    Rosenbrock,
    Griewank,
    BentCigar,
    Discus,
    Weierstrass,
    /// Sine-sqrt Schwefel with out-of-range penalty branches.
    SchwefelSineSqrt,
    Katsuura,
}

impl RawFunction {
    pub const ALL: [RawFunction; 12] = [
        RawFunction::Sphere,
        RawFunction::Ackley,
        RawFunction::Forest,
        RawFunction::SchwefelP12,
        RawFunction::SchwefelP222,
        RawFunction::Rosenbrock,
        RawFunction::Griewank,
        RawFunction::BentCigar,
        RawFunction::Discus,
        RawFunction::Weierstrass,
        RawFunction::SchwefelSineSqrt,
        RawFunction::Katsuura,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RawFunction::Sphere => "sphere",
            RawFunction::Ackley => "ackley",
            RawFunction::Forest => "forest",
            RawFunction::SchwefelP12 => "schwefel_1_2",
            RawFunction::SchwefelP222 => "schwefel_2_22",
            RawFunction::Rosenbrock => "rosenbrock",
            RawFunction::Griewank => "griewank",
            RawFunction::BentCigar => "bent_cigar",
            RawFunction::Discus => "discus",
            RawFunction::Weierstrass => "weierstrass",
            RawFunction::SchwefelSineSqrt => "schwefel",
            RawFunction::Katsuura => "katsuura",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::UnknownFunction(name.to_string()))
    }

    pub fn eval<R: Scalar>(self, x: &[R]) -> R {
        match self {
            RawFunction::Sphere => x.iter().fold(R::zero(), |a, &v| a + v * v),
            RawFunction::Ackley => ackley(x),
            RawFunction::Forest => forest(x),
            RawFunction::SchwefelP12 => schwefel_1_2(x),
            RawFunction::SchwefelP222 => schwefel_2_22(x),
            RawFunction::Rosenbrock => rosenbrock_centred(x),
            RawFunction::Griewank => griewank(x),
            RawFunction::BentCigar => bent_cigar(x),
            RawFunction::Discus => discus(x),
            RawFunction::Weierstrass => weierstrass(x),
            RawFunction::SchwefelSineSqrt => schwefel_sine_sqrt(x),
            RawFunction::Katsuura => katsuura(x),
        }
    }
}

/// Evaluate a raw function by catalog name.
pub fn eval_raw<R: Scalar>(name: &str, x: &[R]) -> Result<R> {
    if x.is_empty() {
        return Err(Error::DimensionMismatch { expected: 1, got: 0 });
    }
    Ok(RawFunction::from_name(name)?.eval(x))
}

fn ackley<R: Scalar>(x: &[R]) -> R {
    let d = R::of(x.len() as f64);
    let sum_sq = x.iter().fold(R::zero(), |a, &v| a + v * v) / d;
    let sum_cos = x
        .iter()
        .fold(R::zero(), |a, &v| a + (R::of(2.0 * std::f64::consts::PI) * v).cos())
        / d;
    let twenty = R::of(20.0);
    -twenty * (-R::of(0.2) * sum_sq.sqrt()).exp() - sum_cos.exp()
        + twenty
        + R::of(std::f64::consts::E)
}

fn forest<R: Scalar>(x: &[R]) -> R {
    let sum_abs = x.iter().fold(R::zero(), |a, &v| a + v.abs());
    let sum_sin = x.iter().fold(R::zero(), |a, &v| a + (v * v).sin());
    sum_abs * (-sum_sin).exp()
}

fn schwefel_1_2<R: Scalar>(x: &[R]) -> R {
    let mut acc = R::zero();
    let mut prefix = R::zero();
    for &v in x {
        prefix = prefix + v;
        acc = acc + prefix * prefix;
    }
    acc
}

fn schwefel_2_22<R: Scalar>(x: &[R]) -> R {
    let sum = x.iter().fold(R::zero(), |a, &v| a + v.abs());
    let prod = x.iter().fold(R::one(), |a, &v| a * v.abs());
    sum + prod
}

/// Classic Rosenbrock evaluated at `x + 1`, moving the minimum to the origin.
fn rosenbrock_centred<R: Scalar>(x: &[R]) -> R {
    let hundred = R::of(100.0);
    let mut acc = R::zero();
    for w in x.windows(2) {
        let a = w[0] + R::one();
        let b = w[1] + R::one();
        let t1 = b - a * a;
        let t2 = a - R::one();
        acc = acc + hundred * t1 * t1 + t2 * t2;
    }
    acc
}

fn griewank<R: Scalar>(x: &[R]) -> R {
    let sum = x.iter().fold(R::zero(), |a, &v| a + v * v) / R::of(4000.0);
    let mut prod = R::one();
    for (i, &v) in x.iter().enumerate() {
        prod = prod * (v / R::of(((i + 1) as f64).sqrt())).cos();
    }
    sum - prod + R::one()
}

fn bent_cigar<R: Scalar>(x: &[R]) -> R {
    let million = R::of(1e6);
    let mut acc = x[0] * x[0];
    for &v in &x[1..] {
        acc = acc + million * v * v;
    }
    acc
}

fn discus<R: Scalar>(x: &[R]) -> R {
    let million = R::of(1e6);
    let mut acc = million * x[0] * x[0];
    for &v in &x[1..] {
        acc = acc + v * v;
    }
    acc
}

fn weierstrass<R: Scalar>(x: &[R]) -> R {
    let two_pi = 2.0 * std::f64::consts::PI;
    // per-dimension constant term at the minimum argument 0.5
    let mut base = 0.0f64;
    {
        let mut ak = 1.0f64;
        let mut bk = 1.0f64;
        for _ in 0..=WEIERSTRASS_KMAX {
            base += ak * (two_pi * bk * 0.5).cos();
            ak *= WEIERSTRASS_A;
            bk *= WEIERSTRASS_B;
        }
    }
    let mut acc = R::zero();
    for &v in x {
        let mut ak = 1.0f64;
        let mut bk = 1.0f64;
        let mut inner = R::zero();
        for _ in 0..=WEIERSTRASS_KMAX {
            inner = inner + R::of(ak) * ((v + R::of(0.5)) * R::of(two_pi * bk)).cos();
            ak *= WEIERSTRASS_A;
            bk *= WEIERSTRASS_B;
        }
        acc = acc + inner - R::of(base);
    }
    acc
}

/// Sine-sqrt component with the standard out-of-range branches; global
/// maximum `g(SCHWEFEL_Z0)` over all reals.
fn schwefel_g(z: f64, dim: usize) -> f64 {
    let d = dim as f64;
    if z.abs() <= 500.0 {
        z * z.abs().sqrt().sin()
    } else if z > 500.0 {
        let w = 500.0 - (z % 500.0);
        w * w.abs().sqrt().sin() - (z - 500.0).powi(2) / (10_000.0 * d)
    } else {
        let w = (z.abs() % 500.0) - 500.0;
        w * w.abs().sqrt().sin() - (z + 500.0).powi(2) / (10_000.0 * d)
    }
}

fn schwefel_sine_sqrt<R: Scalar>(x: &[R]) -> R {
    let dim = x.len();
    let g0 = schwefel_g(SCHWEFEL_Z0, dim);
    let mut acc = 0.0f64;
    for &v in x {
        let z = v.to_f64_lossy() + SCHWEFEL_Z0;
        acc += g0 - schwefel_g(z, dim);
    }
    R::of(acc)
}

fn katsuura<R: Scalar>(x: &[R]) -> R {
    let d = x.len() as f64;
    let exponent = 10.0 / d.powf(1.2);
    let scale = 10.0 / (d * d);
    let mut prod = 1.0f64;
    for (i, &v) in x.iter().enumerate() {
        let xv = v.to_f64_lossy();
        let mut inner = 0.0f64;
        let mut pow2 = 1.0f64;
        for _ in 1..=32 {
            pow2 *= 2.0;
            let t = pow2 * xv;
            inner += (t - t.round()).abs() / pow2;
        }
        prod *= (1.0 + (i as f64 + 1.0) * inner).powf(exponent);
    }
    R::of(scale * prod - scale)
}

/// Shift / rotation / bias / noise wrapper configuration.
pub struct TransformSpec<R> {
    pub shift: Vec<R>,
    pub rotation: Matrix<R>,
    pub bias: R,
    /// CEC2005-style multiplicative fitness noise `(1 + 0.4 |N(0,1)|)`
    /// applied to the pre-bias value.
    pub noise: bool,
}

impl<R: Scalar> TransformSpec<R> {
    pub fn identity(dim: usize, bias: R) -> Self {
        Self {
            shift: vec![R::zero(); dim],
            rotation: Matrix::identity(dim),
            bias,
            noise: false,
        }
    }

    fn validate(&self, lower: &[R], upper: &[R]) -> Result<()> {
        let dim = self.shift.len();
        if self.rotation.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: self.rotation.dim(),
            });
        }
        let resid = self.rotation.orthogonality_residual();
        if resid > R::of(1e-10) {
            return Err(Error::ParameterDomain(format!(
                "rotation is not orthogonal (residual {resid})"
            )));
        }
        for d in 0..dim {
            if !(self.shift[d] > lower[d] && self.shift[d] < upper[d]) {
                return Err(Error::ParameterDomain(format!(
                    "shift component {d} not strictly inside the domain"
                )));
            }
        }
        Ok(())
    }
}

/// Build `x -> raw(M (x - o)) + bias` over the given box as an
/// [`ObjectiveProblem`] with `known_min = bias`, attained at `x = o`.
pub fn make_transformed<R: Scalar>(
    raw: RawFunction,
    lower: Vec<R>,
    upper: Vec<R>,
    spec: TransformSpec<R>,
) -> Result<ObjectiveProblem<R>> {
    spec.validate(&lower, &upper)?;
    let dim = spec.shift.len();
    let TransformSpec { shift, rotation, bias, noise } = spec;
    let objective = move |x: &[R], rng: &mut RngStream| -> R {
        let centred: Vec<R> = x.iter().zip(shift.iter()).map(|(&v, &o)| v - o).collect();
        let z = rotation.mul_vec(&centred);
        let mut val = raw.eval(&z);
        if noise {
            val = val * R::of(1.0 + 0.4 * rng.next_gaussian().abs());
        }
        val + bias
    };
    let problem = ObjectiveProblem {
        name: raw.name().to_string(),
        dim,
        lower,
        upper,
        objective: Box::new(objective),
        constraints: Vec::new(),
        integer_dims: Vec::new(),
        known_min: Some(bias),
    };
    problem.validate()?;
    Ok(problem)
}

/// One suite entry: catalog id (f1, f2, ...) plus the transformed problem.
pub struct BenchmarkEntry<R> {
    pub id: &'static str,
    pub problem: ObjectiveProblem<R>,
}

struct CatalogRow {
    id: &'static str,
    raw: RawFunction,
    lo: f64,
    hi: f64,
    bias: f64,
    shifted: bool,
    rotated: bool,
    noisy: bool,
}

const CATALOG: [CatalogRow; 12] = [
    CatalogRow { id: "f1", raw: RawFunction::Sphere, lo: -100.0, hi: 100.0, bias: -450.0, shifted: true, rotated: false, noisy: false },
    CatalogRow { id: "f2", raw: RawFunction::Ackley, lo: -32.768, hi: 32.768, bias: 0.0, shifted: false, rotated: false, noisy: false },
    CatalogRow { id: "f3", raw: RawFunction::Forest, lo: -6.283185307179586, hi: 6.283185307179586, bias: 0.0, shifted: false, rotated: false, noisy: false },
    CatalogRow { id: "f4", raw: RawFunction::SchwefelP12, lo: -100.0, hi: 100.0, bias: -450.0, shifted: true, rotated: false, noisy: true },
    CatalogRow { id: "f5", raw: RawFunction::SchwefelP222, lo: -10.0, hi: 10.0, bias: 0.0, shifted: false, rotated: false, noisy: false },
    CatalogRow { id: "f6", raw: RawFunction::Rosenbrock, lo: -100.0, hi: 100.0, bias: 390.0, shifted: true, rotated: false, noisy: false },
    CatalogRow { id: "f7", raw: RawFunction::Griewank, lo: 0.0, hi: 600.0, bias: -180.0, shifted: true, rotated: true, noisy: false },
    CatalogRow { id: "f11", raw: RawFunction::BentCigar, lo: -100.0, hi: 100.0, bias: 100.0, shifted: false, rotated: true, noisy: false },
    CatalogRow { id: "f12", raw: RawFunction::Discus, lo: -100.0, hi: 100.0, bias: 200.0, shifted: false, rotated: true, noisy: false },
    CatalogRow { id: "f13", raw: RawFunction::Weierstrass, lo: -100.0, hi: 100.0, bias: 300.0, shifted: true, rotated: true, noisy: false },
    CatalogRow { id: "f14", raw: RawFunction::SchwefelSineSqrt, lo: -100.0, hi: 100.0, bias: 400.0, shifted: true, rotated: true, noisy: false },
    CatalogRow { id: "f15", raw: RawFunction::Katsuura, lo: -100.0, hi: 100.0, bias: 500.0, shifted: true, rotated: true, noisy: false },
];

/// The twelve implemented suite functions at the requested dimension.
///
/// Shifts are drawn uniformly from the central 80% of each domain and
/// rotations from seeded Gram-Schmidt orthogonalisation; function `idx` uses
/// the child stream `(suite_seed, idx)` so the catalog is reproducible.
pub fn suite_catalog<R: Scalar>(dim: usize, suite_seed: u64) -> Result<Vec<BenchmarkEntry<R>>> {
    if dim < 2 {
        return Err(Error::ParameterDomain(
            "suite dimension must be at least 2".into(),
        ));
    }
    let mut out = Vec::with_capacity(CATALOG.len());
    for (idx, row) in CATALOG.iter().enumerate() {
        let mut rng = RngStream::derive(suite_seed, idx as u64);
        let lower = vec![R::of(row.lo); dim];
        let upper = vec![R::of(row.hi); dim];
        let width = row.hi - row.lo;
        let shift: Vec<R> = if row.shifted {
            (0..dim)
                .map(|_| R::of(row.lo + width * (0.1 + 0.8 * rng.next_f64())))
                .collect()
        } else {
            // zero shift must still sit strictly inside the domain
            vec![R::of((row.lo + row.hi) / 2.0 * 0.0); dim]
        };
        let rotation = if row.rotated {
            random_orthogonal_matrix(dim, &mut rng)?
        } else {
            Matrix::identity(dim)
        };
        let spec = TransformSpec {
            shift,
            rotation,
            bias: R::of(row.bias),
            noise: row.noisy,
        };
        let problem = make_transformed(row.raw, lower, upper, spec)?;
        out.push(BenchmarkEntry { id: row.id, problem });
    }
    Ok(out)
}

/// Look up a single suite entry by id (`f1` .. `f7`, `f11` .. `f15`).
pub fn suite_problem<R: Scalar>(
    id: &str,
    dim: usize,
    suite_seed: u64,
) -> Result<ObjectiveProblem<R>> {
    let catalog = suite_catalog(dim, suite_seed)?;
    catalog
        .into_iter()
        .find(|e| e.id == id)
        .map(|e| e.problem)
        .ok_or_else(|| Error::UnknownFunction(id.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::clamp_and_snap;

    #[test]
    fn raw_minima_at_origin() {
        for f in RawFunction::ALL {
            for d in [2usize, 10] {
                let x = vec![0.0f64; d];
                let v = f.eval(&x);
                assert!(
                    v.abs() < 1e-9,
                    "{} at origin (D={d}) = {v}",
                    f.name()
                );
            }
        }
    }

    #[test]
    fn ackley_zero_at_origin() {
        let v: f64 = eval_raw("ackley", &[0.0; 10]).unwrap();
        assert!(v.abs() < 1e-12, "ackley(0) = {v}");
    }

    #[test]
    fn schwefel_2_22_hand_value() {
        let v: f64 = eval_raw("schwefel_2_22", &[1.0, 1.0]).unwrap();
        assert!((v - 3.0).abs() < 1e-12);
    }

    #[test]
    fn forest_zero_at_origin() {
        let v: f64 = eval_raw("forest", &[0.0, 0.0]).unwrap();
        assert_eq!(v, 0.0);
    }

    #[test]
    fn unknown_name_is_an_error() {
        assert!(eval_raw::<f64>("rastrigin", &[0.0]).is_err());
    }

    #[test]
    fn raw_functions_nonnegative_on_probes() {
        let mut rng = RngStream::new(1234);
        for f in RawFunction::ALL {
            for _ in 0..2000 {
                let x: Vec<f64> = (0..10).map(|_| rng.uniform(-100.0, 100.0)).collect();
                let v = f.eval(&x);
                assert!(
                    v >= -1e-9,
                    "{} negative at probe: {v}",
                    f.name()
                );
            }
        }
    }

    #[test]
    fn transformed_minimum_is_bias_at_shift() {
        let mut rng = RngStream::new(5);
        let spec = TransformSpec::<f64> {
            shift: vec![0.0; 10],
            rotation: Matrix::identity(10),
            bias: -450.0,
            noise: false,
        };
        let p = make_transformed(
            RawFunction::Sphere,
            vec![-100.0; 10],
            vec![100.0; 10],
            spec,
        )
        .unwrap();
        assert_eq!(p.raw_objective(&vec![0.0; 10], &mut rng), -450.0);
        assert_eq!(p.known_min, Some(-450.0));
    }

    #[test]
    fn identity_transform_matches_raw_on_probes() {
        let mut rng = RngStream::new(6);
        for f in [RawFunction::Ackley, RawFunction::Griewank, RawFunction::Katsuura] {
            let p = make_transformed(
                f,
                vec![-10.0; 5],
                vec![10.0; 5],
                TransformSpec::identity(5, 0.0),
            )
            .unwrap();
            for _ in 0..50 {
                let x: Vec<f64> = (0..5).map(|_| rng.uniform(-10.0, 10.0)).collect();
                let a = p.raw_objective(&x, &mut rng);
                let b = f.eval(&x);
                assert!((a - b).abs() <= 1e-12 * (1.0 + b.abs()));
            }
        }
    }

    #[test]
    fn bent_cigar_bias_at_shift() {
        let mut rng = RngStream::new(7);
        let rotation = random_orthogonal_matrix(6, &mut rng).unwrap();
        let spec = TransformSpec::<f64> {
            shift: vec![0.0; 6],
            rotation,
            bias: 100.0,
            noise: false,
        };
        let p = make_transformed(RawFunction::BentCigar, vec![-100.0; 6], vec![100.0; 6], spec)
            .unwrap();
        let v = p.raw_objective(&vec![0.0; 6], &mut rng);
        assert!((v - 100.0).abs() < 1e-9, "value at shift {v}");
    }

    #[test]
    fn catalog_shape_and_biases() {
        let catalog = suite_catalog::<f64>(10, DEFAULT_SUITE_SEED).unwrap();
        assert_eq!(catalog.len(), 12);
        let expect: [(&str, f64); 12] = [
            ("f1", -450.0), ("f2", 0.0), ("f3", 0.0), ("f4", -450.0), ("f5", 0.0),
            ("f6", 390.0), ("f7", -180.0), ("f11", 100.0), ("f12", 200.0),
            ("f13", 300.0), ("f14", 400.0), ("f15", 500.0),
        ];
        for (entry, (id, bias)) in catalog.iter().zip(expect) {
            assert_eq!(entry.id, id);
            assert_eq!(entry.problem.known_min, Some(bias));
        }
        // f5 domain per the suite definition
        let f5 = &catalog[4].problem;
        assert!(f5.lower.iter().all(|&v| v == -10.0));
        assert!(f5.upper.iter().all(|&v| v == 10.0));
        assert!(suite_catalog::<f64>(1, DEFAULT_SUITE_SEED).is_err());
    }

    #[test]
    fn noiseless_catalog_minimum_attained_and_lower_bounded() {
        let mut rng = RngStream::new(99);
        let catalog = suite_catalog::<f64>(10, DEFAULT_SUITE_SEED).unwrap();
        for entry in &catalog {
            if entry.id == "f4" {
                continue; // noisy entry handled separately
            }
            let p = &entry.problem;
            let bias = p.known_min.unwrap();
            // objective at the shift equals bias (within fp noise of the
            // rotation product for rotated entries)
            let shift = probe_shift(p, &mut rng);
            let at_shift = p.raw_objective(&shift, &mut rng);
            assert!(
                (at_shift - bias).abs() <= 1e-9_f64.max(bias.abs() * 1e-12),
                "{}: value at shift {at_shift} vs bias {bias}",
                entry.id
            );
            for _ in 0..10_000 {
                let x: Vec<f64> = (0..p.dim)
                    .map(|d| rng.uniform(p.lower[d], p.upper[d]))
                    .collect();
                let v = p.raw_objective(&x, &mut rng);
                assert!(
                    v >= bias - 1e-9,
                    "{}: probe below bias: {v} < {bias}",
                    entry.id
                );
            }
        }
    }

    /// Recover the shift point of a transformed problem by minimising the
    /// centred argument: the catalog is rebuilt with the same child stream,
    /// mirroring suite_catalog's construction order.
    fn probe_shift(p: &ObjectiveProblem<f64>, _rng: &mut RngStream) -> Vec<f64> {
        // rebuild the shift exactly as suite_catalog drew it
        let idx = CATALOG.iter().position(|r| r.raw.name() == p.name).unwrap();
        let row = &CATALOG[idx];
        let mut rng = RngStream::derive(DEFAULT_SUITE_SEED, idx as u64);
        let width = row.hi - row.lo;
        if row.shifted {
            (0..p.dim)
                .map(|_| row.lo + width * (0.1 + 0.8 * rng.next_f64()))
                .collect()
        } else {
            vec![0.0; p.dim]
        }
    }

    #[test]
    fn f4_noise_raises_mean_value() {
        let catalog = suite_catalog::<f64>(10, DEFAULT_SUITE_SEED).unwrap();
        let f4 = &catalog[3].problem;
        assert_eq!(f4.known_min, Some(-450.0));
        let mut rng = RngStream::new(11);
        let x: Vec<f64> = (0..10).map(|_| rng.uniform(-100.0, 100.0)).collect();
        // noiseless pre-bias value recovered by subtracting the bias from a
        // no-noise reconstruction: evaluate the same point many times and
        // compare the sample mean against the minimum observation
        let vals: Vec<f64> = (0..10_000).map(|_| f4.raw_objective(&x, &mut rng)).collect();
        let mean = vals.iter().sum::<f64>() / vals.len() as f64;
        let min = vals.iter().cloned().fold(f64::INFINITY, f64::min);
        // multiplicative factor >= 1 almost surely, so the mean sits above
        // the (nearly noise-free) minimum observation
        assert!(mean >= min, "mean {mean} vs min {min}");
        assert!(mean > min + 1e-6, "noise appears inactive: mean {mean}, min {min}");
        // and at the shift the noise multiplies a zero pre-bias value
        let idx = 3;
        let mut srng = RngStream::derive(DEFAULT_SUITE_SEED, idx as u64);
        let shift: Vec<f64> = (0..10)
            .map(|_| -100.0 + 200.0 * (0.1 + 0.8 * srng.next_f64()))
            .collect();
        let at_shift = f4.raw_objective(&shift, &mut rng);
        assert!((at_shift + 450.0).abs() < 1e-9);
    }

    #[test]
    fn sphere_rotation_invariance() {
        let mut rng = RngStream::new(21);
        let m = random_orthogonal_matrix::<f64>(10, &mut rng).unwrap();
        for _ in 0..100 {
            let x: Vec<f64> = (0..10).map(|_| rng.uniform(-100.0, 100.0)).collect();
            let direct = RawFunction::Sphere.eval(&x);
            let rotated = RawFunction::Sphere.eval(&m.mul_vec(&x));
            assert!(
                (direct - rotated).abs() <= 1e-9 * direct.abs().max(1.0),
                "direct {direct} vs rotated {rotated}"
            );
        }
    }

    #[test]
    fn weierstrass_periodic_identity() {
        let mut rng = RngStream::new(22);
        // per-coordinate period is 1 for b = 3, so +/- 2 leaves it unchanged
        for _ in 0..50 {
            let x: Vec<f64> = (0..5).map(|_| rng.uniform(-3.0, 3.0)).collect();
            let v = RawFunction::Weierstrass.eval(&x);
            for d in 0..5 {
                let mut shifted = x.clone();
                shifted[d] += 2.0;
                let vs = RawFunction::Weierstrass.eval(&shifted);
                assert!(
                    (v - vs).abs() <= 1e-9,
                    "period violated in dim {d}: {v} vs {vs}"
                );
            }
        }
    }

    #[test]
    fn transform_rejects_shift_outside_domain() {
        let spec = TransformSpec::<f64> {
            shift: vec![150.0; 4],
            rotation: Matrix::identity(4),
            bias: 0.0,
            noise: false,
        };
        assert!(
            make_transformed(RawFunction::Sphere, vec![-100.0; 4], vec![100.0; 4], spec).is_err()
        );
    }

    #[test]
    fn snap_is_noop_for_continuous_suite_problems() {
        let catalog = suite_catalog::<f64>(4, DEFAULT_SUITE_SEED).unwrap();
        let p = &catalog[0].problem;
        let x = vec![3.25, -7.5, 0.0, 99.9];
        assert_eq!(clamp_and_snap(&x, p), x);
    }
}
