//! Seeded deterministic random streams and the stochastic primitives used by
//! the search moves: heavy-tailed step sampling, binary masks, index pairs and
//! random orthogonal matrices.
//!
//! The generator is SplitMix64 (Steele, Lea & Flood 2014): a single `u64` of
//! state advanced by a fixed Weyl increment and finalised with an avalanche
//! mix. The same seed therefore yields the same `u64` sequence on every
//! platform; derived floating-point draws are identical up to platform libm
//! differences in `ln`/`cos`/`sin` (at most a few ulp).

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

const WEYL: u64 = 0x9E37_79B9_7F4A_7C15;

/// Avalanche finaliser used both for output mixing and stream derivation.
#[inline]
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic SplitMix64 stream. Single-owner mutable state; create one
/// per trial and never share it between concurrent activities.
#[derive(Debug, Clone)]
pub struct RngStream {
    state: u64,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Child stream for `(master seed, stream index)`.
    ///
    /// The derivation runs the index through the master-seeded generator
    /// position: `mix64(master + (index + 1) * WEYL)` becomes the child seed,
    /// so distinct indices never share state with each other or the master.
    pub fn derive(master_seed: u64, stream_index: u64) -> Self {
        let child = mix64(
            master_seed.wrapping_add(stream_index.wrapping_add(1).wrapping_mul(WEYL)),
        );
        Self::new(child)
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(WEYL);
        mix64(self.state)
    }

    /// Uniform in `[0, 1)` with the full 53-bit mantissa.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[lo, hi)`.
    #[inline]
    pub fn uniform<R: Scalar>(&mut self, lo: R, hi: R) -> R {
        lo + (hi - lo) * R::of(self.next_f64())
    }

    /// Uniform index in `[0, n)`.
    #[inline]
    pub fn below(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }

    /// Standard normal via Box-Muller; consumes exactly two uniforms.
    pub fn next_gaussian(&mut self) -> f64 {
        let u1 = self.next_f64().max(f64::MIN_POSITIVE);
        let u2 = self.next_f64();
        (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
    }

    /// In-place Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }

    /// Random permutation of `0..n`.
    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..n).collect();
        self.shuffle(&mut idx);
        idx
    }
}

/// Lanczos approximation of the gamma function (g = 7, n = 9 coefficients).
/// Accurate to ~1e-13 over the range used here (arguments in (0, 3.5)).
fn gamma(x: f64) -> f64 {
    const G: f64 = 7.0;
    const COEF: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_571_6e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        // reflection formula
        std::f64::consts::PI / ((std::f64::consts::PI * x).sin() * gamma(1.0 - x))
    } else {
        let x = x - 1.0;
        let mut acc = COEF[0];
        for (i, &c) in COEF.iter().enumerate().skip(1) {
            acc += c / (x + i as f64);
        }
        let t = x + G + 0.5;
        (2.0 * std::f64::consts::PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * acc
    }
}

/// Mantegna scale `sigma_u` for a given power-law exponent.
///
/// `sigma_u = [Gamma(1+l) sin(pi l / 2) / (Gamma((1+l)/2) l 2^((l-1)/2))]^(1/l)`
pub fn mantegna_sigma_u(lambda: f64) -> Result<f64> {
    if !(1.0 < lambda && lambda < 2.0) {
        return Err(Error::ParameterDomain(format!(
            "levy exponent lambda must lie in (1, 2), got {lambda}"
        )));
    }
    let num = gamma(1.0 + lambda) * (std::f64::consts::PI * lambda / 2.0).sin();
    let den = gamma((1.0 + lambda) / 2.0) * lambda * 2f64.powf((lambda - 1.0) / 2.0);
    Ok((num / den).powf(1.0 / lambda))
}

/// One Mantegna draw: `u / |v|^(1/lambda)` with `u ~ N(0, sigma_u^2)`,
/// `v ~ N(0, 1)`. Heavy-tailed and sign-symmetric.
pub fn mantegna_levy_step<R: Scalar>(lambda: f64, rng: &mut RngStream) -> Result<R> {
    let sampler = LevySampler::new(lambda)?;
    Ok(sampler.sample(rng))
}

/// Cached-`sigma_u` sampler for inner loops.
#[derive(Debug, Clone, Copy)]
pub struct LevySampler {
    lambda: f64,
    sigma_u: f64,
}

impl LevySampler {
    pub fn new(lambda: f64) -> Result<Self> {
        Ok(Self {
            lambda,
            sigma_u: mantegna_sigma_u(lambda)?,
        })
    }

    #[inline]
    pub fn sample<R: Scalar>(&self, rng: &mut RngStream) -> R {
        let u = rng.next_gaussian() * self.sigma_u;
        let v = rng.next_gaussian();
        R::of(u / v.abs().powf(1.0 / self.lambda))
    }
}

/// Random vector of `dim` components, each 0 or 1 with probability 1/2.
pub fn random_binary_mask(dim: usize, rng: &mut RngStream) -> Result<Vec<u8>> {
    if dim == 0 {
        return Err(Error::ParameterDomain(
            "binary mask dimension must be at least 1".into(),
        ));
    }
    Ok((0..dim).map(|_| (rng.next_u64() & 1) as u8).collect())
}

/// A uniformly random ordered pair `(j, k)` with `j != k` over `0..n`.
///
/// `_mover` is the index of the solution being moved; the pair is *not*
/// filtered against it (either element may equal it).
pub fn distinct_random_pair(
    n: usize,
    _mover: usize,
    rng: &mut RngStream,
) -> Result<(usize, usize)> {
    if n < 3 {
        return Err(Error::ParameterDomain(format!(
            "population of {n} too small for a distinct pair draw (need >= 3)"
        )));
    }
    let j = rng.below(n);
    let mut k = rng.below(n - 1);
    if k >= j {
        k += 1;
    }
    Ok((j, k))
}

/// Random orthogonal matrix by modified Gram-Schmidt on a seeded matrix of
/// standard Gaussians, with one re-orthogonalisation pass. Deterministic for
/// a fixed stream state.
pub fn random_orthogonal_matrix<R: Scalar>(dim: usize, rng: &mut RngStream) -> Result<Matrix<R>> {
    if dim == 0 {
        return Err(Error::ParameterDomain(
            "orthogonal matrix dimension must be at least 1".into(),
        ));
    }
    // columns of gaussians
    let mut cols: Vec<Vec<f64>> = (0..dim)
        .map(|_| (0..dim).map(|_| rng.next_gaussian()).collect())
        .collect();
    for pass in 0..2 {
        for c in 0..dim {
            for prev in 0..c {
                let dot: f64 = (0..dim).map(|r| cols[c][r] * cols[prev][r]).sum();
                for r in 0..dim {
                    cols[c][r] -= dot * cols[prev][r];
                }
            }
            let norm: f64 = (0..dim).map(|r| cols[c][r] * cols[c][r]).sum::<f64>().sqrt();
            if norm < 1e-12 {
                // essentially impossible for gaussian draws; re-draw the column
                if pass == 0 {
                    for r in 0..dim {
                        cols[c][r] = rng.next_gaussian();
                    }
                }
                continue;
            }
            for r in 0..dim {
                cols[c][r] /= norm;
            }
        }
    }
    let mut m = Matrix::zeros(dim);
    for c in 0..dim {
        for r in 0..dim {
            m.set(r, c, R::of(cols[c][r]));
        }
    }
    Ok(m)
}
