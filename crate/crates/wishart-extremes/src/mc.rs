//! Seeded Monte Carlo samplers for non-central Wishart and gamma-Wishart
//! eigenvalues, empirical c.d.f. construction, and analytic-vs-empirical
//! comparison statistics.
//!
//! Determinism contract: a fixed [`RngSpec`] produces a bit-identical sample
//! sequence on one build. Sampling is split into fixed-size blocks, each on
//! its own ChaCha substream, and blocks are merged in order, so the result
//! does not depend on how work is scheduled.

use num_complex::Complex64;
use rand_chacha::ChaCha12Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::gamma_wishart::GammaWishartModel;
use crate::hermitian::{ComplexMatrix, HermitianMatrix};
use crate::noncentral::NoncentralWishartModel;

/// Samples per RNG substream block.
const BLOCK: u64 = 8192;

/// Seed plus substream index; identical values reproduce identical samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RngSpec {
    pub seed: u64,
    pub stream: u64,
}

impl RngSpec {
    pub fn new(seed: u64) -> Self {
        Self { seed, stream: 0 }
    }

    /// ChaCha generator for one block of this spec's stream. Top-level
    /// streams are spaced 2³² blocks apart so they never collide.
    pub(crate) fn block_rng(&self, block: u64) -> ChaCha12Rng {
        let mut rng = ChaCha12Rng::seed_from_u64(self.seed);
        rng.set_stream((self.stream << 32).wrapping_add(block));
        rng
    }
}

/// Which extreme eigenvalue to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extreme {
    Min,
    Max,
}

impl std::fmt::Display for Extreme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Extreme::Min => "min",
            Extreme::Max => "max",
        })
    }
}

/// Sorted Monte Carlo samples with step-function c.d.f. evaluation.
#[derive(Debug, Clone)]
pub struct EmpiricalCdf {
    sorted: Vec<f64>,
}

impl EmpiricalCdf {
    pub fn from_samples(mut samples: Vec<f64>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::Domain("empirical c.d.f. needs at least one sample".into()));
        }
        if samples.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        samples.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Ok(Self { sorted: samples })
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    pub fn samples(&self) -> &[f64] {
        &self.sorted
    }

    /// Fraction of samples ≤ x.
    pub fn value_at(&self, x: f64) -> f64 {
        let idx = self.sorted.partition_point(|&s| s <= x);
        idx as f64 / self.sorted.len() as f64
    }

    /// Smallest sample with at least fraction `p` of mass at or below it.
    pub fn quantile(&self, p: f64) -> f64 {
        let n = self.sorted.len();
        let idx = ((p * n as f64).ceil() as usize).clamp(1, n) - 1;
        self.sorted[idx]
    }

    pub fn min(&self) -> f64 {
        self.sorted[0]
    }

    pub fn max(&self) -> f64 {
        *self.sorted.last().unwrap()
    }
}

/// Analytic c.d.f. values on an ascending grid.
#[derive(Debug, Clone)]
pub struct CdfCurve {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
}

impl CdfCurve {
    /// Validates equal lengths, ascending grid, and values nondecreasing
    /// within 1e−10 and inside [0, 1].
    pub fn new(grid: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if grid.len() != values.len() || grid.is_empty() {
            return Err(Error::Domain("curve grid/value length mismatch".into()));
        }
        if grid.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Domain("curve grid must ascend".into()));
        }
        if values.iter().any(|v| !(0.0..=1.0).contains(v)) {
            return Err(Error::Domain("curve values outside [0, 1]".into()));
        }
        if values.windows(2).any(|w| w[1] < w[0] - 1e-10) {
            return Err(Error::Domain("curve values decrease beyond tolerance".into()));
        }
        Ok(Self { grid, values })
    }
}

/// Max over the curve's grid of |analytic − empirical step function|.
pub fn sup_distance(curve: &CdfCurve, emp: &EmpiricalCdf) -> f64 {
    curve
        .grid
        .iter()
        .zip(&curve.values)
        .map(|(&x, &v)| (v - emp.value_at(x)).abs())
        .fold(0.0, f64::max)
}

/// Two-sample Kolmogorov–Smirnov distance (sup over all jump points).
pub fn ks_two_sample(a: &EmpiricalCdf, b: &EmpiricalCdf) -> f64 {
    let mut sup = 0.0f64;
    for &x in a.samples().iter().chain(b.samples()) {
        sup = sup.max((a.value_at(x) - b.value_at(x)).abs());
    }
    sup
}

/// Standard complex Gaussian CN(0, 1) via Box–Muller: each of the real and
/// imaginary parts carries variance 1/2, so z = √(−ln u₁)·e^{2πi·u₂}.
pub(crate) fn standard_complex_gaussian(rng: &mut ChaCha12Rng) -> Complex64 {
    // u1 in (0, 1]: guard the log; u2 in [0, 1)
    let u1 = 1.0 - uniform_f64(rng);
    let u2 = uniform_f64(rng);
    let r = (-(u1.max(f64::MIN_POSITIVE)).ln()).sqrt();
    let theta = 2.0 * std::f64::consts::PI * u2;
    Complex64::new(r * theta.cos(), r * theta.sin())
}

pub(crate) fn uniform_f64(rng: &mut ChaCha12Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

pub(crate) fn complex_gaussian_matrix(rng: &mut ChaCha12Rng, rows: usize, cols: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = standard_complex_gaussian(rng);
        }
    }
    m
}

fn extreme_eig(w: &HermitianMatrix, which: Extreme) -> f64 {
    let eig = w.eigvals();
    match which {
        Extreme::Min => eig.values[0],
        Extreme::Max => *eig.values.last().unwrap(),
    }
}

/// Draws `count` extreme eigenvalues of `W = XᴴX` with
/// `X = Υ + Z·Lᴴ`, `L = chol(Σ)`, `Z` an n×m standard complex Gaussian.
pub fn sample_ncw_eigs(
    model: &NoncentralWishartModel,
    which: Extreme,
    count: usize,
    rng: RngSpec,
) -> Result<EmpiricalCdf> {
    if count == 0 {
        return Err(Error::Domain("sample count must be at least 1".into()));
    }
    let (n, m) = (model.n(), model.m());
    let l_adj = model.sigma().cholesky_lower()?.adjoint();
    let ups = model.upsilon();
    let mut out = Vec::with_capacity(count);
    let blocks = (count as u64).div_ceil(BLOCK);
    for b in 0..blocks {
        let mut r = rng.block_rng(b);
        let in_block = BLOCK.min(count as u64 - b * BLOCK);
        for _ in 0..in_block {
            let z = complex_gaussian_matrix(&mut r, n, m);
            let x = ups.add(&z.mul(&l_adj));
            out.push(extreme_eig(&x.gram(), which));
        }
    }
    EmpiricalCdf::from_samples(out)
}

/// Draws `count` extreme eigenvalues of a gamma-Wishart matrix
/// `V = X̃ᴴX̃`, `X̃ = X̂ + X̄`.
///
/// The gamma component `G ∼ Γ_m(α, Ω)` is realized as `YᴴY` with `Y` an α×m
/// complex Gaussian of row covariance `Ω⁻¹` (matrix gamma with integer α is a
/// complex Wishart); `X̄` is the m×m Hermitian square root of `G` padded with
/// n−m zero rows, which is a valid realization because the law of `V` depends
/// on `X̄` only through `X̄ᴴX̄`.
pub fn sample_gw_eigs(
    model: &GammaWishartModel,
    which: Extreme,
    count: usize,
    rng: RngSpec,
) -> Result<EmpiricalCdf> {
    if count == 0 {
        return Err(Error::Domain("sample count must be at least 1".into()));
    }
    let (n, m, alpha) = (model.n(), model.m(), model.alpha());
    if alpha < m {
        return Err(Error::InvalidDof { dof: alpha, dim: m });
    }
    let l_sigma_adj = model.sigma().cholesky_lower()?.adjoint();
    let l_om_inv_adj = model.omega().inverse()?.cholesky_lower()?.adjoint();
    let mut out = Vec::with_capacity(count);
    let blocks = (count as u64).div_ceil(BLOCK);
    for b in 0..blocks {
        let mut r = rng.block_rng(b);
        let in_block = BLOCK.min(count as u64 - b * BLOCK);
        for _ in 0..in_block {
            let zg = complex_gaussian_matrix(&mut r, alpha, m);
            let g = zg.mul(&l_om_inv_adj).gram();
            let eig = g.eigvals();
            // m×m Hermitian square root, padded with n−m zero rows
            let mut xbar = ComplexMatrix::zeros(n, m);
            for i in 0..m {
                for j in 0..m {
                    let mut s = Complex64::ZERO;
                    for k in 0..m {
                        s += eig.vectors[(i, k)]
                            * eig.values[k].max(0.0).sqrt()
                            * eig.vectors[(j, k)].conj();
                    }
                    xbar[(i, j)] = s;
                }
            }
            let zh = complex_gaussian_matrix(&mut r, n, m);
            let x = xbar.add(&zh.mul(&l_sigma_adj));
            out.push(extreme_eig(&x.gram(), which));
        }
    }
    EmpiricalCdf::from_samples(out)
}

/// Central complex Wishart extreme-eigenvalue sampler (reference for the
/// reduction checks): `W = XᴴX`, `X` n×m complex Gaussian with row
/// covariance `C` and zero mean.
pub fn sample_central_wishart_eigs(
    cov: &HermitianMatrix,
    n: usize,
    which: Extreme,
    count: usize,
    rng: RngSpec,
) -> Result<EmpiricalCdf> {
    if count == 0 {
        return Err(Error::Domain("sample count must be at least 1".into()));
    }
    let m = cov.dim();
    if n < m {
        return Err(Error::InvalidDof { dof: n, dim: m });
    }
    let l_adj = cov.cholesky_lower()?.adjoint();
    let mut out = Vec::with_capacity(count);
    let blocks = (count as u64).div_ceil(BLOCK);
    for b in 0..blocks {
        let mut r = rng.block_rng(b);
        let in_block = BLOCK.min(count as u64 - b * BLOCK);
        for _ in 0..in_block {
            let z = complex_gaussian_matrix(&mut r, n, m);
            out.push(extreme_eig(&z.mul(&l_adj).gram(), which));
        }
    }
    EmpiricalCdf::from_samples(out)
}
