//! Closed-form matrix integral kernels and the Monte Carlo oracles that
//! validate them.
//!
//! The centerpiece is the recursive derivative kernel for the 2×2
//! matrix-argument confluent hypergeometric function: with `x₁(y) ≥ x₂(y)`
//! the eigenvalues of `A + By`,
//!
//! ```text
//! φ_{A,B,a}(y) = ₁F̃₁(a; a+2; A + By) = Δ(y) / h(y),
//! Δ(y) = x₁·₁F₁(a;a+2;x₁)·₁F₁(a−1;a+1;x₂) − x₂·₁F₁(a;a+2;x₂)·₁F₁(a−1;a+1;x₁),
//! h(y) = x₁(y) − x₂(y),
//! ```
//!
//! and the derivatives `φ⁽ᵖ⁾(0)` follow from a Leibniz rearrangement fed by
//! Taylor jets of `x₁`, `x₂`. On top of it sit the closed forms for trace
//! integrals over the positive-definite cone (rank-one weights, 2×2 trace
//! powers with Gegenbauer factors, the 3×3 second-elementary-symmetric
//! weight, and the two-trace 2×2 integral over partitions), each paired with
//! a seeded Monte Carlo expectation oracle.
//!
//! Every evaluator here is pure and deterministic; the oracles take explicit
//! seeds.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hermitian::{tr_prod, ComplexMatrix, HermitianMatrix};
use crate::mc::{complex_gaussian_matrix, uniform_f64, RngSpec};
use crate::special::{
    elem_sym_cos2_tau, gegenbauer, ln_gamma, mv_gamma_ln, pochhammer, SeriesOptions,
};
use crate::taylor::{jet_compose_1f1, TaylorJet};

/// Relative eigenvalue gap below which `x₁(0) − x₂(0)` divisions are refused.
pub const DEGENERATE_GAP_TOL: f64 = 1e-9;

/// Which Pochhammer prefactor the two-trace integral uses per partition
/// τ = (t₁, t−t₁).
///
/// The published statement and its derivation disagree; the Monte Carlo
/// oracle confirms [`PochhammerVariant::Appendix`], which is the default
/// everywhere. The statement form stays available as a diagnostic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PochhammerVariant {
    /// `[a]_τ = (a)_{t₁}·(a−1)_{t−t₁}` (oracle-confirmed).
    #[default]
    Appendix,
    /// `(a)_{t₁}·(a)_{t−t₁}` as printed in the statement.
    Statement,
}

impl PochhammerVariant {
    fn second_base(&self, a: f64) -> f64 {
        match self {
            PochhammerVariant::Appendix => a - 1.0,
            PochhammerVariant::Statement => a,
        }
    }
}

/// φ and h derivatives at y = 0 for one (A, B, a) triple.
#[derive(Debug, Clone)]
pub struct PhiDerivatives {
    pub a: f64,
    pub order: usize,
    /// φ⁽⁰⁾(0) … φ⁽ᵖ⁾(0)
    pub values: Vec<f64>,
    /// h⁽⁰⁾(0) … h⁽ᵖ⁾(0) with h(y) = x₁(y) − x₂(y)
    pub h_derivs: Vec<f64>,
}

/// Loop-index bundle for the nested partition sums shared by the two-trace
/// integral and the gamma-Wishart theorems: partition leads, and the derived
/// integers ε and ν.
#[derive(Debug, Clone, Copy)]
pub struct TermIndex {
    /// Outer zonal order (k for κ-partitions, t for τ-partitions).
    pub order: usize,
    /// Partition lead (k₁ or t₁).
    pub lead: usize,
    /// Factorization index (l or i).
    pub inner: usize,
    /// ε_{lead,inner} = 2·lead − order − 2·inner.
    pub epsilon_li: usize,
    /// ε_lead = lead − inner.
    pub epsilon_l: usize,
}

/// Iterates the factorization indices for a two-part partition
/// (lead, order − lead): `inner = 0 ..= (2·lead − order)/2`.
pub fn partition_terms(order: usize, lead: usize) -> impl Iterator<Item = TermIndex> {
    debug_assert!(2 * lead >= order && lead <= order);
    let imax = (2 * lead - order) / 2;
    (0..=imax).map(move |inner| TermIndex {
        order,
        lead,
        inner,
        epsilon_li: 2 * lead - order - 2 * inner,
        epsilon_l: lead - inner,
    })
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    // exact in f64 for every n used by the finite sums here
    let k = k.min(n - k);
    let mut v = 1.0;
    for i in 0..k {
        v = v * (n - i) as f64 / (i + 1) as f64;
    }
    v.round()
}

/// Scalar pieces of a 2×2 Hermitian pair used by the jet recursions.
struct Pair2 {
    x1: f64,
    x2: f64,
    tr_b: f64,
    det_b: f64,
    /// |A|·tr(BA⁻¹) = tr(A)tr(B) − tr(BA), finite even for singular A
    tr_b_adj_a: f64,
}

fn pair2(a_mat: &HermitianMatrix, b_mat: &HermitianMatrix) -> Result<Pair2> {
    if a_mat.dim() != 2 || b_mat.dim() != 2 {
        return Err(Error::Domain("the derivative kernel is specific to 2×2 matrices".into()));
    }
    let tr_a = a_mat.trace();
    let det_a = a_mat.det();
    let disc = (tr_a * tr_a / 4.0 - det_a).max(0.0).sqrt();
    let x1 = tr_a / 2.0 + disc;
    let x2 = tr_a / 2.0 - disc;
    let gap = x1 - x2;
    let threshold = DEGENERATE_GAP_TOL * (x1.abs() + x2.abs());
    if gap < threshold || gap == 0.0 {
        return Err(Error::DegenerateEigenvalues { gap, threshold });
    }
    Ok(Pair2 {
        x1,
        x2,
        tr_b: b_mat.trace(),
        det_b: b_mat.det(),
        tr_b_adj_a: tr_a * b_mat.trace() - tr_prod(b_mat, a_mat),
    })
}

/// Taylor jets (coefficient form) of the eigenvalues x₁(y) ≥ x₂(y) of
/// `A + By`, to order `p`.
///
/// The raw derivatives follow the closed j = 1 and j = 2 forms and the
/// binomial convolution for j ≥ 3; `x₂⁽ʲ⁾(0) = −x₁⁽ʲ⁾(0)` for j ≥ 2.
pub fn x_jets(
    a_mat: &HermitianMatrix,
    b_mat: &HermitianMatrix,
    p: usize,
) -> Result<(TaylorJet, TaylorJet)> {
    let pr = pair2(a_mat, b_mat)?;
    let h0 = pr.x1 - pr.x2;
    let mut d1 = vec![pr.x1];
    let mut d2 = vec![pr.x2];
    for j in 1..=p {
        let v = match j {
            1 => (pr.x1 * pr.tr_b - pr.tr_b_adj_a) / h0,
            2 => 2.0 * (d1[1] * d2[1] - pr.det_b) / h0,
            _ => {
                let mut s = 0.0;
                for k in 1..j {
                    s += binomial(j, k) * d1[j - k] * d2[k];
                }
                s / h0
            }
        };
        d1.push(v);
        d2.push(if j == 1 { pr.tr_b - v } else { -v });
    }
    Ok((TaylorJet::from_derivatives(&d1)?, TaylorJet::from_derivatives(&d2)?))
}

/// φ⁽⁰⁾(0) … φ⁽ᵖ⁾(0) for φ(y) = ₁F̃₁(a; a+2; A + By), by jet composition of
/// Δ(y) and the Leibniz rearrangement of h·φ = Δ.
pub fn phi_derivatives(
    a_mat: &HermitianMatrix,
    b_mat: &HermitianMatrix,
    a: f64,
    p: usize,
    opts: &SeriesOptions,
) -> Result<PhiDerivatives> {
    if a <= 1.0 {
        return Err(Error::Domain(format!("phi kernel needs Re(a) > 1, got {a}")));
    }
    let (x1, x2) = x_jets(a_mat, b_mat, p)?;
    let f1 = jet_compose_1f1(a, a + 2.0, &x1, opts)?;
    let f2 = jet_compose_1f1(a - 1.0, a + 1.0, &x2, opts)?;
    let g1 = jet_compose_1f1(a, a + 2.0, &x2, opts)?;
    let g2 = jet_compose_1f1(a - 1.0, a + 1.0, &x1, opts)?;
    let delta_jet = x1.mul(&f1)?.mul(&f2)?.sub(&x2.mul(&g1)?.mul(&g2)?)?;
    let delta = delta_jet.derivatives();
    let d1 = x1.derivatives();
    let d2 = x2.derivatives();
    let h: Vec<f64> = d1.iter().zip(&d2).map(|(a, b)| a - b).collect();
    let mut phi = vec![delta[0] / h[0]];
    for k in 1..=p {
        let mut s = delta[k];
        for j in 1..=k {
            s -= binomial(k, j) * phi[k - j] * h[j];
        }
        phi.push(s / h[0]);
    }
    Ok(PhiDerivatives { a, order: p, values: phi, h_derivs: h })
}

/// Coincident-eigenvalue policy: when the eigenvalues of `A` are too close
/// for the kernel, shift by ±ε/2 along its eigenvector axes
/// (ε = 1e−7·tr(A)), i.e. add ε·diag(1,−1)/2 in the eigenbasis of `A`.
///
/// Returns the (possibly) adjusted matrix and whether a shift was applied.
pub fn perturb_if_degenerate(a_mat: &HermitianMatrix) -> Result<(HermitianMatrix, bool)> {
    let eig = a_mat.eigvals();
    let m = a_mat.dim();
    let (lo, hi) = (eig.values[0], eig.values[m - 1]);
    let gap = hi - lo;
    if gap >= DEGENERATE_GAP_TOL * (lo.abs() + hi.abs()) && gap > 0.0 {
        return Ok((a_mat.clone(), false));
    }
    let mut eps = 1e-7 * a_mat.trace();
    if eps == 0.0 {
        eps = 1e-7 * a_mat.frob_norm();
    }
    if eps == 0.0 {
        return Err(Error::DegenerateEigenvalues { gap, threshold: f64::MIN_POSITIVE });
    }
    let v_lo: Vec<Complex64> = (0..m).map(|i| eig.vectors[(i, 0)]).collect();
    let v_hi: Vec<Complex64> = (0..m).map(|i| eig.vectors[(i, m - 1)]).collect();
    let shift = HermitianMatrix::outer(&v_hi).sub(&HermitianMatrix::outer(&v_lo)).scale(eps / 2.0);
    Ok((a_mat.add(&shift), true))
}

/// Integral of `|X|^{a−2}·etr(AX)·tr^p(BX)` over the matrix interval
/// `0 < X < I₂`: the prefactor `Γ̃₂(a)Γ̃₂(2)/Γ̃₂(a+2)` times φ⁽ᵖ⁾(0).
pub fn incomplete_trace_integral(
    a_mat: &HermitianMatrix,
    b_mat: &HermitianMatrix,
    a: f64,
    p: usize,
    opts: &SeriesOptions,
) -> Result<f64> {
    let phi = phi_derivatives(a_mat, b_mat, a, p, opts)?;
    let ln_pref = mv_gamma_ln(2, a)? + mv_gamma_ln(2, 2.0)? - mv_gamma_ln(2, a + 2.0)?;
    Ok(ln_pref.exp() * phi.values[p])
}

fn require_pd(a_mat: &HermitianMatrix) -> Result<()> {
    a_mat.cholesky_lower().map(|_| ())
}

fn require_rank_one(r_mat: &HermitianMatrix) -> Result<(f64, Vec<Complex64>)> {
    r_mat.rank_one_factor(1e-8)
}

/// Integral of `etr(−AX)·tr(X)·|X|^{a−m}·tr^t(RX)` over the positive-definite
/// cone, for rank-one `R`:
/// `(a)_t·Γ̃_m(a)·tr^t(RA⁻¹)·|A|^{−a}·(t·tr(RA⁻²)/tr(RA⁻¹) + a·tr(A⁻¹))`.
pub fn lemma_trace_integral(
    a_mat: &HermitianMatrix,
    r_mat: &HermitianMatrix,
    a: f64,
    t: usize,
) -> Result<f64> {
    let m = a_mat.dim();
    require_pd(a_mat)?;
    require_rank_one(r_mat)?;
    if a <= m as f64 - 1.0 {
        return Err(Error::Domain(format!("trace integral needs Re(a) > m−1, got a = {a}")));
    }
    let inv = a_mat.inverse()?;
    let inv2 = HermitianMatrix::from_symmetrized(&inv.mul_herm(&inv));
    let tr_ra = tr_prod(r_mat, &inv);
    let tr_ra2 = tr_prod(r_mat, &inv2);
    let bracket = if t == 0 {
        a * inv.trace()
    } else {
        t as f64 * tr_ra2 / tr_ra + a * inv.trace()
    };
    let ln = mv_gamma_ln(m, a)? - a * a_mat.det().ln();
    Ok(pochhammer(a, t) * ln.exp() * tr_ra.powi(t as i32) * bracket)
}

/// 2×2 trace-power integral of `etr(−AX)·tr^p(X)·|X|^{a−2}·tr^t(RX)` for
/// rank-one `R`: a finite sum with Gegenbauer factors
/// `C^{a+t}_{p−k}(tr(A)/2√|A|)`.
pub fn lemma_2x2_trace_powers(
    a_mat: &HermitianMatrix,
    r_mat: &HermitianMatrix,
    a: f64,
    p: usize,
    t: usize,
) -> Result<f64> {
    if a_mat.dim() != 2 {
        return Err(Error::Domain("trace-power integral is specific to m = 2".into()));
    }
    require_pd(a_mat)?;
    require_rank_one(r_mat)?;
    if a <= 1.0 {
        return Err(Error::Domain(format!("trace-power integral needs Re(a) > 1, got {a}")));
    }
    let det_a = a_mat.det();
    let inv = a_mat.inverse()?;
    let tr_ra = tr_prod(r_mat, &inv);
    let tr_r = r_mat.trace();
    let beta = a_mat.trace() / (2.0 * det_a.sqrt());
    let mut s = 0.0;
    for k in 0..=p.min(t) {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        s += sign * binomial(t, k) / det_a.powf(k as f64 / 2.0)
            * tr_ra.powi((t - k) as i32)
            * tr_r.powi(k as i32)
            * gegenbauer(p - k, a + t as f64, beta);
    }
    let ln = mv_gamma_ln(2, a)? - (a + p as f64 / 2.0) * det_a.ln();
    Ok(factorial(p) * pochhammer(a, t) * ln.exp() * s)
}

/// 3×3 integral of `etr(−AX)·tr^t(RX)·C_{1,1,0}(X)` for rank-one PSD `R`,
/// with `C_{1,1,0}(X) = |X|·tr(X⁻¹)`:
/// `Γ̃₃(4)·|A|⁻⁴·((4)_t·tr^t(RA⁻¹)·tr(A) − t·(4)_{t−1}·tr^{t−1}(RA⁻¹)·tr(R))`.
///
/// The second summand carries a minus sign; the Monte Carlo oracle fixes the
/// sign (the series expansion in the derivation contributes a factor
/// (−1)^{2t−1} there).
pub fn lemma_c110_integral(
    a_mat: &HermitianMatrix,
    r_mat: &HermitianMatrix,
    t: usize,
) -> Result<f64> {
    if a_mat.dim() != 3 {
        return Err(Error::Domain("the C_{1,1,0} integral is specific to m = 3".into()));
    }
    require_pd(a_mat)?;
    require_rank_one(r_mat)?;
    let inv = a_mat.inverse()?;
    let tr_ra = tr_prod(r_mat, &inv);
    let ln = mv_gamma_ln(3, 4.0)? - 4.0 * a_mat.det().ln();
    let mut bracket = pochhammer(4.0, t) * tr_ra.powi(t as i32) * a_mat.trace();
    if t >= 1 {
        bracket -= t as f64 * pochhammer(4.0, t - 1) * tr_ra.powi(t as i32 - 1) * r_mat.trace();
    }
    Ok(ln.exp() * bracket)
}

/// 2×2 two-trace integral of `etr(−AX)·tr^p(BX)·tr^t(X)·|X|^{a−2}` over the
/// positive-definite cone: a triple-nested finite sum over partitions
/// τ = (t₁, t−t₁) with elementary-symmetric-cos² coefficients and Gegenbauer
/// factors in `tr(A⁻¹B)/2√|A⁻¹B|`.
pub fn lemma_two_trace(
    a_mat: &HermitianMatrix,
    b_mat: &HermitianMatrix,
    a: f64,
    p: usize,
    t: usize,
    variant: PochhammerVariant,
) -> Result<f64> {
    if a_mat.dim() != 2 || b_mat.dim() != 2 {
        return Err(Error::Domain("the two-trace integral is specific to m = 2".into()));
    }
    require_pd(a_mat)?;
    require_pd(b_mat)?;
    if a <= 1.0 {
        return Err(Error::Domain(format!("two-trace integral needs Re(a) > 1, got {a}")));
    }
    let det_a = a_mat.det();
    let det_b = b_mat.det();
    let tr_a = a_mat.trace();
    let tr_b = b_mat.trace();
    let inv_a = a_mat.inverse()?;
    let tr_ainv_b = tr_prod(&inv_a, b_mat);
    let det_ainv_b = det_b / det_a;
    let beta = tr_ainv_b / (2.0 * det_ainv_b.sqrt());
    let mut total = 0.0;
    for t1 in t.div_ceil(2)..=t {
        let pref = pochhammer(a, t1) * pochhammer(variant.second_base(a), t - t1)
            * (2 * t1 + 1 - t) as f64
            / (factorial(t1 + 1) * factorial(t - t1));
        let e = elem_sym_cos2_tau(t1, t)?;
        let mut inner = 0.0;
        for idx in partition_terms(t, t1) {
            let (eps_i, eps) = (idx.epsilon_li, idx.epsilon_l);
            for k in 0..=p.min(eps_i) {
                let sign = if (k + idx.inner) % 2 == 0 { 1.0 } else { -1.0 };
                inner += sign
                    * 4.0f64.powi(idx.inner as i32)
                    * e[idx.inner]
                    * binomial(eps_i, k)
                    * tr_a.powi((eps_i - k) as i32)
                    * tr_b.powi(k as i32)
                    * det_a.powf(-(eps as f64) - (p - k) as f64 / 2.0)
                    * det_b.powf((p - k) as f64 / 2.0)
                    * gegenbauer(p - k, eps as f64 + a, beta);
            }
        }
        total += pref * inner;
    }
    let ln = mv_gamma_ln(2, a)? - a * det_a.ln();
    Ok(factorial(p) * factorial(t) * ln.exp() * total)
}

/// Monte Carlo estimate of `∫ etr(−AX)·|X|^{a−m}·f(X) dX` over the
/// positive-definite cone.
///
/// For integer `a ≥ m` the weight is a complex Wishart density up to
/// normalization: the estimate is `Γ̃_m(a)·|A|^{−a}·E[f(X)]` with
/// `X = GᴴG`, `G` an a×m standard complex Gaussian times `chol(A⁻¹)ᴴ`.
/// Returns `(mean, standard error)`.
pub fn mc_expectation_oracle<F: Fn(&HermitianMatrix) -> f64>(
    a_mat: &HermitianMatrix,
    a: usize,
    f: F,
    samples: usize,
    seed: u64,
) -> Result<(f64, f64)> {
    let m = a_mat.dim();
    if a < m {
        return Err(Error::InvalidDof { dof: a, dim: m });
    }
    if samples < 2 {
        return Err(Error::Domain("oracle needs at least two samples".into()));
    }
    let l_adj = a_mat.inverse()?.cholesky_lower()?.adjoint();
    let spec = RngSpec::new(seed);
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    let block = 8192u64;
    let blocks = (samples as u64).div_ceil(block);
    for b in 0..blocks {
        let mut rng = spec.block_rng(b);
        let in_block = block.min(samples as u64 - b * block);
        for _ in 0..in_block {
            let g = complex_gaussian_matrix(&mut rng, a, m).mul(&l_adj);
            let v = f(&g.gram());
            sum += v;
            sum_sq += v * v;
        }
    }
    let n = samples as f64;
    let mean = sum / n;
    let var = ((sum_sq - sum * sum / n) / (n - 1.0)).max(0.0);
    let c = (mv_gamma_ln(m, a as f64)? - a as f64 * a_mat.det().ln()).exp();
    Ok((c * mean, c * (var / n).sqrt()))
}

/// Monte Carlo estimate of `∫_{0<X<I₂} |X|^{a−2}·etr(AX)·tr^p(BX) dX` by
/// rejection sampling.
///
/// Proposal: eigen-parametrized `X = U·diag(λ₁,λ₂)·Uᴴ` with λᵢ uniform on
/// (0, 1) and `U` Haar; the eigendecomposition Jacobian `(λ₁−λ₂)² ≤ 1` is the
/// acceptance weight, after which `X` is exactly uniform on the region and
/// the integral is the region volume `π/12` times the accepted mean.
pub fn mc_region_oracle(
    a_mat: &HermitianMatrix,
    b_mat: &HermitianMatrix,
    a: f64,
    p: usize,
    samples: usize,
    seed: u64,
) -> Result<(f64, f64)> {
    if a_mat.dim() != 2 || b_mat.dim() != 2 {
        return Err(Error::Domain("the region oracle is specific to m = 2".into()));
    }
    if a <= 1.0 {
        return Err(Error::Domain(format!("region oracle needs Re(a) > 1, got {a}")));
    }
    if samples < 2 {
        return Err(Error::Domain("oracle needs at least two samples".into()));
    }
    let spec = RngSpec::new(seed);
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    let mut accepted = 0usize;
    let block = 8192u64;
    let blocks = (samples as u64).div_ceil(block);
    for bi in 0..blocks {
        let mut rng = spec.block_rng(bi);
        let in_block = block.min(samples as u64 - bi * block);
        for _ in 0..in_block {
            let l1 = uniform_f64(&mut rng);
            let l2 = uniform_f64(&mut rng);
            let w = (l1 - l2) * (l1 - l2);
            if uniform_f64(&mut rng) >= w {
                continue;
            }
            let u = haar_2x2(&mut rng);
            let mut x = ComplexMatrix::zeros(2, 2);
            for i in 0..2 {
                for j in 0..2 {
                    x[(i, j)] = u[(i, 0)] * l1 * u[(j, 0)].conj() + u[(i, 1)] * l2 * u[(j, 1)].conj();
                }
            }
            let xh = HermitianMatrix::from_symmetrized(&x);
            let det = l1 * l2;
            let v = det.powf(a - 2.0)
                * tr_prod(&xh, a_mat).exp()
                * tr_prod(&xh, b_mat).powi(p as i32);
            sum += v;
            sum_sq += v * v;
            accepted += 1;
        }
    }
    let rate = accepted as f64 / samples as f64;
    if rate < 1e-3 {
        return Err(Error::InsufficientAcceptance { rate });
    }
    let n = accepted as f64;
    let mean = sum / n;
    let var = ((sum_sq - sum * sum / n) / (n - 1.0)).max(0.0);
    let vol = std::f64::consts::PI / 12.0;
    Ok((vol * mean, vol * (var / n).sqrt()))
}

/// Haar-distributed 2×2 unitary via Gram–Schmidt on a complex Ginibre matrix.
fn haar_2x2(rng: &mut rand_chacha::ChaCha12Rng) -> ComplexMatrix {
    let g = complex_gaussian_matrix(rng, 2, 2);
    let mut u = ComplexMatrix::zeros(2, 2);
    let n0 = (g[(0, 0)].norm_sqr() + g[(1, 0)].norm_sqr()).sqrt();
    u[(0, 0)] = g[(0, 0)] / n0;
    u[(1, 0)] = g[(1, 0)] / n0;
    let ip = u[(0, 0)].conj() * g[(0, 1)] + u[(1, 0)].conj() * g[(1, 1)];
    let mut v0 = g[(0, 1)] - ip * u[(0, 0)];
    let mut v1 = g[(1, 1)] - ip * u[(1, 0)];
    let n1 = (v0.norm_sqr() + v1.norm_sqr()).sqrt();
    v0 /= n1;
    v1 /= n1;
    u[(0, 1)] = v0;
    u[(1, 1)] = v1;
    u
}

/// ln n! helper shared by the c.d.f. modules.
pub(crate) fn ln_factorial(n: usize) -> f64 {
    ln_gamma(n as f64 + 1.0)
}
