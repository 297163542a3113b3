//! Extreme-eigenvalue c.d.f.s of correlated gamma-Wishart matrices with
//! integer shape parameter.
//!
//! `V = X̃ᴴX̃` where `X̃ = X̂ + X̄`, `X̂ ∼ CN_{n,m}(0, I_n ⊗ Σ)` and
//! `X̄ᴴX̄ ∼ Γ_m(α, Ω)`. With `S = Σ⁻¹(Σ⁻¹+Ω)⁻¹Σ⁻¹` and `Q = Σ⁻¹ − S`, the
//! Kummer relation turns the matrix-argument series into a finite zonal sum
//! when α − n is a positive integer, giving fully finite closed forms:
//! the minimum for m = 2 (α > n ≥ 2) and (m, n, α) = (3, 3, 4), and the
//! maximum for m = 2 (α > n ≥ 2) through the recursive derivative kernel.
//!
//! The deep alternating sums of the m = 2 minimum are accumulated in
//! log-magnitude/sign form with a max-shifted pairwise reduction (direct
//! products overflow once α − n grows); a direct-product path exists for
//! validating the log path on small instances.

use crate::error::{Error, Result};
use crate::hermitian::{tr_prod, HermitianMatrix};
use crate::kernels::{
    partition_terms, perturb_if_degenerate, phi_derivatives, PochhammerVariant,
};
use crate::noncentral::CdfValue;
use crate::special::{elem_sym_cos2_tau, gegenbauer, ln_gamma, mv_gamma_ln, SeriesOptions};

/// Absolute |S| threshold below which S⁻¹ (needed by the (3,3,4) form) is
/// refused.
pub const SINGULAR_S_TOL: f64 = 1e-14;

/// How the finite nested sums are accumulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SumMode {
    /// Log-magnitude/sign terms, max-shifted pairwise reduction (default).
    #[default]
    LogSigned,
    /// Plain f64 products; overflows for α − n ≥ 4, kept for validating the
    /// log path.
    Direct,
}

/// One fully validated gamma-Wishart problem instance with the derived
/// matrices `S`, `Q` and the normalization `K_{m,n}` (stored in log form).
#[derive(Debug, Clone)]
pub struct GammaWishartModel {
    m: usize,
    n: usize,
    alpha: usize,
    sigma: HermitianMatrix,
    omega: HermitianMatrix,
    s_mat: HermitianMatrix,
    q_mat: HermitianMatrix,
    det_s: f64,
    det_q: f64,
    det_omega: f64,
    /// |Σ⁻¹ + Ω|
    det_shift: f64,
    k_ln: f64,
}

impl GammaWishartModel {
    /// Validates Σ, Ω (positive definite, same dimension m ∈ {2,3,4}),
    /// integer α ≥ m, n ≥ m, and derives S, Q (asserting Q ≻ 0) and
    /// ln K_{m,n}.
    pub fn new(
        n: usize,
        alpha: usize,
        sigma: HermitianMatrix,
        omega: HermitianMatrix,
    ) -> Result<Self> {
        let m = sigma.dim();
        if omega.dim() != m {
            return Err(Error::Domain(format!(
                "Ω dimension {} does not match Σ dimension {m}",
                omega.dim()
            )));
        }
        if alpha < m {
            return Err(Error::InvalidDof { dof: alpha, dim: m });
        }
        if n < m {
            return Err(Error::InvalidDof { dof: n, dim: m });
        }
        sigma.cholesky_lower()?;
        omega.cholesky_lower()?;
        let sigma_inv = sigma.inverse()?;
        let shift = sigma_inv.add(&omega);
        let shift_inv = shift.inverse()?;
        let s_mat = HermitianMatrix::from_symmetrized(
            &sigma_inv.mul_herm(&shift_inv).mul(&sigma_inv.to_complex()),
        );
        let q_mat = sigma_inv.sub(&s_mat);
        // Q = Σ⁻¹ − S ≻ 0 always holds for PD inputs; the factorization is
        // the cheapest way to assert it survived the arithmetic.
        q_mat.cholesky_lower()?;
        let det_omega = omega.det();
        let det_shift = shift.det();
        let k_ln = alpha as f64 * det_omega.ln()
            - mv_gamma_ln(m, n as f64)?
            - n as f64 * sigma.det().ln()
            - alpha as f64 * det_shift.ln();
        Ok(Self {
            m,
            n,
            alpha,
            det_s: s_mat.det(),
            det_q: q_mat.det(),
            s_mat,
            q_mat,
            sigma,
            omega,
            det_omega,
            det_shift,
            k_ln,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn sigma(&self) -> &HermitianMatrix {
        &self.sigma
    }

    pub fn omega(&self) -> &HermitianMatrix {
        &self.omega
    }

    /// S = Σ⁻¹(Σ⁻¹+Ω)⁻¹Σ⁻¹.
    pub fn s_mat(&self) -> &HermitianMatrix {
        &self.s_mat
    }

    /// Q = Σ⁻¹ − S.
    pub fn q_mat(&self) -> &HermitianMatrix {
        &self.q_mat
    }

    /// ln K_{m,n} = α·ln|Ω| − ln Γ̃_m(n) − n·ln|Σ| − α·ln|Σ⁻¹+Ω|.
    pub fn k_mn_ln(&self) -> f64 {
        self.k_ln
    }

    fn require_min_gw2(&self) -> Result<()> {
        if self.m != 2 || self.n < 2 || self.alpha <= self.n {
            return Err(Error::RegimeUnsupported(format!(
                "minimum-eigenvalue closed form needs m = 2, integer α > n ≥ 2; got (m, n, α) = \
                 ({}, {}, {})",
                self.m, self.n, self.alpha
            )));
        }
        Ok(())
    }
}

/// Signed-log accumulator with a direct-product shadow.
struct TermBag {
    terms: Vec<(f64, f64)>, // (ln magnitude, sign)
    direct: f64,
}

impl TermBag {
    fn new() -> Self {
        Self { terms: Vec::new(), direct: 0.0 }
    }

    fn push(&mut self, ln: f64, sign: f64, direct: f64) {
        if sign != 0.0 && ln > f64::NEG_INFINITY {
            self.terms.push((ln, sign));
        }
        self.direct += direct;
    }

    /// Max-shifted pairwise summation of sign·exp(ln − max).
    fn log_signed_total(&self) -> f64 {
        if self.terms.is_empty() {
            return 0.0;
        }
        let m = self.terms.iter().map(|t| t.0).fold(f64::NEG_INFINITY, f64::max);
        let shifted: Vec<f64> = self.terms.iter().map(|&(ln, s)| s * (ln - m).exp()).collect();
        pairwise_sum(&shifted) * m.exp()
    }
}

fn pairwise_sum(v: &[f64]) -> f64 {
    match v.len() {
        0 => 0.0,
        1 => v[0],
        2 => v[0] + v[1],
        n => pairwise_sum(&v[..n / 2]) + pairwise_sum(&v[n / 2..]),
    }
}

fn ln_fact(n: usize) -> f64 {
    ln_gamma(n as f64 + 1.0)
}

fn fact(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn binom_f(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut v = 1.0;
    for i in 0..k {
        v = v * (n - i) as f64 / (i + 1) as f64;
    }
    v.round()
}

fn ln_poch(a: f64, k: usize) -> f64 {
    // all bases here are ≥ 1
    ln_gamma(a + k as f64) - ln_gamma(a)
}

fn poch(a: f64, k: usize) -> f64 {
    let mut v = 1.0;
    for i in 0..k {
        v *= a + i as f64;
    }
    v
}

/// Outer partition coefficients d₁^{k₁} (log and direct) of the finite zonal
/// expansion, for N = α − n.
fn d1_coeff(n: usize, big_n: usize, k: usize, k1: usize) -> (f64, f64) {
    let ln = ln_fact(big_n) + ln_fact(big_n + 1) + ((2 * k1 + 1 - k) as f64).ln()
        - ln_fact(big_n - k1)
        - ln_fact(big_n + 1 + k1 - k)
        - ln_fact(k1 + 1)
        - ln_fact(k - k1)
        - ln_poch(n as f64, k1)
        - ln_poch(n as f64 - 1.0, k - k1);
    let direct = fact(big_n) * fact(big_n + 1) * (2 * k1 + 1 - k) as f64
        / (fact(big_n - k1)
            * fact(big_n + 1 + k1 - k)
            * fact(k1 + 1)
            * fact(k - k1)
            * poch(n as f64, k1)
            * poch(n as f64 - 1.0, k - k1));
    (ln, direct)
}

/// Dispatches the minimum-eigenvalue c.d.f. to the matching closed form,
/// preferring the exact low-order reductions where they exist.
pub fn min_cdf_gw(model: &GammaWishartModel, x: f64) -> Result<CdfValue> {
    match (model.m, model.n, model.alpha) {
        (2, 2, 3) => min_cdf_gw2_23(model, x),
        (3, 3, 4) => min_cdf_gw334(model, x),
        (2, n, alpha) if alpha > n => min_cdf_gw2(model, x),
        (m, n, alpha) => Err(Error::RegimeUnsupported(format!(
            "no minimum-eigenvalue closed form for (m, n, α) = ({m}, {n}, {alpha}); supported: \
             m = 2 with integer α > n ≥ 2, and (3, 3, 4)"
        ))),
    }
}

/// Dispatches the maximum-eigenvalue c.d.f., preferring the α = n+1 and
/// α = n+2 reductions.
pub fn max_cdf_gw(model: &GammaWishartModel, x: f64, opts: &SeriesOptions) -> Result<CdfValue> {
    match (model.m, model.n, model.alpha) {
        (2, n, alpha) if alpha == n + 1 => max_cdf_gw2_np1(model, x, opts),
        (2, n, alpha) if alpha == n + 2 => max_cdf_gw2_np2(model, x, opts),
        (2, n, alpha) if alpha > n => max_cdf_gw2(model, x, opts),
        (m, n, alpha) => Err(Error::RegimeUnsupported(format!(
            "no maximum-eigenvalue closed form for (m, n, α) = ({m}, {n}, {alpha}); supported: \
             m = 2 with integer α > n ≥ 2"
        ))),
    }
}

/// Minimum-eigenvalue c.d.f. for m = 2, integer α > n ≥ 2 (default
/// variant/mode).
pub fn min_cdf_gw2(model: &GammaWishartModel, x: f64) -> Result<CdfValue> {
    min_cdf_gw2_with(model, x, PochhammerVariant::Appendix, SumMode::LogSigned)
}

/// Minimum-eigenvalue c.d.f. for m = 2 with explicit two-trace Pochhammer
/// variant and summation mode.
///
/// Every term's net power of x (including the x^{2n} prefactor) is
/// non-negative; terms are generated with that exponent explicit, so x = 0
/// evaluates exactly and must assemble to F(0) = 0.
pub fn min_cdf_gw2_with(
    model: &GammaWishartModel,
    x: f64,
    variant: PochhammerVariant,
    mode: SumMode,
) -> Result<CdfValue> {
    model.require_min_gw2()?;
    if !(x >= 0.0) {
        return Err(Error::Domain(format!("c.d.f. argument must be ≥ 0, got {x}")));
    }
    let n = model.n;
    let big_n = model.alpha - n;
    let (tr_s, tr_q) = (model.s_mat.trace(), model.q_mat.trace());
    let (det_s, det_q) = (model.det_s, model.det_q);
    let q_inv = model.q_mat.inverse()?;
    let beta = tr_prod(&q_inv, &model.s_mat) / (2.0 * (det_s / det_q).sqrt());
    let ln_x = if x > 0.0 { x.ln() } else { f64::NEG_INFINITY };
    let second_base = |w: f64| match variant {
        PochhammerVariant::Appendix => w - 1.0,
        PochhammerVariant::Statement => w,
    };
    let mut bag = TermBag::new();
    for k in 0..=2 * big_n {
        for k1 in k.div_ceil(2)..=k.min(big_n) {
            let (ln_d1, d1) = d1_coeff(n, big_n, k, k1);
            let e_kappa = elem_sym_cos2_tau(k1, k)?;
            for l in 0..=(2 * k1 - k) / 2 {
                let sign_l = if l % 2 == 0 { 1.0 } else { -1.0 };
                let ln_d2 = l as f64 * 4.0f64.ln()
                    + e_kappa[l].ln()
                    + (k - k1 + l) as f64 * det_s.ln();
                let d2 = sign_l * 4.0f64.powi(l as i32) * e_kappa[l]
                    * det_s.powi((k - k1 + l) as i32);
                let eps_kl = 2 * k1 - k - 2 * l;
                let nu_kl = n + l + k - k1 - 2;
                for p in 0..=eps_kl {
                    for j in 0..=nu_kl {
                        let ln_i = ln_fact(p)
                            + binom_f(eps_kl, p).ln()
                            + binom_f(nu_kl, j).ln()
                            + (eps_kl - p) as f64 * tr_s.ln()
                            - (j as f64 + 2.0) * det_q.ln();
                        let i_direct = fact(p)
                            * binom_f(eps_kl, p)
                            * binom_f(nu_kl, j)
                            * tr_s.powi((eps_kl - p) as i32)
                            / det_q.powi(j as i32 + 2);
                        for t in 0..=j {
                            // net power of x, x^{2n}·x^k·x^{t−2(j+2)−p} folded
                            let pw = 2 * (n as i64) + k as i64 + t as i64
                                - 2 * (j as i64 + 2)
                                - p as i64;
                            debug_assert!(pw >= 0);
                            if x == 0.0 && pw > 0 {
                                continue;
                            }
                            let ln_xpw = if pw == 0 { 0.0 } else { pw as f64 * ln_x };
                            let xpw = if pw == 0 { 1.0 } else { x.powi(pw as i32) };
                            let ln_jt = ln_fact(j) - ln_fact(j - t)
                                + t as f64 * det_q.ln();
                            let jt_direct =
                                fact(j) / fact(j - t) * det_q.powi(t as i32);
                            let w = (j - t + 2) as f64; // ω_{j,t}
                            for t1 in t.div_ceil(2)..=t {
                                let ln_pref = mv_gamma_ln(2, w)?
                                    + ln_poch(w, t1)
                                    + ln_poch(second_base(w), t - t1)
                                    + ((2 * t1 + 1 - t) as f64).ln()
                                    - ln_fact(t1 + 1)
                                    - ln_fact(t - t1);
                                let pref_direct = mv_gamma_ln(2, w)?.exp()
                                    * poch(w, t1)
                                    * poch(second_base(w), t - t1)
                                    * (2 * t1 + 1 - t) as f64
                                    / (fact(t1 + 1) * fact(t - t1));
                                let e_tau = elem_sym_cos2_tau(t1, t)?;
                                for idx in partition_terms(t, t1) {
                                    let (eps_i, eps) = (idx.epsilon_li, idx.epsilon_l);
                                    for q in 0..=p.min(eps_i) {
                                        let sign_qi =
                                            if (q + idx.inner) % 2 == 0 { 1.0 } else { -1.0 };
                                        let geg = gegenbauer(p - q, eps as f64 + w, beta);
                                        let half = (p - q) as f64 / 2.0;
                                        let ln_l = idx.inner as f64 * 4.0f64.ln()
                                            + e_tau[idx.inner].ln()
                                            + binom_f(eps_i, q).ln()
                                            + (eps_i - q) as f64 * tr_q.ln()
                                            + q as f64 * tr_s.ln()
                                            + (-(eps as f64) - half) * det_q.ln()
                                            + half * det_s.ln()
                                            + geg.abs().ln();
                                        let l_direct = sign_qi
                                            * 4.0f64.powi(idx.inner as i32)
                                            * e_tau[idx.inner]
                                            * binom_f(eps_i, q)
                                            * tr_q.powi((eps_i - q) as i32)
                                            * tr_s.powi(q as i32)
                                            * det_q.powf(-(eps as f64) - half)
                                            * det_s.powf(half)
                                            * geg;
                                        let sign = sign_l * sign_qi * geg.signum();
                                        bag.push(
                                            ln_d1 + ln_d2 + ln_i + ln_jt + ln_pref + ln_l
                                                + ln_xpw,
                                            sign,
                                            d1 * d2 * i_direct * jt_direct * pref_direct
                                                * l_direct
                                                * xpw,
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let total = match mode {
        SumMode::LogSigned => bag.log_signed_total(),
        SumMode::Direct => bag.direct,
    };
    let raw = 1.0 - (model.k_ln - x * tr_q).exp() * total;
    CdfValue::finish(raw, (2 * big_n + 1).max(1), false)
}

/// Closed quadratic form for (m, n, α) = (2, 2, 3):
/// `F = 1 − (|Ω|/|Σ⁻¹+Ω|)·etr(−xQ)·(|I₂+Ω⁻¹Σ⁻¹| + (tr(S)/2 + tr(Q⁻¹)|S|)·x +
/// (|S|/2)·x²)`.
pub fn min_cdf_gw2_23(model: &GammaWishartModel, x: f64) -> Result<CdfValue> {
    if (model.m, model.n, model.alpha) != (2, 2, 3) {
        return Err(Error::RegimeUnsupported(format!(
            "quadratic closed form needs (m, n, α) = (2, 2, 3); got ({}, {}, {})",
            model.m, model.n, model.alpha
        )));
    }
    if !(x >= 0.0) {
        return Err(Error::Domain(format!("c.d.f. argument must be ≥ 0, got {x}")));
    }
    let q_inv = model.q_mat.inverse()?;
    let c1 = model.s_mat.trace() / 2.0 + q_inv.trace() * model.det_s;
    let c2 = model.det_s / 2.0;
    // |I₂ + Ω⁻¹Σ⁻¹| = |Σ⁻¹+Ω|/|Ω| cancels the prefactor exactly, so fold the
    // prefactor into the polynomial and get F(0) = 0 without cancellation
    let pref = model.det_omega / model.det_shift;
    let raw = 1.0 - (-x * model.q_mat.trace()).exp() * (1.0 + pref * (c1 * x + c2 * x * x));
    CdfValue::finish(raw, 1, false)
}

/// Closed cubic form for (m, n, α) = (3, 3, 4) with
/// `F = 2S − 3Q⁻¹S − 3|S|Q⁻¹ + 6|S||Q|⁻¹Q + 3|I₃+S|·Q⁻¹(I₃+S)⁻¹S` and
/// `G = S⁻¹ + 3Q⁻¹`.
pub fn min_cdf_gw334(model: &GammaWishartModel, x: f64) -> Result<CdfValue> {
    if (model.m, model.n, model.alpha) != (3, 3, 4) {
        return Err(Error::RegimeUnsupported(format!(
            "cubic closed form needs (m, n, α) = (3, 3, 4); got ({}, {}, {})",
            model.m, model.n, model.alpha
        )));
    }
    if !(x >= 0.0) {
        return Err(Error::Domain(format!("c.d.f. argument must be ≥ 0, got {x}")));
    }
    if model.det_s.abs() < SINGULAR_S_TOL {
        return Err(Error::SingularS { det: model.det_s });
    }
    let s = &model.s_mat;
    let q_inv = model.q_mat.inverse()?;
    let s_inv = s.inverse()?;
    let eye = HermitianMatrix::identity(3);
    let i_plus_s = eye.add(s);
    let i_plus_s_inv = i_plus_s.inverse()?;
    let det_i_plus_s = i_plus_s.det();
    // tr(Q⁻¹(I₃+S)⁻¹S) is real: S and (I₃+S)⁻¹ commute
    let tr_q_is_s = q_inv
        .to_complex()
        .mul(&i_plus_s_inv.to_complex())
        .mul(&s.to_complex())
        .trace()
        .re;
    let tr_f = 2.0 * s.trace() - 3.0 * tr_prod(&q_inv, s) - 3.0 * model.det_s * q_inv.trace()
        + 6.0 * model.det_s / model.det_q * model.q_mat.trace()
        + 3.0 * det_i_plus_s * tr_q_is_s;
    let tr_g = s_inv.trace() + 3.0 * q_inv.trace();
    // |I₃ + Ω⁻¹Σ⁻¹|·|Ω|/|Σ⁻¹+Ω| = 1: fold the prefactor into the polynomial
    let pref = model.det_omega / model.det_shift;
    let poly = tr_f * x / 6.0 + tr_g * model.det_s * x * x / 6.0
        + model.det_s * x.powi(3) / 6.0;
    let raw = 1.0 - (-x * model.q_mat.trace()).exp() * (1.0 + pref * poly);
    CdfValue::finish(raw, 1, false)
}

/// Maximum-eigenvalue c.d.f. for m = 2, integer α > n ≥ 2: the finite
/// (k, k₁, l) sum with
/// `R_{k₁,l}(x) = Γ̃₂(2)Γ̃₂(ν+2)/Γ̃₂(ν+4)·φ^{(ε)}_{−xQ, S, ν+2}(0)`.
pub fn max_cdf_gw2(model: &GammaWishartModel, x: f64, opts: &SeriesOptions) -> Result<CdfValue> {
    model.require_min_gw2().map_err(|_| {
        Error::RegimeUnsupported(format!(
            "maximum-eigenvalue closed form needs m = 2, integer α > n ≥ 2; got (m, n, α) = \
             ({}, {}, {})",
            model.m, model.n, model.alpha
        ))
    })?;
    if x <= 0.0 {
        if x < 0.0 {
            return Err(Error::Domain(format!("c.d.f. argument must be ≥ 0, got {x}")));
        }
        return CdfValue::finish(0.0, 1, false);
    }
    let n = model.n;
    let big_n = model.alpha - n;
    let (a_mat, perturbed) = perturb_if_degenerate(&model.q_mat.scale(-x))?;
    let mut total = 0.0;
    for k in 0..=2 * big_n {
        for k1 in k.div_ceil(2)..=k.min(big_n) {
            let (ln_d1, _) = d1_coeff(n, big_n, k, k1);
            let e_kappa = elem_sym_cos2_tau(k1, k)?;
            for l in 0..=(2 * k1 - k) / 2 {
                let sign_l = if l % 2 == 0 { 1.0 } else { -1.0 };
                let d2 = sign_l * 4.0f64.powi(l as i32) * e_kappa[l]
                    * model.det_s.powi((k - k1 + l) as i32);
                let eps = 2 * k1 - k - 2 * l;
                let nu = n + l + k - k1 - 2;
                let a = nu as f64 + 2.0;
                let phi = phi_derivatives(&a_mat, &model.s_mat, a, eps, opts)?;
                let r = (mv_gamma_ln(2, 2.0)? + mv_gamma_ln(2, a)? - mv_gamma_ln(2, a + 2.0)?)
                    .exp()
                    * phi.values[eps];
                total += ln_d1.exp() * d2 * r * x.powi(k as i32);
            }
        }
    }
    let raw = (model.k_ln + 2.0 * n as f64 * x.ln()).exp() * total;
    CdfValue::finish(raw, (2 * big_n + 1).max(1), perturbed)
}

/// α = n + 1 reduction of the maximum-eigenvalue c.d.f.
pub fn max_cdf_gw2_np1(model: &GammaWishartModel, x: f64, opts: &SeriesOptions) -> Result<CdfValue> {
    if model.m != 2 || model.alpha != model.n + 1 {
        return Err(Error::RegimeUnsupported(format!(
            "this reduction needs m = 2, α = n + 1; got (m, n, α) = ({}, {}, {})",
            model.m, model.n, model.alpha
        )));
    }
    if x <= 0.0 {
        if x < 0.0 {
            return Err(Error::Domain(format!("c.d.f. argument must be ≥ 0, got {x}")));
        }
        return CdfValue::finish(0.0, 1, false);
    }
    let n = model.n as f64;
    let (a_mat, perturbed) = perturb_if_degenerate(&model.q_mat.scale(-x))?;
    let phi_n = phi_derivatives(&a_mat, &model.s_mat, n, 1, opts)?;
    let phi_n1 = phi_derivatives(&a_mat, &model.s_mat, n + 1.0, 0, opts)?;
    let val = phi_n.values[0]
        + x / n * phi_n.values[1]
        + model.det_s * x * x / ((n + 1.0) * (n + 2.0)) * phi_n1.values[0];
    let ln_pref = (n + 1.0) * model.det_omega.ln()
        - ln_gamma(n + 1.0)
        - ln_gamma(n + 2.0)
        - n * model.sigma.det().ln()
        - (n + 1.0) * model.det_shift.ln()
        + 2.0 * n * x.ln();
    CdfValue::finish(ln_pref.exp() * val, 1, perturbed)
}

/// α = n + 2 reduction of the maximum-eigenvalue c.d.f.
pub fn max_cdf_gw2_np2(model: &GammaWishartModel, x: f64, opts: &SeriesOptions) -> Result<CdfValue> {
    if model.m != 2 || model.alpha != model.n + 2 {
        return Err(Error::RegimeUnsupported(format!(
            "this reduction needs m = 2, α = n + 2; got (m, n, α) = ({}, {}, {})",
            model.m, model.n, model.alpha
        )));
    }
    if x <= 0.0 {
        if x < 0.0 {
            return Err(Error::Domain(format!("c.d.f. argument must be ≥ 0, got {x}")));
        }
        return CdfValue::finish(0.0, 1, false);
    }
    let n = model.n as f64;
    let ds = model.det_s;
    let (a_mat, perturbed) = perturb_if_degenerate(&model.q_mat.scale(-x))?;
    let phi_n = phi_derivatives(&a_mat, &model.s_mat, n, 2, opts)?;
    let phi_n1 = phi_derivatives(&a_mat, &model.s_mat, n + 1.0, 1, opts)?;
    let phi_n2 = phi_derivatives(&a_mat, &model.s_mat, n + 2.0, 0, opts)?;
    let val = phi_n.values[0]
        + 2.0 * x / n * phi_n.values[1]
        + x * x / (n * (n + 1.0)) * phi_n.values[2]
        + 2.0 * ds * x * x / ((n + 1.0) * (n + 1.0)) * phi_n1.values[0]
        + 2.0 * ds * x.powi(3) / ((n + 1.0) * (n + 1.0) * (n + 2.0)) * phi_n1.values[1]
        + ds * ds * x.powi(4) / ((n + 1.0) * (n + 2.0) * (n + 2.0) * (n + 3.0))
            * phi_n2.values[0];
    let ln_pref = (n + 2.0) * model.det_omega.ln()
        - ln_gamma(n + 1.0)
        - ln_gamma(n + 2.0)
        - n * model.sigma.det().ln()
        - (n + 2.0) * model.det_shift.ln()
        + 2.0 * n * x.ln();
    CdfValue::finish(ln_pref.exp() * val, 1, perturbed)
}
