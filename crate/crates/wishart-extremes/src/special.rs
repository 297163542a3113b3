//! Scalar special functions: Pochhammer symbols, the complex multivariate
//! gamma function, adaptive ₁F₁ and Φ₃ series, Gegenbauer polynomials, and
//! elementary symmetric functions over cos² root sets.
//!
//! All series use the truncation policy in [`SeriesOptions`]: sum until the
//! current term falls below `rel_tol` times the partial sum (after at least
//! `min_terms` terms), and fail with `NoConvergence` at `max_terms`.
//! Gamma-type factors are kept in the log domain; direct products overflow
//! near k ≈ 170.

use crate::error::{Error, Result};

/// Truncation policy for the adaptive hypergeometric series.
#[derive(Debug, Clone, Copy)]
pub struct SeriesOptions {
    /// Stop once |term| < rel_tol · |partial sum|.
    pub rel_tol: f64,
    /// Hard cap on terms; reaching it raises `NoConvergence`.
    pub max_terms: usize,
    /// Minimum number of terms before the stop rule may fire.
    pub min_terms: usize,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        Self { rel_tol: 1e-13, max_terms: 200, min_terms: 5 }
    }
}

impl SeriesOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::Domain("rel_tol must be positive".into()));
        }
        if self.min_terms < 1 || self.max_terms < self.min_terms {
            return Err(Error::Domain("need max_terms >= min_terms >= 1".into()));
        }
        Ok(())
    }
}

/// Natural log of the gamma function.
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

/// ln (a)_k for a > 0 via ln Γ(a + k) − ln Γ(a).
pub fn ln_pochhammer(a: f64, k: usize) -> Result<f64> {
    if a <= 0.0 {
        return Err(Error::Domain(format!("ln_pochhammer needs a > 0, got {a}")));
    }
    Ok(ln_gamma(a + k as f64) - ln_gamma(a))
}

/// (a)_k = a(a+1)···(a+k−1) by direct product; valid for any real a.
///
/// Overflows near k ≈ 170 for a ≥ 1; use [`ln_pochhammer_signed`] for long
/// products.
pub fn pochhammer(a: f64, k: usize) -> f64 {
    let mut v = 1.0;
    for i in 0..k {
        v *= a + i as f64;
    }
    v
}

/// (a)_k in log-magnitude/sign form, valid for any real a (sign 0 marks an
/// exact zero from a non-positive-integer a consumed by the product).
pub fn ln_pochhammer_signed(a: f64, k: usize) -> (f64, i8) {
    let mut ln = 0.0;
    let mut sign = 1i8;
    for i in 0..k {
        let f = a + i as f64;
        if f == 0.0 {
            return (f64::NEG_INFINITY, 0);
        }
        ln += f.abs().ln();
        if f < 0.0 {
            sign = -sign;
        }
    }
    (ln, sign)
}

/// Generalized Pochhammer `[a]_κ` for a two-part partition κ = (k₁, k₂):
/// `(a)_{k₁}·(a−1)_{k₂}`.
pub fn gen_pochhammer_2(a: f64, k1: usize, k2: usize) -> f64 {
    pochhammer(a, k1) * pochhammer(a - 1.0, k2)
}

/// ln Γ̃_m(a) = (m(m−1)/2)·ln π + Σ_{j=1..m} ln Γ(a − j + 1).
///
/// Requires a > m − 1 so every gamma argument is positive.
pub fn mv_gamma_ln(m: usize, a: f64) -> Result<f64> {
    let mut s = (m * (m - 1)) as f64 / 2.0 * std::f64::consts::PI.ln();
    for j in 1..=m {
        let arg = a - j as f64 + 1.0;
        if arg <= 0.0 {
            return Err(Error::Domain(format!("multivariate gamma pole: Γ({arg}) in Γ̃_{m}({a})")));
        }
        s += ln_gamma(arg);
    }
    Ok(s)
}

/// Kummer confluent hypergeometric ₁F₁(a; b; z), adaptively truncated.
///
/// For z < 0 the Kummer transform ₁F₁(a;b;z) = e^z·₁F₁(b−a;b;−z) is applied
/// first; with b − a > 0 (all uses in this crate) the transformed series has
/// positive terms and no cancellation.
pub fn kummer_1f1(a: f64, b: f64, z: f64, opts: &SeriesOptions) -> Result<f64> {
    opts.validate()?;
    if b <= 0.0 && b == b.floor() {
        return Err(Error::Domain(format!("1F1 pole: b = {b}")));
    }
    if z < 0.0 && b - a > 0.0 {
        return Ok(z.exp() * kummer_1f1_raw(b - a, b, -z, opts)?);
    }
    kummer_1f1_raw(a, b, z, opts)
}

fn kummer_1f1_raw(a: f64, b: f64, z: f64, opts: &SeriesOptions) -> Result<f64> {
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for k in 0..opts.max_terms {
        term *= (a + k as f64) * z / ((b + k as f64) * (k as f64 + 1.0));
        sum += term;
        if term == 0.0 || (k + 1 >= opts.min_terms && term.abs() < opts.rel_tol * sum.abs()) {
            return Ok(sum);
        }
    }
    Err(Error::NoConvergence { max_terms: opts.max_terms, tail: term.abs() })
}

/// ₁F₁ by fixed truncation at `terms` terms (k = 0..terms−1); test oracle for
/// the adaptive series.
pub fn kummer_1f1_fixed(a: f64, b: f64, z: f64, terms: usize) -> f64 {
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for k in 0..terms.saturating_sub(1) {
        term *= (a + k as f64) * z / ((b + k as f64) * (k as f64 + 1.0));
        sum += term;
    }
    sum
}

/// Humbert confluent hypergeometric of two variables
/// Φ₃(b, c; x, y) = Σ_{t,k} (b)_t / ((c)_{t+k} t! k!) · x^t y^k.
///
/// Summed over anti-diagonals t + k = s with the diagonal sum as tail test.
pub fn phi3(b: f64, c: f64, x: f64, y: f64, opts: &SeriesOptions) -> Result<f64> {
    opts.validate()?;
    if c <= 0.0 {
        return Err(Error::Domain(format!("phi3 needs c > 0, got {c}")));
    }
    let mut sum = 0.0f64;
    let mut diag = 0.0f64;
    for s in 0..opts.max_terms {
        diag = 0.0;
        // term(t, k) with t + k = s, built from term(t, s-t) ratios
        let mut term = phi3_term(b, c, x, y, 0, s);
        diag += term;
        for t in 1..=s {
            // term(t, k−1→) ratio: multiply by (b+t−1)x·k/( t·y ) — safer to
            // recompute when y is tiny; the direct form stays in range for
            // the small s used here.
            term = phi3_term(b, c, x, y, t, s - t);
            diag += term;
        }
        sum += diag;
        if s + 1 >= opts.min_terms && diag.abs() < opts.rel_tol * sum.abs().max(f64::MIN_POSITIVE) {
            return Ok(sum);
        }
    }
    Err(Error::NoConvergence { max_terms: opts.max_terms, tail: diag.abs() })
}

fn phi3_term(b: f64, c: f64, x: f64, y: f64, t: usize, k: usize) -> f64 {
    if x == 0.0 && t > 0 {
        return 0.0;
    }
    if y == 0.0 && k > 0 {
        return 0.0;
    }
    let (ln_b, sg_b) = ln_pochhammer_signed(b, t);
    let (ln_c, sg_c) = ln_pochhammer_signed(c, t + k);
    if sg_b == 0 {
        return 0.0;
    }
    let ln = ln_b - ln_c - ln_gamma(t as f64 + 1.0) - ln_gamma(k as f64 + 1.0)
        + if t > 0 { t as f64 * x.abs().ln() } else { 0.0 }
        + if k > 0 { k as f64 * y.abs().ln() } else { 0.0 };
    let mut sign = (sg_b * sg_c) as f64;
    if x < 0.0 && t % 2 == 1 {
        sign = -sign;
    }
    if y < 0.0 && k % 2 == 1 {
        sign = -sign;
    }
    sign * ln.exp()
}

/// Φ₃ with both series truncated at a fixed `terms` anti-diagonals; test
/// oracle for the adaptive form.
pub fn phi3_fixed(b: f64, c: f64, x: f64, y: f64, terms: usize) -> f64 {
    let mut sum = 0.0;
    for s in 0..terms {
        for t in 0..=s {
            sum += phi3_term(b, c, x, y, t, s - t);
        }
    }
    sum
}

/// Gegenbauer (ultraspherical) polynomial C_n^ν(x) by the three-term
/// recurrence n·C_n = 2x(n+ν−1)·C_{n−1} − (n+2ν−2)·C_{n−2}.
///
/// Valid for any real x; arguments ≥ 1 occur (trace ratios of
/// positive-definite matrices) and the recurrence remains exact there.
pub fn gegenbauer(n: usize, nu: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0; // C_0
    let mut curr = 2.0 * nu * x; // C_1
    for k in 2..=n {
        let kf = k as f64;
        let next = (2.0 * x * (kf + nu - 1.0) * curr - (kf + 2.0 * nu - 2.0) * prev) / kf;
        prev = curr;
        curr = next;
    }
    curr
}

/// Elementary symmetric functions e₀…e_q of the root set
/// S^n = { cos²(jπ/n) : j = 1..⌈(n−2)/2⌉ }; e₀ = 1, and n ≤ 2 yields the
/// empty set with the single value e₀.
pub fn elem_sym_cos2(n: usize) -> Vec<f64> {
    assert!(n >= 1, "elem_sym_cos2 needs n >= 1");
    let q = if n >= 2 { (n - 2).div_ceil(2) } else { 0 };
    let mut e = vec![1.0];
    for j in 1..=q {
        let r = (j as f64 * std::f64::consts::PI / n as f64).cos().powi(2);
        // multiply the generating polynomial by (1 + r·z)
        let mut next = vec![0.0; e.len() + 1];
        next[..e.len()].copy_from_slice(&e);
        for i in 1..next.len() {
            next[i] += r * e[i - 1];
        }
        e = next;
    }
    e
}

/// Elementary symmetric functions over S^τ for the two-part partition
/// τ = (t₁, t − t₁): the same construction with angle denominator 2t₁ − t + 1.
pub fn elem_sym_cos2_tau(t1: usize, t: usize) -> Result<Vec<f64>> {
    if t1 > t || 2 * t1 < t {
        return Err(Error::Domain(format!("partition lead t1 = {t1} outside ⌈t/2⌉..=t for t = {t}")));
    }
    Ok(elem_sym_cos2(2 * t1 - t + 1))
}
