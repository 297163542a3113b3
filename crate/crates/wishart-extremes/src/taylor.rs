//! Truncated Taylor jets: finite coefficient sequences c₀…c_p representing
//! Σ c_j y^j + O(y^{p+1}).
//!
//! Jets mechanize the recursive y-derivatives of the matrix-argument
//! hypergeometric kernel without symbolic differentiation: products are
//! truncated Cauchy products, and composition with ₁F₁ uses the derivative
//! chain d/dz ₁F₁(a;b;z) = (a/b)·₁F₁(a+1;b+1;z).

use crate::error::{Error, Result};
use crate::special::{kummer_1f1, pochhammer, SeriesOptions};

/// Truncated Taylor coefficient sequence at y = 0.
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorJet {
    coeffs: Vec<f64>,
}

impl TaylorJet {
    /// Jet of the constant `v` at truncation order `order`.
    pub fn constant(order: usize, v: f64) -> Self {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = v;
        Self { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("jet needs at least the constant coefficient".into()));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { coeffs })
    }

    /// Jet with raw derivatives d_j = f^(j)(0): coefficients d_j / j!.
    pub fn from_derivatives(derivs: &[f64]) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(derivs.len());
        let mut fact = 1.0;
        for (j, &d) in derivs.iter().enumerate() {
            if j > 0 {
                fact *= j as f64;
            }
            coeffs.push(d / fact);
        }
        Self::from_coeffs(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> f64 {
        self.coeffs[j]
    }

    /// Raw derivatives f^(j)(0) = j!·c_j.
    pub fn derivatives(&self) -> Vec<f64> {
        let mut fact = 1.0;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, &c)| {
                if j > 0 {
                    fact *= j as f64;
                }
                c * fact
            })
            .collect()
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::Domain(format!(
                "jet order mismatch: {} vs {}",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { coeffs })
    }

    pub fn scale(&self, c: f64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Cauchy product truncated at the shared order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let p = self.order();
        let mut coeffs = vec![0.0; p + 1];
        for i in 0..=p {
            if self.coeffs[i] == 0.0 {
                continue;
            }
            for j in 0..=(p - i) {
                coeffs[i + j] += self.coeffs[i] * other.coeffs[j];
            }
        }
        Ok(Self { coeffs })
    }
}

/// Jet of ₁F₁(a; b; inner(y)) around the inner jet's constant term z₀.
///
/// The outer chain coefficients are (a)_j/((b)_j·j!)·₁F₁(a+j; b+j; z₀); the
/// shifted inner jet (inner − z₀) has zero constant term, so plain truncated
/// powers compose exactly.
pub fn jet_compose_1f1(a: f64, b: f64, inner: &TaylorJet, opts: &SeriesOptions) -> Result<TaylorJet> {
    let p = inner.order();
    let z0 = inner.coeff(0);
    let mut delta = inner.clone();
    delta.coeffs[0] = 0.0;
    let mut out = vec![0.0; p + 1];
    let mut dpow = TaylorJet::constant(p, 1.0);
    for j in 0..=p {
        let cj = pochhammer(a, j) / (pochhammer(b, j) * factorial(j))
            * kummer_1f1(a + j as f64, b + j as f64, z0, opts)?;
        for i in 0..=p {
            out[i] += cj * dpow.coeff(i);
        }
        if j < p {
            dpow = dpow.mul(&delta)?;
        }
    }
    TaylorJet::from_coeffs(out)
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    const OPTS: SeriesOptions = SeriesOptions { rel_tol: 1e-13, max_terms: 200, min_terms: 5 };

    #[test]
    fn mul_truncates() {
        // (1 + y)(1 − y) = 1 + O(y²) at order 1
        let a = TaylorJet::from_coeffs(vec![1.0, 1.0]).unwrap();
        let b = TaylorJet::from_coeffs(vec![1.0, -1.0]).unwrap();
        assert_eq!(a.mul(&b).unwrap().coeffs(), &[1.0, 0.0]);
    }

    #[test]
    fn order_mismatch_rejected() {
        let a = TaylorJet::constant(2, 1.0);
        let b = TaylorJet::constant(3, 1.0);
        assert!(a.mul(&b).is_err());
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn compose_1f1_equals_exp_jet() {
        // 1F1(a; a; ·) = exp, so the composed jet must match the jet of
        // e^{inner}.
        let inner = TaylorJet::from_coeffs(vec![0.4, 1.2, -0.3, 0.05]).unwrap();
        let composed = jet_compose_1f1(2.5, 2.5, &inner, &OPTS).unwrap();
        // exp jet via (e^g)' = g'·e^g, i.e.
        // (k+1)·c_{k+1} = Σ_j (j+1) g_{j+1} c_{k-j}
        let g = inner.coeffs();
        let mut e = vec![0.0; 4];
        e[0] = g[0].exp();
        for k in 0..3 {
            let mut s = 0.0;
            for j in 0..=k {
                s += (j as f64 + 1.0) * g[j + 1] * e[k - j];
            }
            e[k + 1] = s / (k as f64 + 1.0);
        }
        for (a, b) in composed.coeffs().iter().zip(&e) {
            assert!((a - b).abs() < 1e-12 * b.abs().max(1.0), "{a} vs {b}");
        }
    }

    mod proptests {
        use super::*;
        use proptest::prelude::*;

        fn jet_strategy() -> impl Strategy<Value = TaylorJet> {
            proptest::collection::vec(-2.0f64..2.0, 5)
                .prop_map(|c| TaylorJet::from_coeffs(c).unwrap())
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(200))]

            #[test]
            fn mul_commutes_and_distributes(a in jet_strategy(), b in jet_strategy(), c in jet_strategy()) {
                let ab = a.mul(&b).unwrap();
                let ba = b.mul(&a).unwrap();
                prop_assert_eq!(ab.coeffs(), ba.coeffs());
                let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
                let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
                for (x, y) in lhs.coeffs().iter().zip(rhs.coeffs()) {
                    prop_assert!((x - y).abs() <= 1e-12 * y.abs().max(1.0));
                }
            }

            #[test]
            fn derivative_roundtrip(a in jet_strategy()) {
                let back = TaylorJet::from_derivatives(&a.derivatives()).unwrap();
                for (x, y) in back.coeffs().iter().zip(a.coeffs()) {
                    prop_assert!((x - y).abs() <= 1e-14 * y.abs().max(1.0));
                }
            }
        }
    }

    #[test]
    fn compose_1f1_vs_central_finite_differences() {
        // order-3 jet of 1F1(2;4;z0 + y) vs central differences at z0 = 0.7
        let z0 = 0.7;
        let inner = TaylorJet::from_coeffs(vec![z0, 1.0, 0.0, 0.0]).unwrap();
        let jet = jet_compose_1f1(2.0, 4.0, &inner, &OPTS).unwrap();
        let d = jet.derivatives();
        let f = |z: f64| kummer_1f1(2.0, 4.0, z, &OPTS).unwrap();
        let h = 1e-3;
        let fd1 = (f(z0 + h) - f(z0 - h)) / (2.0 * h);
        let fd2 = (f(z0 + h) - 2.0 * f(z0) + f(z0 - h)) / (h * h);
        let fd3 = (f(z0 + 2.0 * h) - 2.0 * f(z0 + h) + 2.0 * f(z0 - h) - f(z0 - 2.0 * h))
            / (2.0 * h * h * h);
        assert!((d[1] - fd1).abs() < 1e-6 * fd1.abs());
        assert!((d[2] - fd2).abs() < 1e-6 * fd2.abs());
        assert!((d[3] - fd3).abs() < 1e-5 * fd3.abs());
    }
}
