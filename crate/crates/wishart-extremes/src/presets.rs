//! Built-in model matrices for the reference simulation setups.
//!
//! These are the correlated-antenna constructions used throughout the
//! validation suite and exposed by the CLI as named presets: a Gaussian-decay
//! covariance, a phase-modulated decay shape matrix, and a rank-one steering
//! mean.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::hermitian::{ComplexMatrix, HermitianMatrix};

/// Covariance with entries `Σ_{jk} = exp(−π³/32·(j−k)²)`.
pub fn sigma_exp_decay(m: usize) -> HermitianMatrix {
    let mut entries = vec![Complex64::ZERO; m * m];
    for j in 0..m {
        for k in 0..m {
            let d = j as f64 - k as f64;
            entries[j * m + k] = Complex64::new((-PI.powi(3) / 32.0 * d * d).exp(), 0.0);
        }
    }
    HermitianMatrix::new(m, &entries).expect("decay covariance is Hermitian by construction")
}

/// Shape matrix with entries
/// `Ω_{jk} = exp(−0.7·(j−k)·iπ)·exp(−147π³/4000·(j−k)²)`.
pub fn omega_phase_decay(m: usize) -> HermitianMatrix {
    let mut entries = vec![Complex64::ZERO; m * m];
    for j in 0..m {
        for k in 0..m {
            let d = j as f64 - k as f64;
            let mag = (-147.0 * PI.powi(3) / 4000.0 * d * d).exp();
            let arg = -0.7 * d * PI;
            entries[j * m + k] = Complex64::new(mag * arg.cos(), mag * arg.sin());
        }
    }
    HermitianMatrix::new(m, &entries).expect("phase-decay matrix is Hermitian by construction")
}

/// Rank-one steering mean `Υ = aᴴb` with
/// `a = [1, e^{2iπcosθ}, …, e^{2(n−1)iπcosθ}]` and the m-entry analogue `b`,
/// so `Υ_{jk} = e^{2iπcosθ·(k−j)}`.
pub fn upsilon_steering(n: usize, m: usize, theta: f64) -> ComplexMatrix {
    let phase = 2.0 * PI * theta.cos();
    let rows: Vec<Vec<Complex64>> = (0..n)
        .map(|j| {
            (0..m)
                .map(|k| {
                    let arg = phase * (k as f64 - j as f64);
                    Complex64::new(arg.cos(), arg.sin())
                })
                .collect()
        })
        .collect();
    ComplexMatrix::from_rows(&rows).expect("steering mean rows are rectangular")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_have_expected_structure() {
        let s = sigma_exp_decay(2);
        assert_eq!(s.get(0, 0).re, 1.0);
        assert!((s.get(0, 1).re - (-PI.powi(3) / 32.0).exp()).abs() < 1e-15);
        let o = omega_phase_decay(3);
        assert_eq!(o.get(1, 1).re, 1.0);
        assert!(o.cholesky_lower().is_ok(), "omega preset must be positive definite");
        let u = upsilon_steering(4, 2, PI / 4.0);
        // rank-one: Gram matrix has a single nonzero eigenvalue n·m
        let (mu, _) = u.gram().rank_one_factor(1e-10).unwrap();
        assert!((mu - 8.0).abs() < 1e-12);
    }
}
