//! Crate-wide error type.

/// Errors raised by matrix construction, series evaluation, c.d.f.
/// evaluators, and samplers.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A matrix input carried a NaN or infinite component.
    #[error("non-finite entry in matrix input")]
    NonFinite,

    /// Asymmetry of a would-be Hermitian matrix exceeded the construction gate.
    #[error("asymmetry {asymmetry:.3e} exceeds Hermitian gate {gate:.3e}")]
    NotHermitian { asymmetry: f64, gate: f64 },

    /// A Cholesky pivot fell at or below the positive-definiteness threshold.
    #[error("not positive definite: pivot {pivot:.3e} at index {index}")]
    NotPositiveDefinite { pivot: f64, index: usize },

    /// Determinant underflowed the invertibility threshold.
    #[error("singular matrix: |det| = {det:.3e}")]
    Singular { det: f64 },

    /// Second-largest eigenvalue too large for a rank-one factorization.
    #[error("not rank one: second eigenvalue {second:.3e} vs largest {largest:.3e}")]
    NotRankOne { second: f64, largest: f64 },

    /// Adaptive series hit its term cap with the tail still above tolerance.
    #[error("series did not converge within {max_terms} terms (tail {tail:.3e})")]
    NoConvergence { max_terms: usize, tail: f64 },

    /// The two eigenvalues of `A` coincide within the relative threshold, so
    /// the recursive derivative kernel cannot divide by their gap.
    #[error("coincident eigenvalues: gap {gap:.3e} below threshold {threshold:.3e}")]
    DegenerateEigenvalues { gap: f64, threshold: f64 },

    /// No closed form exists for this (m, n) combination.
    #[error("unsupported shape (m, n) = ({m}, {n}); closed forms exist for m = n, m = 2, and (m, n) = (3, 4)")]
    UnsupportedShape { m: usize, n: usize },

    /// The gamma-Wishart parameters fall outside a theorem's proven regime.
    #[error("unsupported regime: {0}")]
    RegimeUnsupported(String),

    /// `|S|` too small to form `S⁻¹`.
    #[error("singular S matrix: |S| = {det:.3e}")]
    SingularS { det: f64 },

    /// Degrees of freedom below the matrix dimension.
    #[error("degrees of freedom {dof} below matrix dimension {dim}")]
    InvalidDof { dof: usize, dim: usize },

    /// Rejection sampler acceptance rate collapsed.
    #[error("rejection acceptance rate {rate:.3e} below 1e-3")]
    InsufficientAcceptance { rate: f64 },

    /// Argument outside a function's domain.
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
