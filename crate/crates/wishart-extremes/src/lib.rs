//! Exact extreme-eigenvalue c.d.f.s of correlated complex non-central Wishart
//! and gamma-Wishart random matrices.
//!
//! A complex non-central Wishart matrix is `W = XᴴX` where `X` is an `n × m`
//! complex Gaussian with non-zero mean `Υ` and row covariance `Σ`; the
//! gamma-Wishart variant replaces the fixed mean with a random component whose
//! Gram matrix follows a matrix-variate gamma law. For rank-one `ΥᴴΥ`, the
//! distribution functions of the smallest and largest eigenvalue of `W` admit
//! closed forms built from scalar confluent hypergeometric series, Gegenbauer
//! polynomials, and a recursive derivative kernel for 2×2 matrix-argument
//! hypergeometric functions. This crate implements those closed forms for the
//! shapes where they exist, plus seeded Monte Carlo samplers and comparison
//! statistics used to validate every formula.
//!
//! Module map:
//! - [`hermitian`]: exact-structure complex Hermitian matrices (m ≤ 4),
//!   eigendecomposition, Cholesky, determinant/inverse, rank-one factors.
//! - [`special`]: Pochhammer symbols, the complex multivariate gamma function,
//!   adaptive ₁F₁ and Φ₃ series, Gegenbauer polynomials, elementary symmetric
//!   functions over cos² root sets.
//! - [`taylor`]: truncated Taylor jets and composition with ₁F₁, the engine
//!   behind all recursive-derivative kernels.
//! - [`kernels`]: the closed-form matrix integrals (trace integrals over the
//!   positive-definite cone and over the matrix interval `0 < X < I₂`) and
//!   Monte Carlo expectation/region oracles that validate them.
//! - [`noncentral`]: minimum/maximum eigenvalue c.d.f. evaluators for
//!   non-central Wishart models with rank-one mean.
//! - [`gamma_wishart`]: minimum/maximum eigenvalue c.d.f. evaluators for
//!   gamma-Wishart models with integer shape parameter.
//! - [`mc`]: seeded samplers, empirical c.d.f.s, and sup-distance statistics.

pub mod error;
pub mod gamma_wishart;
pub mod hermitian;
pub mod kernels;
pub mod mc;
pub mod noncentral;
pub mod presets;
pub mod special;
pub mod taylor;

pub use error::{Error, Result};
pub use gamma_wishart::GammaWishartModel;
pub use hermitian::{ComplexMatrix, EigenPair, HermitianMatrix};
pub use mc::{CdfCurve, EmpiricalCdf, Extreme, RngSpec};
pub use noncentral::{CdfValue, NoncentralWishartModel};
pub use special::SeriesOptions;
pub use taylor::TaylorJet;
