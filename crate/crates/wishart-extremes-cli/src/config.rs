//! Model configuration files: JSON with complex entries encoded as
//! `[re, im]` pairs, plus named builtin matrix generators so the reference
//! setups need no external data.

use num_complex::Complex64;
use serde::Deserialize;

use wishart_extremes::hermitian::{ComplexMatrix, HermitianMatrix};
use wishart_extremes::presets;
use wishart_extremes::{GammaWishartModel, NoncentralWishartModel};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelConfig {
    pub kind: ModelKind,
    pub m: usize,
    pub n: usize,
    #[serde(default)]
    pub alpha: Option<usize>,
    pub sigma: MatrixSpec,
    #[serde(default)]
    pub omega: Option<MatrixSpec>,
    #[serde(default)]
    pub upsilon: Option<MatrixSpec>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
pub enum ModelKind {
    #[serde(rename = "noncentral-wishart")]
    NoncentralWishart,
    #[serde(rename = "gamma-wishart")]
    GammaWishart,
}

/// A matrix is either explicit rows of `[re, im]` pairs or a named builtin.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum MatrixSpec {
    Builtin {
        builtin: BuiltinMatrix,
        #[serde(default)]
        theta: Option<f64>,
    },
    Entries(Vec<Vec<[f64; 2]>>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
pub enum BuiltinMatrix {
    /// Σ_{jk} = exp(−π³/32·(j−k)²)
    #[serde(rename = "fig1-covariance")]
    Fig1Covariance,
    /// Ω_{jk} = exp(−0.7·(j−k)·iπ)·exp(−147π³/4000·(j−k)²)
    #[serde(rename = "fig2-omega")]
    Fig2Omega,
    /// Υ = aᴴb steering mean; takes `theta` (radians, default π/4)
    #[serde(rename = "rank-one-mean")]
    RankOneMean,
}

/// A fully built model of either kind.
pub enum Model {
    Noncentral(NoncentralWishartModel),
    Gamma(GammaWishartModel),
}

pub fn parse_config(text: &str) -> Result<ModelConfig, String> {
    serde_json::from_str(text).map_err(|e| format!("config parse error: {e}"))
}

impl ModelConfig {
    pub fn build(&self) -> Result<Model, String> {
        match self.kind {
            ModelKind::NoncentralWishart => {
                let sigma = self.hermitian(&self.sigma, "sigma")?;
                let ups_spec = self
                    .upsilon
                    .as_ref()
                    .ok_or("noncentral-wishart config needs an `upsilon` matrix")?;
                let upsilon = self.rectangular(ups_spec, self.n, self.m, "upsilon")?;
                NoncentralWishartModel::new(sigma, upsilon)
                    .map(Model::Noncentral)
                    .map_err(|e| format!("model construction: {e}"))
            }
            ModelKind::GammaWishart => {
                let alpha =
                    self.alpha.ok_or("gamma-wishart config needs an integer `alpha`")?;
                let sigma = self.hermitian(&self.sigma, "sigma")?;
                let omega_spec =
                    self.omega.as_ref().ok_or("gamma-wishart config needs an `omega` matrix")?;
                let omega = self.hermitian(omega_spec, "omega")?;
                GammaWishartModel::new(self.n, alpha, sigma, omega)
                    .map(Model::Gamma)
                    .map_err(|e| format!("model construction: {e}"))
            }
        }
    }

    fn hermitian(&self, spec: &MatrixSpec, name: &str) -> Result<HermitianMatrix, String> {
        match spec {
            MatrixSpec::Builtin { builtin: BuiltinMatrix::Fig1Covariance, .. } => {
                Ok(presets::sigma_exp_decay(self.m))
            }
            MatrixSpec::Builtin { builtin: BuiltinMatrix::Fig2Omega, .. } => {
                Ok(presets::omega_phase_decay(self.m))
            }
            MatrixSpec::Builtin { builtin: BuiltinMatrix::RankOneMean, .. } => {
                Err(format!("`rank-one-mean` is a mean-matrix builtin, not valid for `{name}`"))
            }
            MatrixSpec::Entries(rows) => {
                if rows.len() != self.m || rows.iter().any(|r| r.len() != self.m) {
                    return Err(format!("`{name}` must be {0}×{0}", self.m));
                }
                let entries: Vec<Complex64> = rows
                    .iter()
                    .flatten()
                    .map(|&[re, im]| Complex64::new(re, im))
                    .collect();
                HermitianMatrix::new(self.m, &entries).map_err(|e| format!("`{name}`: {e}"))
            }
        }
    }

    fn rectangular(
        &self,
        spec: &MatrixSpec,
        rows: usize,
        cols: usize,
        name: &str,
    ) -> Result<ComplexMatrix, String> {
        match spec {
            MatrixSpec::Builtin { builtin: BuiltinMatrix::RankOneMean, theta } => {
                Ok(presets::upsilon_steering(
                    rows,
                    cols,
                    theta.unwrap_or(std::f64::consts::PI / 4.0),
                ))
            }
            MatrixSpec::Builtin { builtin, .. } => {
                Err(format!("builtin {builtin:?} is not valid for `{name}`"))
            }
            MatrixSpec::Entries(data) => {
                if data.len() != rows || data.iter().any(|r| r.len() != cols) {
                    return Err(format!("`{name}` must be {rows}×{cols}"));
                }
                let complex_rows: Vec<Vec<Complex64>> = data
                    .iter()
                    .map(|r| r.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
                    .collect();
                ComplexMatrix::from_rows(&complex_rows).map_err(|e| format!("`{name}`: {e}"))
            }
        }
    }
}
