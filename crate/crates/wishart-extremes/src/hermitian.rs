//! Exact-structure complex Hermitian matrix arithmetic for tiny dimensions
//! (m ≤ 4).
//!
//! Every Hermitian value in the crate — covariance and shape matrices, the
//! arguments of the trace integrals, rank-one mean factors — is carried by
//! [`HermitianMatrix`], which symmetrizes at construction and keeps diagonal
//! imaginary parts exactly zero. Rectangular complex matrices (the mean `Υ`,
//! Gaussian sample blocks, Cholesky factors) use [`ComplexMatrix`].
//!
//! Eigendecomposition uses the closed-form quadratic for m = 2 and cyclic
//! Jacobi sweeps for m ∈ {3, 4}; matrix sizes are tiny, so robustness beats
//! asymptotics.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative asymmetry admitted by the `HermitianMatrix` construction gate.
pub const HERMITIAN_GATE: f64 = 1e-12;

/// Relative pivot threshold for positive definiteness in the Cholesky factorization.
pub const PD_PIVOT_TOL: f64 = 1e-14;

/// Relative determinant threshold below which a matrix is treated as singular.
pub const SINGULAR_TOL: f64 = 1e-14;

/// Jacobi sweep target: off-diagonal norm below this times ‖M‖.
const JACOBI_TOL: f64 = 1e-13;

/// Dense row-major complex matrix, used for rectangular data and for products
/// of Hermitian matrices (which are not Hermitian in general).
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Complex64::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::ONE;
        }
        m
    }

    /// Builds a matrix from row slices. All rows must share one length.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let r = rows.len();
        if r == 0 {
            return Err(Error::Domain("empty matrix".into()));
        }
        let c = rows[0].len();
        if c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::Domain("ragged or empty matrix rows".into()));
        }
        let data: Vec<Complex64> = rows.iter().flatten().copied().collect();
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { rows: r, cols: c, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|z| z * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    /// Gram matrix `XᴴX`, symmetrized into a `HermitianMatrix`.
    pub fn gram(&self) -> HermitianMatrix {
        let g = self.adjoint().mul(self);
        HermitianMatrix::from_symmetrized(&g)
    }

    pub fn frob_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> Complex64 {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Small complex Hermitian matrix (dimension 2, 3, or 4).
///
/// Invariants enforced at construction: entries are finite, `H[j][k]`
/// equals the conjugate of `H[k][j]` exactly (the constructor symmetrizes via
/// `(M + Mᴴ)/2` and rejects inputs whose asymmetry exceeds
/// [`HERMITIAN_GATE`]·‖M‖), and diagonal imaginary parts are exactly zero.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl HermitianMatrix {
    /// Constructs from row-major entries, symmetrizing and gating asymmetry.
    pub fn new(dim: usize, entries: &[Complex64]) -> Result<Self> {
        if !(2..=4).contains(&dim) {
            return Err(Error::Domain(format!("dimension {dim} outside 2..=4")));
        }
        if entries.len() != dim * dim {
            return Err(Error::Domain("entry count does not match dimension".into()));
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm = entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let mut asym2 = 0.0;
        for j in 0..dim {
            for k in 0..dim {
                let d = entries[j * dim + k] - entries[k * dim + j].conj();
                asym2 += d.norm_sqr();
            }
        }
        // ‖M − Mᴴ‖/2 is the exact distance to the symmetrized matrix.
        let asymmetry = asym2.sqrt() / 2.0;
        if asymmetry > HERMITIAN_GATE * norm.max(f64::MIN_POSITIVE) && norm > 0.0 {
            return Err(Error::NotHermitian { asymmetry, gate: HERMITIAN_GATE * norm });
        }
        let mut data = vec![Complex64::ZERO; dim * dim];
        for j in 0..dim {
            for k in 0..dim {
                let avg = (entries[j * dim + k] + entries[k * dim + j].conj()) * 0.5;
                data[j * dim + k] = avg;
            }
            data[j * dim + j] = Complex64::new(data[j * dim + j].re, 0.0);
        }
        Ok(Self { dim, data })
    }

    /// Symmetrizes a square complex matrix without the asymmetry gate.
    ///
    /// For internally derived quantities (congruences, Gram matrices,
    /// inverses) that are Hermitian up to rounding.
    pub(crate) fn from_symmetrized(m: &ComplexMatrix) -> Self {
        assert_eq!(m.rows(), m.cols());
        let dim = m.rows();
        let mut data = vec![Complex64::ZERO; dim * dim];
        for j in 0..dim {
            for k in 0..dim {
                data[j * dim + k] = (m[(j, k)] + m[(k, j)].conj()) * 0.5;
            }
            data[j * dim + j] = Complex64::new(data[j * dim + j].re, 0.0);
        }
        Self { dim, data }
    }

    pub fn identity(dim: usize) -> Self {
        let mut data = vec![Complex64::ZERO; dim * dim];
        for i in 0..dim {
            data[i * dim + i] = Complex64::ONE;
        }
        Self { dim, data }
    }

    pub fn diag(values: &[f64]) -> Self {
        let dim = values.len();
        let mut data = vec![Complex64::ZERO; dim * dim];
        for (i, &v) in values.iter().enumerate() {
            data[i * dim + i] = Complex64::new(v, 0.0);
        }
        Self { dim, data }
    }

    /// Rank-one outer product `v·vᴴ` (exactly Hermitian by construction).
    pub fn outer(v: &[Complex64]) -> Self {
        let dim = v.len();
        let mut data = vec![Complex64::ZERO; dim * dim];
        for j in 0..dim {
            for k in 0..dim {
                data[j * dim + k] = v[j] * v[k].conj();
            }
            data[j * dim + j] = Complex64::new(data[j * dim + j].re, 0.0);
        }
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, j: usize, k: usize) -> Complex64 {
        self.data[j * self.dim + k]
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.data[i * self.dim + i].re).sum()
    }

    pub fn frob_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Self { dim: self.dim, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Self { dim: self.dim, data }
    }

    pub fn scale(&self, c: f64) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|z| z * c).collect() }
    }

    pub fn to_complex(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                m[(j, k)] = self.get(j, k);
            }
        }
        m
    }

    /// Product of two Hermitian matrices (not Hermitian in general).
    pub fn mul_herm(&self, other: &Self) -> ComplexMatrix {
        self.to_complex().mul(&other.to_complex())
    }

    /// Determinant via LU with partial pivoting; real for Hermitian input.
    pub fn det(&self) -> f64 {
        let (det, _) = lu_det(&self.to_complex());
        det.re
    }

    /// Determinant, trace, and inverse in one call.
    ///
    /// Fails with [`Error::Singular`] when `|det|` underflows
    /// [`SINGULAR_TOL`]·‖M‖^m.
    pub fn det_trace_inv(&self) -> Result<(f64, f64, HermitianMatrix)> {
        let inv = self.inverse()?;
        Ok((self.det(), self.trace(), inv))
    }

    pub fn inverse(&self) -> Result<HermitianMatrix> {
        let c = self.to_complex();
        let (det, _) = lu_det(&c);
        let threshold = SINGULAR_TOL * self.frob_norm().powi(self.dim as i32);
        if det.norm() <= threshold {
            return Err(Error::Singular { det: det.norm() });
        }
        let inv = lu_inverse(&c)?;
        Ok(HermitianMatrix::from_symmetrized(&inv))
    }

    /// Lower-triangular complex Cholesky factor `L` with `M = L·Lᴴ` and real
    /// positive diagonal.
    pub fn cholesky_lower(&self) -> Result<ComplexMatrix> {
        let n = self.dim;
        let threshold = PD_PIVOT_TOL * self.frob_norm();
        let mut l = ComplexMatrix::zeros(n, n);
        for j in 0..n {
            let mut pivot = self.get(j, j).re;
            for k in 0..j {
                pivot -= l[(j, k)].norm_sqr();
            }
            if pivot <= threshold {
                return Err(Error::NotPositiveDefinite { pivot, index: j });
            }
            let ljj = pivot.sqrt();
            l[(j, j)] = Complex64::new(ljj, 0.0);
            for i in (j + 1)..n {
                let mut s = self.get(i, j);
                for k in 0..j {
                    s -= l[(i, k)] * l[(j, k)].conj();
                }
                l[(i, j)] = s / ljj;
            }
        }
        Ok(l)
    }

    /// Full eigendecomposition with ascending eigenvalues and orthonormal
    /// eigenvector columns.
    pub fn eigvals(&self) -> EigenPair {
        match self.dim {
            2 => self.eig_2x2(),
            _ => self.eig_jacobi(),
        }
    }

    /// Largest-eigenvalue rank-one factorization `M ≈ mu·ααᴴ`.
    ///
    /// Returns `(mu, alpha)` with `mu = tr(M)` and `alpha` the unit
    /// eigenvector of the largest eigenvalue. Fails with
    /// [`Error::NotRankOne`] when the second-largest eigenvalue magnitude
    /// exceeds `tol` times the largest.
    pub fn rank_one_factor(&self, tol: f64) -> Result<(f64, Vec<Complex64>)> {
        let eig = self.eigvals();
        let m = self.dim;
        let largest = eig.values[m - 1].abs();
        let second = eig.values[..m - 1].iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
        if largest == 0.0 || second > tol * largest {
            return Err(Error::NotRankOne { second, largest });
        }
        let alpha: Vec<Complex64> = (0..m).map(|i| eig.vectors[(i, m - 1)]).collect();
        Ok((self.trace(), alpha))
    }

    fn eig_2x2(&self) -> EigenPair {
        let a = self.get(0, 0).re;
        let d = self.get(1, 1).re;
        let b = self.get(0, 1);
        let tr = a + d;
        let det = a * d - b.norm_sqr();
        let disc = (tr * tr / 4.0 - det).max(0.0).sqrt();
        let lam_hi = tr / 2.0 + disc;
        let lam_lo = tr / 2.0 - disc;
        let mut vectors = ComplexMatrix::zeros(2, 2);
        if b.norm() <= JACOBI_TOL * self.frob_norm().max(f64::MIN_POSITIVE) {
            // Effectively diagonal; eigenvectors are the basis vectors.
            let (lo, hi) = if a <= d { (0, 1) } else { (1, 0) };
            vectors[(lo, 0)] = Complex64::ONE;
            vectors[(hi, 1)] = Complex64::ONE;
        } else {
            for (col, lam) in [(0usize, lam_lo), (1usize, lam_hi)] {
                let v0 = b;
                let v1 = Complex64::new(lam - a, 0.0);
                let norm = (v0.norm_sqr() + v1.norm_sqr()).sqrt();
                vectors[(0, col)] = v0 / norm;
                vectors[(1, col)] = v1 / norm;
            }
        }
        EigenPair { values: vec![lam_lo, lam_hi], vectors }
    }

    fn eig_jacobi(&self) -> EigenPair {
        let n = self.dim;
        let norm = self.frob_norm();
        let mut a = self.to_complex();
        let mut v = ComplexMatrix::identity(n);
        if norm == 0.0 {
            return EigenPair { values: vec![0.0; n], vectors: v };
        }
        let tol = JACOBI_TOL * norm;
        for _sweep in 0..60 {
            let mut off = 0.0;
            for p in 0..n {
                for q in (p + 1)..n {
                    off += 2.0 * a[(p, q)].norm_sqr();
                }
            }
            if off.sqrt() <= tol {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    let apq = a[(p, q)];
                    let beta = apq.norm();
                    if beta <= tol * 1e-3 {
                        continue;
                    }
                    let phase = apq / beta; // e^{iφ}
                    let alpha = a[(p, p)].re;
                    let gamma = a[(q, q)].re;
                    let tau = (alpha - gamma) / (2.0 * beta);
                    let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    let mut u = ComplexMatrix::identity(n);
                    u[(p, p)] = Complex64::new(c, 0.0);
                    u[(p, q)] = -phase * s;
                    u[(q, p)] = phase.conj() * s;
                    u[(q, q)] = Complex64::new(c, 0.0);
                    a = u.adjoint().mul(&a).mul(&u);
                    for i in 0..n {
                        a[(i, i)] = Complex64::new(a[(i, i)].re, 0.0);
                    }
                    v = v.mul(&u);
                }
            }
        }
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).unwrap());
        let values: Vec<f64> = idx.iter().map(|&i| a[(i, i)].re).collect();
        let mut vectors = ComplexMatrix::zeros(n, n);
        for (col, &i) in idx.iter().enumerate() {
            for row in 0..n {
                vectors[(row, col)] = v[(row, i)];
            }
        }
        EigenPair { values, vectors }
    }
}

/// Ascending real eigenvalues with orthonormal complex eigenvector columns.
#[derive(Debug, Clone)]
pub struct EigenPair {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

/// `tr(AB)` for Hermitian `A`, `B` without forming the product; always real.
pub fn tr_prod(a: &HermitianMatrix, b: &HermitianMatrix) -> f64 {
    assert_eq!(a.dim(), b.dim());
    let mut s = 0.0;
    for j in 0..a.dim() {
        for k in 0..a.dim() {
            s += (a.get(j, k) * b.get(k, j)).re;
        }
    }
    s
}

fn lu_det(m: &ComplexMatrix) -> (Complex64, usize) {
    let n = m.rows();
    let mut a = m.clone();
    let mut swaps = 0usize;
    let mut det = Complex64::ONE;
    for col in 0..n {
        let mut pivot_row = col;
        let mut best = a[(col, col)].norm();
        for r in (col + 1)..n {
            if a[(r, col)].norm() > best {
                best = a[(r, col)].norm();
                pivot_row = r;
            }
        }
        if best == 0.0 {
            return (Complex64::ZERO, swaps);
        }
        if pivot_row != col {
            for k in 0..n {
                let tmp = a[(col, k)];
                a[(col, k)] = a[(pivot_row, k)];
                a[(pivot_row, k)] = tmp;
            }
            swaps += 1;
        }
        det *= a[(col, col)];
        for r in (col + 1)..n {
            let f = a[(r, col)] / a[(col, col)];
            for k in col..n {
                let v = a[(col, k)];
                a[(r, k)] -= f * v;
            }
        }
    }
    if swaps % 2 == 1 {
        det = -det;
    }
    (det, swaps)
}

fn lu_inverse(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = m.rows();
    // Gauss-Jordan on [M | I].
    let mut a = m.clone();
    let mut inv = ComplexMatrix::identity(n);
    for col in 0..n {
        let mut pivot_row = col;
        let mut best = a[(col, col)].norm();
        for r in (col + 1)..n {
            if a[(r, col)].norm() > best {
                best = a[(r, col)].norm();
                pivot_row = r;
            }
        }
        if best == 0.0 {
            return Err(Error::Singular { det: 0.0 });
        }
        if pivot_row != col {
            for k in 0..n {
                let (x, y) = (a[(col, k)], a[(pivot_row, k)]);
                a[(col, k)] = y;
                a[(pivot_row, k)] = x;
                let (x, y) = (inv[(col, k)], inv[(pivot_row, k)]);
                inv[(col, k)] = y;
                inv[(pivot_row, k)] = x;
            }
        }
        let piv = a[(col, col)];
        for k in 0..n {
            a[(col, k)] /= piv;
            inv[(col, k)] /= piv;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = a[(r, col)];
            if f == Complex64::ZERO {
                continue;
            }
            for k in 0..n {
                let (av, iv) = (a[(col, k)], inv[(col, k)]);
                a[(r, k)] -= f * av;
                inv[(r, k)] -= f * iv;
            }
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eig_identity_and_diag() {
        let eye = HermitianMatrix::identity(2);
        assert_eq!(eye.eigvals().values, vec![1.0, 1.0]);
        let d = HermitianMatrix::diag(&[3.0, 1.0]);
        assert_eq!(d.eigvals().values, vec![1.0, 3.0]);
    }

    #[test]
    fn eig_2x2_quadratic() {
        // [[2, 1], [1, 2]] has eigenvalues tr/2 ± sqrt(tr²/4 − det) = 1, 3.
        let m = HermitianMatrix::new(2, &[c(2.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)])
            .unwrap();
        let e = m.eigvals();
        assert!((e.values[0] - 1.0).abs() < 1e-14);
        assert!((e.values[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn construction_gate_rejects_asymmetric() {
        let r = HermitianMatrix::new(2, &[c(1.0, 0.0), c(0.5, 0.0), c(0.2, 0.0), c(1.0, 0.0)]);
        assert!(matches!(r, Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn construction_rejects_nan() {
        let r = HermitianMatrix::new(2, &[c(f64::NAN, 0.0); 4]);
        assert!(matches!(r, Err(Error::NonFinite)));
    }

    #[test]
    fn cholesky_examples() {
        let eye = HermitianMatrix::identity(3);
        let l = eye.cholesky_lower().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((l[(i, j)] - c(expect, 0.0)).norm() < 1e-15);
            }
        }
        let d = HermitianMatrix::diag(&[4.0, 9.0]);
        let l = d.cholesky_lower().unwrap();
        assert!((l[(0, 0)].re - 2.0).abs() < 1e-15);
        assert!((l[(1, 1)].re - 3.0).abs() < 1e-15);
    }

    #[test]
    fn cholesky_roundtrip_paper_covariance() {
        // 2x2 covariance with off-diagonal exp(−π³/32) ≈ 0.3795.
        let rho = (-std::f64::consts::PI.powi(3) / 32.0).exp();
        let m =
            HermitianMatrix::new(2, &[c(1.0, 0.0), c(rho, 0.0), c(rho, 0.0), c(1.0, 0.0)]).unwrap();
        let l = m.cholesky_lower().unwrap();
        let back = HermitianMatrix::from_symmetrized(&l.mul(&l.adjoint()));
        assert!(back.sub(&m).frob_norm() < 1e-12 * m.frob_norm());
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        let m = HermitianMatrix::diag(&[1.0, -0.5]);
        assert!(matches!(m.cholesky_lower(), Err(Error::NotPositiveDefinite { .. })));
    }

    #[test]
    fn det_trace_inv_examples() {
        let (det, tr, inv) = HermitianMatrix::identity(2).det_trace_inv().unwrap();
        assert!((det - 1.0).abs() < 1e-15 && (tr - 2.0).abs() < 1e-15);
        assert!(inv.sub(&HermitianMatrix::identity(2)).frob_norm() < 1e-14);

        let (det, tr, inv) = HermitianMatrix::diag(&[2.0, 5.0]).det_trace_inv().unwrap();
        assert!((det - 10.0).abs() < 1e-12 && (tr - 7.0).abs() < 1e-12);
        assert!((inv.get(0, 0).re - 0.5).abs() < 1e-14);
        assert!((inv.get(1, 1).re - 0.2).abs() < 1e-14);
    }

    #[test]
    fn inverse_residual_random_pd_3x3() {
        let m = HermitianMatrix::new(
            3,
            &[
                c(2.0, 0.0),
                c(0.3, 0.4),
                c(-0.1, 0.2),
                c(0.3, -0.4),
                c(1.5, 0.0),
                c(0.2, -0.3),
                c(-0.1, -0.2),
                c(0.2, 0.3),
                c(1.8, 0.0),
            ],
        )
        .unwrap();
        let (_, _, inv) = m.det_trace_inv().unwrap();
        let prod = m.mul_herm(&inv);
        let eye = ComplexMatrix::identity(3);
        let mut resid: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                resid = resid.max((prod[(i, j)] - eye[(i, j)]).norm());
            }
        }
        assert!(resid < 1e-11, "inverse residual {resid}");
    }

    #[test]
    fn singular_inverse_rejected() {
        let m = HermitianMatrix::diag(&[1.0, 0.0]);
        assert!(matches!(m.inverse(), Err(Error::Singular { .. })));
    }

    #[test]
    fn rank_one_examples() {
        let e1 = HermitianMatrix::outer(&[c(1.0, 0.0), c(0.0, 0.0)]);
        let (mu, alpha) = e1.rank_one_factor(1e-10).unwrap();
        assert!((mu - 1.0).abs() < 1e-14);
        assert!((alpha[0].norm() - 1.0).abs() < 1e-12 && alpha[1].norm() < 1e-12);

        // 2·vvᴴ with v = (1, i)/√2.
        let s = 1.0 / 2.0f64.sqrt();
        let v = [c(s, 0.0), c(0.0, s)];
        let m = HermitianMatrix::outer(&v).scale(2.0);
        let (mu, alpha) = m.rank_one_factor(1e-10).unwrap();
        assert!((mu - 2.0).abs() < 1e-14);
        // alpha equals v up to a global phase.
        let ip: Complex64 = v.iter().zip(&alpha).map(|(a, b)| a.conj() * b).sum();
        assert!((ip.norm() - 1.0).abs() < 1e-12);

        assert!(matches!(
            HermitianMatrix::identity(2).rank_one_factor(1e-10),
            Err(Error::NotRankOne { .. })
        ));
    }

    #[test]
    fn eig_reconstruction_and_det_product() {
        // Deterministic pseudo-random Hermitian matrices across dims 2..4.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        for dim in 2..=4usize {
            for _ in 0..40 {
                let mut entries = vec![Complex64::ZERO; dim * dim];
                for j in 0..dim {
                    for k in j..dim {
                        let z = if j == k { c(2.0 * next(), 0.0) } else { c(next(), next()) };
                        entries[j * dim + k] = z;
                        entries[k * dim + j] = z.conj();
                    }
                }
                let m = HermitianMatrix::new(dim, &entries).unwrap();
                let e = m.eigvals();
                // reconstruction V diag(λ) Vᴴ = M
                let mut rec = ComplexMatrix::zeros(dim, dim);
                for a in 0..dim {
                    for b in 0..dim {
                        for k in 0..dim {
                            rec[(a, b)] +=
                                e.vectors[(a, k)] * e.values[k] * e.vectors[(b, k)].conj();
                        }
                    }
                }
                let mut err: f64 = 0.0;
                for a in 0..dim {
                    for b in 0..dim {
                        err = err.max((rec[(a, b)] - m.get(a, b)).norm());
                    }
                }
                let norm = m.frob_norm().max(1e-30);
                assert!(err < 1e-10 * norm, "reconstruction error {err} at dim {dim}");
                let det_from_eigs: f64 = e.values.iter().product();
                assert!(
                    (m.det() - det_from_eigs).abs() <= 1e-10 * det_from_eigs.abs().max(norm),
                    "det {} vs eig product {}",
                    m.det(),
                    det_from_eigs
                );
                // eigenvalues sorted ascending
                for w in e.values.windows(2) {
                    assert!(w[0] <= w[1] + 1e-14);
                }
            }
        }
    }

    mod proptests {
        use super::*;
        use proptest::prelude::*;

        fn herm_strategy(dim: usize) -> impl Strategy<Value = HermitianMatrix> {
            proptest::collection::vec(-2.0f64..2.0, dim * dim * 2).prop_map(move |v| {
                let mut entries = vec![Complex64::ZERO; dim * dim];
                for j in 0..dim {
                    for k in j..dim {
                        let idx = 2 * (j * dim + k);
                        let z = if j == k {
                            Complex64::new(v[idx], 0.0)
                        } else {
                            Complex64::new(v[idx], v[idx + 1])
                        };
                        entries[j * dim + k] = z;
                        entries[k * dim + j] = z.conj();
                    }
                }
                HermitianMatrix::new(dim, &entries).unwrap()
            })
        }

        fn check_reconstruction(m: &HermitianMatrix) -> std::result::Result<(), TestCaseError> {
            let e = m.eigvals();
            let dim = m.dim();
            let norm = m.frob_norm().max(1e-12);
            for a in 0..dim {
                for b in 0..dim {
                    let mut rec = Complex64::ZERO;
                    for k in 0..dim {
                        rec += e.vectors[(a, k)] * e.values[k] * e.vectors[(b, k)].conj();
                    }
                    prop_assert!((rec - m.get(a, b)).norm() < 1e-10 * norm);
                }
            }
            let det_eig: f64 = e.values.iter().product();
            prop_assert!((m.det() - det_eig).abs() <= 1e-10 * det_eig.abs().max(norm));
            Ok(())
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(150))]

            #[test]
            fn eig_reconstructs_2x2(m in herm_strategy(2)) {
                check_reconstruction(&m)?;
            }

            #[test]
            fn eig_reconstructs_3x3(m in herm_strategy(3)) {
                check_reconstruction(&m)?;
            }

            #[test]
            fn eig_reconstructs_4x4(m in herm_strategy(4)) {
                check_reconstruction(&m)?;
            }

            #[test]
            fn cholesky_round_trips_on_gram_matrices(g in herm_strategy(3)) {
                // G² + I is comfortably positive definite
                let pd = HermitianMatrix::from_symmetrized(&g.mul_herm(&g))
                    .add(&HermitianMatrix::identity(3));
                let l = pd.cholesky_lower().unwrap();
                let back = HermitianMatrix::from_symmetrized(&l.mul(&l.adjoint()));
                prop_assert!(back.sub(&pd).frob_norm() < 1e-12 * pd.frob_norm());
            }
        }
    }

    #[test]
    fn rank_one_roundtrip_many_random_unit_vectors() {
        let mut state = 42u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        for _ in 0..1000 {
            let dim = 2 + (next().abs() * 3.0) as usize % 3;
            let mut v: Vec<Complex64> = (0..dim).map(|_| c(next(), next())).collect();
            let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            for z in &mut v {
                *z /= norm;
            }
            let mu_in = 0.5 + next().abs() * 3.0;
            let m = HermitianMatrix::outer(&v).scale(mu_in);
            let (mu, alpha) = m.rank_one_factor(1e-10).unwrap();
            assert!((mu - mu_in).abs() < 1e-10 * mu_in);
            let ip: Complex64 = v.iter().zip(&alpha).map(|(a, b)| a.conj() * b).sum();
            assert!((ip.norm() - 1.0).abs() < 1e-9, "alpha not parallel: |ip| = {}", ip.norm());
        }
    }
}
