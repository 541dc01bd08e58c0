//! Singular value decomposition and the kernels derived from it.

use crate::error::{Error, Result};
use crate::matrix::{require_nonempty_finite, ComplexMatrix};
use crate::C64;

/// Thin SVD `A = U diag(sigma) V^*` with `K = min(M, N)`.
#[derive(Clone, Debug)]
pub struct SvdFactorization {
    /// `M x K`, orthonormal columns.
    pub u: ComplexMatrix,
    /// Nonincreasing, nonnegative, length `K`.
    pub sigma: Vec<f64>,
    /// `N x K`, orthonormal columns.
    pub v: ComplexMatrix,
}

impl SvdFactorization {
    /// `U diag(sigma) V^*`.
    pub fn recompose(&self) -> ComplexMatrix {
        let us = ComplexMatrix::from_fn(self.u.rows(), self.sigma.len(), |i, j| {
            self.u[(i, j)] * self.sigma[j]
        });
        us.matmul(&self.v.adjoint()).expect("factor shapes agree")
    }
}

fn to_faer(a: &ComplexMatrix) -> faer::Mat<C64> {
    faer::Mat::from_fn(a.rows(), a.cols(), |i, j| a[(i, j)])
}

fn from_faer(m: faer::MatRef<'_, C64>) -> ComplexMatrix {
    ComplexMatrix::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
}

fn no_convergence(a: &ComplexMatrix) -> Error {
    Error::SvdNoConvergence {
        rows: a.rows(),
        cols: a.cols(),
    }
}

pub fn svd(a: &ComplexMatrix) -> Result<SvdFactorization> {
    require_nonempty_finite(a)?;
    let f = to_faer(a).thin_svd().map_err(|_| no_convergence(a))?;
    Ok(SvdFactorization {
        u: from_faer(f.U()),
        sigma: f.S().column_vector().iter().map(|s| s.re).collect(),
        v: from_faer(f.V()),
    })
}

/// Singular values only, nonincreasing.
pub fn singular_values(a: &ComplexMatrix) -> Result<Vec<f64>> {
    require_nonempty_finite(a)?;
    to_faer(a).singular_values().map_err(|_| no_convergence(a))
}

/// Spectral norm.
pub fn two_norm(a: &ComplexMatrix) -> Result<f64> {
    Ok(singular_values(a)?[0])
}

/// Moore–Penrose pseudoinverse, dropping `σ <= max(M, N) · ε_mach · σ_1`.
pub fn pseudoinverse(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let (m, n) = a.shape();
    let f = svd(a)?;
    let cutoff = m.max(n) as f64 * f64::EPSILON * f.sigma[0];
    let k = f.sigma.len();
    let mut vs = ComplexMatrix::zeros(n, k);
    for j in 0..k {
        if f.sigma[j] > cutoff {
            let inv = 1.0 / f.sigma[j];
            for i in 0..n {
                vs[(i, j)] = f.v[(i, j)] * inv;
            }
        }
    }
    vs.matmul(&f.u.adjoint())
}
