//! Certificates for the splitting `A = W + L1 + E1`, `Z^* = W^† + L2 + E2`.
//!
//! With `rank(L1), rank(L2) <= R` and `‖E1‖_F, ‖E2‖_F <= ε`, the matrix
//! `A - A Z^* A` has epsilon rank at most `3R` at level
//! `ε (1 + ‖I - A Z^*‖₂ + ‖A‖₂²) + ε² ‖A‖₂`.

use crate::error::{Error, Result};
use crate::matrix::{eps_rank, pseudoinverse, two_norm, ComplexMatrix, EpsRankReport};
use crate::rng::gaussian_matrix;
use crate::C64;

#[derive(Clone, Debug)]
pub struct SplittingCertificate {
    pub a: ComplexMatrix,
    pub z: ComplexMatrix,
    /// `A - A Z^* A`.
    pub step1: ComplexMatrix,
    pub e_bound: f64,
    /// Epsilon rank of `A - A Z^* A` at `e_bound`.
    pub rank: EpsRankReport,
}

/// Builds `A`, `Z` from the splitting and measures the epsilon rank.
pub fn splitting_certificate(
    w: &ComplexMatrix,
    l1: &ComplexMatrix,
    e1: &ComplexMatrix,
    l2: &ComplexMatrix,
    e2: &ComplexMatrix,
    eps: f64,
) -> Result<SplittingCertificate> {
    let (m, n) = w.shape();
    for (name, mat, shape) in [("L1", l1, (m, n)), ("E1", e1, (m, n)), ("L2", l2, (n, m)), ("E2", e2, (n, m))] {
        if mat.shape() != shape {
            return Err(Error::ShapeMismatch {
                op: "splitting_certificate",
                expected: format!("{name} of shape {shape:?}"),
                got: format!("{:?}", mat.shape()),
            });
        }
    }
    let a = w.add(l1)?.add(e1)?;
    let zstar = pseudoinverse(w)?.add(l2)?.add(e2)?;
    let azs = a.matmul(&zstar)?;
    let step1 = a.sub(&azs.matmul(&a)?)?;
    let i_minus = ComplexMatrix::identity(m).sub(&azs)?;
    let na = two_norm(&a)?;
    let e_bound = eps * (1.0 + two_norm(&i_minus)? + na * na) + eps * eps * na;
    let rank = eps_rank(&step1, e_bound)?;
    Ok(SplittingCertificate {
        a,
        z: zstar.adjoint(),
        step1,
        e_bound,
        rank,
    })
}

/// A seeded splitting: Gaussian `W`, rank-`R` Gaussian products `L1`, `L2`,
/// and Gaussian `E1`, `E2` scaled to Frobenius norm `eps`.
#[derive(Clone, Debug)]
pub struct SplittingInstance {
    pub w: ComplexMatrix,
    pub l1: ComplexMatrix,
    pub e1: ComplexMatrix,
    pub l2: ComplexMatrix,
    pub e2: ComplexMatrix,
}

pub fn synthetic_splitting(m: usize, n: usize, rank: usize, eps: f64, seed: u64) -> Result<SplittingInstance> {
    let s = seed.wrapping_mul(7);
    let low_rank = |rows, cols, s: u64| -> Result<ComplexMatrix> {
        if rank == 0 {
            return Ok(ComplexMatrix::zeros(rows, cols));
        }
        gaussian_matrix(rows, rank, s).matmul(&gaussian_matrix(rank, cols, s + 1))
    };
    let noise = |rows, cols, s: u64| -> ComplexMatrix {
        let g = gaussian_matrix(rows, cols, s);
        let f = g.frobenius_norm();
        g.scale(C64::new(eps / f, 0.0))
    };
    Ok(SplittingInstance {
        w: gaussian_matrix(m, n, s),
        l1: low_rank(m, n, s + 1)?,
        e1: noise(m, n, s + 3),
        l2: low_rank(n, m, s + 4)?,
        e2: noise(n, m, s + 6),
    })
}

impl SplittingInstance {
    pub fn certificate(&self, eps: f64) -> Result<SplittingCertificate> {
        splitting_certificate(&self.w, &self.l1, &self.e1, &self.l2, &self.e2, eps)
    }
}
