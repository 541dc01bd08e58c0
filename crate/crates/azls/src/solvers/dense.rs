use std::time::Instant;

use crate::error::{Error, Result};
use crate::matrix::{pivoted_qr_compact, sub_vec, svd, ComplexMatrix, SvdFactorization};
use crate::solvers::{check_eps, SolveReport};
use crate::C64;

const ZERO: C64 = C64::new(0.0, 0.0);

fn check_rhs(a: &ComplexMatrix, b: &[C64]) -> Result<()> {
    if b.len() != a.rows() {
        return Err(Error::shape("solve", a.rows(), b.len()));
    }
    Ok(())
}

/// `x = Σ_{σ_i kept} v_i (u_i^* b) / σ_i`, returning the kept count.
pub(crate) fn svd_apply_truncated(f: &SvdFactorization, b: &[C64], keep: impl Fn(f64) -> bool) -> (Vec<C64>, usize) {
    let n = f.v.rows();
    let mut x = vec![ZERO; n];
    let mut kept = 0;
    for (j, &s) in f.sigma.iter().enumerate() {
        if !keep(s) {
            continue;
        }
        kept += 1;
        let mut c = ZERO;
        for (i, &bi) in b.iter().enumerate() {
            c += f.u[(i, j)].conj() * bi;
        }
        let c = c / s;
        for (i, xi) in x.iter_mut().enumerate() {
            *xi += f.v[(i, j)] * c;
        }
    }
    (x, kept)
}

fn finish(a: &ComplexMatrix, b: &[C64], x: Vec<C64>, rank: usize, start: Instant) -> Result<SolveReport> {
    let r = sub_vec(b, &a.matvec(&x)?);
    SolveReport::build(x, r, rank, 0, start)
}

/// Minimum-norm least squares `x = A^† b` (pseudoinverse cutoff).
pub fn direct_lsq(a: &ComplexMatrix, b: &[C64]) -> Result<SolveReport> {
    let start = Instant::now();
    check_rhs(a, b)?;
    if a.rows() < a.cols() {
        return Err(Error::invalid(format!(
            "direct_lsq needs M >= N, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let f = svd(a)?;
    let cutoff = a.rows().max(a.cols()) as f64 * f64::EPSILON * f.sigma[0];
    let (x, k) = svd_apply_truncated(&f, b, |s| s > cutoff);
    finish(a, b, x, k, start)
}

/// Truncated SVD: keep `σ >= eps`, `x = V₁ Σ₁⁻¹ U₁^* b`.
pub fn tsvd_solve(a: &ComplexMatrix, b: &[C64], eps: f64) -> Result<SolveReport> {
    let start = Instant::now();
    check_eps(eps)?;
    check_rhs(a, b)?;
    let f = svd(a)?;
    let (x, k) = svd_apply_truncated(&f, b, |s| s >= eps);
    finish(a, b, x, k, start)
}

/// Truncated pivoted QR with a given rank: `x = Π₁ R₁₁⁻¹ Q₁^* b`.
pub fn tqr_solve(a: &ComplexMatrix, b: &[C64], r: usize) -> Result<SolveReport> {
    let start = Instant::now();
    check_rhs(a, b)?;
    if r == 0 || r > a.rows().min(a.cols()) {
        return Err(Error::invalid(format!(
            "rank {r} outside 1..={} for a {}x{} matrix",
            a.rows().min(a.cols()),
            a.rows(),
            a.cols()
        )));
    }
    let qr = pivoted_qr_compact(a)?;
    let x = qr_solve_leading(&qr, b, r)?;
    finish(a, b, x, r, start)
}

/// Truncated pivoted QR with the rank read off the diagonal: `|R_kk| >= eps`.
/// Returns `x = 0` when no pivot survives.
pub fn tqr_solve_eps(a: &ComplexMatrix, b: &[C64], eps: f64) -> Result<SolveReport> {
    let start = Instant::now();
    check_eps(eps)?;
    check_rhs(a, b)?;
    let qr = pivoted_qr_compact(a)?;
    let r = qr.r_diagonal().iter().take_while(|d| d.norm() >= eps).count();
    let x = if r == 0 {
        vec![ZERO; a.cols()]
    } else {
        qr_solve_leading(&qr, b, r)?
    };
    finish(a, b, x, r, start)
}

/// Dense direct solver for timing comparisons: pivoted QR of the whole
/// matrix, rank from `|R_kk| >= eps`. Cost `O(M N²)`.
pub fn direct_qr_solve(a: &ComplexMatrix, b: &[C64], eps: f64) -> Result<SolveReport> {
    tqr_solve_eps(a, b, eps)
}

pub(crate) fn qr_solve_leading(qr: &crate::matrix::HouseholderQr, b: &[C64], r: usize) -> Result<Vec<C64>> {
    let mut c = b.to_vec();
    qr.apply_q_adjoint(&mut c);
    let y = qr.solve_leading(r, &c)?;
    let mut x = vec![ZERO; qr.cols()];
    for (i, &yi) in y.iter().enumerate() {
        x[qr.perm()[i]] = yi;
    }
    Ok(x)
}
