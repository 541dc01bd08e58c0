//! Sketched solvers: factor `A Ω` for a real Gaussian `N x R` sketch `Ω`.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::matrix::{pivoted_qr_compact, svd, ComplexMatrix};
use crate::operators::Operator;
use crate::rng::gaussian_matrix;
use crate::solvers::dense::{qr_solve_leading, svd_apply_truncated};
use crate::solvers::{residual_of, SolveReport, SolverConfig};
use crate::C64;

/// `A Ω` for a sketch that can be widened without redrawing its columns.
struct Sketch<'a> {
    op: &'a Operator,
    seed: u64,
    omega: ComplexMatrix,
    columns: Vec<Vec<C64>>,
}

impl<'a> Sketch<'a> {
    fn new(op: &'a Operator, seed: u64) -> Self {
        Self {
            op,
            seed,
            omega: ComplexMatrix::zeros(op.cols(), 0),
            columns: Vec::new(),
        }
    }

    fn widen(&mut self, r: usize) -> Result<()> {
        let old = self.columns.len();
        if r <= old {
            return Ok(());
        }
        // Column-major draws: the first `old` columns are unchanged.
        self.omega = gaussian_matrix(self.op.cols(), r, self.seed);
        let fresh: Vec<usize> = (old..r).collect();
        let new_cols = self.op.apply_columns(&self.omega.select_columns(&fresh))?;
        for j in 0..new_cols.cols() {
            self.columns.push(new_cols.column(j));
        }
        Ok(())
    }

    fn matrix(&self) -> Result<ComplexMatrix> {
        ComplexMatrix::from_columns(self.op.rows(), &self.columns)
    }
}

/// Growth rule for adaptive sketching: the retained count fills the sketch,
/// or leaves fewer than `p` columns of slack.
fn crowded(kept: usize, r: usize, p: usize) -> bool {
    kept == r || (r > p && kept > r - p)
}

fn check(op: &Operator, b: &[C64], cfg: &SolverConfig) -> Result<()> {
    cfg.validate()?;
    if b.len() != op.rows() {
        return Err(Error::shape("randomized solve", op.rows(), b.len()));
    }
    if cfg.sketch_size > op.cols() {
        return Err(Error::invalid(format!(
            "sketch size {} exceeds N = {}",
            cfg.sketch_size,
            op.cols()
        )));
    }
    Ok(())
}

/// Randomized truncated SVD: SVD of `A Ω`, keep `σ̃ >= eps`,
/// `y = Ṽ₁ Σ̃₁⁻¹ Ũ₁^* b`, `x = Ω y`.
///
/// If no singular value survives the result is `x = 0` with rank 0.
pub fn randomized_tsvd_solve(op: &Operator, b: &[C64], cfg: &SolverConfig) -> Result<SolveReport> {
    let start = Instant::now();
    check(op, b, cfg)?;
    let mut sketch = Sketch::new(op, cfg.seed);
    let mut r = cfg.sketch_size;
    loop {
        sketch.widen(r)?;
        let f = svd(&sketch.matrix()?)?;
        let kept = f.sigma.iter().filter(|&&s| s >= cfg.eps).count();
        if cfg.adaptive && r < op.cols() && crowded(kept, r, cfg.oversampling) {
            r = (2 * r).min(op.cols());
            continue;
        }
        let (y, kept) = svd_apply_truncated(&f, b, |s| s >= cfg.eps);
        let x = sketch.omega.matvec(&y)?;
        let res = residual_of(op, &x, b)?;
        return SolveReport::build(x, res, kept, r, start);
    }
}

/// Randomized truncated QR: pivoted QR of `A Ω`, keep pivots with
/// `|R̃_kk| >= eps`, `y = Π̃₁ R̃₁₁⁻¹ Q̃₁^* b`, `x = Ω y`.
pub fn randomized_tqr_solve(op: &Operator, b: &[C64], cfg: &SolverConfig) -> Result<SolveReport> {
    let start = Instant::now();
    check(op, b, cfg)?;
    let mut sketch = Sketch::new(op, cfg.seed);
    let mut r = cfg.sketch_size;
    loop {
        sketch.widen(r)?;
        let qr = pivoted_qr_compact(&sketch.matrix()?)?;
        let kept = qr.r_diagonal().iter().take_while(|d| d.norm() >= cfg.eps).count();
        if cfg.adaptive && r < op.cols() && crowded(kept, r, cfg.oversampling) {
            r = (2 * r).min(op.cols());
            continue;
        }
        let x = if kept == 0 {
            vec![C64::new(0.0, 0.0); op.cols()]
        } else {
            let y = qr_solve_leading(&qr, b, kept)?;
            sketch.omega.matvec(&y)?
        };
        let res = residual_of(op, &x, b)?;
        return SolveReport::build(x, res, kept, r, start);
    }
}
