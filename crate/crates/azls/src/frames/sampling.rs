//! Sampling target functions and measuring approximation error.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::frames::{Domain, FrameProblem, Points};
use crate::matrix::ComplexVector;
use crate::parallel;
use crate::C64;

/// `f` at every collocation point.
pub fn sample_function(f: impl Fn(&[f64]) -> C64, points: &Points) -> ComplexVector {
    let v: Vec<C64> = (0..points.len()).map(|i| f(&points.coords(i))).collect();
    ComplexVector::new(v).expect("target function returned a non-finite value")
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorReport {
    /// Largest pointwise error on the evaluation grid.
    pub max_err: f64,
    /// Root-mean-square error over the evaluation grid.
    pub l2_err: f64,
    /// Number of evaluation points inside the domain.
    pub points: usize,
}

/// Error of `Σ x_k φ_k` against `f` on a uniform grid `refine` times finer
/// than the full collocation grid (`refine >= 4`), restricted to the domain.
pub fn eval_error(
    problem: &FrameProblem,
    x: &[C64],
    f: impl Fn(&[f64]) -> C64 + Sync,
    refine: usize,
) -> Result<ErrorReport> {
    if refine < 4 {
        return Err(Error::invalid(format!("evaluation grid must be at least 4x finer, got {refine}")));
    }
    if x.len() != problem.basis.len() {
        return Err(Error::shape("eval_error", problem.basis.len(), x.len()));
    }
    let k = refine * problem.grid.l;
    let coord = |i: usize| -1.0 + 2.0 * i as f64 / k as f64;
    let pts: Vec<Vec<f64>> = match &problem.domain {
        Domain::Intervals(iv) => (0..=k).map(coord).filter(|&t| iv.contains(t)).map(|t| vec![t]).collect(),
        Domain::Mask(mask) => (0..=k)
            .flat_map(|i| (0..=k).map(move |j| (coord(i), coord(j))))
            .filter(|&(a, b)| mask.contains(a, b))
            .map(|(a, b)| vec![a, b])
            .collect(),
    };
    if pts.is_empty() {
        return Err(Error::Empty("evaluation grid inside the domain"));
    }
    let errs = parallel::map_range(pts.len(), |i| (problem.evaluate(x, &pts[i]) - f(&pts[i])).norm());
    let max_err = errs.iter().cloned().fold(0.0, f64::max);
    let l2_err = (errs.iter().map(|e| e * e).sum::<f64>() / errs.len() as f64).sqrt();
    Ok(ErrorReport {
        max_err,
        l2_err,
        points: errs.len(),
    })
}
