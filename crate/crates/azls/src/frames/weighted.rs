//! Weighted least-squares wrappers and the Gibbs-suppression setup.

use crate::az::{AzProblem, WeightedAzProblem};
use crate::error::Result;
use crate::frames::{fourier_extension_1d, sample_function, Domain, FrameProblem, Points, Sizing};
use crate::matrix::ComplexVector;
use crate::operators::{compose, materialize, real_diagonal};
use crate::solvers::direct_lsq;
use crate::C64;

/// Wraps `base` for `W A x ≈ W b` with `W = diag(d)`.
pub fn weighted_lsq(base: AzProblem, d: Vec<f64>, eps_w: f64) -> Result<WeightedAzProblem> {
    WeightedAzProblem::new(base, d, eps_w)
}

/// The weighted least-squares solution `(A^* W² A)^{-1} A^* W² b`, computed
/// as the dense minimum-norm solution of `W A x = W b`.
pub fn weighted_oracle(problem: &WeightedAzProblem, b: &[C64]) -> Result<Vec<C64>> {
    let wa = materialize(&compose(&real_diagonal(&problem.d), &problem.base.a)?)?;
    Ok(direct_lsq(&wa, &problem.weighted_rhs(b))?.x.into_inner())
}

/// Fourier series on `[0, 1]` (mapped to `[-1, 1]`) for a function with a
/// jump at `t = 1/2`, weighted by `(t - 1/2)²`.
pub struct GibbsSetup {
    pub problem: FrameProblem,
    /// `(t_m - 1/2)²` at the collocation points.
    pub weights: Vec<f64>,
    /// Samples of `frac(t + 1/2) + cos(2π t) / 4`.
    pub samples: ComplexVector,
}

/// `t = (x + 1) / 2`.
pub fn gibbs_target(t: f64) -> f64 {
    (t + 0.5).fract() + 0.25 * (2.0 * std::f64::consts::PI * t).cos()
}

/// `N` Fourier terms on the full box with an `M`-point grid. An odd `M`
/// keeps every weight strictly positive.
pub fn gibbs_setup(n: usize, m: usize) -> Result<GibbsSetup> {
    let problem = fourier_extension_1d(n, &Domain::full(), Sizing::GridSize(m))?;
    let pts = match &problem.points {
        Points::OneD(p) => p.clone(),
        Points::TwoD(_) => unreachable!("1D builder"),
    };
    let weights = pts.iter().map(|&x| (0.5 * (x + 1.0) - 0.5).powi(2)).collect();
    let samples = sample_function(|p: &[f64]| C64::new(gibbs_target(0.5 * (p[0] + 1.0)), 0.0), &problem.points);
    Ok(GibbsSetup {
        problem,
        weights,
        samples,
    })
}
