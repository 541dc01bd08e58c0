//! AZ for weighted least squares `W A x ≈ W b`, `W = diag(d)`.
//!
//! The derived problem is `Ã = W A`, `Z̃ = W_ε^† Z`, `b̃ = W b`, where
//! `W_ε^†` inverts the weights `d_i >= eps_w` and zeroes the rest. At
//! `eps_w = 0` step 1 has rank zero and the unweighted solution comes back;
//! above `max(d)` step 2 vanishes and step 1 solves the weighted problem.

use crate::az::{az_solve, AzProblem, AzSolution};
use crate::error::{Error, Result};
use crate::operators::{compose, real_diagonal};
use crate::solvers::{SolverConfig, Step1Solver};
use crate::C64;

#[derive(Clone, Debug)]
pub struct WeightedAzProblem {
    pub base: AzProblem,
    pub d: Vec<f64>,
    pub eps_w: f64,
}

impl WeightedAzProblem {
    pub fn new(base: AzProblem, d: Vec<f64>, eps_w: f64) -> Result<Self> {
        if d.len() != base.a.rows() {
            return Err(Error::shape("WeightedAzProblem", base.a.rows(), d.len()));
        }
        if let Some((index, &value)) = d.iter().enumerate().find(|(_, v)| !(**v > 0.0 && v.is_finite())) {
            return Err(Error::NonPositiveWeight { index, value });
        }
        if !(eps_w >= 0.0) || !eps_w.is_finite() {
            return Err(Error::invalid(format!("eps_w must be nonnegative and finite, got {eps_w}")));
        }
        Ok(Self { base, d, eps_w })
    }

    pub fn with_eps_w(&self, eps_w: f64) -> Result<Self> {
        Self::new(self.base.clone(), self.d.clone(), eps_w)
    }

    /// `(W A, W_ε^† Z)` as an ordinary AZ pair.
    pub fn derived(&self) -> Result<AzProblem> {
        let w = real_diagonal(&self.d);
        let wpinv = real_diagonal(&threshold_pinv(&self.d, self.eps_w));
        let scale = self.d.iter().cloned().fold(0.0, f64::max) * self.base.scale_hint;
        AzProblem::new(
            compose(&w, &self.base.a)?,
            compose(&wpinv, &self.base.z)?,
            format!("weighted({})", self.base.label),
            scale,
        )
    }

    /// `W b`.
    pub fn weighted_rhs(&self, b: &[C64]) -> Vec<C64> {
        b.iter().zip(&self.d).map(|(v, d)| v * d).collect()
    }
}

/// `1/d_i` where `d_i >= eps_w`, else 0.
pub fn threshold_pinv(d: &[f64], eps_w: f64) -> Vec<f64> {
    d.iter().map(|&v| if v >= eps_w { 1.0 / v } else { 0.0 }).collect()
}

/// AZ on the derived problem. The reported residual is `‖W b - W A x‖`.
pub fn az_weighted_solve(
    problem: &WeightedAzProblem,
    b: &[C64],
    step1: Step1Solver,
    cfg: &SolverConfig,
) -> Result<AzSolution> {
    if b.len() != problem.d.len() {
        return Err(Error::shape("az_weighted_solve", problem.d.len(), b.len()));
    }
    az_solve(&problem.derived()?, &problem.weighted_rhs(b), step1, cfg)
}
