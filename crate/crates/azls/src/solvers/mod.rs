//! Step-1 solvers: truncated SVD and truncated pivoted QR, each in a dense
//! and a randomized (sketched) variant, plus a direct baseline.
//!
//! Thresholds are absolute. A singular value or `|R_kk|` exactly equal to
//! `eps` is retained.

mod dense;
mod montecarlo;
mod randomized;

use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{sub_vec, vec_norm, ComplexVector};
use crate::operators::{materialize, Operator};
use crate::C64;

pub use dense::{direct_lsq, direct_qr_solve, tqr_solve, tqr_solve_eps, tsvd_solve};
pub use montecarlo::{mc_gaussian_props, McReport, TailCount};
pub use randomized::{randomized_tqr_solve, randomized_tsvd_solve};

/// Default oversampling `p` in `R = r + p`.
pub const DEFAULT_OVERSAMPLING: usize = 20;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolverConfig {
    /// Absolute truncation threshold.
    pub eps: f64,
    /// Sketch size `R` for the randomized solvers.
    pub sketch_size: usize,
    pub oversampling: usize,
    pub seed: u64,
    /// Double `R` and extend the sketch while the retained rank crowds it.
    pub adaptive: bool,
}

impl SolverConfig {
    pub fn new(eps: f64, sketch_size: usize) -> Self {
        Self {
            eps,
            sketch_size,
            oversampling: DEFAULT_OVERSAMPLING,
            seed: 0,
            adaptive: false,
        }
    }

    /// Sketch size `R = r + p` for a rank estimate `r`.
    pub fn for_rank(eps: f64, r: usize, p: usize) -> Self {
        Self {
            oversampling: p,
            ..Self::new(eps, r + p)
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_adaptive(mut self, adaptive: bool) -> Self {
        self.adaptive = adaptive;
        self
    }

    pub fn with_eps(mut self, eps: f64) -> Self {
        self.eps = eps;
        self
    }

    pub fn validate(&self) -> Result<()> {
        check_eps(self.eps)?;
        if self.sketch_size == 0 {
            return Err(Error::invalid("sketch size must be at least 1"));
        }
        Ok(())
    }
}

pub(crate) fn check_eps(eps: f64) -> Result<()> {
    if eps > 0.0 && eps.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid(format!("eps must be positive and finite, got {eps}")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveReport {
    pub x: ComplexVector,
    /// `‖b - A x‖₂`, recomputed from `x`.
    pub residual_norm: f64,
    /// Retained rank (singular values or pivots).
    pub rank_used: usize,
    /// Final sketch size; 0 for the dense solvers.
    pub sketch_size: usize,
    /// Seconds.
    pub wall_time: f64,
}

impl SolveReport {
    pub(crate) fn build(
        x: Vec<C64>,
        residual: Vec<C64>,
        rank_used: usize,
        sketch_size: usize,
        start: std::time::Instant,
    ) -> Result<Self> {
        Ok(Self {
            residual_norm: vec_norm(&residual),
            x: ComplexVector::new(x)?,
            rank_used,
            sketch_size,
            wall_time: start.elapsed().as_secs_f64(),
        })
    }
}

/// Which solver handles step 1 of the AZ algorithm.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Step1Solver {
    /// Dense truncated SVD of the materialized operator.
    Tsvd,
    /// Dense truncated pivoted QR, rank from `|R_kk| >= eps`.
    PivotedQr,
    RandomizedTsvd,
    RandomizedQr,
}

impl Step1Solver {
    pub const ALL: [Step1Solver; 4] = [
        Step1Solver::Tsvd,
        Step1Solver::PivotedQr,
        Step1Solver::RandomizedTsvd,
        Step1Solver::RandomizedQr,
    ];

    pub fn is_randomized(self) -> bool {
        matches!(self, Self::RandomizedTsvd | Self::RandomizedQr)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Tsvd => "tsvd",
            Self::PivotedQr => "tqr",
            Self::RandomizedTsvd => "rand-svd",
            Self::RandomizedQr => "rand-qr",
        }
    }
}

impl FromStr for Step1Solver {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tsvd" => Ok(Self::Tsvd),
            "tqr" => Ok(Self::PivotedQr),
            "rand-svd" => Ok(Self::RandomizedTsvd),
            "rand-qr" => Ok(Self::RandomizedQr),
            other => Err(Error::invalid(format!(
                "unknown solver {other:?} (expected tsvd, tqr, rand-svd, rand-qr)"
            ))),
        }
    }
}

/// Solves `op x ≈ b` with the chosen solver. Dense solvers materialize `op`.
pub fn solve_with(op: &Operator, b: &[C64], solver: Step1Solver, cfg: &SolverConfig) -> Result<SolveReport> {
    match solver {
        Step1Solver::Tsvd => tsvd_solve(&materialize(op)?, b, cfg.eps),
        Step1Solver::PivotedQr => tqr_solve_eps(&materialize(op)?, b, cfg.eps),
        Step1Solver::RandomizedTsvd => randomized_tsvd_solve(op, b, cfg),
        Step1Solver::RandomizedQr => randomized_tqr_solve(op, b, cfg),
    }
}

pub(crate) fn residual_of(op: &Operator, x: &[C64], b: &[C64]) -> Result<Vec<C64>> {
    Ok(sub_vec(b, &op.apply(x)?))
}
