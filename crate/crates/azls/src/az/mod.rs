//! The AZ algorithm.
//!
//! 1. solve `(I - A Z^*) A x1 = (I - A Z^*) b` with a low-rank solver,
//! 2. `x2 = Z^* (b - A x1)`,
//! 3. `x = x1 + x2`.
//!
//! The final residual `b - A x` equals the step-1 residual
//! `(I - A Z^*)(b - A x1)` up to roundoff, whatever `x1` is.

mod splitting;
mod weighted;

use std::time::Instant;

use crate::error::{Error, Result};
use crate::matrix::{add_vec, sub_vec, ComplexVector};
use crate::operators::{az_step1_operator, Operator};
use crate::solvers::{solve_with, SolveReport, SolverConfig, Step1Solver};
use crate::C64;

pub use splitting::{splitting_certificate, synthetic_splitting, SplittingCertificate, SplittingInstance};
pub use weighted::{az_weighted_solve, threshold_pinv, WeightedAzProblem};

/// `A` and `Z` of equal shape, plus a typical singular value of `A`.
#[derive(Clone, Debug)]
pub struct AzProblem {
    pub a: Operator,
    pub z: Operator,
    pub label: String,
    /// Typical size of the large singular values of `A`; used to turn a
    /// relative tolerance into the absolute `eps` the solvers take.
    pub scale_hint: f64,
}

impl AzProblem {
    pub fn new(a: Operator, z: Operator, label: impl Into<String>, scale_hint: f64) -> Result<Self> {
        if a.shape() != z.shape() {
            return Err(Error::shape("AzProblem", format!("Z of shape {:?}", a.shape()), format!("{:?}", z.shape())));
        }
        Ok(Self {
            a,
            z,
            label: label.into(),
            scale_hint,
        })
    }

    pub fn shape(&self) -> (usize, usize) {
        self.a.shape()
    }

    /// The default step-1 threshold, `1e-10 · scale_hint`.
    pub fn default_eps(&self) -> f64 {
        DEFAULT_RELATIVE_EPS * self.scale_hint
    }

    /// `(I - A Z^*) A` as an operator.
    pub fn step1_operator(&self) -> Operator {
        az_step1_operator(&self.a, &self.z).expect("shapes checked at construction")
    }
}

pub const DEFAULT_RELATIVE_EPS: f64 = 1e-10;

/// Result of [`az_solve`]: the final report plus both partial solutions.
#[derive(Clone, Debug, serde::Serialize)]
pub struct AzSolution {
    /// `x = x1 + x2`; `rank_used` and `sketch_size` come from step 1.
    pub report: SolveReport,
    pub x1: ComplexVector,
    pub x2: ComplexVector,
    /// Residual norm of the step-1 system.
    pub step1_residual: f64,
}

/// Runs the AZ algorithm with the given step-1 solver.
///
/// Beyond step 1 this applies `A` once and `Z^*` once; the reported
/// residual costs one more apply of `A`.
pub fn az_solve(problem: &AzProblem, b: &[C64], step1: Step1Solver, cfg: &SolverConfig) -> Result<AzSolution> {
    let start = Instant::now();
    let (a, z) = (&problem.a, &problem.z);
    if b.len() != a.rows() {
        return Err(Error::shape("az_solve", a.rows(), b.len()));
    }
    let zb = z.apply_adjoint(b)?;
    let rhs = sub_vec(b, &a.apply(&zb)?);
    let s1 = solve_with(&problem.step1_operator(), &rhs, step1, cfg)?;
    let x1 = s1.x.as_slice().to_vec();
    let x2 = z.apply_adjoint(&sub_vec(b, &a.apply(&x1)?))?;
    let x = add_vec(&x1, &x2);
    let res = sub_vec(b, &a.apply(&x)?);
    Ok(AzSolution {
        report: SolveReport::build(x, res, s1.rank_used, s1.sketch_size, start)?,
        x1: ComplexVector::new(x1)?,
        x2: ComplexVector::new(x2)?,
        step1_residual: s1.residual_norm,
    })
}

/// Steps 2 and 3 with a caller-supplied `x1`: `x = x1 + Z^* (b - A x1)`.
pub fn az_solve_with_step1_override(problem: &AzProblem, b: &[C64], x1: &[C64]) -> Result<SolveReport> {
    let start = Instant::now();
    let (a, z) = (&problem.a, &problem.z);
    if b.len() != a.rows() {
        return Err(Error::shape("az_solve_with_step1_override", a.rows(), b.len()));
    }
    if x1.len() != a.cols() {
        return Err(Error::shape("az_solve_with_step1_override", a.cols(), x1.len()));
    }
    let x2 = z.apply_adjoint(&sub_vec(b, &a.apply(x1)?))?;
    let x = add_vec(x1, &x2);
    let res = sub_vec(b, &a.apply(&x)?);
    SolveReport::build(x, res, 0, 0, start)
}
