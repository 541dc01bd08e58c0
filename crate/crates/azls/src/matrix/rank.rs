//! Epsilon rank: the least `r` with `sqrt(Σ_{k≥r} σ_k²) <= eps`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{singular_values, ComplexMatrix};

#[derive(Clone, Debug, Serialize)]
pub struct EpsRankReport {
    /// Full singular spectrum, nonincreasing.
    pub sigma: Vec<f64>,
    pub eps: f64,
    /// Epsilon rank.
    pub r: usize,
    /// `sqrt(Σ_{k≥r} σ_k²)`.
    pub tail_norm: f64,
}

impl EpsRankReport {
    /// Frobenius norm of the tail `σ_{k≥j}`.
    pub fn tail_at(&self, j: usize) -> f64 {
        tails(&self.sigma)[j]
    }
}

pub fn eps_rank(a: &ComplexMatrix, eps: f64) -> Result<EpsRankReport> {
    eps_rank_from_sigma(singular_values(a)?, eps)
}

/// Epsilon rank of a precomputed nonincreasing spectrum.
pub fn eps_rank_from_sigma(sigma: Vec<f64>, eps: f64) -> Result<EpsRankReport> {
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(Error::invalid(format!("eps must be positive, got {eps}")));
    }
    let t = tails(&sigma);
    // t is nonincreasing in j and t[K] = 0, so the first hit is the least r.
    let r = t.iter().position(|&v| v <= eps).unwrap_or(sigma.len());
    Ok(EpsRankReport {
        tail_norm: t[r],
        sigma,
        eps,
        r,
    })
}

/// `t[j] = sqrt(Σ_{k≥j} σ_k²)` for `j = 0..=K`, summed from the small end.
fn tails(sigma: &[f64]) -> Vec<f64> {
    let mut t = vec![0.0; sigma.len() + 1];
    let mut acc = 0.0;
    for j in (0..sigma.len()).rev() {
        acc += sigma[j] * sigma[j];
        t[j] = acc.sqrt();
    }
    t
}
