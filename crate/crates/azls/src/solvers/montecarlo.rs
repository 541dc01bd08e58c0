//! Monte Carlo statistics of Gaussian matrices `Ω ∈ R^{r x (r+p)}`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::singular_values;
use crate::parallel;
use crate::rng::gaussian_matrix;

#[derive(Clone, Debug, Serialize)]
pub struct TailCount {
    pub s: f64,
    /// `s · sqrt(3r / (p+1))`.
    pub threshold: f64,
    pub count: usize,
    pub fraction: f64,
    /// `s^{-p}`.
    pub bound: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct McReport {
    pub r: usize,
    pub p: usize,
    pub trials: usize,
    /// Sample mean of `‖Ω^†‖_F`.
    pub mean_pinv_fro: f64,
    /// `sqrt(mean ‖Ω^†‖_F²)`; its expectation is exactly `r / (p-1)`.
    pub rms_pinv_fro: f64,
    /// `sqrt(r / (p-1))`. Bounds the mean from above (Jensen).
    pub expected_pinv_fro: f64,
    /// Sample mean of `‖Ω‖_F`.
    pub mean_fro: f64,
    /// `sqrt(r (r+p))`.
    pub fro_bound: f64,
    pub tails: Vec<TailCount>,
}

/// Trial `t` uses seed `seed + t`; trials run in parallel.
pub fn mc_gaussian_props(r: usize, p: usize, trials: usize, seed: u64, s_values: &[f64]) -> Result<McReport> {
    if p < 4 {
        return Err(Error::invalid(format!("oversampling p must be >= 4, got {p}")));
    }
    if trials < 100 {
        return Err(Error::invalid(format!("need at least 100 trials, got {trials}")));
    }
    if r == 0 {
        return Err(Error::invalid("r must be positive"));
    }
    let samples: Vec<Result<(f64, f64)>> = parallel::map_range(trials, |t| {
        let omega = gaussian_matrix(r, r + p, seed.wrapping_add(t as u64));
        let sigma = singular_values(&omega)?;
        let pinv: f64 = sigma.iter().map(|s| 1.0 / (s * s)).sum::<f64>().sqrt();
        Ok((pinv, omega.frobenius_norm()))
    });
    let samples: Vec<(f64, f64)> = samples.into_iter().collect::<Result<_>>()?;
    let n = trials as f64;
    let mean_pinv_fro = samples.iter().map(|s| s.0).sum::<f64>() / n;
    let rms_pinv_fro = (samples.iter().map(|s| s.0 * s.0).sum::<f64>() / n).sqrt();
    let mean_fro = samples.iter().map(|s| s.1).sum::<f64>() / n;
    let unit = (3.0 * r as f64 / (p as f64 + 1.0)).sqrt();
    let tails = s_values
        .iter()
        .map(|&s| {
            let threshold = s * unit;
            let count = samples.iter().filter(|v| v.0 >= threshold).count();
            TailCount {
                s,
                threshold,
                count,
                fraction: count as f64 / n,
                bound: s.powi(-(p as i32)),
            }
        })
        .collect();
    Ok(McReport {
        r,
        p,
        trials,
        mean_pinv_fro,
        rms_pinv_fro,
        expected_pinv_fro: (r as f64 / (p as f64 - 1.0)).sqrt(),
        mean_fro,
        fro_bound: ((r * (r + p)) as f64).sqrt(),
        tails,
    })
}
