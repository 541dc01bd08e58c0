//! Legendre polynomials and Gauss–Legendre quadrature.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::C64;

const NEWTON_CAP: usize = 100;

/// Nodes in `(-1, 1)`, ascending, with positive weights.
#[derive(Clone, Debug, Serialize)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

/// `out[i][k] = P_k(x[i])` for `k = 0..=n`, by the three-term recurrence.
pub fn legendre_eval(n: usize, x: &[f64]) -> Vec<Vec<f64>> {
    x.iter()
        .map(|&xi| {
            let mut row = Vec::with_capacity(n + 1);
            row.push(1.0);
            if n >= 1 {
                row.push(xi);
            }
            for k in 1..n {
                let kf = k as f64;
                let next = ((2.0 * kf + 1.0) * xi * row[k] - kf * row[k - 1]) / (kf + 1.0);
                row.push(next);
            }
            row
        })
        .collect()
}

/// `Σ_k c_k P_k(x)` at a single point.
pub fn legendre_series_at(c: &[C64], x: f64) -> C64 {
    let mut p_prev = 1.0;
    let mut p = x;
    let mut acc = C64::new(0.0, 0.0);
    for (k, &ck) in c.iter().enumerate() {
        let pk = match k {
            0 => 1.0,
            1 => x,
            _ => {
                let kf = (k - 1) as f64;
                let next = ((2.0 * kf + 1.0) * x * p - kf * p_prev) / (kf + 1.0);
                p_prev = p;
                p = next;
                next
            }
        };
        acc += ck * pk;
    }
    acc
}

/// `(P_L(x), P_L'(x))`.
fn legendre_and_derivative(l: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 1..l {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    if l == 0 {
        return (1.0, 0.0);
    }
    let lf = l as f64;
    (p1, lf * (x * p1 - p0) / (x * x - 1.0))
}

/// The `L`-point Gauss–Legendre rule.
///
/// Newton's method from the Chebyshev-type guesses `cos(π(i + 3/4)/(L + 1/2))`
/// on the positive half; the negative half is mirrored so the rule is
/// exactly symmetric, and for odd `L` the centre node is exactly 0.
pub fn gauss_legendre(l: usize) -> Result<QuadratureRule> {
    if l == 0 {
        return Err(Error::invalid("Gauss-Legendre rule needs L >= 1"));
    }
    let mut nodes = vec![0.0; l];
    let mut weights = vec![0.0; l];
    let lf = l as f64;
    for i in 0..l / 2 {
        let mut x = (PI * (i as f64 + 0.75) / (lf + 0.5)).cos();
        let mut converged = false;
        for _ in 0..NEWTON_CAP {
            let (p, dp) = legendre_and_derivative(l, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() <= 1e-15 {
                // One polishing step after the update falls under tolerance.
                let (p, dp) = legendre_and_derivative(l, x);
                x -= p / dp;
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NewtonNoConvergence { index: l - 1 - i });
        }
        let (_, dp) = legendre_and_derivative(l, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[l - 1 - i] = x;
        nodes[i] = -x;
        weights[l - 1 - i] = w;
        weights[i] = w;
    }
    if l % 2 == 1 {
        let (_, dp) = legendre_and_derivative(l, 0.0);
        nodes[l / 2] = 0.0;
        weights[l / 2] = 2.0 / (dp * dp);
    }
    Ok(QuadratureRule { nodes, weights })
}
