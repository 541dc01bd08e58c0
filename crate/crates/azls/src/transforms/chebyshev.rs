//! Chebyshev polynomials on Chebyshev roots and extremae.
//!
//! Nodes are listed in ascending order. With `θ_j` the usual angle, both
//! node families satisfy `T_k(x_j) = cos(2π k s_j / P)` for an integer
//! index `s_j` and period `P`:
//!
//! | kind     | `x_j`                  | `P`        | `s_j`         |
//! |----------|------------------------|------------|---------------|
//! | roots    | `-cos(π(j+½)/L)`       | `4L`       | `2L - 2j - 1` |
//! | extremae | `-cos(πj/(L-1))`       | `2(L-1)`   | `L - 1 - j`   |
//!
//! so every sum `Σ_k c_k T_k(x_j)` and its transpose is one FFT of length `P`.

use std::f64::consts::PI;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::transforms::DftPlan;
use crate::C64;

const ZERO: C64 = C64::new(0.0, 0.0);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChebyshevKind {
    Roots,
    Extremae,
}

impl FromStr for ChebyshevKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "roots" => Ok(Self::Roots),
            "extremae" | "extrema" => Ok(Self::Extremae),
            other => Err(Error::invalid(format!("unknown Chebyshev node kind {other:?}"))),
        }
    }
}

/// Ascending Chebyshev nodes.
pub fn chebyshev_nodes(l: usize, kind: ChebyshevKind) -> Vec<f64> {
    match kind {
        ChebyshevKind::Roots => (0..l)
            .map(|j| -(PI * (j as f64 + 0.5) / l as f64).cos())
            .collect(),
        ChebyshevKind::Extremae if l == 1 => vec![0.0],
        ChebyshevKind::Extremae => {
            let mut x: Vec<f64> = (0..l)
                .map(|j| -(PI * j as f64 / (l - 1) as f64).cos())
                .collect();
            // Pin the endpoints and the centre to exact values.
            x[0] = -1.0;
            x[l - 1] = 1.0;
            if l % 2 == 1 {
                x[l / 2] = 0.0;
            }
            x
        }
    }
}

/// Cosine sums `y_j = Σ_k c_k cos(2π k s_j / P)` and their transpose.
#[derive(Clone, Debug)]
pub struct CosineSums {
    period: usize,
    index: Vec<usize>,
    plan: DftPlan,
}

impl CosineSums {
    pub fn new(l: usize, kind: ChebyshevKind) -> Self {
        let (period, index): (usize, Vec<usize>) = match kind {
            ChebyshevKind::Roots => (4 * l, (0..l).map(|j| 2 * l - 2 * j - 1).collect()),
            ChebyshevKind::Extremae => (2 * (l - 1).max(1), (0..l).map(|j| l - 1 - j).collect()),
        };
        Self {
            plan: DftPlan::new(period),
            period,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    /// `out[j] = Σ_k c[k] T_k(x_j)`; `c` may be shorter than the grid.
    pub fn synthesize(&self, c: &[C64], out: &mut [C64]) {
        let p = self.period;
        let mut g = vec![ZERO; p];
        g[..c.len()].copy_from_slice(c);
        self.plan.forward(&mut g);
        for (o, &s) in out.iter_mut().zip(&self.index) {
            *o = 0.5 * (g[s] + g[(p - s) % p]);
        }
    }

    /// `out[k] = Σ_j y[j] T_k(x_j)` for `k < out.len()`.
    pub fn analyze(&self, y: &[C64], out: &mut [C64]) {
        let p = self.period;
        let mut h = vec![ZERO; p];
        for (&v, &s) in y.iter().zip(&self.index) {
            h[s] += v;
        }
        self.plan.forward(&mut h);
        for (k, o) in out.iter_mut().enumerate() {
            *o = 0.5 * (h[k % p] + h[(p - k % p) % p]);
        }
    }
}

/// A full Chebyshev grid with its discrete orthogonality data.
///
/// `Σ_j w_j T_i(x_j) T_k(x_j) = h_k² δ_ik` for `i, k < L`. Roots use
/// `w_j = π/L`; extremae use the trapezoid (Lobatto) weights `π/(L-1)`
/// halved at both ends, for which `h_k² = π` at `k = 0` and `k = L-1`.
#[derive(Clone, Debug)]
pub struct ChebyshevGrid {
    pub kind: ChebyshevKind,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    /// `h_k²` for `k < L`.
    pub norms: Vec<f64>,
    sums: CosineSums,
}

impl ChebyshevGrid {
    pub fn new(l: usize, kind: ChebyshevKind) -> Result<Self> {
        if l == 0 || (kind == ChebyshevKind::Extremae && l < 2) {
            return Err(Error::invalid(format!("Chebyshev grid of size {l} for {kind:?}")));
        }
        let (weights, norms) = match kind {
            ChebyshevKind::Roots => {
                let w = vec![PI / l as f64; l];
                let mut h = vec![PI / 2.0; l];
                h[0] = PI;
                (w, h)
            }
            ChebyshevKind::Extremae => {
                let mut w = vec![PI / (l - 1) as f64; l];
                w[0] *= 0.5;
                w[l - 1] *= 0.5;
                let mut h = vec![PI / 2.0; l];
                h[0] = PI;
                h[l - 1] = PI;
                (w, h)
            }
        };
        Ok(Self {
            kind,
            nodes: chebyshev_nodes(l, kind),
            weights,
            norms,
            sums: CosineSums::new(l, kind),
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn cosine_sums(&self) -> &CosineSums {
        &self.sums
    }

    /// Series values at the nodes.
    pub fn evaluate(&self, coeffs: &[C64]) -> Vec<C64> {
        let mut out = vec![ZERO; self.len()];
        self.sums.synthesize(coeffs, &mut out);
        out
    }

    /// Coefficients `c_k = h_k^{-2} Σ_j w_j T_k(x_j) v_j`, `k < L`.
    pub fn transform(&self, values: &[C64]) -> Vec<C64> {
        let weighted: Vec<C64> = values.iter().zip(&self.weights).map(|(v, w)| v * w).collect();
        let mut c = vec![ZERO; self.len()];
        self.sums.analyze(&weighted, &mut c);
        for (ck, h) in c.iter_mut().zip(&self.norms) {
            *ck /= h;
        }
        c
    }
}

/// Coefficients of the interpolant through values at the `L` Chebyshev roots.
pub fn chebyshev_transform(values: &[C64]) -> Result<Vec<C64>> {
    Ok(ChebyshevGrid::new(values.len(), ChebyshevKind::Roots)?.transform(values))
}

/// Series values at the `l` Chebyshev roots.
pub fn chebyshev_evaluate(coeffs: &[C64], l: usize) -> Result<Vec<C64>> {
    if coeffs.len() > l {
        return Err(Error::shape("chebyshev_evaluate", format!("at most {l} coefficients"), coeffs.len()));
    }
    Ok(ChebyshevGrid::new(l, ChebyshevKind::Roots)?.evaluate(coeffs))
}

/// `Σ_k c_k T_k(x)` at an arbitrary point (Clenshaw).
pub fn chebyshev_series_at(c: &[C64], x: f64) -> C64 {
    let mut b1 = ZERO;
    let mut b2 = ZERO;
    for &ck in c.iter().skip(1).rev() {
        let b0 = ck + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    match c.first() {
        Some(&c0) => c0 + x * b1 - b2,
        None => ZERO,
    }
}
