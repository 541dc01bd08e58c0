//! Problem builders for frame approximation.
//!
//! Each builder returns a [`FrameProblem`]: an [`AzProblem`] plus the
//! collocation points and enough basis information to evaluate the
//! resulting approximation anywhere in the domain.
//!
//! Grid sizing: with [`Sizing::Oversampling`]`(s)` the full grid size `L`
//! is the smallest `L >= 2 s N` for which at least `s N` grid points fall
//! inside the domain. [`Sizing::GridSize`] fixes `L` directly.

mod chebyshev;
mod domain;
mod fourier;
mod gram;
mod legendre;
mod sampling;
mod sumframe;
mod weighted;

use std::fmt;
use std::sync::Arc;

use crate::az::AzProblem;
use crate::error::{Error, Result};
use crate::transforms::{chebyshev_series_at, legendre_series_at};
use crate::C64;

pub use chebyshev::chebyshev_extension;
pub use domain::{Domain, Intervals, Mask2d, MaskFn};
pub use fourier::{fourier_extension_1d, fourier_extension_2d, fourier_frequencies};
pub use gram::{gram_fourier, gram_frequencies};
pub use legendre::legendre_extension;
pub use sampling::{eval_error, sample_function, ErrorReport};
pub use sumframe::weighted_sum_frame;
pub use weighted::{gibbs_setup, gibbs_target, weighted_lsq, weighted_oracle, GibbsSetup};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Sizing {
    /// Choose `L` by the oversampling rule.
    Oversampling(f64),
    /// Use this full grid size.
    GridSize(usize),
}

/// Full grid, selected points and coefficient indices.
#[derive(Clone, Debug)]
pub struct ExtensionGrid {
    /// Full grid size (per dimension in 2D).
    pub l: usize,
    /// Indices of the `M` grid points inside the domain; row-major in 2D.
    pub selected: Vec<usize>,
    /// Number of coefficients (columns of `A`).
    pub n: usize,
    /// Frequencies (Fourier, per dimension in 2D) or degrees.
    pub freqs: Vec<i64>,
}

impl ExtensionGrid {
    pub fn m(&self) -> usize {
        self.selected.len()
    }
}

/// Collocation points.
#[derive(Clone, Debug)]
pub enum Points {
    OneD(Vec<f64>),
    TwoD(Vec<[f64; 2]>),
}

impl Points {
    pub fn len(&self) -> usize {
        match self {
            Self::OneD(p) => p.len(),
            Self::TwoD(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Coordinates of point `i` (one or two entries).
    pub fn coords(&self, i: usize) -> Vec<f64> {
        match self {
            Self::OneD(p) => vec![p[i]],
            Self::TwoD(p) => p[i].to_vec(),
        }
    }
}

pub type WeightFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Enough information to evaluate `Σ_k x_k φ_k` at any point.
#[derive(Clone)]
pub enum Basis {
    /// `φ_n(x) = e^{iπ n x}`.
    Fourier { freqs: Vec<i64> },
    /// `φ_{n1,n2}(x, y) = e^{iπ (n1 x + n2 y)}`, coefficients row-major.
    Fourier2d { freqs: Vec<i64> },
    Chebyshev { n: usize },
    Legendre { n: usize },
    /// `w1 Φ ∪ w2 Φ`: the first half of the coefficients multiplies `w1`.
    Sum { base: Box<Basis>, w1: WeightFn, w2: WeightFn },
}

impl fmt::Debug for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Fourier { freqs } => write!(f, "Fourier({})", freqs.len()),
            Self::Fourier2d { freqs } => write!(f, "Fourier2d({0}x{0})", freqs.len()),
            Self::Chebyshev { n } => write!(f, "Chebyshev({n})"),
            Self::Legendre { n } => write!(f, "Legendre({n})"),
            Self::Sum { base, .. } => write!(f, "Sum({base:?})"),
        }
    }
}

impl Basis {
    pub fn len(&self) -> usize {
        match self {
            Self::Fourier { freqs } => freqs.len(),
            Self::Fourier2d { freqs } => freqs.len() * freqs.len(),
            Self::Chebyshev { n } | Self::Legendre { n } => *n,
            Self::Sum { base, .. } => 2 * base.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `Σ_k c_k φ_k(p)`; `p` has one coordinate in 1D and two in 2D.
    pub fn evaluate(&self, c: &[C64], p: &[f64]) -> C64 {
        match self {
            Self::Fourier { freqs } => freqs
                .iter()
                .zip(c)
                .map(|(&n, &ck)| ck * C64::cis(std::f64::consts::PI * n as f64 * p[0]))
                .sum(),
            Self::Fourier2d { freqs } => {
                let pi = std::f64::consts::PI;
                let ex: Vec<C64> = freqs.iter().map(|&n| C64::cis(pi * n as f64 * p[0])).collect();
                let ey: Vec<C64> = freqs.iter().map(|&n| C64::cis(pi * n as f64 * p[1])).collect();
                let k = freqs.len();
                (0..k)
                    .map(|i| ex[i] * (0..k).map(|j| c[i * k + j] * ey[j]).sum::<C64>())
                    .sum()
            }
            Self::Chebyshev { .. } => chebyshev_series_at(c, p[0]),
            Self::Legendre { .. } => legendre_series_at(c, p[0]),
            Self::Sum { base, w1, w2 } => {
                let n = base.len();
                w1(p[0]) * base.evaluate(&c[..n], p) + w2(p[0]) * base.evaluate(&c[n..], p)
            }
        }
    }
}

/// A frame approximation problem ready for [`crate::az::az_solve`].
#[derive(Clone, Debug)]
pub struct FrameProblem {
    pub az: AzProblem,
    pub grid: ExtensionGrid,
    pub points: Points,
    pub basis: Basis,
    pub domain: Domain,
}

impl FrameProblem {
    pub fn evaluate(&self, c: &[C64], p: &[f64]) -> C64 {
        self.basis.evaluate(c, p)
    }
}

/// Smallest `L >= 2 s N` with at least `s N` points inside, scanning up
/// from `start` (callers pass a lower bound on the answer).
pub(crate) fn select_grid_size(
    n: usize,
    sizing: Sizing,
    start: usize,
    count: impl Fn(usize) -> usize,
) -> Result<usize> {
    match sizing {
        Sizing::GridSize(l) => {
            let m = count(l);
            if m < n {
                return Err(Error::Sizing { achieved: m, required: n });
            }
            Ok(l)
        }
        Sizing::Oversampling(s) => {
            if !(s > 0.0) || !s.is_finite() {
                return Err(Error::invalid(format!("oversampling must be positive, got {s}")));
            }
            let target = s * n as f64;
            let lo = (2.0 * target).ceil() as usize;
            let cap = lo.max(16) * 64;
            let mut best = 0;
            for l in lo.max(start)..=cap {
                let m = count(l);
                best = best.max(m);
                if m as f64 >= target && m >= n {
                    return Ok(l);
                }
            }
            Err(Error::Sizing {
                achieved: best,
                required: target.ceil() as usize,
            })
        }
    }
}
