//! Fourier extension: `φ_n(x) = e^{iπ n x}` on `[-1, 1]` restricted to a
//! subdomain, sampled on the periodic grid `x_l = -1 + 2l/L`.
//!
//! Since `e^{iπ n x_l} = (-1)^n e^{2πi n l / L}`, applying `A` is: place
//! `(-1)^n c_n` in bin `n mod L`, run an unnormalized inverse DFT, keep the
//! points inside the domain. The full-grid matrix `F` satisfies
//! `F^* F = L I`, so `Z = A / L` (and `A / L²` in 2D).

use crate::az::AzProblem;
use crate::error::{Error, Result};
use crate::frames::{select_grid_size, Basis, Domain, ExtensionGrid, FrameProblem, Mask2d, Points, Sizing};
use crate::operators::{scale, LinearOperator, Operator};
use crate::transforms::DftPlan;
use crate::C64;

const ZERO: C64 = C64::new(0.0, 0.0);

/// Symmetric index set `{-(N-1)/2, …, (N-1)/2}` for odd `N`.
pub fn fourier_frequencies(n: usize) -> Result<Vec<i64>> {
    if n % 2 == 0 {
        return Err(Error::invalid(format!(
            "Fourier extension needs an odd number of frequencies, got N = {n}"
        )));
    }
    let h = (n / 2) as i64;
    Ok((-h..=h).collect())
}

pub(crate) fn grid_point(l: usize, len: usize) -> f64 {
    -1.0 + 2.0 * l as f64 / len as f64
}

fn bin(n: i64, l: usize) -> usize {
    n.rem_euclid(l as i64) as usize
}

fn sign(n: i64) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

struct FourierSynthesis1d {
    l: usize,
    freqs: Vec<i64>,
    selected: Vec<usize>,
    plan: DftPlan,
}

impl LinearOperator for FourierSynthesis1d {
    fn rows(&self) -> usize {
        self.selected.len()
    }
    fn cols(&self) -> usize {
        self.freqs.len()
    }
    fn apply_into(&self, x: &[C64], y: &mut [C64]) {
        let mut buf = vec![ZERO; self.l];
        for (&n, &c) in self.freqs.iter().zip(x) {
            buf[bin(n, self.l)] += c * sign(n);
        }
        self.plan.inverse_unnormalized(&mut buf);
        for (yi, &k) in y.iter_mut().zip(&self.selected) {
            *yi = buf[k];
        }
    }
    fn apply_adjoint_into(&self, y: &[C64], x: &mut [C64]) {
        let mut buf = vec![ZERO; self.l];
        for (&v, &k) in y.iter().zip(&self.selected) {
            buf[k] = v;
        }
        self.plan.forward(&mut buf);
        for (xi, &n) in x.iter_mut().zip(&self.freqs) {
            *xi = buf[bin(n, self.l)] * sign(n);
        }
    }
    fn cost_hint(&self) -> Option<u64> {
        let l = self.l.max(2) as f64;
        Some((5.0 * l * l.log2()) as u64 + 2 * self.l as u64)
    }
    fn name(&self) -> String {
        format!("fourier1d(L={})", self.l)
    }
}

/// Fourier extension on a 1D interval union.
///
/// Scale hint: `sqrt(L)`, where the large singular values of `A` cluster.
pub fn fourier_extension_1d(n: usize, domain: &Domain, sizing: Sizing) -> Result<FrameProblem> {
    let freqs = fourier_frequencies(n)?;
    let iv = domain.as_intervals()?;
    let count = |l: usize| (0..l).filter(|&k| iv.contains(grid_point(k, l))).count();
    // At most |Ω| L / 2 + (#intervals) points fit, which bounds L from below.
    let target = match sizing {
        Sizing::Oversampling(s) => s * n as f64,
        Sizing::GridSize(_) => 0.0,
    };
    let k = iv.parts().len() as f64;
    let start = if iv.measure() > 0.0 {
        (2.0 * (target - k) / iv.measure()).max(0.0).floor() as usize
    } else {
        0
    };
    let l = select_grid_size(n, sizing, start, count)?;
    if l < n {
        return Err(Error::invalid(format!("grid size L = {l} is smaller than N = {n}")));
    }
    let selected: Vec<usize> = (0..l).filter(|&k| iv.contains(grid_point(k, l))).collect();
    let points = selected.iter().map(|&k| grid_point(k, l)).collect();
    let a = Operator::new(FourierSynthesis1d {
        l,
        freqs: freqs.clone(),
        selected: selected.clone(),
        plan: DftPlan::new(l),
    });
    let z = scale(C64::new(1.0 / l as f64, 0.0), &a);
    Ok(FrameProblem {
        az: AzProblem::new(a, z, format!("fourier1d(N={n}, L={l})"), (l as f64).sqrt())?,
        grid: ExtensionGrid {
            l,
            selected,
            n,
            freqs: freqs.clone(),
        },
        points: Points::OneD(points),
        basis: Basis::Fourier { freqs },
        domain: domain.clone(),
    })
}

struct FourierSynthesis2d {
    l: usize,
    freqs: Vec<i64>,
    selected: Vec<usize>,
    plan: DftPlan,
}

impl FourierSynthesis2d {
    fn transpose(buf: &mut [C64], l: usize) {
        for i in 0..l {
            for j in i + 1..l {
                buf.swap(i * l + j, j * l + i);
            }
        }
    }

    /// Transforms every row and then every column of an `L x L` buffer.
    fn transform2(&self, buf: &mut [C64], inverse: bool) {
        let run = |b: &mut [C64]| {
            for row in b.chunks_mut(self.l) {
                if inverse {
                    self.plan.inverse_unnormalized(row);
                } else {
                    self.plan.forward(row);
                }
            }
        };
        run(buf);
        Self::transpose(buf, self.l);
        run(buf);
        Self::transpose(buf, self.l);
    }
}

impl LinearOperator for FourierSynthesis2d {
    fn rows(&self) -> usize {
        self.selected.len()
    }
    fn cols(&self) -> usize {
        self.freqs.len() * self.freqs.len()
    }
    fn apply_into(&self, x: &[C64], y: &mut [C64]) {
        let (l, k) = (self.l, self.freqs.len());
        let mut buf = vec![ZERO; l * l];
        for (i, &n1) in self.freqs.iter().enumerate() {
            for (j, &n2) in self.freqs.iter().enumerate() {
                buf[bin(n1, l) * l + bin(n2, l)] += x[i * k + j] * (sign(n1) * sign(n2));
            }
        }
        self.transform2(&mut buf, true);
        for (yi, &s) in y.iter_mut().zip(&self.selected) {
            *yi = buf[s];
        }
    }
    fn apply_adjoint_into(&self, y: &[C64], x: &mut [C64]) {
        let (l, k) = (self.l, self.freqs.len());
        let mut buf = vec![ZERO; l * l];
        for (&v, &s) in y.iter().zip(&self.selected) {
            buf[s] = v;
        }
        self.transform2(&mut buf, false);
        for (i, &n1) in self.freqs.iter().enumerate() {
            for (j, &n2) in self.freqs.iter().enumerate() {
                x[i * k + j] = buf[bin(n1, l) * l + bin(n2, l)] * (sign(n1) * sign(n2));
            }
        }
    }
    fn cost_hint(&self) -> Option<u64> {
        let l = self.l.max(2) as f64;
        Some((10.0 * l * l * l.log2()) as u64)
    }
    fn name(&self) -> String {
        format!("fourier2d(L={})", self.l)
    }
}

/// Tensor-product Fourier extension on a masked subset of `[-1, 1]²`,
/// `N = n_per_dim²` coefficients. Grid points `(x_{l1}, x_{l2})` are
/// linearized row-major, `l1` being the `x` index.
///
/// Sizing applies per dimension for `L` (`L >= 2 s n_per_dim`) and to the
/// total count (`M >= s N`). Scale hint: `L`.
pub fn fourier_extension_2d(n_per_dim: usize, mask: &Mask2d, sizing: Sizing) -> Result<FrameProblem> {
    let freqs = fourier_frequencies(n_per_dim)?;
    let n = n_per_dim * n_per_dim;
    let inside = |l: usize| -> Vec<usize> {
        (0..l * l)
            .filter(|&s| mask.contains(grid_point(s / l, l), grid_point(s % l, l)))
            .collect()
    };
    let l = match sizing {
        Sizing::GridSize(l) => {
            let m = inside(l).len();
            if m < n {
                return Err(Error::Sizing { achieved: m, required: n });
            }
            l
        }
        Sizing::Oversampling(s) => {
            if !(s > 0.0) || !s.is_finite() {
                return Err(Error::invalid(format!("oversampling must be positive, got {s}")));
            }
            let lo = (2.0 * s * n_per_dim as f64).ceil() as usize;
            let target = s * n as f64;
            let mut found = None;
            let mut best = 0;
            for l in lo..=lo * 8 {
                let m = inside(l).len();
                best = best.max(m);
                if m as f64 >= target && m >= n {
                    found = Some(l);
                    break;
                }
            }
            found.ok_or(Error::Sizing {
                achieved: best,
                required: target.ceil() as usize,
            })?
        }
    };
    if l < n_per_dim {
        return Err(Error::invalid(format!("grid size L = {l} is smaller than {n_per_dim}")));
    }
    let selected = inside(l);
    let points = selected
        .iter()
        .map(|&s| [grid_point(s / l, l), grid_point(s % l, l)])
        .collect();
    let a = Operator::new(FourierSynthesis2d {
        l,
        freqs: freqs.clone(),
        selected: selected.clone(),
        plan: DftPlan::new(l),
    });
    let z = scale(C64::new(1.0 / (l * l) as f64, 0.0), &a);
    Ok(FrameProblem {
        az: AzProblem::new(a, z, format!("fourier2d(N={n_per_dim}^2, L={l})"), l as f64)?,
        grid: ExtensionGrid {
            l,
            selected,
            n,
            freqs: freqs.clone(),
        },
        points: Points::TwoD(points),
        basis: Basis::Fourier2d { freqs },
        domain: Domain::Mask(mask.clone()),
    })
}
