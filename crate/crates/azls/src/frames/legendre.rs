//! Legendre extension on Gauss–Legendre points, with dense operators.
//!
//! `F_{ij} = P_j(x_i)` (rows are points). Discrete orthogonality
//! `Σ_i w_i P_j(x_i) P_k(x_i) = h_k² δ_jk` with `h_k² = 2/(2k+1)` gives
//! `F^{-1} = D F^T W`, `D = diag(1/h_k²)`; `Z` is the subblock of `W F D`.

use crate::az::AzProblem;
use crate::error::{Error, Result};
use crate::frames::{select_grid_size, Basis, Domain, ExtensionGrid, FrameProblem, Points, Sizing};
use crate::matrix::ComplexMatrix;
use crate::operators::from_dense;
use crate::transforms::{gauss_legendre, legendre_eval};
use crate::C64;

/// Approximate Gauss–Legendre nodes, accurate to `O(1/L²)`; only used to
/// skip ahead during grid sizing.
fn approx_nodes(l: usize) -> Vec<f64> {
    let lf = l as f64;
    (0..l)
        .map(|i| -(std::f64::consts::PI * (i as f64 + 0.75) / (lf + 0.5)).cos())
        .collect()
}

/// Legendre extension on a 1D interval union. Scale hint: RMS column norm of `A`.
pub fn legendre_extension(n: usize, domain: &Domain, sizing: Sizing) -> Result<FrameProblem> {
    let iv = domain.as_intervals()?;
    let start = match sizing {
        Sizing::Oversampling(_) => {
            let rough = |l: usize| approx_nodes(l).iter().filter(|&&x| iv.contains(x)).count();
            select_grid_size(n, sizing, 0, rough)?.saturating_sub(4)
        }
        Sizing::GridSize(_) => 0,
    };
    let exact = |l: usize| match gauss_legendre(l) {
        Ok(q) => q.nodes.iter().filter(|&&x| iv.contains(x)).count(),
        Err(_) => 0,
    };
    let l = select_grid_size(n, sizing, start, exact)?;
    if l < n {
        return Err(Error::invalid(format!("grid size L = {l} is smaller than N = {n}")));
    }
    let rule = gauss_legendre(l)?;
    let selected: Vec<usize> = (0..l).filter(|&k| iv.contains(rule.nodes[k])).collect();
    let pts: Vec<f64> = selected.iter().map(|&k| rule.nodes[k]).collect();
    let vals = legendre_eval(n.saturating_sub(1), &pts);
    let m = pts.len();
    let a = ComplexMatrix::from_fn(m, n, |i, j| C64::new(vals[i][j], 0.0));
    let z = ComplexMatrix::from_fn(m, n, |i, j| {
        C64::new(rule.weights[selected[i]] * vals[i][j] * (2 * j + 1) as f64 / 2.0, 0.0)
    });
    let scale = a.frobenius_norm() / (n as f64).sqrt();
    Ok(FrameProblem {
        az: AzProblem::new(from_dense(a), from_dense(z), format!("legendre(N={n}, L={l})"), scale)?,
        grid: ExtensionGrid {
            l,
            selected,
            n,
            freqs: (0..n as i64).collect(),
        },
        points: Points::OneD(pts),
        basis: Basis::Legendre { n },
        domain: domain.clone(),
    })
}
