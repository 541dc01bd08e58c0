//! Chebyshev extension: `T_k`, `k < N`, on `[-1, 1]` sampled at the
//! Chebyshev nodes that fall inside a subdomain.
//!
//! On the full grid `F_{jk} = T_k(x_j)` has inverse `D F^T W`, with `W` the
//! quadrature weights and `D = diag(1/h_k²)`. `A` is a subblock of `F` and
//! `Z` the matching subblock of `W F D`.

use crate::az::AzProblem;
use crate::error::Result;
use crate::frames::{select_grid_size, Basis, Domain, ExtensionGrid, FrameProblem, Points, Sizing};
use crate::operators::{compose, real_diagonal, LinearOperator, Operator};
use crate::transforms::{chebyshev_nodes, ChebyshevGrid, ChebyshevKind, CosineSums};
use crate::C64;

const ZERO: C64 = C64::new(0.0, 0.0);

struct ChebyshevSynthesis {
    sums: CosineSums,
    n: usize,
    selected: Vec<usize>,
}

impl LinearOperator for ChebyshevSynthesis {
    fn rows(&self) -> usize {
        self.selected.len()
    }
    fn cols(&self) -> usize {
        self.n
    }
    fn apply_into(&self, x: &[C64], y: &mut [C64]) {
        let mut full = vec![ZERO; self.sums.len()];
        self.sums.synthesize(x, &mut full);
        for (yi, &k) in y.iter_mut().zip(&self.selected) {
            *yi = full[k];
        }
    }
    fn apply_adjoint_into(&self, y: &[C64], x: &mut [C64]) {
        let mut full = vec![ZERO; self.sums.len()];
        for (&v, &k) in y.iter().zip(&self.selected) {
            full[k] = v;
        }
        self.sums.analyze(&full, x);
    }
    fn cost_hint(&self) -> Option<u64> {
        let p = 4.0 * self.sums.len().max(2) as f64;
        Some((5.0 * p * p.log2()) as u64)
    }
    fn name(&self) -> String {
        format!("chebyshev(L={})", self.sums.len())
    }
}

/// Chebyshev extension on a 1D interval union. Scale hint `sqrt(L/2)`.
pub fn chebyshev_extension(n: usize, domain: &Domain, sizing: Sizing, kind: ChebyshevKind) -> Result<FrameProblem> {
    let iv = domain.as_intervals()?;
    let count = |l: usize| chebyshev_nodes(l, kind).iter().filter(|&&x| iv.contains(x)).count();
    let l = select_grid_size(n, sizing, 0, count)?;
    let grid = ChebyshevGrid::new(l, kind)?;
    if l < n {
        return Err(crate::Error::invalid(format!("grid size L = {l} is smaller than N = {n}")));
    }
    let selected: Vec<usize> = (0..l).filter(|&k| iv.contains(grid.nodes[k])).collect();
    let a = Operator::new(ChebyshevSynthesis {
        sums: grid.cosine_sums().clone(),
        n,
        selected: selected.clone(),
    });
    let w: Vec<f64> = selected.iter().map(|&k| grid.weights[k]).collect();
    let d: Vec<f64> = grid.norms[..n].iter().map(|h| 1.0 / h).collect();
    let z = compose(&real_diagonal(&w), &compose(&a, &real_diagonal(&d))?)?;
    Ok(FrameProblem {
        az: AzProblem::new(a, z, format!("chebyshev(N={n}, L={l}, {kind:?})"), (l as f64 / 2.0).sqrt())?,
        grid: ExtensionGrid {
            l,
            selected: selected.clone(),
            n,
            freqs: (0..n as i64).collect(),
        },
        points: Points::OneD(selected.iter().map(|&k| grid.nodes[k]).collect()),
        basis: Basis::Chebyshev { n },
        domain: domain.clone(),
    })
}
