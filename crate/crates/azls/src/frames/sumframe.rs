//! Weighted sum frames `w1 Φ ∪ w2 Φ`.
//!
//! With `A_Φ`, `Z_Φ` for the base system and `W = diag(w1² + w2²)` on the
//! grid, `A = [W1 A_Φ  W2 A_Φ]` and `Z = [W^† W1 Z_Φ  W^† W2 Z_Φ]`.

use crate::az::AzProblem;
use crate::error::{Error, Result};
use crate::frames::{Basis, ExtensionGrid, FrameProblem, Points, WeightFn};
use crate::operators::{compose, hstack, real_diagonal};

/// Builds the sum frame on the collocation points of `base`, which should
/// carry an exact discrete dual (`Z_Φ^* A_Φ = I` on its full grid).
pub fn weighted_sum_frame(base: &FrameProblem, w1: WeightFn, w2: WeightFn) -> Result<FrameProblem> {
    let pts = match &base.points {
        Points::OneD(p) => p,
        Points::TwoD(_) => return Err(Error::invalid("sum frames are built on 1D problems")),
    };
    let v1: Vec<f64> = pts.iter().map(|&x| w1(x)).collect();
    let v2: Vec<f64> = pts.iter().map(|&x| w2(x)).collect();
    let mut d1 = Vec::with_capacity(pts.len());
    let mut d2 = Vec::with_capacity(pts.len());
    let mut wmax: f64 = 0.0;
    for (i, &x) in pts.iter().enumerate() {
        let w = v1[i] * v1[i] + v2[i] * v2[i];
        if !(w > 0.0) {
            return Err(Error::DualExistence { index: i, x });
        }
        wmax = wmax.max(w);
        d1.push(v1[i] / w);
        d2.push(v2[i] / w);
    }
    let (ab, zb) = (&base.az.a, &base.az.z);
    let a = hstack(&compose(&real_diagonal(&v1), ab)?, &compose(&real_diagonal(&v2), ab)?)?;
    let z = hstack(&compose(&real_diagonal(&d1), zb)?, &compose(&real_diagonal(&d2), zb)?)?;
    let n = 2 * base.grid.n;
    Ok(FrameProblem {
        az: AzProblem::new(a, z, format!("sum({})", base.az.label), base.az.scale_hint * wmax.sqrt())?,
        grid: ExtensionGrid {
            n,
            ..base.grid.clone()
        },
        points: base.points.clone(),
        basis: Basis::Sum {
            base: Box::new(base.basis.clone()),
            w1,
            w2,
        },
        domain: base.domain.clone(),
    })
}
