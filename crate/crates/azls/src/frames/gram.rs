//! Gram matrix of `φ_n(x) = 2^{-1/2} e^{iπ n x}` on an interval union.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::frames::Domain;
use crate::matrix::ComplexMatrix;
use crate::C64;

/// `{-⌊N/2⌋, …}`: symmetric for odd `N`, one extra negative index for even
/// `N`. The Gram matrix depends only on `n - m`, so the spectrum does not
/// depend on this choice.
pub fn gram_frequencies(n: usize) -> Vec<i64> {
    let h = (n / 2) as i64;
    (0..n as i64).map(|k| k - h).collect()
}

/// `G_{jk} = ½ ∫_Ω e^{iπ (n_j - n_k) x} dx`, in closed form per interval.
pub fn gram_fourier(n: usize, domain: &Domain) -> Result<ComplexMatrix> {
    if n == 0 {
        return Err(Error::Empty("gram matrix size"));
    }
    let iv = domain.as_intervals()?;
    let freqs = gram_frequencies(n);
    // The entry depends on the difference only; tabulate it once.
    let moment = |d: i64| -> C64 {
        iv.parts()
            .iter()
            .map(|&[lo, hi]| {
                if d == 0 {
                    C64::new(0.5 * (hi - lo), 0.0)
                } else {
                    let w = PI * d as f64;
                    (C64::cis(w * hi) - C64::cis(w * lo)) / C64::new(0.0, 2.0 * w)
                }
            })
            .sum()
    };
    let diffs: Vec<C64> = (-(n as i64) + 1..n as i64).map(moment).collect();
    let off = n as i64 - 1;
    Ok(ComplexMatrix::from_fn(n, n, |j, k| {
        diffs[(freqs[j] - freqs[k] + off) as usize]
    }))
}
