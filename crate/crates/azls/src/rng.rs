//! Seeded Gaussian streams.
//!
//! Normal variates come from the Box–Muller transform applied to a ChaCha8
//! stream: `u = (next_u64 >> 11) * 2^-53`, `r = sqrt(-2 ln(1 - u1))`,
//! `z0 = r cos(2π u2)`, `z1 = r sin(2π u2)`. Both variates of a pair are
//! used, `z0` first. The construction only needs a portable ChaCha8 stream
//! to reproduce in another language.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::ComplexMatrix;
use crate::C64;

/// A stream of standard normal variates.
pub struct GaussianStream {
    rng: ChaCha8Rng,
    spare: Option<f64>,
}

impl GaussianStream {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            spare: None,
        }
    }

    /// Uniform on `[0, 1)` with 53 random bits.
    pub fn uniform(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn next_normal(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        let u1 = self.uniform();
        let u2 = self.uniform();
        let r = (-2.0 * (1.0 - u1).ln()).sqrt();
        let theta = 2.0 * std::f64::consts::PI * u2;
        self.spare = Some(r * theta.sin());
        r * theta.cos()
    }
}

/// An `n x k` real Gaussian matrix stored in the complex container.
///
/// Entries are drawn column by column, so the first `j` columns for a given
/// seed do not depend on `k`. Adaptive sketching relies on this to extend a
/// sketch instead of redrawing it.
pub fn gaussian_matrix(n: usize, k: usize, seed: u64) -> ComplexMatrix {
    let mut g = GaussianStream::new(seed);
    let mut out = ComplexMatrix::zeros(n, k);
    for j in 0..k {
        for i in 0..n {
            out[(i, j)] = C64::new(g.next_normal(), 0.0);
        }
    }
    out
}

/// An `n x k` matrix with independent standard normal real and imaginary
/// parts, drawn column by column (real part first).
pub fn complex_gaussian_matrix(n: usize, k: usize, seed: u64) -> ComplexMatrix {
    let mut g = GaussianStream::new(seed);
    let mut out = ComplexMatrix::zeros(n, k);
    for j in 0..k {
        for i in 0..n {
            let re = g.next_normal();
            out[(i, j)] = C64::new(re, g.next_normal());
        }
    }
    out
}
