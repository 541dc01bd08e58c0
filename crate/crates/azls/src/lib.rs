//! Least-squares fitting with the AZ algorithm.
//!
//! Given `A` and a complementary `Z` such that `A - A Z^* A` is numerically
//! low rank, the AZ algorithm solves `A x ≈ b` in three steps: a low-rank
//! solve of `(I - A Z^*) A x1 = (I - A Z^*) b`, a correction
//! `x2 = Z^* (b - A x1)`, and `x = x1 + x2`.
//!
//! The crate is layered bottom-up:
//!
//! - [`matrix`]: dense complex containers, SVD, pivoted QR, epsilon rank.
//! - [`transforms`]: DFT, Chebyshev and Legendre primitives.
//! - [`operators`]: matrix-free linear operators and combinators.
//! - [`solvers`]: truncated SVD/QR step-1 solvers, dense and randomized.
//! - [`az`]: the AZ algorithm, its weighted variant and the splitting check.
//! - [`frames`]: builders for Fourier/Chebyshev/Legendre extension problems.
//!
//! Thresholds (`eps`) are absolute everywhere. Builders attach a scale hint
//! to each problem so callers can pick a relative level.

pub mod az;
pub mod error;
pub mod frames;
pub mod matrix;
pub mod operators;
pub mod parallel;
pub mod rng;
pub mod solvers;
pub mod transforms;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
