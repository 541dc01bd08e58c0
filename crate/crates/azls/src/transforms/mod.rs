//! Fast transforms and quadrature: DFT of any length, Chebyshev transforms
//! at roots or extremae, Legendre polynomials and Gauss–Legendre rules.

mod chebyshev;
mod fft;
mod legendre;

pub use chebyshev::{
    chebyshev_evaluate, chebyshev_nodes, chebyshev_series_at, chebyshev_transform, ChebyshevGrid,
    ChebyshevKind, CosineSums,
};
pub use fft::{dft, idft, DftPlan};
pub use legendre::{gauss_legendre, legendre_eval, legendre_series_at, QuadratureRule};
