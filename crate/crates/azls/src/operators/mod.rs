//! Matrix-free linear operators.
//!
//! Everything the AZ layer touches is an [`Operator`]: a cheap-to-clone
//! handle around a [`LinearOperator`] implementation. Dense matrices, fast
//! transforms and their compositions all interchange freely.

mod combinators;
mod counting;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::parallel;
use crate::C64;

pub use combinators::{
    adjoint, az_step1_operator, compose, dft_operator, diagonal, extension, from_dense, hstack,
    identity, real_diagonal, restriction, scale, subtract, zero,
};
pub use counting::{CallCounts, CountingOperator};

/// Default column cap for [`materialize`].
pub const MATERIALIZE_CAP: usize = 4096;

/// A linear map `C^N -> C^M` with its adjoint.
///
/// Implementations may assume slice lengths are already checked; the
/// [`Operator`] handle validates them. Both applies overwrite their output.
pub trait LinearOperator: Send + Sync {
    fn rows(&self) -> usize;
    fn cols(&self) -> usize;
    fn apply_into(&self, x: &[C64], y: &mut [C64]);
    fn apply_adjoint_into(&self, y: &[C64], x: &mut [C64]);

    /// Advisory flop estimate for one apply.
    fn cost_hint(&self) -> Option<u64> {
        None
    }

    /// Short description used in debug output.
    fn name(&self) -> String {
        "operator".to_string()
    }
}

/// Shared handle to a linear operator.
#[derive(Clone)]
pub struct Operator(Arc<dyn LinearOperator>);

impl fmt::Debug for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Operator({} {}x{})", self.0.name(), self.rows(), self.cols())
    }
}

impl Operator {
    pub fn new(op: impl LinearOperator + 'static) -> Self {
        Self(Arc::new(op))
    }

    pub fn rows(&self) -> usize {
        self.0.rows()
    }

    pub fn cols(&self) -> usize {
        self.0.cols()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows(), self.cols())
    }

    pub fn cost_hint(&self) -> Option<u64> {
        self.0.cost_hint()
    }

    pub fn inner(&self) -> &dyn LinearOperator {
        self.0.as_ref()
    }

    pub fn apply(&self, x: &[C64]) -> Result<Vec<C64>> {
        if x.len() != self.cols() {
            return Err(Error::shape("apply", self.cols(), x.len()));
        }
        let mut y = vec![C64::new(0.0, 0.0); self.rows()];
        self.0.apply_into(x, &mut y);
        Ok(y)
    }

    pub fn apply_adjoint(&self, y: &[C64]) -> Result<Vec<C64>> {
        if y.len() != self.rows() {
            return Err(Error::shape("apply_adjoint", self.rows(), y.len()));
        }
        let mut x = vec![C64::new(0.0, 0.0); self.cols()];
        self.0.apply_adjoint_into(y, &mut x);
        Ok(x)
    }

    /// `self * X`, one apply per column of `X`, columns in parallel.
    pub fn apply_columns(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        if x.rows() != self.cols() {
            return Err(Error::shape("apply_columns", self.cols(), x.rows()));
        }
        let cols = parallel::map_range(x.cols(), |j| {
            let mut y = vec![C64::new(0.0, 0.0); self.rows()];
            self.0.apply_into(&x.column(j), &mut y);
            y
        });
        ComplexMatrix::from_columns(self.rows(), &cols)
    }

    /// The adjoint as an operator.
    pub fn adjoint(&self) -> Operator {
        adjoint(self)
    }
}

/// Dense matrix of `op`, built by applying it to basis vectors.
pub fn materialize(op: &Operator) -> Result<ComplexMatrix> {
    materialize_with_cap(op, MATERIALIZE_CAP)
}

pub fn materialize_with_cap(op: &Operator, cap: usize) -> Result<ComplexMatrix> {
    let (m, n) = op.shape();
    if n > cap {
        return Err(Error::MaterializeCap { cols: n, cap });
    }
    if m == 0 || n == 0 {
        return Ok(ComplexMatrix::zeros(m, n));
    }
    let cols = parallel::map_range(n, |j| {
        let mut e = vec![C64::new(0.0, 0.0); n];
        e[j] = C64::new(1.0, 0.0);
        let mut y = vec![C64::new(0.0, 0.0); m];
        op.inner().apply_into(&e, &mut y);
        y
    });
    ComplexMatrix::from_columns(m, &cols)
}
