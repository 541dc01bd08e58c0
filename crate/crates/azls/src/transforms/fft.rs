//! DFT of arbitrary length.
//!
//! Convention: forward `X_k = Σ_l x_l e^{-2πi kl/L}` unnormalized, inverse
//! carries `1/L`. rustfft picks mixed-radix or Bluestein per length.

use std::fmt;
use std::sync::Arc;

use rustfft::{Fft, FftPlanner};

use crate::C64;

/// Forward and inverse plans for one length.
#[derive(Clone)]
pub struct DftPlan {
    len: usize,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
}

impl fmt::Debug for DftPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DftPlan").field("len", &self.len).finish()
    }
}

impl DftPlan {
    pub fn new(len: usize) -> Self {
        let mut planner = FftPlanner::new();
        Self {
            len,
            fwd: planner.plan_fft_forward(len),
            inv: planner.plan_fft_inverse(len),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// In-place forward transform.
    pub fn forward(&self, buf: &mut [C64]) {
        assert_eq!(buf.len(), self.len);
        if self.len > 0 {
            self.fwd.process(buf);
        }
    }

    /// In-place `Σ_k X_k e^{+2πi kl/L}`, without the `1/L`.
    pub fn inverse_unnormalized(&self, buf: &mut [C64]) {
        assert_eq!(buf.len(), self.len);
        if self.len > 0 {
            self.inv.process(buf);
        }
    }

    /// In-place inverse transform including `1/L`.
    pub fn inverse(&self, buf: &mut [C64]) {
        self.inverse_unnormalized(buf);
        let s = 1.0 / self.len as f64;
        for v in buf.iter_mut() {
            *v *= s;
        }
    }
}

pub fn dft(v: &[C64]) -> Vec<C64> {
    let mut out = v.to_vec();
    DftPlan::new(v.len()).forward(&mut out);
    out
}

pub fn idft(v: &[C64]) -> Vec<C64> {
    let mut out = v.to_vec();
    DftPlan::new(v.len()).inverse(&mut out);
    out
}
