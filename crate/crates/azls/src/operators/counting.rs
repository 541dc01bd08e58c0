//! Operator wrapper that counts applies, for checking algorithm step counts.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use crate::operators::{LinearOperator, Operator};
use crate::C64;

#[derive(Debug, Default)]
pub struct CallCounts {
    apply: AtomicUsize,
    adjoint: AtomicUsize,
}

impl CallCounts {
    pub fn applies(&self) -> usize {
        self.apply.load(Ordering::SeqCst)
    }

    pub fn adjoint_applies(&self) -> usize {
        self.adjoint.load(Ordering::SeqCst)
    }

    pub fn reset(&self) {
        self.apply.store(0, Ordering::SeqCst);
        self.adjoint.store(0, Ordering::SeqCst);
    }
}

pub struct CountingOperator {
    inner: Operator,
    counts: Arc<CallCounts>,
}

impl CountingOperator {
    /// Wraps `inner`; the returned counters are shared with the operator.
    pub fn wrap(inner: Operator) -> (Operator, Arc<CallCounts>) {
        let counts = Arc::new(CallCounts::default());
        let op = Operator::new(Self {
            inner,
            counts: Arc::clone(&counts),
        });
        (op, counts)
    }
}

impl LinearOperator for CountingOperator {
    fn rows(&self) -> usize {
        self.inner.rows()
    }

    fn cols(&self) -> usize {
        self.inner.cols()
    }

    fn apply_into(&self, x: &[C64], y: &mut [C64]) {
        self.counts.apply.fetch_add(1, Ordering::SeqCst);
        self.inner.inner().apply_into(x, y);
    }

    fn apply_adjoint_into(&self, y: &[C64], x: &mut [C64]) {
        self.counts.adjoint.fetch_add(1, Ordering::SeqCst);
        self.inner.inner().apply_adjoint_into(y, x);
    }

    fn cost_hint(&self) -> Option<u64> {
        self.inner.cost_hint()
    }

    fn name(&self) -> String {
        format!("counting({})", self.inner.inner().name())
    }
}
