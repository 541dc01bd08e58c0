//! Operator building blocks.

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::operators::{LinearOperator, Operator};
use crate::transforms::DftPlan;
use crate::C64;

const ZERO: C64 = C64::new(0.0, 0.0);

fn sum_hints(hints: &[Option<u64>]) -> Option<u64> {
    hints.iter().try_fold(0u64, |acc, h| h.map(|v| acc.saturating_add(v)))
}

struct Dense(ComplexMatrix);

impl LinearOperator for Dense {
    fn rows(&self) -> usize {
        self.0.rows()
    }
    fn cols(&self) -> usize {
        self.0.cols()
    }
    fn apply_into(&self, x: &[C64], y: &mut [C64]) {
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = self.0.row(i).iter().zip(x).map(|(a, b)| a * b).sum();
        }
    }
    fn apply_adjoint_into(&self, y: &[C64], x: &mut [C64]) {
        x.fill(ZERO);
        for (i, &yi) in y.iter().enumerate() {
            for (xj, a) in x.iter_mut().zip(self.0.row(i)) {
                *xj += a.conj() * yi;
            }
        }
    }
    fn cost_hint(&self) -> Option<u64> {
        Some(8 * (self.0.rows() * self.0.cols()) as u64)
    }
    fn name(&self) -> String {
        "dense".into()
    }
}

/// Wraps a dense matrix.
pub fn from_dense(a: ComplexMatrix) -> Operator {
    Operator::new(Dense(a))
}

struct Identity(usize);

impl LinearOperator for Identity {
    fn rows(&self) -> usize {
        self.0
    }
    fn cols(&self) -> usize {
        self.0
    }
    fn apply_into(&self, x: &[C64], y: &mut [C64]) {
        y.copy_from_slice(x);
    }
    fn apply_adjoint_into(&self, y: &[C64], x: &mut [C64]) {
        x.copy_from_slice(y);
    }
    fn cost_hint(&self) -> Option<u64> {
        Some(self.0 as u64)
    }
    fn name(&self) -> String {
        "identity".into()
    }
}

pub fn identity(n: usize) -> Operator {
    Operator::new(Identity(n))
}

struct Zero(usize, usize);

impl LinearOperator for Zero {
    fn rows(&self) -> usize {
        self.0
    }
    fn cols(&self) -> usize {
        self.1
    }
    fn apply_into(&self, _: &[C64], y: &mut [C64]) {
        y.fill(ZERO);
    }
    fn apply_adjoint_into(&self, _: &[C64], x: &mut [C64]) {
        x.fill(ZERO);
    }
    fn cost_hint(&self) -> Option<u64> {
        Some(self.0 as u64)
    }
    fn name(&self) -> String {
        "zero".into()
    }
}

pub fn zero(rows: usize, cols: usize) -> Operator {
    Operator::new(Zero(rows, cols))
}

struct Compose {
    b: Operator,
    a: Operator,
}

impl LinearOperator for Compose {
    fn rows(&self) -> usize {
        self.b.rows()
    }
    fn cols(&self) -> usize {
        self.a.cols()
    }
    fn apply_into(&self, x: &[C64], y: &mut [C64]) {
        let mut t = vec![ZERO; self.a.rows()];
        self.a.inner().apply_into(x, &mut t);
        self.b.inner().apply_into(&t, y);
    }
    fn apply_adjoint_into(&self, y: &[C64], x: &mut [C64]) {
        let mut t = vec![ZERO; self.b.cols()];
        self.b.inner().apply_adjoint_into(y, &mut t);
        self.a.inner().apply_adjoint_into(&t, x);
    }
    fn cost_hint(&self) -> Option<u64> {
        sum_hints(&[self.a.cost_hint(), self.b.cost_hint()])
    }
    fn name(&self) -> String {
        format!("{}∘{}", self.b.inner().name(), self.a.inner().name())
    }
}

/// `B ∘ A`.
pub fn compose(b: &Operator, a: &Operator) -> Result<Operator> {
    if b.cols() != a.rows() {
        return Err(Error::shape(
            "compose",
            format!("B with {} columns", a.rows()),
            format!("B with {} columns", b.cols()),
        ));
    }
    Ok(Operator::new(Compose {
        b: b.clone(),
        a: a.clone(),
    }))
}

struct Hstack {
    a1: Operator,
    a2: Operator,
}

impl LinearOperator for Hstack {
    fn rows(&self) -> usize {
        self.a1.rows()
    }
    fn cols(&self) -> usize {
        self.a1.cols() + self.a2.cols()
    }
    fn apply_into(&self, x: &[C64], y: &mut [C64]) {
        let n1 = self.a1.cols();
        self.a1.inner().apply_into(&x[..n1], y);
        let mut t = vec![ZERO; y.len()];
        self.a2.inner().apply_into(&x[n1..], &mut t);
        for (yi, ti) in y.iter_mut().zip(&t) {
            *yi += ti;
        }
    }
    fn apply_adjoint_into(&self, y: &[C64], x: &mut [C64]) {
        let n1 = self.a1.cols();
        let (x1, x2) = x.split_at_mut(n1);
        self.a1.inner().apply_adjoint_into(y, x1);
        self.a2.inner().apply_adjoint_into(y, x2);
    }
    fn cost_hint(&self) -> Option<u64> {
        sum_hints(&[self.a1.cost_hint(), self.a2.cost_hint()])
    }
    fn name(&self) -> String {
        format!("[{} {}]", self.a1.inner().name(), self.a2.inner().name())
    }
}

/// `[A1 A2]`.
pub fn hstack(a1: &Operator, a2: &Operator) -> Result<Operator> {
    if a1.rows() != a2.rows() {
        return Err(Error::shape("hstack", format!("{} rows", a1.rows()), format!("{} rows", a2.rows())));
    }
    Ok(Operator::new(Hstack {
        a1: a1.clone(),
        a2: a2.clone(),
    }))
}

struct Scale {
    c: C64,
    a: Operator,
}

impl LinearOperator for Scale {
    fn rows(&self) -> usize {
        self.a.rows()
    }
    fn cols(&self) -> usize {
        self.a.cols()
    }
    fn apply_into(&self, x: &[C64], y: &mut [C64]) {
        self.a.inner().apply_into(x, y);
        y.iter_mut().for_each(|v| *v *= self.c);
    }
    fn apply_adjoint_into(&self, y: &[C64], x: &mut [C64]) {
        self.a.inner().apply_adjoint_into(y, x);
        let cc = self.c.conj();
        x.iter_mut().for_each(|v| *v *= cc);
    }
    fn cost_hint(&self) -> Option<u64> {
        sum_hints(&[self.a.cost_hint(), Some(self.a.rows() as u64)])
    }
    fn name(&self) -> String {
        format!("{}·{}", self.c, self.a.inner().name())
    }
}

/// `c A`.
pub fn scale(c: C64, a: &Operator) -> Operator {
    Operator::new(Scale { c, a: a.clone() })
}

struct Diagonal(Vec<C64>);

impl LinearOperator for Diagonal {
    fn rows(&self) -> usize {
        self.0.len()
    }
    fn cols(&self) -> usize {
        self.0.len()
    }
    fn apply_into(&self, x: &[C64], y: &mut [C64]) {
        for ((yi, xi), d) in y.iter_mut().zip(x).zip(&self.0) {
            *yi = d * xi;
        }
    }
    fn apply_adjoint_into(&self, y: &[C64], x: &mut [C64]) {
        for ((xi, yi), d) in x.iter_mut().zip(y).zip(&self.0) {
            *xi = d.conj() * yi;
        }
    }
    fn cost_hint(&self) -> Option<u64> {
        Some(6 * self.0.len() as u64)
    }
    fn name(&self) -> String {
        "diag".into()
    }
}

pub fn diagonal(d: Vec<C64>) -> Operator {
    Operator::new(Diagonal(d))
}

pub fn real_diagonal(d: &[f64]) -> Operator {
    diagonal(d.iter().map(|&v| C64::new(v, 0.0)).collect())
}

/// Picks entries `rows` out of a length-`m` vector; adjoint scatters back.
struct Restriction {
    idx: Vec<usize>,
    len: usize,
}

impl LinearOperator for Restriction {
    fn rows(&self) -> usize {
        self.idx.len()
    }
    fn cols(&self) -> usize {
        self.len
    }
    fn apply_into(&self, x: &[C64], y: &mut [C64]) {
        for (yi, &k) in y.iter_mut().zip(&self.idx) {
            *yi = x[k];
        }
    }
    fn apply_adjoint_into(&self, y: &[C64], x: &mut [C64]) {
        x.fill(ZERO);
        for (&yi, &k) in y.iter().zip(&self.idx) {
            x[k] += yi;
        }
    }
    fn cost_hint(&self) -> Option<u64> {
        Some(self.idx.len() as u64)
    }
    fn name(&self) -> String {
        "restrict".into()
    }
}

fn check_indices(op: &'static str, idx: &[usize], len: usize) -> Result<()> {
    match idx.iter().find(|&&k| k >= len) {
        Some(&k) => Err(Error::shape(op, format!("indices below {len}"), format!("index {k}"))),
        None => Ok(()),
    }
}

/// `|rows| x m` selection of the entries `rows`.
pub fn restriction(rows: Vec<usize>, m: usize) -> Result<Operator> {
    check_indices("restriction", &rows, m)?;
    Ok(Operator::new(Restriction { idx: rows, len: m }))
}

/// `n x |cols|` zero padding, the adjoint of `restriction(cols, n)`.
pub fn extension(cols: Vec<usize>, n: usize) -> Result<Operator> {
    Ok(adjoint(&restriction(cols, n)?))
}

struct Subtract {
    a: Operator,
    b: Operator,
}

impl LinearOperator for Subtract {
    fn rows(&self) -> usize {
        self.a.rows()
    }
    fn cols(&self) -> usize {
        self.a.cols()
    }
    fn apply_into(&self, x: &[C64], y: &mut [C64]) {
        self.a.inner().apply_into(x, y);
        let mut t = vec![ZERO; y.len()];
        self.b.inner().apply_into(x, &mut t);
        for (yi, ti) in y.iter_mut().zip(&t) {
            *yi -= ti;
        }
    }
    fn apply_adjoint_into(&self, y: &[C64], x: &mut [C64]) {
        self.a.inner().apply_adjoint_into(y, x);
        let mut t = vec![ZERO; x.len()];
        self.b.inner().apply_adjoint_into(y, &mut t);
        for (xi, ti) in x.iter_mut().zip(&t) {
            *xi -= ti;
        }
    }
    fn cost_hint(&self) -> Option<u64> {
        sum_hints(&[self.a.cost_hint(), self.b.cost_hint()])
    }
    fn name(&self) -> String {
        format!("({} - {})", self.a.inner().name(), self.b.inner().name())
    }
}

/// `A - B`.
pub fn subtract(a: &Operator, b: &Operator) -> Result<Operator> {
    if a.shape() != b.shape() {
        return Err(Error::shape("subtract", format!("{:?}", a.shape()), format!("{:?}", b.shape())));
    }
    Ok(Operator::new(Subtract {
        a: a.clone(),
        b: b.clone(),
    }))
}

struct Adjoint(Operator);

impl LinearOperator for Adjoint {
    fn rows(&self) -> usize {
        self.0.cols()
    }
    fn cols(&self) -> usize {
        self.0.rows()
    }
    fn apply_into(&self, x: &[C64], y: &mut [C64]) {
        self.0.inner().apply_adjoint_into(x, y);
    }
    fn apply_adjoint_into(&self, y: &[C64], x: &mut [C64]) {
        self.0.inner().apply_into(y, x);
    }
    fn cost_hint(&self) -> Option<u64> {
        self.0.cost_hint()
    }
    fn name(&self) -> String {
        format!("{}^*", self.0.inner().name())
    }
}

/// `A^*` as an operator.
pub fn adjoint(a: &Operator) -> Operator {
    Operator::new(Adjoint(a.clone()))
}

struct Dft(DftPlan);

impl LinearOperator for Dft {
    fn rows(&self) -> usize {
        self.0.len()
    }
    fn cols(&self) -> usize {
        self.0.len()
    }
    fn apply_into(&self, x: &[C64], y: &mut [C64]) {
        y.copy_from_slice(x);
        self.0.forward(y);
    }
    fn apply_adjoint_into(&self, y: &[C64], x: &mut [C64]) {
        x.copy_from_slice(y);
        self.0.inverse_unnormalized(x);
    }
    fn cost_hint(&self) -> Option<u64> {
        let l = self.0.len().max(2) as f64;
        Some((5.0 * l * l.log2()) as u64)
    }
    fn name(&self) -> String {
        format!("dft{}", self.0.len())
    }
}

/// The unnormalized forward DFT of length `l` as an `l x l` operator.
pub fn dft_operator(l: usize) -> Operator {
    Operator::new(Dft(DftPlan::new(l)))
}

struct Step1 {
    a: Operator,
    z: Operator,
}

impl LinearOperator for Step1 {
    fn rows(&self) -> usize {
        self.a.rows()
    }
    fn cols(&self) -> usize {
        self.a.cols()
    }
    // y = Ax - A Z^* (Ax): two A applies, one Z^* apply.
    fn apply_into(&self, x: &[C64], y: &mut [C64]) {
        let mut ax = vec![ZERO; self.a.rows()];
        self.a.inner().apply_into(x, &mut ax);
        let mut t = vec![ZERO; self.a.cols()];
        self.z.inner().apply_adjoint_into(&ax, &mut t);
        self.a.inner().apply_into(&t, y);
        for (yi, axi) in y.iter_mut().zip(&ax) {
            *yi = axi - *yi;
        }
    }
    // x = A^* y - A^* Z (A^* y).
    fn apply_adjoint_into(&self, y: &[C64], x: &mut [C64]) {
        let mut ay = vec![ZERO; self.a.cols()];
        self.a.inner().apply_adjoint_into(y, &mut ay);
        let mut t = vec![ZERO; self.a.rows()];
        self.z.inner().apply_into(&ay, &mut t);
        self.a.inner().apply_adjoint_into(&t, x);
        for (xi, ayi) in x.iter_mut().zip(&ay) {
            *xi = ayi - *xi;
        }
    }
    fn cost_hint(&self) -> Option<u64> {
        let a = self.a.cost_hint()?;
        let z = self.z.cost_hint()?;
        Some(2 * a + z + self.a.rows() as u64)
    }
    fn name(&self) -> String {
        format!("(I - AZ*)A[{}]", self.a.inner().name())
    }
}

/// `(I - A Z^*) A` without forming any product.
pub fn az_step1_operator(a: &Operator, z: &Operator) -> Result<Operator> {
    if a.shape() != z.shape() {
        return Err(Error::shape("az_step1_operator", format!("{:?}", a.shape()), format!("{:?}", z.shape())));
    }
    Ok(Operator::new(Step1 {
        a: a.clone(),
        z: z.clone(),
    }))
}
