//! Householder QR, with and without column pivoting.

use crate::error::Result;
use crate::matrix::{require_nonempty_finite, vec_norm, ComplexMatrix};
use crate::parallel;
use crate::C64;

const ZERO: C64 = C64::new(0.0, 0.0);

/// Compact Householder factorization `A Π = Q R`, `Q = H_0 H_1 … H_{k-1}`.
///
/// Reflectors are stored below the diagonal of a column-major copy of the
/// input, LAPACK style: `H_j = I - tau_j v_j v_j^*` with `v_j[j] = 1`.
#[derive(Clone, Debug)]
pub struct HouseholderQr {
    m: usize,
    n: usize,
    /// Column-major working storage: `R` on and above the diagonal.
    w: Vec<C64>,
    taus: Vec<C64>,
    perm: Vec<usize>,
}

impl HouseholderQr {
    fn factor(a: &ComplexMatrix, pivot: bool) -> Self {
        let (m, n) = a.shape();
        let mut w = vec![ZERO; m * n];
        for i in 0..m {
            for j in 0..n {
                w[j * m + i] = a[(i, j)];
            }
        }
        let k = m.min(n);
        let mut taus = Vec::with_capacity(k);
        let mut perm: Vec<usize> = (0..n).collect();

        for j in 0..k {
            if pivot {
                // Exact trailing norms each step; downdating loses accuracy
                // exactly where the pivot order matters most.
                let norms: Vec<f64> = (j..n).map(|c| vec_norm(&w[c * m + j..(c + 1) * m])).collect();
                let mut best = 0;
                for (t, &v) in norms.iter().enumerate() {
                    if v > norms[best] {
                        best = t;
                    }
                }
                let p = j + best;
                if p != j {
                    for i in 0..m {
                        w.swap(j * m + i, p * m + i);
                    }
                    perm.swap(j, p);
                }
            }

            let tau = make_reflector(&mut w[j * m + j..(j + 1) * m]);
            taus.push(tau);
            if tau != ZERO && j + 1 < n {
                let (head, tail) = w.split_at_mut((j + 1) * m);
                let v = &head[j * m + j..(j + 1) * m];
                let tc = tau.conj();
                parallel::for_each_chunk(tail, m, |_, col| {
                    apply_reflector(v, tc, &mut col[j..]);
                });
            }
        }
        Self { m, n, w, taus, perm }
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    /// Number of reflectors, `min(M, N)`.
    pub fn rank_bound(&self) -> usize {
        self.taus.len()
    }

    /// Column permutation: column `j` of `A Π` is column `perm[j]` of `A`.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// `R[i, j]` for `i <= j`.
    pub fn r_entry(&self, i: usize, j: usize) -> C64 {
        if i > j {
            ZERO
        } else {
            self.w[j * self.m + i]
        }
    }

    /// Diagonal of `R`.
    pub fn r_diagonal(&self) -> Vec<C64> {
        (0..self.rank_bound()).map(|k| self.r_entry(k, k)).collect()
    }

    /// The `K x N` upper-trapezoidal factor.
    pub fn r(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.rank_bound(), self.n, |i, j| self.r_entry(i, j))
    }

    fn reflector(&self, j: usize) -> &[C64] {
        &self.w[j * self.m + j..(j + 1) * self.m]
    }

    /// Overwrites `b` (length `M`) with `Q^* b`.
    pub fn apply_q_adjoint(&self, b: &mut [C64]) {
        assert_eq!(b.len(), self.m);
        for (j, &tau) in self.taus.iter().enumerate() {
            apply_reflector(self.reflector(j), tau.conj(), &mut b[j..]);
        }
    }

    /// Overwrites `b` (length `M`) with `Q b`.
    pub fn apply_q(&self, b: &mut [C64]) {
        assert_eq!(b.len(), self.m);
        for (j, &tau) in self.taus.iter().enumerate().rev() {
            apply_reflector(self.reflector(j), tau, &mut b[j..]);
        }
    }

    /// Thin `M x K` factor with orthonormal columns.
    pub fn q(&self) -> ComplexMatrix {
        let k = self.rank_bound();
        let cols = parallel::map_range(k, |c| {
            let mut e = vec![ZERO; self.m];
            e[c] = C64::new(1.0, 0.0);
            self.apply_q(&mut e);
            e
        });
        ComplexMatrix::from_columns(self.m, &cols).expect("column length is M")
    }

    /// Solves `R[..r, ..r] y = c[..r]` by back substitution.
    pub fn solve_leading(&self, r: usize, c: &[C64]) -> Result<Vec<C64>> {
        let mut y = c[..r].to_vec();
        for i in (0..r).rev() {
            let mut s = y[i];
            for j in i + 1..r {
                s -= self.r_entry(i, j) * y[j];
            }
            let d = self.r_entry(i, i);
            if d == ZERO {
                return Err(crate::Error::SingularLeadingBlock { index: i });
            }
            y[i] = s / d;
        }
        Ok(y)
    }
}

/// Builds `H = I - tau v v^*` with `H^* x = beta e_0`, `beta` real.
/// On return `x[0] = beta` and `x[1..]` holds `v[1..]`.
fn make_reflector(x: &mut [C64]) -> C64 {
    let alpha = x[0];
    let xnorm = vec_norm(&x[1..]);
    if xnorm == 0.0 && alpha.im == 0.0 {
        return ZERO;
    }
    let mut beta = alpha.norm().hypot(xnorm);
    if alpha.re >= 0.0 {
        beta = -beta;
    }
    let tau = C64::new((beta - alpha.re) / beta, -alpha.im / beta);
    let scal = C64::new(1.0, 0.0) / (alpha - beta);
    for v in &mut x[1..] {
        *v *= scal;
    }
    x[0] = C64::new(beta, 0.0);
    tau
}

/// `c <- (I - t v v^*) c` with `v[0] = 1` implied.
fn apply_reflector(v: &[C64], t: C64, c: &mut [C64]) {
    let mut s = c[0];
    for (vi, ci) in v[1..].iter().zip(&c[1..]) {
        s += vi.conj() * ci;
    }
    let s = s * t;
    if s == ZERO {
        return;
    }
    c[0] -= s;
    for (vi, ci) in v[1..].iter().zip(c[1..].iter_mut()) {
        *ci -= s * vi;
    }
}

/// Householder QR without pivoting.
pub fn householder_qr(a: &ComplexMatrix) -> Result<HouseholderQr> {
    require_nonempty_finite(a)?;
    Ok(HouseholderQr::factor(a, false))
}

/// Column-pivoted QR, `A Π = Q R`, in explicit form.
#[derive(Clone, Debug)]
pub struct PivotedQrFactorization {
    /// `M x K`, orthonormal columns.
    pub q: ComplexMatrix,
    /// `K x N`, upper trapezoidal, `|R[k,k]|` nonincreasing.
    pub r: ComplexMatrix,
    /// Column `j` of `A Π` is column `perm[j]` of `A`.
    pub perm: Vec<usize>,
    /// The compact factorization the explicit factors were built from.
    pub compact: HouseholderQr,
}

pub fn pivoted_qr(a: &ComplexMatrix) -> Result<PivotedQrFactorization> {
    let compact = pivoted_qr_compact(a)?;
    Ok(PivotedQrFactorization {
        q: compact.q(),
        r: compact.r(),
        perm: compact.perm.clone(),
        compact,
    })
}

/// Column-pivoted QR in compact form, for solvers that only apply `Q^*`.
pub fn pivoted_qr_compact(a: &ComplexMatrix) -> Result<HouseholderQr> {
    require_nonempty_finite(a)?;
    Ok(HouseholderQr::factor(a, true))
}
