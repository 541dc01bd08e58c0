use azls::matrix::*;
use azls::rng::{complex_gaussian_matrix, gaussian_matrix};
use azls::C64;
use proptest::prelude::*;

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

fn diag(d: &[f64]) -> ComplexMatrix {
    let v: Vec<C64> = d.iter().map(|&x| c(x)).collect();
    ComplexMatrix::from_diagonal(d.len(), d.len(), &v)
}

fn orthonormality_error(q: &ComplexMatrix) -> f64 {
    let g = q.adjoint().matmul(q).unwrap();
    g.sub(&ComplexMatrix::identity(q.cols())).unwrap().frobenius_norm()
}

fn max_abs_diff(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    a.sub(b).unwrap().data().iter().map(|v| v.norm()).fold(0.0, f64::max)
}

#[test]
fn constructor_rejects_bad_input() {
    assert!(matches!(
        ComplexMatrix::new(2, 2, vec![c(1.0); 3]),
        Err(azls::Error::ShapeMismatch { .. })
    ));
    assert!(matches!(
        ComplexMatrix::new(1, 2, vec![c(1.0), c(f64::NAN)]),
        Err(azls::Error::NonFinite { index: 1 })
    ));
    assert!(ComplexMatrix::new(0, 2, vec![]).is_err());
    assert!(ComplexVector::new(vec![C64::new(0.0, f64::INFINITY)]).is_err());
}

#[test]
fn svd_of_identity() {
    let f = svd(&ComplexMatrix::identity(3)).unwrap();
    assert_eq!(f.sigma.len(), 3);
    for s in &f.sigma {
        assert!((s - 1.0).abs() < 1e-15);
    }
}

#[test]
fn svd_of_diagonal() {
    let f = svd(&diag(&[3.0, 1.0])).unwrap();
    assert!((f.sigma[0] - 3.0).abs() < 1e-15 && (f.sigma[1] - 1.0).abs() < 1e-15);
    for m in [&f.u, &f.v] {
        for i in 0..2 {
            for j in 0..2 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((m[(i, j)].norm() - expect).abs() < 1e-14);
            }
        }
    }
}

#[test]
fn svd_recomposes_random_5x3() {
    let a = complex_gaussian_matrix(5, 3, 11);
    let f = svd(&a).unwrap();
    let r = f.recompose().sub(&a).unwrap().frobenius_norm();
    assert!(r <= 1e-12 * a.frobenius_norm().max(1.0), "{r}");
}

#[test]
fn svd_error_names_shape() {
    let msg = azls::Error::SvdNoConvergence { rows: 7, cols: 3 }.to_string();
    assert!(msg.contains("7x3"));
}

#[test]
fn pivoted_qr_of_identity() {
    let f = pivoted_qr(&ComplexMatrix::identity(3)).unwrap();
    assert_eq!(f.perm, vec![0, 1, 2]);
    assert_eq!(f.q, ComplexMatrix::identity(3));
    assert_eq!(f.r, ComplexMatrix::identity(3));
}

#[test]
fn pivoted_qr_moves_nonzero_column_first() {
    let a = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
    let f = pivoted_qr(&a).unwrap();
    assert_eq!(f.perm[0], 1);
    assert!((f.r[(0, 0)].norm() - 1.0).abs() < 1e-15);
}

fn qr_residual(a: &ComplexMatrix, f: &PivotedQrFactorization) -> f64 {
    let ap = a.select_columns(&f.perm);
    f.q.matmul(&f.r).unwrap().sub(&ap).unwrap().frobenius_norm()
}

#[test]
fn pivoted_qr_recomposes_random_6x4() {
    let a = complex_gaussian_matrix(6, 4, 5);
    let f = pivoted_qr(&a).unwrap();
    assert!(qr_residual(&a, &f) <= 1e-12 * a.frobenius_norm().max(1.0));
}

#[test]
fn compact_q_adjoint_matches_explicit() {
    let a = complex_gaussian_matrix(9, 5, 21);
    let f = pivoted_qr(&a).unwrap();
    let b: Vec<C64> = complex_gaussian_matrix(9, 1, 22).column(0);
    let mut qb = b.clone();
    f.compact.apply_q_adjoint(&mut qb);
    let explicit = f.q.adjoint_matvec(&b).unwrap();
    for k in 0..5 {
        assert!((qb[k] - explicit[k]).norm() < 1e-13);
    }
}

#[test]
fn gaussian_matrix_is_deterministic_and_real() {
    let a = gaussian_matrix(3, 2, 7);
    assert_eq!(a, gaussian_matrix(3, 2, 7));
    assert!(a.data().iter().all(|v| v.im == 0.0));
    assert_ne!(a, gaussian_matrix(3, 2, 8));
}

#[test]
fn gaussian_prefix_columns_are_stable() {
    let small = gaussian_matrix(10, 3, 4);
    let big = gaussian_matrix(10, 8, 4);
    assert_eq!(small, big.select_columns(&[0, 1, 2]));
}

#[test]
fn gaussian_sample_moments() {
    let g = gaussian_matrix(2000, 1, 1);
    let v: Vec<f64> = g.data().iter().map(|z| z.re).collect();
    let mean = v.iter().sum::<f64>() / 2000.0;
    let var = v.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / 1999.0;
    assert!(mean.abs() < 0.1, "mean {mean}");
    assert!((var - 1.0).abs() < 0.15, "var {var}");
}

#[test]
fn wide_gaussian_has_independent_rows() {
    let g = gaussian_matrix(5, 25, 3);
    let s = singular_values(&g).unwrap();
    assert_eq!(s.len(), 5);
    assert!(s[4] > 0.0);
    let pinv_fro: f64 = s.iter().map(|x| 1.0 / (x * x)).sum::<f64>().sqrt();
    assert!(pinv_fro.is_finite());
}

#[test]
fn eps_rank_examples() {
    assert_eq!(eps_rank(&ComplexMatrix::identity(3), 0.5).unwrap().r, 3);

    let rep = eps_rank(&diag(&[1.0, 1e-9, 1e-9]), 1e-6).unwrap();
    assert_eq!(rep.r, 1);
    assert!((rep.tail_norm - 2f64.sqrt() * 1e-9).abs() < 1e-20);

    // Rank-4 outer-product sum plus noise at 1e-10.
    let l = complex_gaussian_matrix(30, 4, 1)
        .matmul(&complex_gaussian_matrix(4, 20, 2))
        .unwrap();
    let noise = complex_gaussian_matrix(30, 20, 3);
    let noise = noise.scale(c(1e-10 / noise.frobenius_norm()));
    let rep = eps_rank(&l.add(&noise).unwrap(), 1e-8).unwrap();
    assert_eq!(rep.r, 4);
    assert!(rep.tail_norm <= 1e-8);
    assert!(rep.tail_at(3) > 1e-8);
}

#[test]
fn eps_rank_rejects_nonpositive_eps() {
    assert!(eps_rank(&ComplexMatrix::identity(2), 0.0).is_err());
}

#[test]
fn pseudoinverse_and_norms() {
    let p = pseudoinverse(&ComplexMatrix::identity(2)).unwrap();
    assert!(max_abs_diff(&p, &ComplexMatrix::identity(2)) < 1e-15);
    assert!((two_norm(&diag(&[2.0, -5.0])).unwrap() - 5.0).abs() < 1e-14);

    let a = complex_gaussian_matrix(6, 3, 9);
    let back = a.matmul(&pseudoinverse(&a).unwrap()).unwrap().matmul(&a).unwrap();
    assert!(back.sub(&a).unwrap().frobenius_norm() <= 1e-11);
}

#[test]
fn frobenius_and_matvec_agree() {
    let a = ComplexMatrix::new(2, 2, vec![c(3.0), C64::new(0.0, 4.0), c(0.0), c(0.0)]).unwrap();
    assert!((a.frobenius_norm() - 5.0).abs() < 1e-15);
    let y = a.matvec(&[c(1.0), c(1.0)]).unwrap();
    assert_eq!(y, vec![C64::new(3.0, 4.0), c(0.0)]);
    let x = a.adjoint_matvec(&[c(1.0), c(0.0)]).unwrap();
    assert_eq!(x, vec![c(3.0), C64::new(0.0, -4.0)]);
    assert!(a.matvec(&[c(1.0)]).is_err());
}

#[test]
fn text_format_round_trips_exactly() {
    let a = complex_gaussian_matrix(4, 3, 17).scale(C64::new(1e-7, 3.0));
    let mut buf = Vec::new();
    write_matrix(&mut buf, &a).unwrap();
    let text = String::from_utf8(buf.clone()).unwrap();
    assert!(text.starts_with("4 3\n"));
    assert_eq!(text.lines().count(), 13);
    let back = read_matrix(&buf[..]).unwrap();
    assert_eq!(back, a);
}

#[test]
fn text_format_reports_bad_lines() {
    let err = read_matrix("1 1\n1.0 nope\n".as_bytes()).unwrap_err();
    assert!(matches!(err, azls::Error::Parse { line: 2, .. }));
}

#[test]
fn with_singular_values_has_that_spectrum() {
    let sigma: Vec<f64> = (0..10).map(|k| 2f64.powi(-(k as i32))).collect();
    let a = with_singular_values(20, 10, &sigma, 3).unwrap();
    let s = singular_values(&a).unwrap();
    for (x, y) in s.iter().zip(&sigma) {
        assert!((x - y).abs() < 1e-14);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn svd_recomposes(m in 1usize..=64, n in 1usize..=48, seed in any::<u64>()) {
        let a = complex_gaussian_matrix(m, n, seed);
        let f = svd(&a).unwrap();
        let tol = 1e-12 * a.frobenius_norm().max(1.0);
        prop_assert!(f.recompose().sub(&a).unwrap().frobenius_norm() <= tol);
        prop_assert!(orthonormality_error(&f.u) <= 1e-12);
        prop_assert!(orthonormality_error(&f.v) <= 1e-12);
        prop_assert!(f.sigma.windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(f.sigma.iter().all(|&s| s >= 0.0));
    }

    #[test]
    fn pivoted_qr_recomposes_and_reveals_rank(m in 1usize..=64, n in 1usize..=48, seed in any::<u64>()) {
        let a = complex_gaussian_matrix(m, n, seed);
        let f = pivoted_qr(&a).unwrap();
        prop_assert!(qr_residual(&a, &f) <= 1e-12 * a.frobenius_norm().max(1.0));
        prop_assert!(orthonormality_error(&f.q) <= 1e-12);
        let k = m.min(n);
        for i in 0..k {
            for j in 0..i.min(n) {
                prop_assert_eq!(f.r[(i, j)], C64::new(0.0, 0.0));
            }
        }
        let d: Vec<f64> = (0..k).map(|i| f.r[(i, i)].norm()).collect();
        prop_assert!(d.windows(2).all(|w| w[0] >= w[1]));
        // Every trailing column is no longer than the block's first diagonal.
        for blk in 0..k {
            for j in blk..n {
                let col: f64 = (blk..k).map(|i| f.r[(i, j)].norm_sqr()).sum::<f64>().sqrt();
                prop_assert!(col <= d[blk] * (1.0 + 1e-12) + 1e-300);
            }
        }
    }

    #[test]
    fn eps_rank_is_monotone(seed in any::<u64>(), e1 in -12.0f64..0.0, e2 in -12.0f64..0.0) {
        let sigma: Vec<f64> = (0..12).map(|k| 10f64.powf(-(k as f64))).collect();
        let a = with_singular_values(16, 12, &sigma, seed).unwrap();
        let (lo, hi) = if e1 <= e2 { (e1, e2) } else { (e2, e1) };
        let r_lo = eps_rank(&a, 10f64.powf(lo)).unwrap();
        let r_hi = eps_rank(&a, 10f64.powf(hi)).unwrap();
        prop_assert!(r_lo.r >= r_hi.r);
        for rep in [&r_lo, &r_hi] {
            prop_assert!(rep.tail_norm <= rep.eps);
            if rep.r > 0 {
                prop_assert!(rep.tail_at(rep.r - 1) > rep.eps);
            }
        }
    }

    #[test]
    fn w_wpinv_is_an_orthogonal_projector(m in 1usize..=24, n in 1usize..=24, rank in 1usize..=24, seed in any::<u64>()) {
        let rank = rank.min(m).min(n);
        let w = complex_gaussian_matrix(m, rank, seed)
            .matmul(&complex_gaussian_matrix(rank, n, seed ^ 0x55))
            .unwrap();
        let p = w.matmul(&pseudoinverse(&w).unwrap()).unwrap();
        let p2 = p.matmul(&p).unwrap();
        prop_assert!(p2.sub(&p).unwrap().frobenius_norm() <= 1e-11);
        prop_assert!(two_norm(&p).unwrap() <= 1.0 + 1e-11);
    }
}
