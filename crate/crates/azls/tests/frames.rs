use std::f64::consts::PI;
use std::sync::Arc;

use azls::az::{az_solve, az_weighted_solve, threshold_pinv, AzProblem, WeightedAzProblem};
use azls::frames::*;
use azls::matrix::{eps_rank, singular_values, ComplexMatrix};
use azls::operators::{compose, materialize, real_diagonal};
use azls::rng::complex_gaussian_matrix;
use azls::solvers::{direct_lsq, tsvd_solve, SolverConfig, Step1Solver};
use azls::transforms::{legendre_eval, ChebyshevKind};
use azls::C64;
use proptest::prelude::*;

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

fn half() -> Domain {
    Domain::interval(-0.5, 0.5).unwrap()
}

fn norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn one_d(p: &Points) -> Vec<f64> {
    match p {
        Points::OneD(v) => v.clone(),
        Points::TwoD(_) => panic!("expected 1D points"),
    }
}

fn max_diff(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    a.sub(b).unwrap().data().iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn dual_gap(fp: &FrameProblem) -> f64 {
    let a = materialize(&fp.az.a).unwrap();
    let z = materialize(&fp.az.z).unwrap();
    max_diff(&z.adjoint().matmul(&a).unwrap(), &ComplexMatrix::identity(a.cols()))
}

fn step1_rank(fp: &FrameProblem, eps: f64) -> usize {
    eps_rank(&materialize(&fp.az.step1_operator()).unwrap(), eps).unwrap().r
}

fn solve(fp: &FrameProblem, b: &[C64], eps: f64) -> Vec<C64> {
    let cfg = SolverConfig::new(eps, 40.min(fp.grid.n)).with_adaptive(true);
    az_solve(&fp.az, b, Step1Solver::RandomizedTsvd, &cfg).unwrap().report.x.into_inner()
}

fn exp1(p: &[f64]) -> C64 {
    c(p[0].exp())
}

// Independent dense constructions of A for the fast builders.
fn dense_fourier(fp: &FrameProblem) -> ComplexMatrix {
    let x = one_d(&fp.points);
    let f = &fp.grid.freqs;
    ComplexMatrix::from_fn(x.len(), f.len(), |i, k| C64::cis(PI * f[k] as f64 * x[i]))
}

fn dense_chebyshev(fp: &FrameProblem) -> ComplexMatrix {
    let x = one_d(&fp.points);
    ComplexMatrix::from_fn(x.len(), fp.grid.n, |i, k| c((k as f64 * x[i].acos()).cos()))
}

#[test]
fn fourier_full_grid_is_exactly_dual() {
    let fp = fourier_extension_1d(33, &Domain::full(), Sizing::GridSize(33)).unwrap();
    assert_eq!(fp.grid.m(), 33);
    assert!(materialize(&fp.az.step1_operator()).unwrap().frobenius_norm() <= 1e-12);
    let fp = fourier_extension_1d(401, &Domain::full(), Sizing::GridSize(804)).unwrap();
    assert!(dual_gap(&fp) <= 1e-11);
}

#[test]
fn fourier_grid_conventions() {
    let fp = fourier_extension_1d(201, &half(), Sizing::Oversampling(2.0)).unwrap();
    assert_eq!((fp.grid.l, fp.grid.m()), (804, 403));
    assert_eq!(fp.grid.freqs.first(), Some(&-100));
    assert_eq!(fp.grid.freqs.last(), Some(&100));
    let x = one_d(&fp.points);
    for (&k, &xk) in fp.grid.selected.iter().zip(&x) {
        assert_eq!(xk, -1.0 + 2.0 * k as f64 / 804.0);
    }
    assert!(fourier_extension_1d(200, &half(), Sizing::Oversampling(2.0)).is_err());
    let err = fourier_extension_1d(51, &Domain::interval(-0.01, 0.01).unwrap(), Sizing::GridSize(64)).unwrap_err();
    assert!(matches!(err, azls::Error::Sizing { achieved: 1, required: 51 }));
}

#[test]
fn fourier_spectra_cluster() {
    let fp = fourier_extension_1d(201, &half(), Sizing::Oversampling(2.0)).unwrap();
    let l = fp.grid.l as f64;
    let sa = singular_values(&materialize(&fp.az.a).unwrap()).unwrap();
    let sz = singular_values(&materialize(&fp.az.z).unwrap()).unwrap();
    assert!((sa[0] / l.sqrt() - 1.0).abs() <= 0.02);
    for (x, y) in sa.iter().zip(&sz) {
        assert!((x / l - y).abs() <= 1e-12 * sa[0]);
    }
    // About half the spectrum sits at sqrt(L); the fraction tracks |Ω|/2.
    let near = sa.iter().filter(|&&s| (s - l.sqrt()).abs() <= 0.05 * l.sqrt()).count();
    assert_eq!(near, 99);
    let tiny = sa.iter().filter(|&&s| s <= 1e-6 * l.sqrt()).count();
    assert!(near + tiny >= 160);
}

#[test]
fn fourier_plunge_rank_grows_slowly() {
    let ranks: Vec<usize> = [51, 101, 201, 401]
        .iter()
        .map(|&n| {
            let fp = fourier_extension_1d(n, &half(), Sizing::Oversampling(2.0)).unwrap();
            step1_rank(&fp, 1e-10 * fp.az.scale_hint)
        })
        .collect();
    assert_eq!(ranks, vec![26, 31, 36, 41]);
    assert!(ranks.windows(2).all(|w| w[1] - w[0] <= 10));
}

#[test]
fn fourier_2d_builder() {
    let fp = fourier_extension_2d(9, &Mask2d::All, Sizing::GridSize(9)).unwrap();
    assert!(materialize(&fp.az.step1_operator()).unwrap().frobenius_norm() <= 1e-12);

    let fp = fourier_extension_2d(9, &Mask2d::Disk { radius: 0.8 }, Sizing::Oversampling(2.0)).unwrap();
    let Points::TwoD(pts) = &fp.points else { panic!() };
    let f = &fp.grid.freqs;
    let k = f.len();
    let dense = ComplexMatrix::from_fn(pts.len(), k * k, |i, j| {
        C64::cis(PI * (f[j / k] as f64 * pts[i][0] + f[j % k] as f64 * pts[i][1]))
    });
    assert!(max_diff(&materialize(&fp.az.a).unwrap(), &dense) <= 1e-11);
    let l2 = (fp.grid.l * fp.grid.l) as f64;
    let z = materialize(&fp.az.z).unwrap();
    assert!(max_diff(&z.scale(c(l2)), &dense) <= 1e-11 * l2);
}

#[test]
fn fourier_2d_clustering_tracks_mask_area() {
    for mask in ["punctured-disk", "disk", "square"] {
        let fp = fourier_extension_2d(17, &mask.parse().unwrap(), Sizing::Oversampling(2.0)).unwrap();
        let l = fp.grid.l as f64;
        let s = singular_values(&materialize(&fp.az.a).unwrap()).unwrap();
        let near = s.iter().filter(|&&v| (v - l).abs() <= 0.05 * l).count() as f64 / s.len() as f64;
        let rho = fp.grid.m() as f64 / (l * l);
        assert!((near - rho).abs() <= 0.15, "{mask}: {near} vs {rho}");
    }
}

#[test]
fn gram_matrix_examples() {
    let g = gram_fourier(21, &Domain::full()).unwrap();
    assert!(max_diff(&g, &ComplexMatrix::identity(21)) <= 1e-15);

    let dom = Domain::intervals(vec![[-0.75, -0.25], [0.0, 0.5]]).unwrap();
    let g = gram_fourier(31, &dom).unwrap();
    for i in 0..31 {
        assert!((g[(i, i)] - c(0.5)).norm() <= 1e-15);
    }
    assert!(max_diff(&g, &g.adjoint()) <= 1e-15);
    assert!(*singular_values(&g).unwrap().last().unwrap() >= -1e-12);

    let s = singular_values(&gram_fourier(50, &dom).unwrap()).unwrap();
    let hi = s.iter().filter(|&&v| v >= 0.9).count();
    let lo = s.iter().filter(|&&v| v <= 0.1).count();
    assert_eq!((hi, lo, 50 - hi - lo), (23, 22, 5));
}

#[test]
fn gram_entries_match_quadrature() {
    let dom = Domain::intervals(vec![[-0.9, -0.2], [0.3, 0.45]]).unwrap();
    let g = gram_fourier(7, &dom).unwrap();
    let f = gram_frequencies(7);
    let q = azls::transforms::gauss_legendre(80).unwrap();
    for j in 0..7 {
        for k in 0..7 {
            let d = (f[j] - f[k]) as f64;
            let mut acc = C64::new(0.0, 0.0);
            for &[lo, hi] in dom.as_intervals().unwrap().parts() {
                let h = 0.5 * (hi - lo);
                for (x, w) in q.nodes.iter().zip(&q.weights) {
                    acc += C64::cis(PI * d * (lo + h * (x + 1.0))) * (0.5 * h * w);
                }
            }
            assert!((g[(j, k)] - acc).norm() <= 1e-13);
        }
    }
}

#[test]
fn chebyshev_builder() {
    for kind in [ChebyshevKind::Roots, ChebyshevKind::Extremae] {
        let fp = chebyshev_extension(24, &Domain::full(), Sizing::GridSize(24), kind).unwrap();
        assert!(materialize(&fp.az.step1_operator()).unwrap().frobenius_norm() <= 1e-11);
        let fp = chebyshev_extension(40, &half(), Sizing::Oversampling(2.0), kind).unwrap();
        assert!(max_diff(&materialize(&fp.az.a).unwrap(), &dense_chebyshev(&fp)) <= 1e-11);
    }
    let roots = chebyshev_extension(256, &Domain::full(), Sizing::GridSize(256), ChebyshevKind::Roots).unwrap();
    assert!(dual_gap(&roots) <= 1e-11);
    let ext = chebyshev_extension(257, &Domain::full(), Sizing::GridSize(257), ChebyshevKind::Extremae).unwrap();
    assert!(dual_gap(&ext) <= 1e-11);
}

#[test]
fn chebyshev_plunge_rank() {
    for kind in [ChebyshevKind::Roots, ChebyshevKind::Extremae] {
        let ranks: Vec<usize> = [51, 101, 201]
            .iter()
            .map(|&n| {
                let fp = chebyshev_extension(n, &half(), Sizing::Oversampling(2.0), kind).unwrap();
                step1_rank(&fp, 1e-10 * fp.az.scale_hint)
            })
            .collect();
        assert_eq!(ranks, vec![26, 30, 35], "{kind:?}");
    }
}

#[test]
fn chebyshev_exponential() {
    let fp = chebyshev_extension(64, &half(), Sizing::Oversampling(2.0), ChebyshevKind::Roots).unwrap();
    let b = sample_function(exp1, &fp.points);
    let x = solve(&fp, &b, 1e-12 * fp.az.scale_hint);
    assert!(eval_error(&fp, &x, exp1, 4).unwrap().max_err <= 1e-10);
}

#[test]
fn legendre_builder() {
    let full = legendre_extension(64, &Domain::full(), Sizing::GridSize(64)).unwrap();
    assert!(dual_gap(&full) <= 1e-10);

    let fp = legendre_extension(40, &half(), Sizing::Oversampling(2.0)).unwrap();
    let x = one_d(&fp.points);
    let p = legendre_eval(39, &x);
    let dense = ComplexMatrix::from_fn(x.len(), 40, |i, j| c(p[i][j]));
    assert!(max_diff(&materialize(&fp.az.a).unwrap(), &dense) <= 1e-13);
    assert!(step1_rank(&fp, 1e-8 * fp.az.scale_hint) <= 20);

    let b = sample_function(exp1, &fp.points);
    let sol = solve(&fp, &b, fp.az.default_eps());
    assert!(eval_error(&fp, &sol, exp1, 4).unwrap().max_err <= 1e-8);
}

#[test]
fn fast_operators_match_dense() {
    let fp = fourier_extension_1d(63, &Domain::intervals(vec![[-0.9, -0.4], [0.1, 0.6]]).unwrap(), Sizing::Oversampling(2.0)).unwrap();
    let dense = dense_fourier(&fp);
    assert!(max_diff(&materialize(&fp.az.a).unwrap(), &dense) <= 1e-11);
    let zl = materialize(&fp.az.z).unwrap().scale(c(fp.grid.l as f64));
    assert!(max_diff(&zl, &dense) <= 1e-11 * fp.grid.l as f64);
    let v = complex_gaussian_matrix(63, 1, 3).column(0);
    let fast = fp.az.a.apply(&v).unwrap();
    let slow = dense.matvec(&v).unwrap();
    let gap: Vec<C64> = fast.iter().zip(&slow).map(|(a, b)| a - b).collect();
    assert!(norm(&gap) <= 1e-11 * norm(&slow));
}

#[test]
fn renormalization_covariance() {
    let fp = fourier_extension_1d(61, &half(), Sizing::Oversampling(2.0)).unwrap();
    let m = fp.grid.m();
    let b = sample_function(exp1, &fp.points);
    let d: Vec<f64> = (0..m).map(|i| 0.5 + ((i * 37) % 11) as f64 / 10.0).collect();
    let dinv: Vec<f64> = d.iter().map(|v| 1.0 / v).collect();
    let scaled = AzProblem::new(
        compose(&real_diagonal(&d), &fp.az.a).unwrap(),
        compose(&real_diagonal(&dinv), &fp.az.z).unwrap(),
        "scaled",
        fp.az.scale_hint,
    )
    .unwrap();
    let db: Vec<C64> = b.iter().zip(&d).map(|(v, s)| v * s).collect();
    let cfg = SolverConfig::new(fp.az.default_eps(), 40).with_adaptive(true);
    let x0 = az_solve(&fp.az, &b, Step1Solver::RandomizedTsvd, &cfg).unwrap().report;
    let x1 = az_solve(&scaled, &db, Step1Solver::RandomizedTsvd, &cfg).unwrap().report;
    let r1: Vec<C64> = b.iter().zip(fp.az.a.apply(&x1.x).unwrap()).map(|(p, q)| p - q).collect();
    assert!((norm(&r1) - x0.residual_norm).abs() <= 1e-10);
    let a = materialize(&fp.az.a).unwrap();
    let za = materialize(&fp.az.z).unwrap().adjoint().matmul(&a).unwrap();
    let za1 = materialize(&scaled.z).unwrap().adjoint().matmul(&materialize(&scaled.a).unwrap()).unwrap();
    assert!(max_diff(&za, &za1) <= 1e-14);
}

#[test]
fn restriction_monotonicity() {
    let ranks: Vec<usize> = [0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3]
        .iter()
        .map(|&a| {
            let fp = fourier_extension_1d(41, &Domain::interval(-a, a).unwrap(), Sizing::GridSize(164)).unwrap();
            step1_rank(&fp, 1e-10 * fp.az.scale_hint)
        })
        .collect();
    assert_eq!(ranks, vec![11, 17, 21, 24, 25, 25, 23]);
    assert!(ranks.windows(2).all(|w| w[1] + 2 >= w[0]));
}

fn sum_frame_target(p: &[f64]) -> C64 {
    let x = p[0];
    c((2.0 * PI * x).cos() + x.abs() * (1.0 + 2.0 * PI * x).sin())
}

fn weights() -> (WeightFn, WeightFn) {
    (Arc::new(|_| 1.0), Arc::new(|x: f64| x.abs()))
}

#[test]
fn sum_frame_block_algebra() {
    let base = chebyshev_extension(16, &Domain::full(), Sizing::GridSize(32), ChebyshevKind::Roots).unwrap();
    let sf = weighted_sum_frame(&base, Arc::new(|_| 1.0), Arc::new(|_| 0.0)).unwrap();
    assert_eq!(sf.az.shape(), (32, 32));
    let a = materialize(&sf.az.a).unwrap();
    let z = materialize(&sf.az.z).unwrap();
    let zb = materialize(&base.az.z).unwrap();
    let ab = materialize(&base.az.a).unwrap();
    let expect = ComplexMatrix::from_fn(32, 32, |i, j| {
        if i < 16 && j < 16 {
            zb.adjoint().matmul(&ab).unwrap()[(i, j)]
        } else {
            c(0.0)
        }
    });
    assert!(max_diff(&z.adjoint().matmul(&a).unwrap(), &expect) <= 1e-12);
    let err = weighted_sum_frame(&base, Arc::new(|_| 0.0), Arc::new(|_| 0.0)).unwrap_err();
    assert!(matches!(err, azls::Error::DualExistence { index: 0, .. }));
}

#[test]
fn sum_frame_singular_function() {
    let base = chebyshev_extension(32, &Domain::full(), Sizing::GridSize(128), ChebyshevKind::Roots).unwrap();
    let (w1, w2) = weights();
    let sf = weighted_sum_frame(&base, w1, w2).unwrap();
    let b = sample_function(sum_frame_target, &sf.points);
    let x = solve(&sf, &b, sf.az.default_eps());
    let err = eval_error(&sf, &x, sum_frame_target, 4).unwrap();
    assert!(err.max_err <= 1e-6, "{}", err.max_err);
    let oracle = tsvd_solve(&materialize(&sf.az.a).unwrap(), &b, sf.az.default_eps()).unwrap();
    let oerr = eval_error(&sf, &oracle.x, sum_frame_target, 4).unwrap();
    assert!(err.max_err <= 10.0 * oerr.max_err.max(1e-12));
}

#[test]
fn frame_of_frames() {
    let base = chebyshev_extension(24, &Domain::interval(-0.6, 0.8).unwrap(), Sizing::Oversampling(2.0), ChebyshevKind::Roots).unwrap();
    let (w1, w2) = weights();
    let sf = weighted_sum_frame(&base, w1, w2).unwrap();
    let b = sample_function(sum_frame_target, &sf.points);
    let x = solve(&sf, &b, sf.az.default_eps());
    let err = eval_error(&sf, &x, sum_frame_target, 4).unwrap();
    let oracle = tsvd_solve(&materialize(&sf.az.a).unwrap(), &b, sf.az.default_eps()).unwrap();
    let oerr = eval_error(&sf, &oracle.x, sum_frame_target, 4).unwrap();
    assert!(err.max_err <= 10.0 * oerr.max_err.max(1e-12), "{} vs {}", err.max_err, oerr.max_err);
}

#[test]
fn in_span_reproduction() {
    let fp = fourier_extension_1d(31, &half(), Sizing::Oversampling(2.0)).unwrap();
    let phi0 = |_: &[f64]| c(1.0);
    let b = sample_function(phi0, &fp.points);
    let cfg = SolverConfig::new(1e-14 * fp.az.scale_hint, 20).with_adaptive(true);
    for solver in [Step1Solver::Tsvd, Step1Solver::PivotedQr, Step1Solver::RandomizedTsvd, Step1Solver::RandomizedQr] {
        let x = az_solve(&fp.az, &b, solver, &cfg).unwrap().report.x;
        assert!(eval_error(&fp, &x, phi0, 4).unwrap().max_err <= 1e-12, "{solver:?}");
    }
}

#[test]
fn fourier_exponential() {
    let fp = fourier_extension_1d(201, &half(), Sizing::Oversampling(2.0)).unwrap();
    let b = sample_function(exp1, &fp.points);
    let x = solve(&fp, &b, fp.az.default_eps());
    let err = eval_error(&fp, &x, exp1, 4).unwrap();
    assert!(err.max_err <= 1e-8);
    assert!(err.l2_err <= err.max_err);
    assert!(eval_error(&fp, &x, exp1, 3).is_err());
}

#[test]
fn gibbs_overshoot_persists_without_weights() {
    let g = gibbs_setup(121, 243).unwrap();
    let x = g.problem.az.z.apply_adjoint(&g.samples).unwrap();
    // Just to the right of the jump the target is near 0.25·cos(π) + 0,
    // to the left near 1 - 0.25; measure overshoot outside a thin band.
    let worst = (1..200)
        .flat_map(|k| {
            let d = 0.002 + 0.048 * k as f64 / 200.0;
            [0.5 - d, 0.5 + d]
        })
        .map(|t| {
            let xg = 2.0 * t - 1.0;
            (g.problem.evaluate(&x, &[xg]) - c(gibbs_target(t))).norm()
        })
        .fold(0.0, f64::max);
    assert!(worst >= 0.05, "{worst}");
}

#[test]
fn uniform_weights_change_nothing() {
    let g = gibbs_setup(41, 83).unwrap();
    let wp = weighted_lsq(g.problem.az.clone(), vec![3.0; 83], 0.1).unwrap();
    let xw = weighted_oracle(&wp, &g.samples).unwrap();
    let xu = direct_lsq(&materialize(&g.problem.az.a).unwrap(), &g.samples).unwrap().x;
    let d: Vec<C64> = xw.iter().zip(xu.iter()).map(|(a, b)| a - b).collect();
    assert!(norm(&d) <= 1e-12 * norm(&xu));
}

#[test]
fn threshold_zeroes_exactly_the_small_weights() {
    let d = [0.5, 2.0, 0.1, 2.0, 1.0];
    let p = threshold_pinv(&d, 0.7);
    assert_eq!(p, vec![0.0, 0.5, 0.0, 0.5, 1.0]);
}

#[test]
fn gibbs_weighted_sweep() {
    let g = gibbs_setup(121, 243).unwrap();
    let base = WeightedAzProblem::new(g.problem.az.clone(), g.weights.clone(), 0.0).unwrap();
    let oracle = weighted_oracle(&base, &g.samples).unwrap();
    let mut ranks = Vec::new();
    let mut dists = Vec::new();
    for k in -6..=1 {
        let wp = base.with_eps_w(10f64.powi(k)).unwrap();
        let cfg = SolverConfig::new(wp.derived().unwrap().default_eps(), 60).with_adaptive(true);
        let sol = az_weighted_solve(&wp, &g.samples, Step1Solver::RandomizedTsvd, &cfg).unwrap();
        ranks.push(sol.report.rank_used);
        let d: Vec<C64> = sol.report.x.iter().zip(&oracle).map(|(a, b)| a - b).collect();
        dists.push(norm(&d));
    }
    assert!(ranks.windows(2).all(|w| w[0] <= w[1]), "{ranks:?}");
    let inversions = dists.windows(2).filter(|w| w[1] > w[0]).count();
    assert!(inversions <= 1, "{dists:?}");
    assert!(*dists.last().unwrap() <= 1e-6, "{dists:?}");
}

#[test]
fn domain_parsing() {
    let d = Domain::from_json("[[-0.75, -0.25], [0.0, 0.5]]").unwrap();
    let iv = d.as_intervals().unwrap();
    assert!((iv.measure() - 1.0).abs() < 1e-15);
    assert!(iv.contains(-0.25) && iv.contains(0.0) && !iv.contains(-0.1));
    for bad in ["[]", "[[0.5, 0.2]]", "[[-2, 0]]", "[[0, 0.5], [0.4, 0.6]]", "nope"] {
        assert!(Domain::from_json(bad).is_err(), "{bad}");
    }
    assert!("hexagon".parse::<Mask2d>().is_err());
    let pd: Mask2d = "punctured-disk".parse().unwrap();
    assert!(pd.contains(0.5, 0.0) && !pd.contains(0.1, 0.0) && !pd.contains(0.9, 0.0));
    assert!(d.as_mask().is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn builders_are_adjoint_consistent(h in 3usize..20, lo in -0.9f64..-0.1, hi in 0.1f64..0.9, seed in any::<u64>()) {
        let dom = Domain::interval(lo, hi).unwrap();
        let n = 2 * h + 1;
        let problems = vec![
            fourier_extension_1d(n, &dom, Sizing::Oversampling(2.0)).unwrap(),
            chebyshev_extension(n, &dom, Sizing::Oversampling(2.0), ChebyshevKind::Roots).unwrap(),
            chebyshev_extension(n, &dom, Sizing::Oversampling(2.0), ChebyshevKind::Extremae).unwrap(),
            legendre_extension(n, &dom, Sizing::Oversampling(2.0)).unwrap(),
        ];
        for fp in &problems {
            let (m, nn) = fp.az.shape();
            prop_assert!(nn <= m && m <= fp.grid.l);
            prop_assert!(m as f64 >= 2.0 * n as f64);
            let u = complex_gaussian_matrix(nn, 1, seed).column(0);
            let v = complex_gaussian_matrix(m, 1, seed ^ 1).column(0);
            for op in [&fp.az.a, &fp.az.z] {
                let lhs: C64 = op.apply(&u).unwrap().iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                let rhs: C64 = u.iter().zip(op.apply_adjoint(&v).unwrap()).map(|(a, b)| a.conj() * b).sum();
                prop_assert!((lhs - rhs).norm() <= 1e-10 * norm(&u) * norm(&v) * fp.grid.l as f64);
            }
            // Collocation points lie in the domain.
            prop_assert!(one_d(&fp.points).iter().all(|&x| x >= lo && x <= hi));
        }
    }
}
