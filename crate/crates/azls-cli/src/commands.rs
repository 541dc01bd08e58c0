//! One function per subcommand, each returning a [`Table`].

use std::time::Instant;

use azls::az::{az_solve, az_weighted_solve, WeightedAzProblem};
use azls::frames::{eval_error, gibbs_setup, gram_fourier, sample_function, weighted_oracle, FrameProblem};
use azls::matrix::{eps_rank, singular_values, vec_norm, sub_vec};
use azls::operators::materialize;
use azls::solvers::{direct_lsq, direct_qr_solve, tsvd_solve, SolverConfig, Step1Solver};
use azls::C64;
use clap::ValueEnum;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::error::{CliError, Result};
use crate::problem::{FunctionKind, ProblemArgs, ProblemKind};
use crate::table::{Cell, Table};

/// Initial sketch size for randomized step-1 solves; grows adaptively.
pub const DEFAULT_SKETCH: usize = 40;

/// Largest `log2(N - 1)` the direct timing baseline runs at.
pub const DIRECT_MAX_LOG2_VAR: &str = "AZ_DIRECT_MAX_LOG2";
const DIRECT_MAX_LOG2_DEFAULT: u32 = 10;

/// Dense solves beyond this many columns are skipped in `approx`.
const ORACLE_MAX_COLS: usize = 1024;

/// SHA-256 of the little-endian bytes of `x`, hex encoded.
pub fn checksum(x: &[C64]) -> String {
    let mut h = Sha256::new();
    for z in x {
        h.update(z.re.to_le_bytes());
        h.update(z.im.to_le_bytes());
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn solver_config(fp: &FrameProblem, eps_rel: f64, seed: u64) -> SolverConfig {
    SolverConfig::new(eps_rel * fp.az.scale_hint, DEFAULT_SKETCH.min(fp.grid.n))
        .with_adaptive(true)
        .with_seed(seed)
}

pub fn singvals(p: &ProblemArgs, n: usize) -> Result<Table> {
    if p.problem == ProblemKind::Gram {
        let s = singular_values(&gram_fourier(n, &p.domain()?)?)?;
        let mut t = Table::new(vec!["index", "sigma_gram"]);
        for (i, v) in s.into_iter().enumerate() {
            t.push(vec![i.into(), v.into()]);
        }
        return Ok(t);
    }
    let fp = p.build(n)?;
    let sa = singular_values(&materialize(&fp.az.a)?)?;
    let sz = singular_values(&materialize(&fp.az.z)?)?;
    let s1 = singular_values(&materialize(&fp.az.step1_operator())?)?;
    let mut t = Table::new(vec!["index", "sigma_a", "sigma_z", "sigma_step1"]);
    for i in 0..sa.len() {
        t.push(vec![i.into(), sa[i].into(), sz[i].into(), s1[i].into()]);
    }
    Ok(t)
}

/// Epsilon rank of the step-1 operator per `N`, in parallel over `N`.
pub fn rankgrowth(p: &ProblemArgs, ns: &[usize], eps_rel: f64) -> Result<Table> {
    let rows: Vec<Result<Vec<Cell>>> = ns
        .par_iter()
        .map(|&n| {
            let fp = p.build(n)?;
            let eps = eps_rel * fp.az.scale_hint;
            let r = eps_rank(&materialize(&fp.az.step1_operator())?, eps)?.r;
            Ok(vec![n.into(), fp.grid.l.into(), fp.grid.m().into(), eps.into(), r.into()])
        })
        .collect();
    let mut t = Table::new(vec!["n", "l", "m", "eps", "eps_rank"]);
    for row in rows {
        t.push(row?);
    }
    Ok(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TimingSolver {
    /// AZ with the randomized truncated SVD in step 1.
    AzRandSvd,
    /// Pivoted QR of the full dense matrix.
    Direct,
}

impl TimingSolver {
    fn name(self) -> &'static str {
        match self {
            Self::AzRandSvd => "az-rand-svd",
            Self::Direct => "direct",
        }
    }
}

/// `N = 2^k + 1` for `k` in `lo..=hi`.
pub fn power_sweep(lo: u32, hi: u32) -> Vec<usize> {
    (lo..=hi).map(|k| (1usize << k) + 1).collect()
}

fn direct_cap() -> Result<usize> {
    let log2 = match std::env::var(DIRECT_MAX_LOG2_VAR) {
        Ok(s) => s
            .parse::<u32>()
            .ok()
            .filter(|&k| k < 20)
            .ok_or_else(|| CliError::usage(format!("{DIRECT_MAX_LOG2_VAR} must be an integer below 20, got {s:?}")))?,
        Err(_) => DIRECT_MAX_LOG2_DEFAULT,
    };
    Ok((1usize << log2) + 1)
}

fn timed_solve(fp: &FrameProblem, b: &[C64], solver: TimingSolver, cfg: &SolverConfig) -> Result<(f64, Vec<C64>, usize)> {
    let start = Instant::now();
    let report = match solver {
        TimingSolver::AzRandSvd => az_solve(&fp.az, b, Step1Solver::RandomizedTsvd, cfg)?.report,
        TimingSolver::Direct => direct_qr_solve(&materialize(&fp.az.a)?, b, cfg.eps)?,
    };
    Ok((start.elapsed().as_secs_f64(), report.x.into_inner(), report.rank_used))
}

/// Median of three timed runs after one discarded warmup. The three runs
/// must agree bit for bit.
pub fn timing(p: &ProblemArgs, ns: &[usize], solver: TimingSolver, eps_rel: f64, seed: u64) -> Result<Table> {
    let cap = direct_cap()?;
    let mut t = Table::new(vec!["n", "solver", "seconds", "exponent", "rank", "checksum"]);
    let mut prev: Option<(usize, f64)> = None;
    for (idx, &n) in ns.iter().enumerate() {
        if solver == TimingSolver::Direct && n > cap {
            eprintln!("azls: skipping direct solve at N={n} (above {DIRECT_MAX_LOG2_VAR} cap N={cap})");
            continue;
        }
        let fp = p.build(n)?;
        let b = sample_function(|x| FunctionKind::Exp.eval(x), &fp.points);
        let cfg = solver_config(&fp, eps_rel, seed + idx as u64);
        timed_solve(&fp, b.as_slice(), solver, &cfg)?;
        let mut secs = Vec::with_capacity(3);
        let mut first: Option<(Vec<C64>, usize)> = None;
        for _ in 0..3 {
            let (s, x, rank) = timed_solve(&fp, b.as_slice(), solver, &cfg)?;
            secs.push(s);
            match &first {
                None => first = Some((x, rank)),
                Some((x0, _)) if *x0 != x => return Err(CliError::Nondeterministic { n }),
                Some(_) => {}
            }
        }
        secs.sort_by(f64::total_cmp);
        let median = secs[1];
        let exponent = prev.map(|(n0, t0)| (median / t0).ln() / (n as f64 / n0 as f64).ln());
        let (x, rank) = first.expect("three runs");
        t.push(vec![
            n.into(),
            solver.name().into(),
            median.into(),
            exponent.into(),
            rank.into(),
            checksum(&x).into(),
        ]);
        prev = Some((n, median));
    }
    Ok(t)
}

/// Least-squares slope of `ln(seconds)` against `ln(n)`.
pub fn loglog_slope(ns: &[f64], secs: &[f64]) -> f64 {
    let xs: Vec<f64> = ns.iter().map(|v| v.ln()).collect();
    let ys: Vec<f64> = secs.iter().map(|v| v.ln()).collect();
    let k = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / k, ys.iter().sum::<f64>() / k);
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

pub struct ApproxRequest {
    pub n: usize,
    pub function: FunctionKind,
    pub solver: Step1Solver,
    pub eps_rel: f64,
    pub seed: u64,
}

/// AZ fit of a test function plus the dense truncated-SVD fit at the same
/// threshold for reference.
pub fn approx(p: &ProblemArgs, req: &ApproxRequest) -> Result<Table> {
    let fp = p.build(req.n)?;
    let f = |x: &[f64]| req.function.eval(x);
    let b = sample_function(f, &fp.points);
    let cfg = solver_config(&fp, req.eps_rel, req.seed);
    let sol = az_solve(&fp.az, b.as_slice(), req.solver, &cfg)?.report;
    let err = eval_error(&fp, &sol.x, f, 4)?;
    let oracle = if fp.grid.n <= ORACLE_MAX_COLS {
        let o = tsvd_solve(&materialize(&fp.az.a)?, b.as_slice(), cfg.eps)?;
        Some(eval_error(&fp, &o.x, f, 4)?.max_err)
    } else {
        None
    };
    let mut t = Table::new(vec![
        "problem",
        "n",
        "function",
        "solver",
        "eps",
        "max_err",
        "l2_err",
        "residual",
        "rank_used",
        "oracle_max_err",
        "checksum",
    ]);
    t.push(vec![
        p.problem.name().into(),
        req.n.into(),
        req.function.name().into(),
        req.solver.as_str().into(),
        cfg.eps.into(),
        err.max_err.into(),
        err.l2_err.into(),
        sol.residual_norm.into(),
        sol.rank_used.into(),
        oracle.into(),
        checksum(sol.x.as_slice()).into(),
    ]);
    Ok(t)
}

/// Weighted AZ on the Gibbs setup with `N` terms and `2N + 1` points.
pub fn weighted(n: usize, eps_ws: &[f64], solver: Step1Solver, seed: u64) -> Result<Table> {
    let g = gibbs_setup(n, 2 * n + 1)?;
    let base = WeightedAzProblem::new(g.problem.az.clone(), g.weights.clone(), 0.0)?;
    let b = g.samples.as_slice();
    let x_weighted = weighted_oracle(&base, b)?;
    let x_plain = direct_lsq(&materialize(&g.problem.az.a)?, b)?.x.into_inner();
    let mut t = Table::new(vec![
        "eps_w",
        "step1_rank",
        "dist_weighted_oracle",
        "dist_unweighted",
        "residual",
        "checksum",
    ]);
    for &eps_w in eps_ws {
        let wp = base.with_eps_w(eps_w)?;
        let derived = wp.derived()?;
        let cfg = SolverConfig::new(derived.default_eps(), 60.min(n)).with_adaptive(true).with_seed(seed);
        let sol = az_weighted_solve(&wp, b, solver, &cfg)?.report;
        let x = sol.x.as_slice();
        t.push(vec![
            eps_w.into(),
            sol.rank_used.into(),
            vec_norm(&sub_vec(x, &x_weighted)).into(),
            vec_norm(&sub_vec(x, &x_plain)).into(),
            sol.residual_norm.into(),
            checksum(x).into(),
        ]);
    }
    Ok(t)
}
