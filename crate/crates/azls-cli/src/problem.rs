//! Problem selectors and their flag groups.

use std::sync::Arc;

use azls::frames::{
    chebyshev_extension, fourier_extension_1d, fourier_extension_2d, legendre_extension, weighted_sum_frame,
    Domain, FrameProblem, Mask2d, Sizing,
};
use azls::transforms::ChebyshevKind;
use azls::C64;
use clap::{Args, ValueEnum};

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProblemKind {
    Fourier1d,
    Fourier2d,
    Gram,
    Chebyshev,
    Legendre,
    Sumframe,
    Weighted,
}

impl ProblemKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::Fourier1d => "fourier1d",
            Self::Fourier2d => "fourier2d",
            Self::Gram => "gram",
            Self::Chebyshev => "chebyshev",
            Self::Legendre => "legendre",
            Self::Sumframe => "sumframe",
            Self::Weighted => "weighted",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NodeKind {
    Roots,
    Extremae,
}

impl From<NodeKind> for ChebyshevKind {
    fn from(k: NodeKind) -> Self {
        match k {
            NodeKind::Roots => ChebyshevKind::Roots,
            NodeKind::Extremae => ChebyshevKind::Extremae,
        }
    }
}

/// Test functions for `approx`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FunctionKind {
    /// `exp` of the coordinate sum.
    Exp,
    /// The constant 1, which is the first element of every basis here.
    One,
    /// `cos(2πx) + |x| sin(1 + 2πx)`.
    Singular,
}

impl FunctionKind {
    pub fn eval(self, p: &[f64]) -> C64 {
        let v = match self {
            Self::Exp => p.iter().sum::<f64>().exp(),
            Self::One => 1.0,
            Self::Singular => {
                let x = p[0];
                let tau = 2.0 * std::f64::consts::PI;
                (tau * x).cos() + x.abs() * (1.0 + tau * x).sin()
            }
        };
        C64::new(v, 0.0)
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Exp => "exp",
            Self::One => "one",
            Self::Singular => "singular",
        }
    }
}

#[derive(Clone, Debug, Args)]
pub struct ProblemArgs {
    #[arg(long, value_enum, default_value = "fourier1d")]
    pub problem: ProblemKind,
    /// Interval list as JSON, e.g. "[[-0.5, 0.5]]" (1D problems).
    #[arg(long)]
    pub domain: Option<String>,
    /// Named 2D mask: all, disk, punctured-disk, square (fourier2d only).
    #[arg(long)]
    pub mask: Option<String>,
    /// Chebyshev node family (chebyshev and sumframe only).
    #[arg(long, value_enum)]
    pub nodes: Option<NodeKind>,
    /// Oversampling factor for the grid-size rule.
    #[arg(long)]
    pub oversampling: Option<f64>,
}

/// Problems a subcommand accepts.
pub const FRAME_PROBLEMS: &[ProblemKind] = &[
    ProblemKind::Fourier1d,
    ProblemKind::Fourier2d,
    ProblemKind::Chebyshev,
    ProblemKind::Legendre,
    ProblemKind::Sumframe,
];

impl ProblemArgs {
    pub fn for_problem(problem: ProblemKind) -> Self {
        Self {
            problem,
            domain: None,
            mask: None,
            nodes: None,
            oversampling: None,
        }
    }

    /// Rejects flags that do not belong to the selected problem.
    pub fn validate(&self, command: &str, allowed: &[ProblemKind]) -> Result<()> {
        let p = self.problem;
        if !allowed.contains(&p) {
            let names: Vec<_> = allowed.iter().map(|k| k.name()).collect();
            return Err(CliError::usage(format!(
                "{command} does not support --problem {} (expected one of {})",
                p.name(),
                names.join(", ")
            )));
        }
        let reject = |flag: &str| Err(CliError::usage(format!("--{flag} is not valid with --problem {}", p.name())));
        if self.mask.is_some() && p != ProblemKind::Fourier2d {
            return reject("mask");
        }
        if self.domain.is_some() && p == ProblemKind::Fourier2d {
            return reject("domain");
        }
        if self.nodes.is_some() && !matches!(p, ProblemKind::Chebyshev | ProblemKind::Sumframe) {
            return reject("nodes");
        }
        if self.oversampling.is_some() && p == ProblemKind::Gram {
            return reject("oversampling");
        }
        self.domain()?;
        self.mask()?;
        Ok(())
    }

    pub fn domain(&self) -> Result<Domain> {
        match (&self.domain, self.problem) {
            (Some(s), _) => Ok(Domain::from_json(s)?),
            (None, ProblemKind::Gram) => Ok(Domain::intervals(vec![[-0.75, -0.25], [0.0, 0.5]])?),
            (None, ProblemKind::Sumframe) => Ok(Domain::full()),
            (None, _) => Ok(Domain::interval(-0.5, 0.5)?),
        }
    }

    pub fn mask(&self) -> Result<Mask2d> {
        Ok(self.mask.as_deref().unwrap_or("punctured-disk").parse()?)
    }

    fn sizing(&self) -> Sizing {
        Sizing::Oversampling(self.oversampling.unwrap_or(2.0))
    }

    fn kind(&self) -> ChebyshevKind {
        self.nodes.unwrap_or(NodeKind::Roots).into()
    }

    /// Builds the frame problem with `n` coefficients (per dimension in 2D;
    /// per component for sum frames).
    pub fn build(&self, n: usize) -> Result<FrameProblem> {
        let fp = match self.problem {
            ProblemKind::Fourier1d => fourier_extension_1d(n, &self.domain()?, self.sizing())?,
            ProblemKind::Fourier2d => fourier_extension_2d(n, &self.mask()?, self.sizing())?,
            ProblemKind::Chebyshev => chebyshev_extension(n, &self.domain()?, self.sizing(), self.kind())?,
            ProblemKind::Legendre => legendre_extension(n, &self.domain()?, self.sizing())?,
            ProblemKind::Sumframe => {
                let base = chebyshev_extension(n, &self.domain()?, self.sizing(), self.kind())?;
                weighted_sum_frame(&base, Arc::new(|_| 1.0), Arc::new(f64::abs))?
            }
            ProblemKind::Gram | ProblemKind::Weighted => {
                return Err(CliError::usage(format!("--problem {} has no frame builder", self.problem.name())))
            }
        };
        Ok(fp)
    }

    pub fn default_function(&self) -> FunctionKind {
        match self.problem {
            ProblemKind::Sumframe => FunctionKind::Singular,
            _ => FunctionKind::Exp,
        }
    }
}
