//! Approximation domains inside the bounding box `[-1, 1]^d`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A union of closed, sorted, disjoint intervals in `[-1, 1]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<[f64; 2]>", into = "Vec<[f64; 2]>")]
pub struct Intervals(Vec<[f64; 2]>);

impl Intervals {
    pub fn new(parts: Vec<[f64; 2]>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Empty("interval list"));
        }
        for (k, &[lo, hi]) in parts.iter().enumerate() {
            if !(lo.is_finite() && hi.is_finite()) || lo > hi || lo < -1.0 || hi > 1.0 {
                return Err(Error::invalid(format!("interval [{lo}, {hi}] is not inside [-1, 1]")));
            }
            if k > 0 && parts[k - 1][1] >= lo {
                return Err(Error::invalid("intervals must be sorted and disjoint"));
            }
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[[f64; 2]] {
        &self.0
    }

    pub fn contains(&self, x: f64) -> bool {
        self.0.iter().any(|&[lo, hi]| lo <= x && x <= hi)
    }

    /// Total length.
    pub fn measure(&self) -> f64 {
        self.0.iter().map(|[lo, hi]| hi - lo).sum()
    }
}

impl TryFrom<Vec<[f64; 2]>> for Intervals {
    type Error = Error;
    fn try_from(v: Vec<[f64; 2]>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Intervals> for Vec<[f64; 2]> {
    fn from(v: Intervals) -> Self {
        v.0
    }
}

pub type MaskFn = Arc<dyn Fn(f64, f64) -> bool + Send + Sync>;

/// A subset of `[-1, 1]²` given by a point predicate.
#[derive(Clone)]
pub enum Mask2d {
    All,
    Disk { radius: f64 },
    /// Closed annulus `inner <= r <= outer`.
    PuncturedDisk { outer: f64, inner: f64 },
    /// `max(|x|, |y|) <= half_width`.
    Square { half_width: f64 },
    Custom(MaskFn),
}

impl fmt::Debug for Mask2d {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::All => write!(f, "All"),
            Self::Disk { radius } => write!(f, "Disk({radius})"),
            Self::PuncturedDisk { outer, inner } => write!(f, "PuncturedDisk({inner}..{outer})"),
            Self::Square { half_width } => write!(f, "Square({half_width})"),
            Self::Custom(_) => write!(f, "Custom"),
        }
    }
}

impl Mask2d {
    pub fn contains(&self, x: f64, y: f64) -> bool {
        let r = || x.hypot(y);
        match self {
            Self::All => true,
            Self::Disk { radius } => r() <= *radius,
            Self::PuncturedDisk { outer, inner } => {
                let r = r();
                *inner <= r && r <= *outer
            }
            Self::Square { half_width } => x.abs().max(y.abs()) <= *half_width,
            Self::Custom(f) => f(x, y),
        }
    }
}

impl FromStr for Mask2d {
    type Err = Error;
    /// Named masks: `all`, `disk` (radius 0.8), `punctured-disk`
    /// (0.2 to 0.8), `square` (half width 0.5).
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Self::All),
            "disk" => Ok(Self::Disk { radius: 0.8 }),
            "punctured-disk" => Ok(Self::PuncturedDisk { outer: 0.8, inner: 0.2 }),
            "square" => Ok(Self::Square { half_width: 0.5 }),
            other => Err(Error::invalid(format!(
                "unknown mask {other:?} (expected all, disk, punctured-disk, square)"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Domain {
    Intervals(Intervals),
    Mask(Mask2d),
}

impl Domain {
    pub fn interval(lo: f64, hi: f64) -> Result<Self> {
        Ok(Self::Intervals(Intervals::new(vec![[lo, hi]])?))
    }

    /// The whole box `[-1, 1]`.
    pub fn full() -> Self {
        Self::Intervals(Intervals(vec![[-1.0, 1.0]]))
    }

    pub fn intervals(parts: Vec<[f64; 2]>) -> Result<Self> {
        Ok(Self::Intervals(Intervals::new(parts)?))
    }

    /// Parses a JSON list of `[lo, hi]` pairs.
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str::<Intervals>(s)
            .map(Self::Intervals)
            .map_err(|e| Error::invalid(format!("bad interval list {s:?}: {e}")))
    }

    pub fn as_intervals(&self) -> Result<&Intervals> {
        match self {
            Self::Intervals(iv) => Ok(iv),
            Self::Mask(_) => Err(Error::invalid("expected a 1D interval domain")),
        }
    }

    pub fn as_mask(&self) -> Result<&Mask2d> {
        match self {
            Self::Mask(m) => Ok(m),
            Self::Intervals(_) => Err(Error::invalid("expected a 2D mask domain")),
        }
    }
}
