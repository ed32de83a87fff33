use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Relative probability of linking two time groups as a function of their
/// index difference. Always non-increasing with a positive value at 0.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum TimeDiffFn {
    /// `f(t) = base^(-1-t)`.
    ExpBase(f64),
    /// `f(t) = scale · ratio^t`.
    Geometric { scale: f64, ratio: f64 },
    /// Explicit values for `t = 0, 1, …`; zero beyond the table.
    Tabulated(Vec<f64>),
}

impl TimeDiffFn {
    pub fn exp_base(base: f64) -> Result<Self> {
        if !(base >= 1.0 && base.is_finite()) {
            return invalid(format!("exponential base must be >= 1, got {base}"));
        }
        Ok(TimeDiffFn::ExpBase(base))
    }

    pub fn geometric(scale: f64, ratio: f64) -> Result<Self> {
        if !(scale > 0.0 && scale <= 1.0) || !(0.0..=1.0).contains(&ratio) {
            return invalid(format!("geometric form needs 0 < scale <= 1 and 0 <= ratio <= 1, got ({scale}, {ratio})"));
        }
        Ok(TimeDiffFn::Geometric { scale, ratio })
    }

    pub fn tabulated(values: Vec<f64>) -> Result<Self> {
        if values.first().is_none_or(|&v| v <= 0.0) {
            return invalid("tabulated function needs a positive value at 0");
        }
        if values.iter().any(|v| !(0.0..=1.0).contains(v)) {
            return invalid("tabulated values must lie in [0, 1]");
        }
        if values.windows(2).any(|w| w[1] > w[0]) {
            return invalid("tabulated values must be non-increasing");
        }
        Ok(TimeDiffFn::Tabulated(values))
    }

    /// `f(t) = 2^(-1-t)`.
    pub fn exp2() -> Self {
        TimeDiffFn::ExpBase(2.0)
    }

    pub fn eval(&self, diff: usize) -> f64 {
        match self {
            TimeDiffFn::ExpBase(base) => base.powf(-1.0 - diff as f64),
            TimeDiffFn::Geometric { scale, ratio } => scale * ratio.powi(diff.min(i32::MAX as usize) as i32),
            TimeDiffFn::Tabulated(values) => values.get(diff).copied().unwrap_or(0.0),
        }
    }
}

/// Probability of picking each existing time group `0..=current_group` for a
/// vertex of `current_group`: `f(current − j)` normalized over all groups.
pub fn group_probabilities(f: &TimeDiffFn, current_group: usize) -> Result<Vec<f64>> {
    let weights: Vec<f64> = (0..=current_group).map(|j| f.eval(current_group - j)).collect();
    let total: f64 = weights.iter().sum();
    if !(total > 0.0 && total.is_finite()) {
        return Err(Error::DegenerateDistribution);
    }
    Ok(weights.into_iter().map(|w| w / total).collect())
}

fn parse_floats(args: &str) -> Result<Vec<f64>> {
    args.split(',')
        .map(|x| x.trim().parse::<f64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| Error::InvalidArgument(format!("cannot parse numbers in {args:?}")))
}

/// Accepts `exp2`, `exp:<base>`, `geo:<scale>,<ratio>` or `table:<v0>,<v1>,…`.
impl FromStr for TimeDiffFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "exp2" {
            return Ok(TimeDiffFn::exp2());
        }
        if let Some(args) = s.strip_prefix("exp:") {
            return match parse_floats(args)?.as_slice() {
                [base] => TimeDiffFn::exp_base(*base),
                _ => invalid(format!("exp form takes one base, got {args:?}")),
            };
        }
        if let Some(args) = s.strip_prefix("geo:") {
            return match parse_floats(args)?.as_slice() {
                [scale, ratio] => TimeDiffFn::geometric(*scale, *ratio),
                _ => invalid(format!("geo form takes scale,ratio, got {args:?}")),
            };
        }
        if let Some(args) = s.strip_prefix("table:") {
            return TimeDiffFn::tabulated(parse_floats(args)?);
        }
        invalid(format!("unknown time-difference function {s:?}"))
    }
}

impl fmt::Display for TimeDiffFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TimeDiffFn::ExpBase(base) if *base == 2.0 => f.write_str("exp2"),
            TimeDiffFn::ExpBase(base) => write!(f, "exp:{base}"),
            TimeDiffFn::Geometric { scale, ratio } => write!(f, "geo:{scale},{ratio}"),
            TimeDiffFn::Tabulated(values) => {
                let parts: Vec<String> = values.iter().map(f64::to_string).collect();
                write!(f, "table:{}", parts.join(","))
            }
        }
    }
}

impl TryFrom<String> for TimeDiffFn {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<TimeDiffFn> for String {
    fn from(f: TimeDiffFn) -> String {
        f.to_string()
    }
}
