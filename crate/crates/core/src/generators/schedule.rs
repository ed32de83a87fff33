use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{invalid, Error, Result};

/// Number of vertices added in each generator iteration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct GrowthSchedule(Vec<usize>);

impl GrowthSchedule {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return invalid("growth schedule is empty");
        }
        if sizes.contains(&0) {
            return invalid("growth schedule entries must be positive");
        }
        Ok(GrowthSchedule(sizes))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn iterations(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn reversed(&self) -> Self {
        GrowthSchedule(self.0.iter().rev().copied().collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScheduleKind {
    /// `step` vertices in each of `iterations` iterations.
    Linear { step: usize, iterations: usize },
    /// `coef·x²` for `x = 1..max_x_exclusive`.
    Polynomial { coef: usize, max_x_exclusive: usize },
    /// The polynomial sequence in reverse order.
    Sigmoidal { coef: usize, max_x_exclusive: usize },
}

pub fn make_schedule(kind: ScheduleKind) -> Result<GrowthSchedule> {
    match kind {
        ScheduleKind::Linear { step, iterations } => {
            if step == 0 || iterations == 0 {
                return invalid("linear schedule needs a positive step and iteration count");
            }
            GrowthSchedule::new(vec![step; iterations])
        }
        ScheduleKind::Polynomial { coef, max_x_exclusive } => {
            if coef == 0 {
                return invalid("polynomial schedule needs a positive coefficient");
            }
            if max_x_exclusive <= 1 {
                return invalid("max_x_exclusive must be greater than 1");
            }
            GrowthSchedule::new((1..max_x_exclusive).map(|x| coef * x * x).collect())
        }
        ScheduleKind::Sigmoidal { coef, max_x_exclusive } => {
            Ok(make_schedule(ScheduleKind::Polynomial { coef, max_x_exclusive })?.reversed())
        }
    }
}

fn parse_pair(args: &str, sep: char) -> Result<(usize, usize)> {
    let bad = || Error::InvalidArgument(format!("expected two integers separated by '{sep}', found {args:?}"));
    let (a, b) = args.split_once(sep).ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

/// Accepts `100,200,400`, `linear:10x70`, `poly:5,8` or `sigmoid:5,8`.
impl FromStr for GrowthSchedule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(args) = s.strip_prefix("linear:") {
            let (step, iterations) = parse_pair(args, 'x')?;
            return make_schedule(ScheduleKind::Linear { step, iterations });
        }
        if let Some(args) = s.strip_prefix("poly:") {
            let (coef, max_x_exclusive) = parse_pair(args, ',')?;
            return make_schedule(ScheduleKind::Polynomial { coef, max_x_exclusive });
        }
        if let Some(args) = s.strip_prefix("sigmoid:") {
            let (coef, max_x_exclusive) = parse_pair(args, ',')?;
            return make_schedule(ScheduleKind::Sigmoidal { coef, max_x_exclusive });
        }
        let sizes = s
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidArgument(format!("cannot parse growth schedule {s:?}")))?;
        GrowthSchedule::new(sizes)
    }
}

impl fmt::Display for GrowthSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl<'de> Deserialize<'de> for GrowthSchedule {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            List(Vec<usize>),
            Spec(String),
        }
        let parsed = match Repr::deserialize(deserializer)? {
            Repr::List(sizes) => GrowthSchedule::new(sizes),
            Repr::Spec(spec) => spec.parse(),
        };
        parsed.map_err(serde::de::Error::custom)
    }
}
