//! Random network generators: temporal preferential attachment and the
//! baseline models it is compared against.

mod baseline;
mod schedule;
mod time_diff;
mod tpa;

pub use baseline::{baseline_generate, BaselineModel};
pub use schedule::{make_schedule, GrowthSchedule, ScheduleKind};
pub use time_diff::{group_probabilities, TimeDiffFn};
pub use tpa::{iteration_time, tpa_generate, Generated, TpaParams, DEFAULT_RETRY_LIMIT};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Generator settings as accepted in JSON configs and on the command line.
///
/// `model` is one of `tpa`, `ba`, `ws`, `nw`, `hk`, `ff`. TPA reads `m`,
/// `schedule`, `f` and `retry_limit`; the baselines read `n` plus their own
/// parameters (`m`, `k`, `p`), falling back to the evaluation defaults.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub model: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schedule: Option<GrowthSchedule>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<TimeDiffFn>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub retry_limit: Option<usize>,
}

/// A fully resolved generator, ready to run.
#[derive(Clone, Debug, PartialEq)]
pub enum ModelSpec {
    Tpa(TpaParams),
    Baseline { model: BaselineModel, n: usize, seed: u64 },
}

impl GeneratorConfig {
    pub fn resolve(&self) -> Result<ModelSpec> {
        let need_m = || match self.m {
            Some(m) => Ok(m),
            None => invalid(format!("model {} requires m", self.model)),
        };
        if self.model == "tpa" {
            let Some(schedule) = self.schedule.clone() else {
                return invalid("model tpa requires a schedule");
            };
            return Ok(ModelSpec::Tpa(TpaParams {
                m: need_m()?,
                schedule,
                f: self.f.clone().unwrap_or_else(TimeDiffFn::exp2),
                seed: self.seed,
                retry_limit: self.retry_limit.unwrap_or(DEFAULT_RETRY_LIMIT),
            }));
        }
        let model = match self.model.parse::<BaselineModel>()? {
            BaselineModel::Ba { .. } => BaselineModel::Ba { m: need_m()? },
            BaselineModel::Hk { p_triangle, .. } => {
                BaselineModel::Hk { m: need_m()?, p_triangle: self.p.unwrap_or(p_triangle) }
            }
            BaselineModel::Ws { k, p } => BaselineModel::Ws { k: self.k.unwrap_or(k), p: self.p.unwrap_or(p) },
            BaselineModel::Nw { k, p } => BaselineModel::Nw { k: self.k.unwrap_or(k), p: self.p.unwrap_or(p) },
            BaselineModel::Ff { p_forward } => BaselineModel::Ff { p_forward: self.p.unwrap_or(p_forward) },
        };
        let n = match (self.n, &self.schedule) {
            (Some(n), _) => n,
            (None, Some(s)) => s.total(),
            (None, None) => return invalid(format!("model {} requires n", self.model)),
        };
        Ok(ModelSpec::Baseline { model, n, seed: self.seed })
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        GeneratorConfig { seed, ..self.clone() }
    }
}

impl ModelSpec {
    pub fn generate(&self) -> Result<Generated> {
        match self {
            ModelSpec::Tpa(params) => tpa_generate(params),
            ModelSpec::Baseline { model, n, seed } => {
                Ok(Generated { graph: baseline_generate(*model, *n, *seed)?, skipped_edges: 0 })
            }
        }
    }
}
