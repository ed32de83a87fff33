//! Temporal preferential attachment.
//!
//! Vertices arrive in groups, one group per iteration. Each arriving vertex
//! creates `m` edges; for every edge it first draws a target time group with
//! probability proportional to `f(group difference)`, then draws a vertex of
//! that group with probability proportional to `degree + 1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::schedule::GrowthSchedule;
use super::time_diff::{group_probabilities, TimeDiffFn};
use crate::error::{invalid, Result};
use crate::graph::{GraphBuilder, TemporalGraph, TimeStamp};
use crate::sampling::WeightTree;

pub const DEFAULT_RETRY_LIMIT: usize = 100;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TpaParams {
    pub m: usize,
    pub schedule: GrowthSchedule,
    pub f: TimeDiffFn,
    pub seed: u64,
    #[serde(default = "default_retry_limit")]
    pub retry_limit: usize,
}

fn default_retry_limit() -> usize {
    DEFAULT_RETRY_LIMIT
}

impl TpaParams {
    pub fn new(m: usize, schedule: GrowthSchedule, f: TimeDiffFn, seed: u64) -> Self {
        TpaParams { m, schedule, f, seed, retry_limit: DEFAULT_RETRY_LIMIT }
    }
}

/// Generator output plus the number of edges given up after `retry_limit`
/// failed target draws.
#[derive(Clone, Debug)]
pub struct Generated {
    pub graph: TemporalGraph,
    pub skipped_edges: usize,
}

/// Join time of the vertices added in iteration `i` (0-based). Time 0 is the
/// activation instant of the empty network.
pub fn iteration_time(i: usize) -> TimeStamp {
    i as TimeStamp + 1
}

fn draw(cumulative: &[f64], rng: &mut impl Rng) -> usize {
    let x = rng.gen::<f64>() * cumulative[cumulative.len() - 1];
    cumulative.partition_point(|&c| c <= x).min(cumulative.len() - 1)
}

pub fn tpa_generate(params: &TpaParams) -> Result<Generated> {
    if params.m == 0 {
        return invalid("m must be at least 1");
    }
    if params.retry_limit == 0 {
        return invalid("retry_limit must be at least 1");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut builder = GraphBuilder::undirected();
    let mut weights = WeightTree::new(params.schedule.total());
    let mut groups: Vec<(usize, usize)> = Vec::with_capacity(params.schedule.iterations());
    let mut skipped_edges = 0;

    for (i, &size) in params.schedule.sizes().iter().enumerate() {
        let t = iteration_time(i);
        let start = builder.vertex_count();
        for _ in 0..size {
            let v = builder.add_vertex(t);
            weights.add(v, 1);
        }
        groups.push((start, start + size));

        let cumulative: Vec<f64> = group_probabilities(&params.f, i)?
            .into_iter()
            .scan(0.0, |acc, p| {
                *acc += p;
                Some(*acc)
            })
            .collect();

        for v in start..start + size {
            for _ in 0..params.m {
                let (lo, hi) = groups[draw(&cumulative, &mut rng)];
                let mut placed = false;
                for _ in 0..params.retry_limit {
                    let Some(u) = weights.sample_range(&mut rng, lo, hi) else {
                        break;
                    };
                    if u == v || builder.has_edge(v, u) {
                        continue;
                    }
                    builder.add_edge(v, u, t)?;
                    weights.add(v, 1);
                    weights.add(u, 1);
                    placed = true;
                    break;
                }
                if !placed {
                    skipped_edges += 1;
                }
            }
        }
    }
    Ok(Generated { graph: builder.build(), skipped_edges })
}
