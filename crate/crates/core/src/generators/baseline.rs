//! Classic random-graph models used as comparison baselines.
//!
//! Growing models (BA, HK, FF) stamp vertex `v` with join time `v + 1` and
//! each edge with the join time of the vertex that created it. The static
//! small-world models (WS, NW) put every vertex and edge at time 0.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::{GraphBuilder, TemporalGraph, TimeStamp, VertexId};
use crate::sampling::WeightTree;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "lowercase")]
pub enum BaselineModel {
    /// Barabási–Albert preferential attachment.
    Ba { m: usize },
    /// Watts–Strogatz ring lattice with rewiring.
    Ws { k: usize, p: f64 },
    /// Newman–Watts ring lattice with added shortcuts.
    Nw { k: usize, p: f64 },
    /// Holme–Kim preferential attachment with triad formation.
    Hk { m: usize, p_triangle: f64 },
    /// Forest fire (forward burning only, undirected).
    Ff { p_forward: f64 },
}

impl BaselineModel {
    pub fn name(&self) -> &'static str {
        match self {
            BaselineModel::Ba { .. } => "ba",
            BaselineModel::Ws { .. } => "ws",
            BaselineModel::Nw { .. } => "nw",
            BaselineModel::Hk { .. } => "hk",
            BaselineModel::Ff { .. } => "ff",
        }
    }
}

impl fmt::Display for BaselineModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaselineModel::Ba { m } => write!(f, "ba(m={m})"),
            BaselineModel::Ws { k, p } => write!(f, "ws(k={k},p={p})"),
            BaselineModel::Nw { k, p } => write!(f, "nw(k={k},p={p})"),
            BaselineModel::Hk { m, p_triangle } => write!(f, "hk(m={m},p={p_triangle})"),
            BaselineModel::Ff { p_forward } => write!(f, "ff(p={p_forward})"),
        }
    }
}

impl FromStr for BaselineModel {
    type Err = Error;

    /// Model name with the evaluation defaults: `ba`, `ws`, `nw`, `hk`, `ff`.
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "ba" => BaselineModel::Ba { m: 3 },
            "ws" => BaselineModel::Ws { k: 6, p: 0.1 },
            "nw" => BaselineModel::Nw { k: 6, p: 0.1 },
            "hk" => BaselineModel::Hk { m: 3, p_triangle: 0.2 },
            "ff" => BaselineModel::Ff { p_forward: 0.65 },
            other => return invalid(format!("unknown baseline model {other:?}")),
        })
    }
}

fn growth_time(v: VertexId) -> TimeStamp {
    v as TimeStamp + 1
}

fn check_probability(p: f64, name: &str) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        invalid(format!("{name} must lie in [0, 1], got {p}"))
    }
}

pub fn baseline_generate(model: BaselineModel, n: usize, seed: u64) -> Result<TemporalGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match model {
        BaselineModel::Ba { m } => barabasi_albert(m, n, &mut rng),
        BaselineModel::Ws { k, p } => small_world(k, p, n, true, &mut rng),
        BaselineModel::Nw { k, p } => small_world(k, p, n, false, &mut rng),
        BaselineModel::Hk { m, p_triangle } => holme_kim(m, p_triangle, n, &mut rng),
        BaselineModel::Ff { p_forward } => forest_fire(p_forward, n, &mut rng),
    }
}

fn check_growth(m: usize, n: usize) -> Result<()> {
    if m == 0 {
        return invalid("m must be at least 1");
    }
    if n <= m {
        return invalid(format!("need more than m = {m} vertices, got {n}"));
    }
    Ok(())
}

/// Starts from `m` isolated seed vertices; the first newcomer links to all of
/// them and every later one picks `m` distinct targets proportionally to degree.
fn barabasi_albert(m: usize, n: usize, rng: &mut ChaCha8Rng) -> Result<TemporalGraph> {
    check_growth(m, n)?;
    let mut b = GraphBuilder::undirected();
    let mut weights = WeightTree::new(n);
    for v in 0..n {
        b.add_vertex(growth_time(v));
    }
    for v in m..n {
        let targets: Vec<VertexId> = if v == m {
            (0..m).collect()
        } else {
            let mut chosen = BTreeSet::new();
            while chosen.len() < m {
                chosen.insert(weights.sample_range(rng, 0, v).expect("positive total degree"));
            }
            chosen.into_iter().collect()
        };
        for &u in &targets {
            b.add_edge(v, u, growth_time(v))?;
            weights.add(u, 1);
        }
        weights.add(v, m as u64);
    }
    Ok(b.build())
}

fn small_world(k: usize, p: f64, n: usize, rewire: bool, rng: &mut ChaCha8Rng) -> Result<TemporalGraph> {
    if k < 2 || k % 2 == 1 {
        return invalid(format!("lattice degree k must be even and at least 2, got {k}"));
    }
    if k >= n {
        return invalid(format!("lattice degree k = {k} needs more than k vertices, got {n}"));
    }
    check_probability(p, "p")?;
    let key = |a: VertexId, b: VertexId| (a.min(b), a.max(b));
    let mut edges: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut degree = vec![0usize; n];
    for j in 1..=k / 2 {
        for u in 0..n {
            edges.insert(key(u, (u + j) % n));
        }
    }
    for d in degree.iter_mut() {
        *d = k;
    }
    for j in 1..=k / 2 {
        for u in 0..n {
            if rng.gen::<f64>() >= p {
                continue;
            }
            let v = (u + j) % n;
            if rewire && !edges.contains(&key(u, v)) {
                continue;
            }
            if degree[u] >= n - 1 {
                continue;
            }
            let mut w = rng.gen_range(0..n);
            while w == u || edges.contains(&key(u, w)) {
                w = rng.gen_range(0..n);
            }
            if rewire {
                edges.remove(&key(u, v));
                degree[v] -= 1;
            } else {
                degree[u] += 1;
            }
            edges.insert(key(u, w));
            degree[w] += 1;
        }
    }
    let mut b = GraphBuilder::undirected();
    for _ in 0..n {
        b.add_vertex(0);
    }
    for (u, v) in edges {
        b.add_edge(u, v, 0)?;
    }
    Ok(b.build())
}

/// Each newcomer makes one preferential link, then each further link is a
/// triad-closing step (probability `p_triangle`, to a neighbor of the last
/// preferential target) or another preferential link.
fn holme_kim(m: usize, p_triangle: f64, n: usize, rng: &mut ChaCha8Rng) -> Result<TemporalGraph> {
    check_growth(m, n)?;
    check_probability(p_triangle, "p_triangle")?;
    let mut b = GraphBuilder::undirected();
    let mut weights = WeightTree::new(n);
    let mut adjacency: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for v in 0..n {
        b.add_vertex(growth_time(v));
        if v < m {
            weights.add(v, 1);
        }
    }
    for v in m..n {
        let t = growth_time(v);
        let mut linked: BTreeSet<VertexId> = BTreeSet::new();
        let mut anchor: Option<VertexId> = None;
        while linked.len() < m {
            let mut target = None;
            if let Some(a) = anchor {
                if rng.gen::<f64>() < p_triangle {
                    let candidates: Vec<VertexId> =
                        adjacency[a].iter().copied().filter(|&w| w != v && !linked.contains(&w)).collect();
                    target = candidates.choose(rng).copied();
                }
            }
            let target = match target {
                Some(w) => w,
                None => {
                    let w = loop {
                        let w = weights.sample_range(rng, 0, v).expect("positive total weight");
                        if !linked.contains(&w) {
                            break w;
                        }
                    };
                    anchor = Some(w);
                    w
                }
            };
            linked.insert(target);
            b.add_edge(v, target, t)?;
        }
        for &u in &linked {
            adjacency[u].push(v);
            adjacency[v].push(u);
            weights.add(u, 1);
        }
        weights.add(v, m as u64);
    }
    Ok(b.build())
}

/// Each newcomer picks a uniform ambassador and recursively burns a
/// geometric number (mean `p/(1-p)`) of unburned neighbors, linking to all
/// burned vertices.
fn forest_fire(p_forward: f64, n: usize, rng: &mut ChaCha8Rng) -> Result<TemporalGraph> {
    if !(0.0..1.0).contains(&p_forward) {
        return invalid(format!("p_forward must lie in [0, 1), got {p_forward}"));
    }
    if n == 0 {
        return invalid("forest fire needs at least one vertex");
    }
    let mut b = GraphBuilder::undirected();
    let mut adjacency: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    b.add_vertex(growth_time(0));
    for v in 1..n {
        let t = growth_time(v);
        b.add_vertex(t);
        let ambassador = rng.gen_range(0..v);
        let mut burned = BTreeSet::from([ambassador]);
        let mut queue = std::collections::VecDeque::from([ambassador]);
        while let Some(x) = queue.pop_front() {
            let mut count = 0;
            while rng.gen::<f64>() < p_forward {
                count += 1;
            }
            let mut candidates: Vec<VertexId> = adjacency[x].iter().copied().filter(|w| !burned.contains(w)).collect();
            candidates.shuffle(rng);
            for &w in candidates.iter().take(count) {
                burned.insert(w);
                queue.push_back(w);
            }
        }
        for &u in &burned {
            b.add_edge(v, u, t)?;
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
    }
    Ok(b.build())
}
