//! Per-snapshot topological features and network-star machinery.
//!
//! Clustering and shortest paths are computed on the undirected projection
//! of the snapshot with self-loops dropped. Degrees count distinct neighbors
//! in either direction, so a self-loop adds one.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::graph::{Snapshot, TemporalGraph, TimeStamp, VertexId};

/// Minimum number of tail samples for a power-law exponent estimate.
pub const MIN_TAIL_SAMPLES: usize = 50;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FeatureVector {
    pub vertices: usize,
    pub edges: usize,
    pub density: Option<f64>,
    pub avg_clustering: f64,
    pub avg_shortest_path: Option<f64>,
    pub max_degree: usize,
    pub gamma: Option<f64>,
}

impl FeatureVector {
    /// All features of `s`; `x_min` is the lower cutoff for the power-law fit.
    pub fn compute(s: &Snapshot<'_>, x_min: usize) -> Self {
        let degrees = s.degrees();
        FeatureVector {
            vertices: s.vertex_count(),
            edges: s.edge_count(),
            density: density(s),
            avg_clustering: avg_clustering(s),
            avg_shortest_path: avg_shortest_path(s),
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            gamma: power_law_gamma(&degrees, x_min),
        }
    }
}

/// `|E| / (|V|·(|V|−1))` with undirected edges counted as two arcs
/// (self-loops as one). `None` below two vertices.
pub fn density(s: &Snapshot<'_>) -> Option<f64> {
    let n = s.vertex_count();
    if n < 2 {
        return None;
    }
    let arcs: usize = if s.graph().is_directed() {
        s.edge_count()
    } else {
        s.edges().iter().map(|e| if e.is_loop() { 1 } else { 2 }).sum()
    };
    Some(arcs as f64 / (n as f64 * (n as f64 - 1.0)))
}

fn local_clustering(neighbors: &[Vec<usize>], v: usize) -> f64 {
    let nv = &neighbors[v];
    let d = nv.len();
    if d < 2 {
        return 0.0;
    }
    let mut links = 0usize;
    for (i, &a) in nv.iter().enumerate() {
        for &b in &nv[i + 1..] {
            if neighbors[a].binary_search(&b).is_ok() {
                links += 1;
            }
        }
    }
    2.0 * links as f64 / (d * (d - 1)) as f64
}

/// Mean local clustering coefficient over all snapshot vertices; vertices
/// with fewer than two neighbors contribute 0.
pub fn avg_clustering(s: &Snapshot<'_>) -> f64 {
    let n = s.vertex_count();
    if n == 0 {
        return 0.0;
    }
    let neighbors = s.neighbor_lists(false);
    let total: f64 = (0..n).map(|v| local_clustering(&neighbors, v)).sum();
    total / n as f64
}

/// Local indices of the largest connected component of the undirected
/// projection (ties go to the component holding the earliest-joined vertex).
fn largest_component(neighbors: &[Vec<usize>]) -> Vec<usize> {
    let n = neighbors.len();
    let mut label = vec![usize::MAX; n];
    let mut best: Vec<usize> = Vec::new();
    for root in 0..n {
        if label[root] != usize::MAX {
            continue;
        }
        let mut members = vec![root];
        label[root] = root;
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &y in &neighbors[x] {
                if label[y] == usize::MAX {
                    label[y] = root;
                    members.push(y);
                }
            }
        }
        if members.len() > best.len() {
            best = members;
        }
    }
    best
}

fn bfs_distance_sum(neighbors: &[Vec<usize>], source: usize) -> u64 {
    let mut dist = vec![u32::MAX; neighbors.len()];
    let mut queue = std::collections::VecDeque::with_capacity(neighbors.len());
    dist[source] = 0;
    queue.push_back(source);
    let mut sum = 0u64;
    while let Some(x) = queue.pop_front() {
        let dx = dist[x];
        sum += dx as u64;
        for &y in &neighbors[x] {
            if dist[y] == u32::MAX {
                dist[y] = dx + 1;
                queue.push_back(y);
            }
        }
    }
    sum
}

/// Mean distance over ordered vertex pairs of the largest connected
/// component. `None` when no component has two vertices.
pub fn avg_shortest_path(s: &Snapshot<'_>) -> Option<f64> {
    let neighbors = s.neighbor_lists(false);
    let component = largest_component(&neighbors);
    let c = component.len();
    if c < 2 {
        return None;
    }
    let total: u64 = component.par_iter().map(|&v| bfs_distance_sum(&neighbors, v)).sum();
    Some(total as f64 / (c as f64 * (c as f64 - 1.0)))
}

/// The `k` highest-degree vertices of the snapshot, best first. Ties go to
/// the earlier-joined vertex, then to the smaller id.
pub fn k_stars_set(s: &Snapshot<'_>, k: usize) -> Vec<VertexId> {
    let g = s.graph();
    let mut ranked: Vec<(usize, VertexId)> = s.degrees().into_iter().zip(s.vertices().iter().copied()).collect();
    ranked.sort_by_key(|&(d, v)| (std::cmp::Reverse(d), g.join_times()[v], v));
    ranked.into_iter().take(k).map(|(_, v)| v).collect()
}

/// Number of newly emerging stars at each horizon.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct StarsVector(pub Vec<usize>);

impl StarsVector {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Distinct vertices that were ever stars: the sum of all entries.
    pub fn number(&self) -> usize {
        k_stars_number(self)
    }
}

/// Entry `i` counts members of the top-`k` set at `horizons[i]` that were in
/// none of the earlier sets, starting from the set at time 0.
pub fn k_stars_vector(g: &TemporalGraph, horizons: &[TimeStamp], k: usize) -> Result<StarsVector> {
    if horizons.windows(2).any(|w| w[0] >= w[1]) {
        return invalid("horizons must be strictly increasing");
    }
    let mut seen = vec![false; g.vertex_count()];
    for v in k_stars_set(&g.snapshot_at(0), k) {
        seen[v] = true;
    }
    let counts = horizons
        .iter()
        .map(|&t| {
            let mut fresh = 0;
            for v in k_stars_set(&g.snapshot_at(t), k) {
                if !seen[v] {
                    seen[v] = true;
                    fresh += 1;
                }
            }
            fresh
        })
        .collect();
    Ok(StarsVector(counts))
}

pub fn k_stars_number(v: &StarsVector) -> usize {
    v.0.iter().sum()
}

/// Maximum-likelihood power-law exponent of the degrees `>= x_min`, using the
/// continuous approximation with the half-integer shift:
/// `1 + n / Σ ln(d / (x_min − 0.5))`.
///
/// `None` with fewer than [`MIN_TAIL_SAMPLES`] tail degrees, when every tail
/// degree is identical, or when `x_min` is 0.
pub fn power_law_gamma(degrees: &[usize], x_min: usize) -> Option<f64> {
    if x_min == 0 {
        return None;
    }
    let tail: Vec<usize> = degrees.iter().copied().filter(|&d| d >= x_min).collect();
    if tail.len() < MIN_TAIL_SAMPLES || tail.iter().all(|&d| d == tail[0]) {
        return None;
    }
    let shift = x_min as f64 - 0.5;
    let log_sum: f64 = tail.iter().map(|&d| (d as f64 / shift).ln()).sum();
    Some(1.0 + tail.len() as f64 / log_sum)
}
