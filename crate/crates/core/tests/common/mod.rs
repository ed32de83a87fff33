//! Brute-force reference implementations and random small inputs shared by
//! the integration tests.

#![allow(dead_code)]

use rand::Rng;
use temponet::{GraphBuilder, TemporalGraph, TimeStamp, VertexId};

/// A random graph with at most `max_n` vertices and join times in `0..4`.
pub fn random_graph<R: Rng>(rng: &mut R, max_n: usize) -> TemporalGraph {
    let directed = rng.gen_bool(0.3);
    let loops = rng.gen_bool(0.3);
    let n = rng.gen_range(0..=max_n);
    let mut b = GraphBuilder::new(directed).allow_self_loops(loops);
    for _ in 0..n {
        b.add_vertex(rng.gen_range(0..4));
    }
    if n > 0 {
        let attempts = rng.gen_range(0..=2 * n * n);
        for _ in 0..attempts {
            let s = rng.gen_range(0..n);
            let t = rng.gen_range(0..n);
            if s == t && !loops {
                continue;
            }
            let earliest = b.join_time(s).unwrap().max(b.join_time(t).unwrap());
            b.add_edge(s, t, earliest + rng.gen_range(0..3)).unwrap();
        }
    }
    b.build()
}

/// Ids present at `t`, ordered by (join time, id).
pub fn present(g: &TemporalGraph, t: TimeStamp) -> Vec<VertexId> {
    let mut vs: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| g.join_times()[v] <= t).collect();
    vs.sort_by_key(|&v| (g.join_times()[v], v));
    vs
}

/// Undirected adjacency matrix over positions in [`present`]; the diagonal
/// marks self-loops.
pub fn adjacency(g: &TemporalGraph, t: TimeStamp) -> Vec<Vec<bool>> {
    let vs = present(g, t);
    let pos = |v: VertexId| vs.iter().position(|&x| x == v).unwrap();
    let mut a = vec![vec![false; vs.len()]; vs.len()];
    for e in g.edges().iter().filter(|e| e.created <= t) {
        let (i, j) = (pos(e.source), pos(e.target));
        a[i][j] = true;
        a[j][i] = true;
    }
    a
}

pub fn degrees(g: &TemporalGraph, t: TimeStamp) -> Vec<usize> {
    adjacency(g, t).iter().map(|row| row.iter().filter(|&&x| x).count()).collect()
}

pub fn density(g: &TemporalGraph, t: TimeStamp) -> Option<f64> {
    let n = present(g, t).len();
    if n < 2 {
        return None;
    }
    let mut arcs = std::collections::BTreeSet::new();
    for e in g.edges().iter().filter(|e| e.created <= t) {
        arcs.insert((e.source, e.target));
        if !g.is_directed() {
            arcs.insert((e.target, e.source));
        }
    }
    Some(arcs.len() as f64 / (n * (n - 1)) as f64)
}

pub fn clustering(g: &TemporalGraph, t: TimeStamp) -> f64 {
    let a = adjacency(g, t);
    let n = a.len();
    if n == 0 {
        return 0.0;
    }
    let mut total = 0.0;
    for v in 0..n {
        let nb: Vec<usize> = (0..n).filter(|&u| u != v && a[v][u]).collect();
        let k = nb.len();
        if k < 2 {
            continue;
        }
        let mut closed = 0;
        for &x in &nb {
            for &y in &nb {
                if x < y && a[x][y] {
                    closed += 1;
                }
            }
        }
        total += closed as f64 / (k * (k - 1) / 2) as f64;
    }
    total / n as f64
}

/// Mean pairwise distance inside the largest component (ties: the component
/// containing the earliest position), via Floyd–Warshall.
pub fn shortest_path(g: &TemporalGraph, t: TimeStamp) -> Option<f64> {
    let a = adjacency(g, t);
    let n = a.len();
    const INF: u64 = u64::MAX / 4;
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            if i == j {
                *cell = 0;
            } else if a[i][j] {
                *cell = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    let mut best: Vec<usize> = Vec::new();
    for row in &d {
        let comp: Vec<usize> = (0..n).filter(|&j| row[j] < INF).collect();
        if comp.len() > best.len() {
            best = comp;
        }
    }
    let c = best.len();
    if c < 2 {
        return None;
    }
    let sum: u64 = best.iter().flat_map(|&i| best.iter().map(move |&j| (i, j))).map(|(i, j)| d[i][j]).sum();
    Some(sum as f64 / (c * (c - 1)) as f64)
}

pub fn stars_set(g: &TemporalGraph, t: TimeStamp, k: usize) -> Vec<VertexId> {
    let vs = present(g, t);
    let deg = degrees(g, t);
    let mut ranked: Vec<(usize, VertexId)> = vs.iter().enumerate().map(|(i, &v)| (deg[i], v)).collect();
    ranked.sort_by(|x, y| y.0.cmp(&x.0).then(g.join_times()[x.1].cmp(&g.join_times()[y.1])).then(x.1.cmp(&y.1)));
    ranked.truncate(k);
    ranked.into_iter().map(|(_, v)| v).collect()
}

pub fn stars_vector(g: &TemporalGraph, horizons: &[TimeStamp], k: usize) -> Vec<usize> {
    let mut union: Vec<VertexId> = stars_set(g, 0, k);
    horizons
        .iter()
        .map(|&t| {
            let fresh: Vec<VertexId> = stars_set(g, t, k).into_iter().filter(|v| !union.contains(v)).collect();
            union.extend(&fresh);
            fresh.len()
        })
        .collect()
}

fn mean_rank(xs: &[f64], i: usize) -> f64 {
    let below = xs.iter().filter(|&&x| x < xs[i]).count();
    let equal = xs.iter().filter(|&&x| x == xs[i]).count();
    below as f64 + (equal as f64 + 1.0) / 2.0
}

pub fn spearman(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let n = xs.len();
    let rx: Vec<f64> = (0..n).map(|i| mean_rank(xs, i)).collect();
    let ry: Vec<f64> = (0..n).map(|i| mean_rank(ys, i)).collect();
    let m = (n as f64 + 1.0) / 2.0;
    let cov: f64 = (0..n).map(|i| (rx[i] - m) * (ry[i] - m)).sum();
    let vx: f64 = rx.iter().map(|r| (r - m).powi(2)).sum();
    let vy: f64 = ry.iter().map(|r| (r - m).powi(2)).sum();
    if vx < 1e-12 || vy < 1e-12 {
        return None;
    }
    Some(cov / (vx * vy).sqrt())
}

/// Largest time reached by at least `w` of the given activity spans.
pub fn w_max(t_maxes: &[TimeStamp], w: usize) -> TimeStamp {
    t_maxes.iter().copied().filter(|&t| t_maxes.iter().filter(|&&u| u >= t).count() >= w).max().unwrap()
}

/// (total, avg, norm_avg) computed network by network, horizon by horizon.
pub fn aggregate(graphs: &[TemporalGraph], k: usize, horizons: &[TimeStamp]) -> (Vec<usize>, Vec<f64>, Vec<f64>) {
    let mut total = vec![0; horizons.len()];
    let mut avg = vec![0.0; horizons.len()];
    let mut norm = vec![0.0; horizons.len()];
    for (i, &t) in horizons.iter().enumerate() {
        let mut active = 0;
        let mut norm_sum = 0.0;
        let mut norm_n = 0;
        for g in graphs.iter().filter(|g| g.t_max() >= t) {
            let own: Vec<TimeStamp> = horizons.iter().copied().filter(|&h| h <= g.t_max()).collect();
            let v = stars_vector(g, &own, k);
            let number: usize = v.iter().sum();
            total[i] += v[i];
            active += 1;
            if number > 0 {
                norm_sum += v[i] as f64 / number as f64;
                norm_n += 1;
            }
        }
        avg[i] = if active > 0 { total[i] as f64 / active as f64 } else { 0.0 };
        norm[i] = if norm_n > 0 { norm_sum / norm_n as f64 } else { 0.0 };
    }
    (total, avg, norm)
}

pub fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9
}

pub fn close_opt(a: Option<f64>, b: Option<f64>) -> bool {
    match (a, b) {
        (Some(a), Some(b)) => close(a, b),
        (None, None) => true,
        _ => false,
    }
}
