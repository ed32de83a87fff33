//! Analyses across a network's lifetime and across collections of networks.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::graph::{horizons, TemporalGraph, TimeStamp};
use crate::metrics::{k_stars_vector, StarsVector};

/// Default vibrancy split between fast- and slow-growing networks.
pub const DEFAULT_VIBRANCY_THRESHOLD: f64 = 0.5;

/// Join-rate curve: the fraction of the final vertex count present at each
/// sampled time, pinned to 0 at `t = 0` and 1 at `t_max`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Jrc {
    pub samples: Vec<(TimeStamp, f64)>,
    pub t_max: TimeStamp,
}

impl Jrc {
    pub fn times(&self) -> Vec<f64> {
        self.samples.iter().map(|&(t, _)| t as f64).collect()
    }

    pub fn values(&self) -> Vec<f64> {
        self.samples.iter().map(|&(_, v)| v).collect()
    }
}

pub fn jrc(g: &TemporalGraph, interval: TimeStamp) -> Result<Jrc> {
    if g.is_empty() {
        return invalid("join-rate curve of an empty graph");
    }
    if interval == 0 {
        return invalid("interval must be positive");
    }
    let t_max = g.t_max();
    if t_max == 0 {
        return Ok(Jrc { samples: vec![(0, 0.0), (0, 1.0)], t_max });
    }
    let total = g.vertex_count() as f64;
    let mut samples = vec![(0, 0.0)];
    for t in horizons(t_max, interval)? {
        let value = if t == t_max { 1.0 } else { g.snapshot_at(t).vertex_count() as f64 / total };
        samples.push((t, value));
    }
    Ok(Jrc { samples, t_max })
}

/// One minus the time-averaged join-rate curve (trapezoidal rule). Curves of
/// instantly grown networks (`t_max = 0`) have vibrancy 0.
pub fn vibrancy(j: &Jrc) -> f64 {
    if j.t_max == 0 {
        return 0.0;
    }
    let area: f64 = j
        .samples
        .windows(2)
        .map(|w| {
            let ((t0, y0), (t1, y1)) = (w[0], w[1]);
            (t1 - t0) as f64 * (y0 + y1) / 2.0
        })
        .sum();
    (1.0 - area / j.t_max as f64).clamp(0.0, 1.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GrowthClass {
    Fast,
    Slow,
}

pub fn classify_vibrancy(v: f64, threshold: f64) -> GrowthClass {
    if v > threshold {
        GrowthClass::Fast
    } else {
        GrowthClass::Slow
    }
}

/// Connection probability for vertex pairs whose join-time difference falls
/// in `[lower, lower + width)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DiffBin {
    pub bin: u64,
    pub lower: TimeStamp,
    pub connected: u64,
    pub pairs: u64,
    pub probability: f64,
}

/// For each join-time-difference bin, the fraction of vertex pairs in that
/// bin that are linked (in either direction). Bins without pairs are omitted.
pub fn join_time_diff_prob(g: &TemporalGraph, width: TimeStamp) -> Result<Vec<DiffBin>> {
    if width == 0 {
        return invalid("bin width must be positive");
    }
    let mut cohorts: BTreeMap<TimeStamp, u64> = BTreeMap::new();
    for &t in g.join_times() {
        *cohorts.entry(t).or_default() += 1;
    }
    let cohorts: Vec<(TimeStamp, u64)> = cohorts.into_iter().collect();
    let mut pairs: BTreeMap<u64, u64> = BTreeMap::new();
    for (i, &(ta, ca)) in cohorts.iter().enumerate() {
        if ca > 1 {
            *pairs.entry(0).or_default() += ca * (ca - 1) / 2;
        }
        for &(tb, cb) in &cohorts[i + 1..] {
            *pairs.entry((tb - ta) / width).or_default() += ca * cb;
        }
    }

    let mut links: Vec<(usize, usize)> =
        g.edges().iter().filter(|e| !e.is_loop()).map(|e| (e.source.min(e.target), e.source.max(e.target))).collect();
    links.sort_unstable();
    links.dedup();
    let joins = g.join_times();
    let mut connected: BTreeMap<u64, u64> = BTreeMap::new();
    for (u, v) in links {
        *connected.entry(joins[u].abs_diff(joins[v]) / width).or_default() += 1;
    }

    Ok(pairs
        .into_iter()
        .map(|(bin, pairs)| {
            let connected = connected.get(&bin).copied().unwrap_or(0);
            DiffBin { bin, lower: bin * width, connected, pairs, probability: connected as f64 / pairs as f64 }
        })
        .collect())
}

/// A set of networks analyzed together for star emergence.
#[derive(Clone, Debug)]
pub struct NetworkCollection {
    pub networks: Vec<TemporalGraph>,
    pub vibrancy_threshold: f64,
}

impl NetworkCollection {
    pub fn new(networks: Vec<TemporalGraph>) -> Self {
        NetworkCollection { networks, vibrancy_threshold: DEFAULT_VIBRANCY_THRESHOLD }
    }

    pub fn len(&self) -> usize {
        self.networks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.networks.is_empty()
    }

    /// Splits the collection by vibrancy (JRC sampled every `interval`).
    /// Returns `(fast, slow)`, each keeping the original order.
    pub fn split_by_vibrancy(&self, interval: TimeStamp) -> Result<(NetworkCollection, NetworkCollection)> {
        let mut fast = Vec::new();
        let mut slow = Vec::new();
        for g in &self.networks {
            let v = vibrancy(&jrc(g, interval)?);
            match classify_vibrancy(v, self.vibrancy_threshold) {
                GrowthClass::Fast => fast.push(g.clone()),
                GrowthClass::Slow => slow.push(g.clone()),
            }
        }
        let wrap = |networks| NetworkCollection { networks, vibrancy_threshold: self.vibrancy_threshold };
        Ok((wrap(fast), wrap(slow)))
    }
}

/// Largest active time reached by at least `w` networks of the collection.
pub fn w_max_time(c: &NetworkCollection, w: usize) -> Result<TimeStamp> {
    if w == 0 || w > c.len() {
        return invalid(format!("w must lie in 1..={}, got {w}", c.len()));
    }
    let mut t: Vec<TimeStamp> = c.networks.iter().map(TemporalGraph::t_max).collect();
    t.sort_unstable_by(|a, b| b.cmp(a));
    Ok(t[w - 1])
}

/// `interval, 2·interval, …` up to the collection's `w`-maximal time.
pub fn aggregate_horizons(c: &NetworkCollection, w: usize, interval: TimeStamp) -> Result<Vec<TimeStamp>> {
    horizons(w_max_time(c, w)?, interval)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StarsAggregate {
    pub horizons: Vec<TimeStamp>,
    pub total: Vec<usize>,
    pub avg: Vec<f64>,
    pub norm_avg: Vec<f64>,
}

/// Aggregates each network's stars vector over the shared horizons. At
/// horizon `t_i` only networks active for at least `t_i` take part;
/// `norm_avg` additionally skips networks that never had a star.
pub fn stars_aggregate(c: &NetworkCollection, k: usize, w: usize, horizons: &[TimeStamp]) -> Result<StarsAggregate> {
    if c.is_empty() {
        return invalid("empty network collection");
    }
    let w_max = w_max_time(c, w)?;
    if horizons.last() != Some(&w_max) {
        return invalid(format!("horizons must end at the {w}-maximal time {w_max}"));
    }
    let vectors: Vec<StarsVector> = c
        .networks
        .par_iter()
        .map(|g| {
            let active = horizons.partition_point(|&t| t <= g.t_max());
            k_stars_vector(g, &horizons[..active], k)
        })
        .collect::<Result<_>>()?;

    let m = horizons.len();
    let mut total = vec![0usize; m];
    let mut active = vec![0usize; m];
    let mut norm_sum = vec![0.0f64; m];
    let mut norm_count = vec![0usize; m];
    for v in &vectors {
        let number = v.number();
        for (i, &x) in v.counts().iter().enumerate() {
            total[i] += x;
            active[i] += 1;
            if number > 0 {
                norm_sum[i] += x as f64 / number as f64;
                norm_count[i] += 1;
            }
        }
    }
    let ratio = |a: f64, b: usize| if b == 0 { 0.0 } else { a / b as f64 };
    Ok(StarsAggregate {
        horizons: horizons.to_vec(),
        avg: (0..m).map(|i| ratio(total[i] as f64, active[i])).collect(),
        norm_avg: (0..m).map(|i| ratio(norm_sum[i], norm_count[i])).collect(),
        total,
    })
}

/// Ranks starting at 1; tied values share their mean rank.
pub fn average_ranks(xs: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..xs.len()).collect();
    order.sort_by(|&a, &b| xs[a].total_cmp(&xs[b]));
    let mut ranks = vec![0.0; xs.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && xs[order[j + 1]] == xs[order[i]] {
            j += 1;
        }
        let rank = (i + j) as f64 / 2.0 + 1.0;
        for &o in &order[i..=j] {
            ranks[o] = rank;
        }
        i = j + 1;
    }
    ranks
}

fn pearson(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

/// Spearman rank correlation with mean ranks for ties. `None` when either
/// input is constant.
pub fn spearman(xs: &[f64], ys: &[f64]) -> Result<Option<f64>> {
    if xs.len() != ys.len() {
        return invalid(format!("length mismatch: {} vs {}", xs.len(), ys.len()));
    }
    if xs.len() < 2 {
        return invalid("spearman needs at least two observations");
    }
    Ok(pearson(&average_ranks(xs), &average_ranks(ys)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;

    fn arrivals(sizes: &[usize]) -> TemporalGraph {
        let mut b = GraphBuilder::undirected();
        for (i, &s) in sizes.iter().enumerate() {
            for _ in 0..s {
                b.add_vertex(i as TimeStamp + 1);
            }
        }
        b.build()
    }

    #[test]
    fn instant_network() {
        let g = arrivals(&[]);
        assert!(jrc(&g, 1).is_err());
        let mut b = GraphBuilder::undirected();
        b.add_vertex(0);
        b.add_vertex(0);
        let j = jrc(&b.build(), 4).unwrap();
        assert_eq!(j.samples, vec![(0, 0.0), (0, 1.0)]);
        assert_eq!(vibrancy(&j), 0.0);
    }

    #[test]
    fn polynomial_jrc_samples() {
        let g = arrivals(&[5, 20, 45, 80, 125, 180, 245]);
        let j = jrc(&g, 1).unwrap();
        let expected = [0.0, 5.0, 25.0, 70.0, 150.0, 275.0, 455.0, 700.0].map(|x| x / 700.0);
        assert_eq!(j.samples.len(), expected.len());
        for ((_, got), want) in j.samples.iter().zip(expected) {
            assert!((got - want).abs() < 1e-15);
        }
        // Trapezoid over the cumulative fractions: 1 - 1.9/7.
        assert!((vibrancy(&j) - (1.0 - 1.9 / 7.0)).abs() < 1e-12);
    }

    #[test]
    fn linear_vibrancy_is_half() {
        let j = jrc(&arrivals(&[10; 70]), 1).unwrap();
        assert!((vibrancy(&j) - 0.5).abs() < 1e-12);
        assert_eq!(j.samples.len(), 71);
    }

    #[test]
    fn partial_last_interval() {
        let j = jrc(&arrivals(&[1; 10]), 4).unwrap();
        let times: Vec<_> = j.samples.iter().map(|s| s.0).collect();
        assert_eq!(times, vec![0, 4, 8, 10]);
    }

    #[test]
    fn classification_boundary() {
        assert_eq!(classify_vibrancy(0.73, 0.5), GrowthClass::Fast);
        assert_eq!(classify_vibrancy(0.27, 0.5), GrowthClass::Slow);
        assert_eq!(classify_vibrancy(0.5, 0.5), GrowthClass::Slow);
    }

    #[test]
    fn single_cohort_diff_probability() {
        let mut b = GraphBuilder::undirected();
        for _ in 0..4 {
            b.add_vertex(3);
        }
        b.add_edge(0, 1, 3).unwrap();
        b.add_edge(2, 3, 3).unwrap();
        let bins = join_time_diff_prob(&b.build(), 1).unwrap();
        assert_eq!(bins.len(), 1);
        assert_eq!((bins[0].connected, bins[0].pairs), (2, 6));
        assert!((bins[0].probability - 1.0 / 3.0).abs() < 1e-15);
        assert!(join_time_diff_prob(&arrivals(&[1]), 0).is_err());
    }

    #[test]
    fn w_max_cases() {
        let c = NetworkCollection::new(vec![arrivals(&[1; 10]), arrivals(&[1; 20]), arrivals(&[1; 30])]);
        assert_eq!(w_max_time(&c, 2).unwrap(), 20);
        assert_eq!(w_max_time(&c, 1).unwrap(), 30);
        assert_eq!(w_max_time(&c, 3).unwrap(), 10);
        assert!(w_max_time(&c, 4).is_err());
        assert!(w_max_time(&c, 0).is_err());
    }

    #[test]
    fn spearman_cases() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(spearman(&xs, &[10.0, 20.0, 30.0, 40.0]).unwrap(), Some(1.0));
        assert_eq!(spearman(&xs, &[4.0, 3.0, 2.0, 1.0]).unwrap(), Some(-1.0));
        assert_eq!(spearman(&xs, &[1.0; 4]).unwrap(), None);
        assert!(spearman(&xs, &[1.0]).is_err());
        assert_eq!(average_ranks(&[3.0, 1.0, 3.0, 2.0]), vec![3.5, 1.0, 3.5, 2.0]);
    }

    #[test]
    fn aggregate_rejects_bad_input() {
        let c = NetworkCollection::new(vec![]);
        assert!(stars_aggregate(&c, 1, 1, &[1]).is_err());
        let c = NetworkCollection::new(vec![arrivals(&[1; 4])]);
        assert!(stars_aggregate(&c, 1, 1, &[1, 2]).is_err());
        assert!(stars_aggregate(&c, 1, 1, &[2, 4]).is_ok());
    }
}
