mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use temponet::edgelist;
use temponet::evolution::{
    join_time_diff_prob, jrc, spearman, stars_aggregate, vibrancy, w_max_time, NetworkCollection,
};
use temponet::fitting::{fit_exp_decay, polyfit};
use temponet::generators::{tpa_generate, GrowthSchedule, TimeDiffFn, TpaParams};
use temponet::graph::horizons;
use temponet::ingest::{read_edge_stream, IngestConfig};
use temponet::metrics::{avg_clustering, density, k_stars_vector};
use temponet::{GraphBuilder, TemporalGraph, TimeStamp};

fn graph(seed: u64, max_n: usize) -> TemporalGraph {
    common::random_graph(&mut ChaCha8Rng::seed_from_u64(seed), max_n)
}

fn arrivals(sizes: &[usize]) -> TemporalGraph {
    let mut b = GraphBuilder::undirected();
    for (i, &s) in sizes.iter().enumerate() {
        for _ in 0..s {
            b.add_vertex(i as TimeStamp + 1);
        }
    }
    b.build()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn snapshots_grow_monotonically(seed in any::<u64>()) {
        let g = graph(seed, 12);
        let mut prev = (0, 0);
        for t in 0..=g.t_max() + 1 {
            let s = g.snapshot_at(t);
            prop_assert!(s.vertex_count() >= prev.0 && s.edge_count() >= prev.1);
            prop_assert!(s.edges().iter().all(|e| s.contains(e.source) && s.contains(e.target) && e.created <= t));
            prev = (s.vertex_count(), s.edge_count());
        }
        prop_assert_eq!(prev, (g.vertex_count(), g.edge_count()));
    }

    #[test]
    fn degree_sum_counts_each_edge_twice(seed in any::<u64>()) {
        let g = graph(seed, 12);
        if !g.is_directed() {
            let s = g.snapshot_at(g.t_max());
            let loops = g.edges().iter().filter(|e| e.is_loop()).count();
            prop_assert_eq!(s.degrees().iter().sum::<usize>(), 2 * (g.edge_count() - loops) + loops);
        }
    }

    #[test]
    fn metric_ranges(seed in any::<u64>()) {
        let g = graph(seed, 10);
        let s = g.snapshot_at(g.t_max());
        if let (Some(d), false) = (density(&s), g.edges().iter().any(|e| e.is_loop())) {
            prop_assert!((0.0..=1.0).contains(&d));
        }
        prop_assert!((0.0..=1.0).contains(&avg_clustering(&s)));
    }

    #[test]
    fn edge_list_round_trip(seed in any::<u64>()) {
        let g = graph(seed, 12);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.csv");
        edgelist::save(&g, &path).unwrap();
        let once = edgelist::load(&path).unwrap();
        prop_assert_eq!(once.vertex_count(), g.vertex_count());
        for t in 0..=g.t_max() {
            let (a, b) = (g.snapshot_at(t), once.snapshot_at(t));
            let (mut da, mut db) = (a.degrees(), b.degrees());
            da.sort_unstable();
            db.sort_unstable();
            prop_assert_eq!((a.vertex_count(), a.edge_count(), da), (b.vertex_count(), b.edge_count(), db));
        }
        edgelist::save(&once, &path).unwrap();
        prop_assert_eq!(edgelist::load(&path).unwrap(), once);
    }

    #[test]
    fn ingest_is_a_fixed_point(records in prop::collection::vec((0u64..20, 0u64..20, 0u64..30), 1..40), directed in any::<bool>()) {
        let text: String = records.iter().map(|(s, t, time)| format!("{s},{t},{time}\n")).collect();
        let config = IngestConfig { directed, ..IngestConfig::default() };
        let Ok(g) = read_edge_stream(text.as_bytes(), &config) else { return Ok(()) };
        let mut out = Vec::new();
        edgelist::write_edge_list(&g, &mut out).unwrap();
        if edgelist::GraphMetadata::of(&g).vertex_join_times.is_empty() {
            let again = read_edge_stream(out.as_slice(), &config).unwrap();
            prop_assert_eq!(again, g);
        }
    }

    #[test]
    fn stars_numbers_are_bounded(seed in any::<u64>(), k in 1usize..4) {
        let g = graph(seed, 10);
        let hs = horizons(g.t_max(), 1).unwrap();
        let v = k_stars_vector(&g, &hs, k).unwrap();
        prop_assert!(v.number() <= k * (hs.len() + 1));
        if g.join_times().iter().all(|&t| t > 0) && g.vertex_count() >= k {
            prop_assert!(v.number() >= k);
            prop_assert!(v.number() <= k * hs.len());
        }
    }

    #[test]
    fn singleton_aggregate_is_the_network_vector(seed in any::<u64>(), k in 1usize..4) {
        let g = graph(seed, 10);
        let hs = horizons(g.t_max(), 1).unwrap();
        let own = k_stars_vector(&g, &hs, k).unwrap();
        let agg = stars_aggregate(&NetworkCollection::new(vec![g]), k, 1, &hs).unwrap();
        prop_assert_eq!(&agg.total, &own.0);
        for i in 0..hs.len() {
            prop_assert_eq!(agg.avg[i], own.0[i] as f64);
            let norm = if own.number() > 0 { own.0[i] as f64 / own.number() as f64 } else { 0.0 };
            prop_assert!((agg.norm_avg[i] - norm).abs() < 1e-12);
        }
    }

    #[test]
    fn w_max_is_wth_largest(spans in prop::collection::vec(0usize..6, 1..6), w_pick in any::<prop::sample::Index>()) {
        let graphs: Vec<TemporalGraph> = spans.iter().map(|&s| arrivals(&vec![1; s])).collect();
        let w = w_pick.index(graphs.len()) + 1;
        let mut t: Vec<TimeStamp> = spans.iter().map(|&s| s as TimeStamp).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(w_max_time(&NetworkCollection::new(graphs), w).unwrap(), t[w - 1]);
    }

    #[test]
    fn spearman_ignores_monotone_transforms(pairs in prop::collection::vec((-50i32..50, -50i32..50), 2..30)) {
        let xs: Vec<f64> = pairs.iter().map(|p| p.0 as f64).collect();
        let ys: Vec<f64> = pairs.iter().map(|p| p.1 as f64).collect();
        let base = spearman(&xs, &ys).unwrap();
        let tx: Vec<f64> = xs.iter().map(|x| (x / 10.0).exp()).collect();
        let ty: Vec<f64> = ys.iter().map(|y| 3.0 * y.powi(3) - 7.0).collect();
        let moved = spearman(&tx, &ty).unwrap();
        prop_assert!(common::close_opt(base, moved));
        if let Some(r) = base {
            prop_assert!((-1.0..=1.0).contains(&r));
        }
    }

    #[test]
    fn reversed_growth_has_complementary_vibrancy(sizes in prop::collection::vec(1usize..30, 2..25)) {
        let forward = jrc(&arrivals(&sizes), 1).unwrap();
        let rev: Vec<usize> = sizes.iter().rev().copied().collect();
        let backward = jrc(&arrivals(&rev), 1).unwrap();
        let sum = vibrancy(&forward) + vibrancy(&backward);
        prop_assert!((sum - 1.0).abs() <= 2.0 / forward.t_max as f64, "sum {}", sum);
    }

    #[test]
    fn polyfit_residuals_are_orthogonal_to_the_basis(ys in prop::collection::vec(-10.0f64..10.0, 8..30), degree in 0usize..4) {
        let xs: Vec<f64> = (0..ys.len()).map(|i| i as f64 / ys.len() as f64).collect();
        let fit = polyfit(&xs, &ys, degree).unwrap();
        let residuals: Vec<f64> = xs.iter().zip(&ys).map(|(&x, &y)| y - fit.predict(x)).collect();
        for j in 0..=degree {
            let dot: f64 = xs.iter().zip(&residuals).map(|(x, r)| x.powi(j as i32) * r).sum();
            prop_assert!(dot.abs() < 1e-8, "degree {} column {} dot {}", degree, j, dot);
        }
    }

    #[test]
    fn r_squared_never_drops_with_degree(ys in prop::collection::vec(-10.0f64..10.0, 8..30)) {
        let xs: Vec<f64> = (0..ys.len()).map(|i| i as f64).collect();
        let scores: Vec<Option<f64>> = (0..5).map(|d| polyfit(&xs, &ys, d).unwrap().r_squared).collect();
        for w in scores.windows(2) {
            if let (Some(a), Some(b)) = (w[0], w[1]) {
                prop_assert!(b >= a - 1e-9);
            }
        }
    }

    #[test]
    fn exp_decay_is_scale_equivariant(a in 0.01f64..5.0, b in 0.5f64..20.0, c in 0.1f64..100.0) {
        let xs: Vec<f64> = (0..25).map(f64::from).collect();
        let ys: Vec<f64> = xs.iter().map(|x| a * (-x / b).exp() * (1.0 + 0.05 * (x * 1.7).sin())).collect();
        let scaled: Vec<f64> = ys.iter().map(|y| c * y).collect();
        let f1 = fit_exp_decay(&xs, &ys).unwrap();
        let f2 = fit_exp_decay(&xs, &scaled).unwrap();
        prop_assert!((f2.coefficients[0] / (c * f1.coefficients[0]) - 1.0).abs() < 1e-6);
        prop_assert!((f2.coefficients[1] / f1.coefficients[1] - 1.0).abs() < 1e-6);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tpa_output_is_simple_and_complete(sizes in prop::collection::vec(1usize..40, 1..6), m in 1usize..4, seed in any::<u64>()) {
        let schedule = GrowthSchedule::new(sizes.clone()).unwrap();
        let params = TpaParams::new(m, schedule, TimeDiffFn::exp2(), seed);
        let out = tpa_generate(&params).unwrap();
        let g = &out.graph;
        prop_assert_eq!(g.vertex_count(), sizes.iter().sum::<usize>());
        prop_assert_eq!(g.edge_count() + out.skipped_edges, m * g.vertex_count());
        prop_assert!(g.edges().iter().all(|e| !e.is_loop()));
        let mut keys: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.source.min(e.target), e.source.max(e.target))).collect();
        keys.sort_unstable();
        keys.dedup();
        prop_assert_eq!(keys.len(), g.edge_count());
        prop_assert_eq!(&tpa_generate(&params).unwrap().graph, g);
    }

    #[test]
    fn time_difference_probabilities(seed in any::<u64>()) {
        let g = graph(seed, 12);
        if g.vertex_count() >= 2 {
            for b in join_time_diff_prob(&g, 1).unwrap() {
                prop_assert!((0.0..=1.0).contains(&b.probability) && b.pairs > 0);
            }
        }
    }
}

#[test]
fn time_difference_decays_over_many_bins() {
    let schedule = GrowthSchedule::new(vec![60; 30]).unwrap();
    let f = TimeDiffFn::geometric(0.8, 0.5).unwrap();
    let g = tpa_generate(&TpaParams::new(3, schedule, f, 5)).unwrap().graph;
    let bins = join_time_diff_prob(&g, 1).unwrap();
    assert!(bins.len() >= 30);
    let xs: Vec<f64> = bins.iter().map(|b| b.lower as f64).collect();
    let ps: Vec<f64> = bins.iter().map(|b| b.probability).collect();
    assert!(spearman(&xs, &ps).unwrap().unwrap() < 0.0);
}

#[test]
fn preferential_attachment_within_one_group() {
    let schedule = GrowthSchedule::new(vec![2000]).unwrap();
    let g = tpa_generate(&TpaParams::new(3, schedule, TimeDiffFn::exp2(), 2)).unwrap().graph;
    let degrees = g.snapshot_at(g.t_max()).degrees();
    let mut selected = vec![0.0; g.vertex_count()];
    for e in g.edges() {
        selected[e.target] += 1.0;
    }
    let d: Vec<f64> = degrees.iter().map(|&x| x as f64).collect();
    let picks: Vec<f64> = g.join_order().iter().map(|&v| selected[v]).collect();
    assert!(spearman(&d, &picks).unwrap().unwrap() > 0.0);
}
