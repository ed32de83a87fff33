//! Final-snapshot features of TPA networks next to the classic random graph
//! models, averaged over ten seeds at 700 vertices.

use temponet::generators::{
    baseline_generate, make_schedule, tpa_generate, BaselineModel, ScheduleKind, TimeDiffFn, TpaParams,
};
use temponet::metrics::FeatureVector;
use temponet::TemporalGraph;

const SEEDS: u64 = 10;

fn mean_row(name: &str, graphs: &[TemporalGraph]) {
    let features: Vec<FeatureVector> =
        graphs.iter().map(|g| FeatureVector::compute(&g.snapshot_at(g.t_max()), 3)).collect();
    let mean = |f: &dyn Fn(&FeatureVector) -> Option<f64>| {
        let xs: Vec<f64> = features.iter().filter_map(f).collect();
        xs.iter().sum::<f64>() / xs.len().max(1) as f64
    };
    println!(
        "{name:<14} {:>7.0} {:>8.4} {:>8.2} {:>6.1} {:>6.2}",
        mean(&|f| Some(f.edges as f64)),
        mean(&|f| Some(f.avg_clustering)),
        mean(&|f| f.avg_shortest_path),
        mean(&|f| Some(f.max_degree as f64)),
        mean(&|f| f.gamma),
    );
}

fn main() -> temponet::Result<()> {
    println!("{:<14} {:>7} {:>8} {:>8} {:>6} {:>6}", "model", "edges", "cc", "sp", "dmax", "gamma");
    let f = TimeDiffFn::geometric(0.8, 0.2)?;
    for (name, kind) in [
        ("tpa linear", ScheduleKind::Linear { step: 10, iterations: 70 }),
        ("tpa poly", ScheduleKind::Polynomial { coef: 5, max_x_exclusive: 8 }),
        ("tpa sigmoid", ScheduleKind::Sigmoidal { coef: 5, max_x_exclusive: 8 }),
    ] {
        let schedule = make_schedule(kind)?;
        let graphs = (0..SEEDS)
            .map(|seed| tpa_generate(&TpaParams::new(3, schedule.clone(), f.clone(), seed)).map(|o| o.graph))
            .collect::<temponet::Result<Vec<_>>>()?;
        mean_row(name, &graphs);
    }
    for model in [
        BaselineModel::Ba { m: 3 },
        BaselineModel::Ws { k: 6, p: 0.1 },
        BaselineModel::Nw { k: 6, p: 0.1 },
        BaselineModel::Hk { m: 3, p_triangle: 0.2 },
        BaselineModel::Ff { p_forward: 0.65 },
    ] {
        let graphs =
            (0..SEEDS).map(|seed| baseline_generate(model, 700, seed)).collect::<temponet::Result<Vec<_>>>()?;
        mean_row(model.name(), &graphs);
    }
    Ok(())
}
