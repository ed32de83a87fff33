//! Features of a growing network at every iteration, including the number
//! of newly emerging 1- and 5-stars.

use temponet::generators::{make_schedule, tpa_generate, ScheduleKind, TimeDiffFn, TpaParams};
use temponet::graph::horizons;
use temponet::metrics::{k_stars_vector, FeatureVector};

fn main() -> temponet::Result<()> {
    let schedule = make_schedule(ScheduleKind::Polynomial { coef: 5, max_x_exclusive: 8 })?;
    let g = tpa_generate(&TpaParams::new(3, schedule, TimeDiffFn::exp2(), 11))?.graph;

    let hs = horizons(g.t_max(), 1)?;
    let stars1 = k_stars_vector(&g, &hs, 1)?;
    let stars5 = k_stars_vector(&g, &hs, 5)?;
    println!("t   |V|   |E|    density      cc     sp  dmax  gamma  v1  v5");
    for (i, &t) in hs.iter().enumerate() {
        let f = FeatureVector::compute(&g.snapshot_at(t), 3);
        println!(
            "{t:<3} {:>4} {:>5} {:>10.5} {:>7.4} {:>6} {:>5} {:>6} {:>3} {:>3}",
            f.vertices,
            f.edges,
            f.density.unwrap_or(f64::NAN),
            f.avg_clustering,
            f.avg_shortest_path.map_or("-".into(), |x| format!("{x:.2}")),
            f.max_degree,
            f.gamma.map_or("-".into(), |x| format!("{x:.2}")),
            stars1.counts()[i],
            stars5.counts()[i],
        );
    }
    println!("stars numbers: k=1 {} k=5 {}", stars1.number(), stars5.number());
    Ok(())
}
