//! Star emergence across a collection of fast- and slow-growing networks.
//!
//! Builds ten polynomial-growth and ten sigmoidal-growth networks, splits
//! the collection at vibrancy 0.5 and aggregates the 5-star vectors of each
//! class up to the 5-maximal time.

use temponet::evolution::{aggregate_horizons, stars_aggregate, NetworkCollection};
use temponet::generators::{make_schedule, tpa_generate, ScheduleKind, TimeDiffFn, TpaParams};

fn main() -> temponet::Result<()> {
    let mut networks = Vec::new();
    for seed in 0..10 {
        for kind in [
            ScheduleKind::Polynomial { coef: 5, max_x_exclusive: 8 },
            ScheduleKind::Sigmoidal { coef: 5, max_x_exclusive: 8 },
        ] {
            let params = TpaParams::new(3, make_schedule(kind)?, TimeDiffFn::exp2(), seed);
            networks.push(tpa_generate(&params)?.graph);
        }
    }
    let (fast, slow) = NetworkCollection::new(networks).split_by_vibrancy(1)?;
    for (name, c) in [("fast", &fast), ("slow", &slow)] {
        let hs = aggregate_horizons(c, 5, 1)?;
        let agg = stars_aggregate(c, 5, 5, &hs)?;
        println!("{name}: {} networks", c.len());
        for (i, t) in hs.iter().enumerate() {
            println!("  t={t} total={} avg={:.2} norm_avg={:.3}", agg.total[i], agg.avg[i], agg.norm_avg[i]);
        }
    }
    Ok(())
}
