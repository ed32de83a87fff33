//! Join-rate curves of linear, polynomial and sigmoidal growth, their
//! vibrancy, and a quartic fit of each curve.

use temponet::evolution::{classify_vibrancy, jrc, vibrancy, DEFAULT_VIBRANCY_THRESHOLD};
use temponet::fitting::polyfit;
use temponet::generators::{make_schedule, tpa_generate, ScheduleKind, TimeDiffFn, TpaParams};

fn main() -> temponet::Result<()> {
    for (name, kind) in [
        ("linear", ScheduleKind::Linear { step: 10, iterations: 70 }),
        ("polynomial", ScheduleKind::Polynomial { coef: 5, max_x_exclusive: 16 }),
        ("sigmoidal", ScheduleKind::Sigmoidal { coef: 5, max_x_exclusive: 16 }),
    ] {
        let schedule = make_schedule(kind)?;
        let g = tpa_generate(&TpaParams::new(3, schedule, TimeDiffFn::exp2(), 1))?.graph;
        let curve = jrc(&g, 1)?;
        let v = vibrancy(&curve);
        let fit = polyfit(&curve.times(), &curve.values(), 4)?;
        println!(
            "{name:<10} |V|={:<5} t_max={:<3} vibrancy={v:.3} ({:?}) quartic R2={:.5}",
            g.vertex_count(),
            curve.t_max,
            classify_vibrancy(v, DEFAULT_VIBRANCY_THRESHOLD),
            fit.r_squared.unwrap_or(f64::NAN),
        );
    }
    Ok(())
}
