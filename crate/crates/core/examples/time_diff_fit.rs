//! Recovers the time-difference decay of a generated network: connection
//! probability per join-time difference, then an exponential fit.

use temponet::evolution::{join_time_diff_prob, spearman};
use temponet::fitting::fit_exp_decay;
use temponet::generators::{make_schedule, tpa_generate, ScheduleKind, TimeDiffFn, TpaParams};

fn main() -> temponet::Result<()> {
    let schedule = make_schedule(ScheduleKind::Linear { step: 400, iterations: 10 })?;
    let g = tpa_generate(&TpaParams::new(3, schedule, TimeDiffFn::geometric(0.8, 0.2)?, 3))?.graph;
    let bins = join_time_diff_prob(&g, 1)?;
    for b in &bins {
        println!("d={:<2} connected={:<5} pairs={:<8} p={:.3e}", b.lower, b.connected, b.pairs, b.probability);
    }

    let xs: Vec<f64> = bins.iter().map(|b| b.lower as f64).collect();
    let ps: Vec<f64> = bins.iter().map(|b| b.probability).collect();
    println!("spearman(d, p) = {:.3}", spearman(&xs, &ps)?.unwrap_or(f64::NAN));

    // Same-cohort pairs can be linked from either side, so d = 0 is left out.
    let (fx, fy): (Vec<f64>, Vec<f64>) =
        bins.iter().filter(|b| b.lower >= 1 && b.probability > 0.0).map(|b| (b.lower as f64, b.probability)).unzip();
    let fit = fit_exp_decay(&fx, &fy)?;
    let (a, b) = (fit.coefficients[0], fit.coefficients[1]);
    println!("fit p(d) = {a:.4}·exp(-d/{b:.3}), ratio per step {:.3} (generator used 0.2)", (-1.0 / b).exp());
    Ok(())
}
