//! Three iterations of temporal preferential attachment with groups of 100,
//! 200 and 400 vertices, three edges per newcomer and `f(t) = 2^(-1-t)`.
//!
//! Prints the totals and how the edges of each iteration split over the
//! groups they landed in.

use temponet::generators::{group_probabilities, tpa_generate, GrowthSchedule, TimeDiffFn, TpaParams};

fn main() -> temponet::Result<()> {
    let schedule = GrowthSchedule::new(vec![100, 200, 400])?;
    let params = TpaParams::new(3, schedule, TimeDiffFn::exp2(), 7);
    let out = tpa_generate(&params)?;
    let g = &out.graph;
    println!("vertices={} edges={} skipped={}", g.vertex_count(), g.edge_count(), out.skipped_edges);

    for iteration in 0..3 {
        let joined = iteration as u64 + 1;
        let mut split = vec![0usize; iteration + 1];
        for e in g.edges().iter().filter(|e| e.created == joined) {
            let other = if g.join_time(e.source) == Some(joined) && g.join_time(e.target) != Some(joined) {
                e.target
            } else if g.join_time(e.target) == Some(joined) && g.join_time(e.source) != Some(joined) {
                e.source
            } else {
                split[iteration] += 1;
                continue;
            };
            split[g.join_time(other).unwrap() as usize - 1] += 1;
        }
        let expected: Vec<String> = group_probabilities(&params.f, iteration)?
            .iter()
            .map(|p| format!("{:.0}", p * 3.0 * params.schedule.sizes()[iteration] as f64))
            .collect();
        println!("iteration {}: edges per target group {:?}, expected [{}]", iteration + 1, split, expected.join(", "));
    }

    let first = g.snapshot_at(1);
    println!("after iteration 1: {} vertices, {} edges", first.vertex_count(), first.edge_count());
    Ok(())
}
