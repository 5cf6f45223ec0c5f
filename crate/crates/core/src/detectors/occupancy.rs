use std::f64::consts::SQRT_2;

use crate::graph::RggGraph;

const MAX_SUBSQUARES_PER_SIDE: usize = 1 << 20;

/// Fraction of occupied sub-squares when the unit square is cut into squares
/// of diagonal at most `r` and each of those into a 3x3 block.
pub fn nine_subsquare_occupancy(g: &RggGraph) -> f64 {
    if g.n() == 0 || g.r() <= 0.0 {
        return 0.0;
    }
    let squares = (SQRT_2 / g.r() * (1.0 + 1e-9)).ceil().max(1.0);
    let m = (3.0 * squares).min(MAX_SUBSQUARES_PER_SIDE as f64) as usize;
    let cell = |v: f64| ((v * m as f64) as usize).min(m - 1);
    let mut keys: Vec<usize> = g.points().iter().map(|p| cell(p.x()) * m + cell(p.y())).collect();
    keys.sort_unstable();
    keys.dedup();
    keys.len() as f64 / (m * m) as f64
}
