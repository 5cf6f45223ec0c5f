use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::f64::consts::SQRT_2;

use serde::{Deserialize, Serialize};

use super::{Certificate, TriStateDecision};
use crate::error::{Error, Result};
use crate::geometry::{Metric, Point};
use crate::graph::{components, RggGraph};

/// Components up to this size are solved exactly.
pub const MIS_COMPONENT_CAP: usize = 50;

const MAX_COVER_CELLS_PER_SIDE: usize = 1 << 20;

/// Non-empty cells of a grid whose cells have diagonal at most `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCover {
    pub cells_per_side: usize,
    pub occupied: usize,
}

pub fn is_independent(g: &RggGraph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !g.is_edge(u, v)))
}

/// Cells of side `1/m <= r/sqrt(2)` each induce a clique, so any independent
/// set has at most one vertex per non-empty cell. `None` when `r` is too small
/// for such a grid.
pub fn clique_cover(g: &RggGraph) -> Option<CliqueCover> {
    clique_cover_of_points(g.points(), g.r())
}

/// [`clique_cover`] computed from the points alone.
pub fn clique_cover_of_points(points: &[Point], r: f64) -> Option<CliqueCover> {
    if r <= 0.0 {
        return None;
    }
    let m = (SQRT_2 / r * (1.0 + 1e-9)).ceil();
    if m > MAX_COVER_CELLS_PER_SIDE as f64 {
        return None;
    }
    let m = (m as usize).max(1);
    let cell = |v: f64| ((v * m as f64) as usize).min(m - 1);
    let mut keys: Vec<usize> = points.iter().map(|p| cell(p.x()) * m + cell(p.y())).collect();
    keys.sort_unstable();
    keys.dedup();
    Some(CliqueCover {
        cells_per_side: m,
        occupied: keys.len(),
    })
}

/// Splits each axis into `a = ceil(sqrt(k))` selected intervals separated by
/// gaps of width `r` and takes one vertex from each of the first `k` occupied
/// selected cells. Vertices in different selected cells are more than `r`
/// apart.
pub fn grid_witness_is(g: &RggGraph, k: usize) -> Result<Option<Vec<usize>>> {
    if k == 0 {
        return Err(Error::InvalidK {
            k,
            reason: "k must be at least 1".into(),
        });
    }
    let r = g.r();
    let max = 1.0 / (2.0 * (k as f64).sqrt());
    if r > max {
        return Err(Error::RadiusTooLargeForGrid { r, max });
    }
    if k == 1 {
        return Ok((g.n() > 0).then(|| vec![0]));
    }
    let a = (k as f64).sqrt().ceil() as usize;
    let width = match g.metric() {
        Metric::Square => (1.0 - (a - 1) as f64 * r) / a as f64,
        Metric::Torus => 1.0 / a as f64 - r,
    };
    let pitch = width + r;
    let slot = |v: f64| {
        let i = (v / pitch).floor() as usize;
        (i < a && v < i as f64 * pitch + width).then_some(i)
    };
    let mut chosen: Vec<Option<usize>> = vec![None; a * a];
    for (v, p) in g.points().iter().enumerate() {
        if let (Some(i), Some(j)) = (slot(p.x()), slot(p.y())) {
            chosen[i * a + j].get_or_insert(v);
        }
    }
    let witness: Vec<usize> = chosen.into_iter().flatten().take(k).collect();
    if witness.len() < k || !is_independent(g, &witness) {
        return Ok(None);
    }
    Ok(Some(witness))
}

/// Greedy minimum-degree independent set.
pub fn greedy_independent_set(g: &RggGraph) -> Vec<usize> {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = (0..n).map(|v| Reverse((degree[v], v))).collect();
    let mut set = Vec::new();
    while let Some(Reverse((d, v))) = heap.pop() {
        if !alive[v] || d != degree[v] {
            continue;
        }
        set.push(v);
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                alive[w] = false;
                for &x in g.neighbors(w) {
                    if alive[x] {
                        degree[x] -= 1;
                        heap.push(Reverse((degree[x], x)));
                    }
                }
            }
        }
    }
    set.sort_unstable();
    set
}

fn clique_cover_bound(adj: &[u64], cand: u64) -> u32 {
    let mut rest = cand;
    let mut count = 0;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= !(1 << v);
        let mut grow = rest & adj[v];
        while grow != 0 {
            let w = grow.trailing_zeros() as usize;
            rest &= !(1 << w);
            grow &= adj[w] & !(1 << w);
        }
        count += 1;
    }
    count
}

fn mis_search(adj: &[u64], mut cand: u64, mut chosen: u64, best: &mut u64) {
    // A vertex with at most one remaining neighbor belongs to some maximum set.
    loop {
        let mut changed = false;
        let mut it = cand;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            if cand & (1 << v) != 0 && (adj[v] & cand).count_ones() <= 1 {
                chosen |= 1 << v;
                cand &= !(adj[v] | 1 << v);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if cand == 0 {
        if chosen.count_ones() > best.count_ones() {
            *best = chosen;
        }
        return;
    }
    if chosen.count_ones() + clique_cover_bound(adj, cand) <= best.count_ones() {
        return;
    }
    let mut v = 0;
    let mut v_deg = 0;
    let mut it = cand;
    while it != 0 {
        let w = it.trailing_zeros() as usize;
        it &= it - 1;
        let d = (adj[w] & cand).count_ones();
        if d > v_deg {
            v = w;
            v_deg = d;
        }
    }
    mis_search(adj, cand & !(adj[v] | 1 << v), chosen | 1 << v, best);
    mis_search(adj, cand & !(1 << v), chosen, best);
}

/// Exact maximum independent set of one component (at most 64 vertices).
fn component_mis(g: &RggGraph, members: &[usize]) -> Vec<usize> {
    debug_assert!(members.len() <= 64);
    let local = |v: usize| members.binary_search(&v).ok();
    let adj: Vec<u64> = members
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter_map(|&w| local(w))
                .fold(0u64, |m, i| m | 1 << i)
        })
        .collect();
    let all = if members.len() == 64 {
        u64::MAX
    } else {
        (1u64 << members.len()) - 1
    };
    let mut best = 0;
    mis_search(&adj, all, 0, &mut best);
    (0..members.len())
        .filter(|&i| best & (1 << i) != 0)
        .map(|i| members[i])
        .collect()
}

/// A maximum independent set, or `None` if some component exceeds
/// [`MIS_COMPONENT_CAP`] vertices.
pub fn maximum_independent_set(g: &RggGraph) -> Option<Vec<usize>> {
    let comps = components(g);
    if comps.iter().any(|c| c.len() > MIS_COMPONENT_CAP) {
        return None;
    }
    let mut set: Vec<usize> = comps.iter().flat_map(|c| component_mis(g, c)).collect();
    set.sort_unstable();
    Some(set)
}

/// Decides whether `g` has an independent set of size `k`.
pub fn independent_k(g: &RggGraph, k: usize) -> Result<TriStateDecision> {
    if k == 0 || k > g.n() {
        return Err(Error::InvalidK {
            k,
            reason: format!("k must be in 1..={}", g.n()),
        });
    }
    let yes = |mut witness: Vec<usize>| {
        witness.truncate(k);
        TriStateDecision::Yes { witness }
    };
    if let Some(mis) = maximum_independent_set(g) {
        return Ok(if mis.len() >= k {
            yes(mis)
        } else {
            TriStateDecision::No {
                certificate: Certificate::ExactMaximum { size: mis.len(), k },
            }
        });
    }
    if g.r() <= 1.0 / (2.0 * (k as f64).sqrt()) {
        if let Some(w) = grid_witness_is(g, k)? {
            return Ok(yes(w));
        }
    }
    let cover = clique_cover(g);
    if let Some(c) = cover {
        if c.occupied < k {
            return Ok(TriStateDecision::No {
                certificate: Certificate::CliqueCover {
                    cells_per_side: c.cells_per_side,
                    occupied: c.occupied,
                    k,
                },
            });
        }
    }
    let greedy = greedy_independent_set(g);
    if greedy.len() >= k {
        return Ok(yes(greedy));
    }
    let upper = cover.map_or(g.n(), |c| c.occupied.min(g.n()));
    Ok(TriStateDecision::Unknown {
        lower: greedy.len(),
        upper,
    })
}
