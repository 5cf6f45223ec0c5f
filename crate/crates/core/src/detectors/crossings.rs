use serde::{Deserialize, Serialize};

use crate::geometry::segments_cross;
use crate::graph::RggGraph;

/// Two edges whose open segments cross, `e1 < e2` lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CrossingPair {
    pub e1: (usize, usize),
    pub e2: (usize, usize),
}

/// Triangle `a c d` plus an edge `a b` crossing `c d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Anchor {
    pub crown: usize,
    pub triangle: (usize, usize),
    pub apex: usize,
}

/// Slack for float distance prefilters; exact predicates decide afterwards.
pub(crate) fn within(d: f64, limit: f64) -> bool {
    d <= limit * (1.0 + 1e-9) + 1e-12
}

pub(crate) fn edges_cross(g: &RggGraph, e: (usize, usize), f: (usize, usize)) -> bool {
    segments_cross(&g.segment(e.0, e.1), &g.segment(f.0, f.1), g.metric())
        .expect("graph radius is validated against the torus lift")
}

/// Properly crossing edge pairs. Candidates for an edge `(u, v)` are edges with
/// an endpoint in the 5x5 cell block around `u`, since all four endpoints of a
/// crossing are within `2r` of each other.
pub fn crossing_pairs(g: &RggGraph, stop_at_first: bool) -> Vec<CrossingPair> {
    let mut out = Vec::new();
    let grid = g.grid();
    let reach = 2.0 * g.r();
    for &e in g.edges() {
        let (u, v) = e;
        for c in grid.vertices_near(grid.cell_of(u), 2) {
            if c == u || c == v || !within(g.distance(u, c), reach) {
                continue;
            }
            for &d in g.neighbors(c) {
                let f = (c, d);
                if d <= c || f <= e || d == u || d == v || !within(g.distance(u, d), reach) {
                    continue;
                }
                if edges_cross(g, e, f) {
                    out.push(CrossingPair { e1: e, e2: f });
                    if stop_at_first {
                        return out;
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn is_plane(g: &RggGraph) -> bool {
    crossing_pairs(g, true).is_empty()
}

pub fn count_crossings(g: &RggGraph) -> usize {
    crossing_pairs(g, false).len()
}

/// Some endpoint of one edge is adjacent to both endpoints of the other.
pub fn adjacent_sides_are_edges(g: &RggGraph, pair: &CrossingPair) -> bool {
    let (a, b) = pair.e1;
    let (c, d) = pair.e2;
    [a, b].iter().any(|&x| g.is_edge(x, c) && g.is_edge(x, d))
        || [c, d].iter().any(|&x| g.is_edge(x, a) && g.is_edge(x, b))
}

/// All four endpoints pairwise within `2r`, and one of them within `r` of
/// the other three.
pub fn two_hop_holds(g: &RggGraph, pair: &CrossingPair) -> bool {
    let pts = [pair.e1.0, pair.e1.1, pair.e2.0, pair.e2.1];
    let close = |i: usize, j: usize, limit: f64| g.distance(pts[i], pts[j]) <= limit * (1.0 + 1e-12);
    let pairwise = (0..4).all(|i| (i + 1..4).all(|j| close(i, j, 2.0 * g.r())));
    let hub = (0..4).any(|i| (0..4).all(|j| i == j || close(i, j, g.r())));
    pairwise && hub
}

/// Searches triangles `a c d` for a further neighbor `b` of `a` with `a b`
/// crossing `c d`.
pub fn find_anchor(g: &RggGraph) -> Option<Anchor> {
    for a in 0..g.n() {
        let nbrs = g.neighbors(a);
        for (i, &c) in nbrs.iter().enumerate() {
            for &d in &nbrs[i + 1..] {
                if !g.is_edge(c, d) {
                    continue;
                }
                for &b in nbrs {
                    if b != c && b != d && edges_cross(g, (a, b), (c, d)) {
                        return Some(Anchor {
                            crown: a,
                            triangle: (c, d),
                            apex: b,
                        });
                    }
                }
            }
        }
    }
    None
}
