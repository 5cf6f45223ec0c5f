use crate::geometry::{geodesic_offset, interior_intersected, Metric};
use crate::graph::RggGraph;

use super::crossings::within;

/// Distance from vertex `c` to the drawn segment of edge `(u, v)`.
fn distance_to_edge(g: &RggGraph, (u, v): (usize, usize), c: usize) -> f64 {
    let metric = g.metric();
    let (pu, pv, pc) = (g.point(u), g.point(v), g.point(c));
    let ov = geodesic_offset(pu, pv, metric);
    let oc = geodesic_offset(pu, pc, metric);
    let (bx, by) = (pv.x() - pu.x() + f64::from(ov.0), pv.y() - pu.y() + f64::from(ov.1));
    let (cx, cy) = (pc.x() - pu.x() + f64::from(oc.0), pc.y() - pu.y() + f64::from(oc.1));
    let len_sq = bx * bx + by * by;
    let t = if len_sq > 0.0 {
        ((cx * bx + cy * by) / len_sq).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let (dx, dy) = (cx - t * bx, cy - t * by);
    (dx * dx + dy * dy).sqrt()
}

/// Whether some other edge touches the open interior of `e`.
///
/// A contact point lies within `|f|/2 <= r/2` of one endpoint of `f`, so only
/// edges with an endpoint within `r/2` of the segment `e` are tested.
fn any_interior_contact(g: &RggGraph, e: (usize, usize)) -> bool {
    let grid = g.grid();
    let reach = 0.5 * g.r();
    let metric: Metric = g.metric();
    let se = g.segment(e.0, e.1);
    for c in grid.vertices_near(grid.cell_of(e.0), 2) {
        if !within(distance_to_edge(g, e, c), reach) {
            continue;
        }
        for &d in g.neighbors(c) {
            let f = (c.min(d), c.max(d));
            if f == e {
                continue;
            }
            let sf = g.segment(f.0, f.1);
            if interior_intersected(&se, &sf, metric).expect("graph radius is validated against the torus lift") {
                return true;
            }
        }
    }
    false
}

/// Whether no other edge touches the open interior of edge `e`.
pub fn edge_is_free(g: &RggGraph, e: (usize, usize)) -> bool {
    !any_interior_contact(g, e)
}

/// Free edges in edge-list order.
pub fn free_edges(g: &RggGraph) -> Vec<(usize, usize)> {
    g.edges().iter().copied().filter(|&e| edge_is_free(g, e)).collect()
}

pub fn has_free_edge(g: &RggGraph) -> bool {
    g.edges().iter().any(|&e| edge_is_free(g, e))
}

/// True for an edgeless graph.
pub fn all_edges_free(g: &RggGraph) -> bool {
    g.edges().iter().all(|&e| edge_is_free(g, e))
}

/// `sqrt(8 ln n / n)`.
pub fn long_edge_cutoff(n: usize) -> f64 {
    let n = n as f64;
    (8.0 * n.ln() / n).sqrt()
}

/// Edges of length at least the long-edge cutoff for the configured `n`.
pub fn long_edges(g: &RggGraph) -> Vec<(usize, usize)> {
    let cutoff = long_edge_cutoff(g.config().n);
    g.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| g.distance(u, v) >= cutoff)
        .collect()
}
