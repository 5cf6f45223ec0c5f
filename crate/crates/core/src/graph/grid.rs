use crate::geometry::{Metric, Point};

/// Upper bound on cells per side; keeps cell keys small for tiny radii.
const MAX_CELLS_PER_SIDE: usize = 1 << 20;

/// Uniform bucket grid over the unit square.
///
/// Cells have side `1/m` with `m = floor(1/r)`, so the side is never below
/// `r` and the grid tiles the square (and the torus) exactly. Vertices within
/// distance `r` of each other are in the same or adjacent cells.
#[derive(Debug, Clone)]
pub struct GridIndex {
    cells_per_side: usize,
    metric: Metric,
    /// Vertex indices sorted by cell key, then index.
    order: Vec<usize>,
    /// Cell key of each entry in `order`.
    keys: Vec<u64>,
    cell_of: Vec<(usize, usize)>,
}

impl GridIndex {
    pub fn new(points: &[Point], r: f64, metric: Metric) -> Self {
        let cells_per_side = if r > 0.0 {
            ((1.0 / r).floor() as usize).clamp(1, MAX_CELLS_PER_SIDE)
        } else {
            MAX_CELLS_PER_SIDE
        };
        let m = cells_per_side as f64;
        let coord = |v: f64| ((v * m) as usize).min(cells_per_side - 1);
        let cell_of: Vec<(usize, usize)> = points.iter().map(|p| (coord(p.x()), coord(p.y()))).collect();
        let mut order: Vec<usize> = (0..points.len()).collect();
        let key = |c: (usize, usize)| (c.0 * cells_per_side + c.1) as u64;
        order.sort_by_key(|&i| (key(cell_of[i]), i));
        let keys = order.iter().map(|&i| key(cell_of[i])).collect();
        GridIndex {
            cells_per_side,
            metric,
            order,
            keys,
            cell_of,
        }
    }

    pub fn cells_per_side(&self) -> usize {
        self.cells_per_side
    }

    pub fn cell_size(&self) -> f64 {
        1.0 / self.cells_per_side as f64
    }

    pub fn cell_of(&self, vertex: usize) -> (usize, usize) {
        self.cell_of[vertex]
    }

    /// Vertices in one cell, in increasing index order.
    pub fn cell(&self, cell: (usize, usize)) -> &[usize] {
        let key = (cell.0 * self.cells_per_side + cell.1) as u64;
        let lo = self.keys.partition_point(|&k| k < key);
        let hi = self.keys.partition_point(|&k| k <= key);
        &self.order[lo..hi]
    }

    /// Number of distinct occupied cells.
    pub fn occupied_cells(&self) -> usize {
        let mut count = 0;
        for (i, k) in self.keys.iter().enumerate() {
            if i == 0 || self.keys[i - 1] != *k {
                count += 1;
            }
        }
        count
    }

    /// Cells within `rings` steps of `center` in both axes: clipped on the
    /// square, wrapped on the torus. Each cell appears once.
    pub fn neighborhood(&self, center: (usize, usize), rings: usize) -> Vec<(usize, usize)> {
        let xs = self.axis_range(center.0, rings);
        let ys = self.axis_range(center.1, rings);
        let mut cells = Vec::with_capacity(xs.len() * ys.len());
        for &x in &xs {
            for &y in &ys {
                cells.push((x, y));
            }
        }
        cells
    }

    fn axis_range(&self, c: usize, rings: usize) -> Vec<usize> {
        let m = self.cells_per_side as i64;
        let rings = rings as i64;
        let c = c as i64;
        let mut out: Vec<usize> = Vec::with_capacity((2 * rings + 1) as usize);
        for d in -rings..=rings {
            let v = c + d;
            let v = match self.metric {
                Metric::Square if v < 0 || v >= m => continue,
                Metric::Square => v,
                Metric::Torus => v.rem_euclid(m),
            };
            let v = v as usize;
            if !out.contains(&v) {
                out.push(v);
            }
        }
        out
    }

    /// All vertices in the `rings`-neighborhood of `center`.
    pub fn vertices_near(&self, center: (usize, usize), rings: usize) -> impl Iterator<Item = usize> + '_ {
        self.neighborhood(center, rings)
            .into_iter()
            .flat_map(move |c| self.cell(c).iter().copied())
    }
}
