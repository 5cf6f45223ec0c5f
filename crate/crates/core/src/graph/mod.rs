//! Random geometric graphs `G(n, r)`.

mod grid;
mod union_find;

use serde::{Deserialize, Serialize};

pub use grid::GridIndex;
pub use union_find::UnionFind;

use crate::error::{Error, Result};
use crate::geometry::{self, Metric, Point, Segment, TORUS_MAX_SEGMENT};
use crate::rng;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GraphConfig {
    pub n: usize,
    pub r: f64,
    pub metric: Metric,
    /// Seed of the point stream; 0 for graphs built from explicit points.
    pub seed: u64,
}

impl GraphConfig {
    pub fn new(n: usize, r: f64, metric: Metric, seed: u64) -> Self {
        GraphConfig { n, r, metric, seed }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidConfig("n must be at least 1".into()));
        }
        validate_radius(self.r, self.metric)
    }
}

pub(crate) fn validate_radius(r: f64, metric: Metric) -> Result<()> {
    if !r.is_finite() || r < 0.0 {
        return Err(Error::InvalidConfig(format!("radius must be finite and >= 0, got {r}")));
    }
    if metric == Metric::Torus && r >= TORUS_MAX_SEGMENT {
        return Err(Error::TorusRadiusTooLarge { length: r });
    }
    Ok(())
}

/// An immutable point set with its unit disk graph at radius `r`.
#[derive(Debug, Clone)]
pub struct RggGraph {
    config: GraphConfig,
    points: Vec<Point>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    grid: GridIndex,
}

/// Draws `config.n` uniform points from `config.seed` and connects every pair
/// at distance at most `config.r`.
pub fn generate(config: &GraphConfig) -> Result<RggGraph> {
    config.validate()?;
    let points = rng::uniform_points(config.n, config.seed);
    Ok(RggGraph::build(*config, points))
}

pub fn from_points(points: Vec<Point>, r: f64, metric: Metric) -> Result<RggGraph> {
    validate_radius(r, metric)?;
    let config = GraphConfig::new(points.len(), r, metric, 0);
    Ok(RggGraph::build(config, points))
}

impl RggGraph {
    fn build(config: GraphConfig, points: Vec<Point>) -> Self {
        let grid = GridIndex::new(&points, config.r, config.metric);
        let mut edges = Vec::new();
        for i in 0..points.len() {
            for j in grid.vertices_near(grid.cell_of(i), 1) {
                if j > i && geometry::distance(&points[i], &points[j], config.metric) <= config.r {
                    edges.push((i, j));
                }
            }
        }
        edges.sort_unstable();
        let mut adjacency = vec![Vec::new(); points.len()];
        for &(i, j) in &edges {
            adjacency[i].push(j);
            adjacency[j].push(i);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        RggGraph {
            config,
            points,
            edges,
            adjacency,
            grid,
        }
    }

    /// The same points connected at a different radius.
    pub fn with_radius(&self, r: f64) -> Result<RggGraph> {
        validate_radius(r, self.config.metric)?;
        let config = GraphConfig { r, ..self.config };
        Ok(RggGraph::build(config, self.points.clone()))
    }

    pub fn config(&self) -> &GraphConfig {
        &self.config
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn r(&self) -> f64 {
        self.config.r
    }

    pub fn metric(&self) -> Metric {
        self.config.metric
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, v: usize) -> &Point {
        &self.points[v]
    }

    /// Edges as `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn grid(&self) -> &GridIndex {
        &self.grid
    }

    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn distance(&self, u: usize, v: usize) -> f64 {
        geometry::distance(&self.points[u], &self.points[v], self.config.metric)
    }

    /// The drawn (geodesic) segment between two vertices.
    pub fn segment(&self, u: usize, v: usize) -> Segment {
        Segment::new(self.points[u], self.points[v], self.config.metric)
    }

    /// Checks that the edge list and adjacency lists describe the same relation.
    pub fn is_consistent(&self) -> bool {
        let degree_sum: usize = self.adjacency.iter().map(Vec::len).sum();
        degree_sum == 2 * self.edges.len()
            && self
                .edges
                .iter()
                .all(|&(i, j)| i < j && self.is_edge(i, j) && self.is_edge(j, i))
            && self.adjacency.iter().all(|l| l.windows(2).all(|w| w[0] < w[1]))
    }
}

/// Connected components, each sorted, ordered by smallest member.
pub fn components(g: &RggGraph) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(g.n());
    for &(i, j) in g.edges() {
        uf.union(i, j);
    }
    uf.sets()
}

pub fn max_component_size(g: &RggGraph) -> usize {
    let mut uf = UnionFind::new(g.n());
    for &(i, j) in g.edges() {
        uf.union(i, j);
    }
    (0..g.n()).map(|v| uf.size_of(v)).max().unwrap_or(0)
}
