mod support;

use std::collections::HashSet;

use proptest::prelude::*;

use rgg_core::error::Error;
use rgg_core::geometry::{distance, Metric, Point};
use rgg_core::graph::{self, from_points, generate, GraphConfig};
use rgg_core::rng::{trial_seed, uniform_points};

use support::*;

#[test]
fn config_validation() {
    assert!(matches!(
        generate(&GraphConfig::new(0, 0.1, Metric::Square, 1)),
        Err(Error::InvalidConfig(_))
    ));
    assert!(matches!(
        generate(&GraphConfig::new(10, -0.1, Metric::Square, 1)),
        Err(Error::InvalidConfig(_))
    ));
    assert!(matches!(
        generate(&GraphConfig::new(10, 0.3, Metric::Torus, 1)),
        Err(Error::TorusRadiusTooLarge { .. })
    ));
    assert!(generate(&GraphConfig::new(10, 0.3, Metric::Square, 1)).is_ok());
}

#[test]
fn boundary_distance_is_an_edge() {
    let a = Point::new(0.25, 0.5).unwrap();
    let b = Point::new(0.75, 0.5).unwrap();
    let g = from_points(vec![a, b], 0.5, Metric::Square).unwrap();
    assert_eq!(g.edges(), &[(0, 1)]);
    let h = from_points(vec![a, b], 0.5 - 1e-12, Metric::Square).unwrap();
    assert_eq!(h.edge_count(), 0);
}

#[test]
fn generation_is_deterministic() {
    let c = GraphConfig::new(500, 0.05, Metric::Torus, 42);
    let (g, h) = (generate(&c).unwrap(), generate(&c).unwrap());
    assert_eq!(g.points(), h.points());
    assert_eq!(g.edges(), h.edges());
    let other = generate(&GraphConfig { seed: 43, ..c }).unwrap();
    assert_ne!(g.points(), other.points());
}

#[test]
fn trial_seeds_are_distinct() {
    let seeds: HashSet<u64> = (0..100_000).map(|i| trial_seed(7, i)).collect();
    assert_eq!(seeds.len(), 100_000);
}

#[test]
fn edge_count_matches_binomial_mean() {
    let (n, r) = (500usize, 0.05f64);
    let pairs = (n * (n - 1) / 2) as f64;
    let q = std::f64::consts::PI * r * r;
    let (mean, sd) = (pairs * q, (pairs * q * (1.0 - q)).sqrt());
    for seed in 0..100u64 {
        let g = generate(&GraphConfig::new(n, r, Metric::Torus, seed)).unwrap();
        let z = (g.edge_count() as f64 - mean) / sd;
        assert!(z.abs() <= 4.0, "seed {seed}: {} edges, z = {z:.2}", g.edge_count());
    }
}

#[test]
fn edges_match_quadratic_oracle() {
    let t = edge_suite(1000, 0xED6E);
    assert!(t.clean(), "{t:?}");
}

#[test]
fn components_match_bfs_oracle() {
    let t = component_suite(1000, 0xC0C0);
    assert!(t.clean(), "{t:?}");
}

#[test]
fn uniform_points_are_uniform() {
    let pts = uniform_points(100_000, 3);
    let mut bins = [0usize; 10];
    for p in &pts {
        bins[(p.x() * 10.0) as usize] += 1;
    }
    for b in bins {
        assert!((b as f64 - 10_000.0).abs() < 5.0 * 95.0, "{bins:?}");
    }
}

fn config() -> impl Strategy<Value = GraphConfig> {
    (1usize..300, 0.0f64..0.249, any::<bool>(), any::<u64>()).prop_map(|(n, r, torus, seed)| {
        GraphConfig::new(n, r, if torus { Metric::Torus } else { Metric::Square }, seed)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn edges_iff_within_radius(c in config()) {
        let g = generate(&c).unwrap();
        prop_assert!(g.is_consistent());
        let edges: HashSet<_> = g.edges().iter().copied().collect();
        prop_assert_eq!(edges.len(), g.edge_count());
        for i in 0..g.n() {
            for j in i + 1..g.n() {
                let close = distance(g.point(i), g.point(j), c.metric) <= c.r;
                prop_assert_eq!(close, edges.contains(&(i, j)));
            }
        }
    }

    #[test]
    fn grid_partitions_vertices(c in config()) {
        let g = generate(&c).unwrap();
        let grid = g.grid();
        let mut seen = vec![0usize; g.n()];
        let m = grid.cells_per_side();
        for x in 0..m {
            for y in 0..m {
                for &v in grid.cell((x, y)) {
                    seen[v] += 1;
                    prop_assert_eq!(grid.cell_of(v), (x, y));
                }
            }
        }
        prop_assert!(seen.iter().all(|&s| s == 1));
        prop_assert_eq!(grid.occupied_cells(), (0..g.n()).map(|v| grid.cell_of(v)).collect::<HashSet<_>>().len());
        for v in 0..g.n() {
            let near: HashSet<usize> = grid.vertices_near(grid.cell_of(v), 1).collect();
            for &u in g.neighbors(v) {
                prop_assert!(near.contains(&u));
            }
        }
    }

    #[test]
    fn points_stay_canonical(c in config()) {
        let g = generate(&c).unwrap();
        prop_assert_eq!(g.n(), c.n);
        for p in g.points() {
            prop_assert!((0.0..1.0).contains(&p.x()) && (0.0..1.0).contains(&p.y()));
        }
    }

    #[test]
    fn larger_radius_keeps_edges(c in config(), f in 1.0f64..2.0) {
        let g = generate(&c).unwrap();
        let r2 = (c.r * f).min(0.249);
        let h = g.with_radius(r2).unwrap();
        let bigger: HashSet<_> = h.edges().iter().copied().collect();
        prop_assert!(g.edges().iter().all(|e| bigger.contains(e)));
        prop_assert!(graph::max_component_size(&h) >= graph::max_component_size(&g));
    }

    #[test]
    fn component_sizes_sum_to_n(c in config()) {
        let g = generate(&c).unwrap();
        let comps = graph::components(&g);
        prop_assert_eq!(comps.iter().map(Vec::len).sum::<usize>(), g.n());
        prop_assert_eq!(comps.iter().map(Vec::len).max().unwrap_or(0), graph::max_component_size(&g));
    }
}
