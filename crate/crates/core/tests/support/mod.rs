//! Brute-force oracles and randomized suites shared by the integration tests
//! and the acceptance target.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use rgg_core::detectors::{self, CrossingPair, TriStateDecision};
use rgg_core::geometry::{Metric, Point};
use rgg_core::graph::{self, GraphConfig, RggGraph};
use rgg_core::rng::PointStream;

// ---------------------------------------------------------------------------
// exact segment predicates

/// A point plus an integer lattice translate.
#[derive(Clone, Copy, PartialEq)]
struct L {
    p: Point,
    s: (i32, i32),
}

impl L {
    fn approx(&self) -> (f64, f64) {
        (self.p.x() + f64::from(self.s.0), self.p.y() + f64::from(self.s.1))
    }

    fn exact(&self) -> (BigRational, BigRational) {
        let c = |v: f64, s: i32| BigRational::from_float(v).expect("finite") + BigRational::from_integer(s.into());
        (c(self.p.x(), self.s.0), c(self.p.y(), self.s.1))
    }

    fn same(&self, o: &L) -> bool {
        self.exact() == o.exact()
    }
}

/// Sign of the cross product (b - a) x (c - a): floats when clearly nonzero,
/// rationals otherwise.
fn ccw(a: &L, b: &L, c: &L) -> i32 {
    let (a0, b0, c0) = (a.approx(), b.approx(), c.approx());
    let det = (b0.0 - a0.0) * (c0.1 - a0.1) - (b0.1 - a0.1) * (c0.0 - a0.0);
    if det.abs() > 1e-10 {
        return if det > 0.0 { 1 } else { -1 };
    }
    let (a, b, c) = (a.exact(), b.exact(), c.exact());
    let det = (&b.0 - &a.0) * (&c.1 - &a.1) - (&b.1 - &a.1) * (&c.0 - &a.0);
    if det.is_zero() {
        0
    } else if det.is_positive() {
        1
    } else {
        -1
    }
}

/// `p` strictly between `a` and `b` on their common line.
fn strictly_inside(a: &L, b: &L, p: &L) -> bool {
    if ccw(a, b, p) != 0 {
        return false;
    }
    let (a, b, p) = (a.exact(), b.exact(), p.exact());
    let dot = |u: &(BigRational, BigRational), v: &(BigRational, BigRational), w: &(BigRational, BigRational)| {
        (&v.0 - &u.0) * (&w.0 - &u.0) + (&v.1 - &u.1) * (&w.1 - &u.1)
    };
    dot(&a, &b, &p).is_positive() && dot(&b, &a, &p).is_positive()
}

fn proper_cross(a: &L, b: &L, c: &L, d: &L) -> bool {
    ccw(a, b, c) * ccw(a, b, d) < 0 && ccw(c, d, a) * ccw(c, d, b) < 0
}

fn touches_interior(a: &L, b: &L, c: &L, d: &L) -> bool {
    if proper_cross(a, b, c, d) || strictly_inside(a, b, c) || strictly_inside(a, b, d) {
        return true;
    }
    if ccw(a, b, c) != 0 || ccw(a, b, d) != 0 {
        return false;
    }
    // Collinear: positive overlap iff an endpoint of ab is inside cd or the
    // segments coincide.
    strictly_inside(c, d, a) || strictly_inside(c, d, b) || (a.same(c) && b.same(d)) || (a.same(d) && b.same(c))
}

fn boxes_apart(a: &L, b: &L, c: &L, d: &L) -> bool {
    let (a, b, c, d) = (a.approx(), b.approx(), c.approx(), d.approx());
    let m = 1e-9;
    a.0.max(b.0) + m < c.0.min(d.0)
        || c.0.max(d.0) + m < a.0.min(b.0)
        || a.1.max(b.1) + m < c.1.min(d.1)
        || c.1.max(d.1) + m < a.1.min(b.1)
}

/// Nearest lattice translate of `other` seen from `p`, per axis.
fn nearest_shift(p: &Point, other: &Point, metric: Metric) -> (i32, i32) {
    if metric == Metric::Square {
        return (0, 0);
    }
    let pick = |from: f64, to: f64| {
        (-1..=1)
            .min_by(|&s1: &i32, &s2: &i32| {
                let d1 = (to + f64::from(s1) - from).abs();
                let d2 = (to + f64::from(s2) - from).abs();
                d1.total_cmp(&d2)
            })
            .unwrap()
    };
    (pick(p.x(), other.x()), pick(p.y(), other.y()))
}

fn lifted_segment(a: &Point, b: &Point, metric: Metric, base: (i32, i32)) -> (L, L) {
    let s = nearest_shift(a, b, metric);
    (
        L { p: *a, s: base },
        L {
            p: *b,
            s: (s.0 + base.0, s.1 + base.1),
        },
    )
}

fn translates(metric: Metric) -> Vec<(i32, i32)> {
    match metric {
        Metric::Square => vec![(0, 0)],
        Metric::Torus => (-1..=1).flat_map(|x| (-1..=1).map(move |y| (x, y))).collect(),
    }
}

fn any_translate(e: (&Point, &Point), f: (&Point, &Point), metric: Metric, test: fn(&L, &L, &L, &L) -> bool) -> bool {
    let (a, b) = lifted_segment(e.0, e.1, metric, (0, 0));
    translates(metric).into_iter().any(|t| {
        let (c, d) = lifted_segment(f.0, f.1, metric, t);
        !boxes_apart(&a, &b, &c, &d) && test(&a, &b, &c, &d)
    })
}

/// Oracle for proper crossing, trying every lattice translate of the second
/// segment.
pub fn oracle_cross(s1: (&Point, &Point), s2: (&Point, &Point), metric: Metric) -> bool {
    any_translate(s1, s2, metric, proper_cross)
}

/// Oracle for "the second segment touches the open first segment".
pub fn oracle_touches(e: (&Point, &Point), f: (&Point, &Point), metric: Metric) -> bool {
    any_translate(e, f, metric, touches_interior)
}

pub fn oracle_distance(p: &Point, q: &Point, metric: Metric) -> f64 {
    let mut dx = (p.x() - q.x()).abs();
    let mut dy = (p.y() - q.y()).abs();
    if metric == Metric::Torus {
        dx = dx.min(1.0 - dx);
        dy = dy.min(1.0 - dy);
    }
    dx.hypot(dy)
}

// ---------------------------------------------------------------------------
// random instances

pub struct Sampler(PointStream);

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler(PointStream::new(seed ^ 0xA5A5_0000_0000_0000))
    }

    pub fn int(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.0.next_below((hi - lo + 1) as u64) as usize
    }

    pub fn unit(&mut self) -> f64 {
        self.0.next_unit()
    }

    /// Log-uniform in `[lo, hi]`.
    pub fn log_uniform(&mut self, lo: f64, hi: f64) -> f64 {
        (lo.ln() + self.unit() * (hi.ln() - lo.ln())).exp()
    }

    pub fn metric(&mut self) -> Metric {
        if self.int(0, 1) == 0 {
            Metric::Square
        } else {
            Metric::Torus
        }
    }
}

/// A graph with `n` in `[n_lo, n_hi]` and radius log-uniform between
/// `n^-1` and `min(n^-1/2, 0.24)`, or in `r_range` when given. Torus radii
/// are capped at 0.24.
pub fn random_graph(seed: u64, n_lo: usize, n_hi: usize, r_range: Option<(f64, f64)>) -> RggGraph {
    let mut s = Sampler::new(seed);
    let n = s.int(n_lo, n_hi);
    let metric = s.metric();
    let (lo, hi) = r_range.unwrap_or((1.0 / n as f64, (n as f64).powf(-0.5).min(0.24)));
    let mut r = s.log_uniform(lo, hi);
    if metric == Metric::Torus {
        r = r.min(0.24);
    }
    graph::generate(&GraphConfig::new(n, r, metric, seed)).expect("valid config")
}

// ---------------------------------------------------------------------------
// graph oracles

pub fn oracle_edges(points: &[Point], r: f64, metric: Metric) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if oracle_distance(&points[i], &points[j], metric) <= r {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn adjacency_matrix(g: &RggGraph) -> Vec<Vec<bool>> {
    let mut m = vec![vec![false; g.n()]; g.n()];
    for &(u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

/// Components by breadth-first search over the edge list, each sorted, in
/// order of smallest vertex.
pub fn oracle_components(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn oracle_crossings(g: &RggGraph) -> Vec<CrossingPair> {
    let p = g.points();
    let e = g.edges();
    let mut out = Vec::new();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            let (a, b) = e[i];
            let (c, d) = e[j];
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if oracle_cross((&p[a], &p[b]), (&p[c], &p[d]), g.metric()) {
                let (e1, e2) = if e[i] < e[j] { (e[i], e[j]) } else { (e[j], e[i]) };
                out.push(CrossingPair { e1, e2 });
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn oracle_free_edges(g: &RggGraph) -> Vec<(usize, usize)> {
    let p = g.points();
    let mut out: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| {
            !g.edges()
                .iter()
                .any(|&(c, d)| (c, d) != (a, b) && oracle_touches((&p[a], &p[b]), (&p[c], &p[d]), g.metric()))
        })
        .collect();
    out.sort_unstable();
    out
}

/// Invariants every crossing must satisfy: some endpoint adjacent to both
/// ends of the other edge, all four endpoints pairwise within `2r`, and one
/// endpoint within `r` of the other three.
pub fn crossing_invariants_hold(g: &RggGraph, pair: &CrossingPair) -> bool {
    let (a, b) = pair.e1;
    let (c, d) = pair.e2;
    let p = g.points();
    let r = g.r();
    let dist = |u: usize, v: usize| oracle_distance(&p[u], &p[v], g.metric());
    let adj = |u: usize, v: usize| dist(u, v) <= r;
    let sides =
        (adj(a, c) && adj(a, d)) || (adj(b, c) && adj(b, d)) || (adj(c, a) && adj(c, b)) || (adj(d, a) && adj(d, b));
    let quad = [a, b, c, d];
    let slack = 2.0 * r * (1.0 + 1e-12);
    let pairwise = quad.iter().all(|&u| quad.iter().all(|&v| dist(u, v) <= slack));
    let hub = quad.iter().any(|&u| quad.iter().all(|&v| u == v || adj(u, v)));
    sides && pairwise && hub
}

fn subsets(n: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            if rec(v + 1, n, k, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(0, n, k, &mut Vec::new(), f)
}

/// Some `k`-subset induces a connected subgraph.
pub fn oracle_connected_k(adj: &[Vec<bool>], k: usize) -> bool {
    subsets(adj.len(), k, &mut |set| {
        let mut reached = vec![false; set.len()];
        reached[0] = true;
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            for j in 0..set.len() {
                if !reached[j] && adj[set[i]][set[j]] {
                    reached[j] = true;
                    stack.push(j);
                }
            }
        }
        reached.iter().all(|&x| x)
    })
}

pub fn oracle_clique_k(adj: &[Vec<bool>], k: usize) -> bool {
    subsets(adj.len(), k, &mut |set| {
        set.iter().all(|&u| set.iter().all(|&v| u == v || adj[u][v]))
    })
}

/// Independence number by exhaustive branching. Vertices with no remaining
/// neighbour are always taken.
pub fn oracle_independence_number(adj: &[Vec<bool>]) -> usize {
    fn rec(adj: &[Vec<bool>], alive: &mut Vec<bool>) -> usize {
        let Some(v) = (0..adj.len()).find(|&v| alive[v]) else {
            return 0;
        };
        let nbrs: Vec<usize> = (0..adj.len()).filter(|&u| alive[u] && adj[v][u]).collect();
        alive[v] = false;
        for &u in &nbrs {
            alive[u] = false;
        }
        let with = 1 + rec(adj, alive);
        for &u in &nbrs {
            alive[u] = true;
        }
        let best = if nbrs.is_empty() {
            with
        } else {
            with.max(rec(adj, alive))
        };
        alive[v] = true;
        best
    }
    rec(adj, &mut vec![true; adj.len()])
}

/// Planarity by exhaustive search for a K5 or K3,3 minor: every minor is a
/// subgraph of some contraction, so all contractions are enumerated and
/// checked for either subgraph. At most 16 vertices.
pub fn oracle_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    assert!(n <= 16);
    let mut adj = vec![0u16; n];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let alive: u16 = if n == 16 { u16::MAX } else { (1u16 << n) - 1 };
    let mut seen = HashSet::new();
    !has_kuratowski_minor(adj, alive, &mut seen)
}

fn bits(m: u16) -> impl Iterator<Item = usize> {
    (0..16).filter(move |&i| m & (1 << i) != 0)
}

fn contains_kuratowski_subgraph(adj: &[u16], alive: u16) -> bool {
    let verts: Vec<usize> = bits(alive).collect();
    let k5 = {
        let mut found = false;
        subsets(verts.len(), 5, &mut |s| {
            found = s
                .iter()
                .all(|&i| s.iter().all(|&j| i == j || adj[verts[i]] & (1 << verts[j]) != 0));
            found
        });
        found
    };
    if k5 {
        return true;
    }
    let mut k33 = false;
    subsets(verts.len(), 3, &mut |s| {
        let side: u16 = s.iter().map(|&i| 1u16 << verts[i]).sum();
        let common = s.iter().fold(alive, |m, &i| m & adj[verts[i]]) & !side;
        k33 = common.count_ones() >= 3;
        k33
    });
    k33
}

fn has_kuratowski_minor(mut adj: Vec<u16>, mut alive: u16, seen: &mut HashSet<(u16, Vec<u16>)>) -> bool {
    // Vertices of degree at most one never help.
    loop {
        let low = bits(alive).find(|&v| (adj[v] & alive).count_ones() <= 1);
        let Some(v) = low else { break };
        alive &= !(1 << v);
        for a in adj.iter_mut() {
            *a &= !(1 << v);
        }
        adj[v] = 0;
    }
    let edges: u32 = bits(alive).map(|v| (adj[v] & alive).count_ones()).sum::<u32>() / 2;
    if alive.count_ones() < 5 || edges < 9 {
        return false;
    }
    if !seen.insert((alive, adj.clone())) {
        return false;
    }
    if contains_kuratowski_subgraph(&adj, alive) {
        return true;
    }
    for u in bits(alive) {
        for v in bits(adj[u] & alive) {
            if v < u {
                continue;
            }
            let mut next = adj.clone();
            next[u] = (next[u] | next[v]) & !(1 << u) & !(1 << v);
            next[v] = 0;
            for (w, a) in next.iter_mut().enumerate() {
                if w != u && *a & (1 << v) != 0 {
                    *a = (*a & !(1 << v)) | (1 << u);
                }
            }
            if has_kuratowski_minor(next, alive & !(1 << v), seen) {
                return true;
            }
        }
    }
    false
}

// ---------------------------------------------------------------------------
// suites

/// Outcome of a randomized comparison.
#[derive(Debug, Default, Clone, Copy)]
pub struct Tally {
    pub instances: usize,
    pub mismatches: usize,
    /// Crossing pairs whose invariants were checked.
    pub crossings: usize,
    pub invariant_failures: usize,
    /// Instances on which the property under test held.
    pub positives: usize,
}

impl Tally {
    pub fn merge(mut self, o: Tally) -> Tally {
        self.instances += o.instances;
        self.mismatches += o.mismatches;
        self.crossings += o.crossings;
        self.invariant_failures += o.invariant_failures;
        self.positives += o.positives;
        self
    }

    pub fn clean(&self) -> bool {
        self.mismatches == 0 && self.invariant_failures == 0
    }

    /// Both outcomes occurred.
    pub fn mixed(&self) -> bool {
        self.positives > 0 && self.positives < self.instances
    }
}

fn check_invariants(g: &RggGraph, pairs: &[CrossingPair], t: &mut Tally) {
    for p in pairs {
        t.crossings += 1;
        if !crossing_invariants_hold(g, p) {
            t.invariant_failures += 1;
        }
    }
}

/// `count` random 4-point configurations: half uniform, half on a coarse
/// lattice to force collinear and touching cases. Torus configurations are
/// drawn around the first point so that both segments are short.
pub fn segment_suite(count: usize, seed: u64) -> Tally {
    use rgg_core::geometry::{interior_intersected, segments_cross, Segment};
    let mut s = Sampler::new(seed);
    let mut t = Tally::default();
    let mut i = 0usize;
    while t.instances < count {
        i += 1;
        let metric = if i % 4 == 3 { Metric::Torus } else { Metric::Square };
        let lattice = i % 2 == 1;
        let coord = |s: &mut Sampler| if lattice { s.int(0, 15) as f64 / 16.0 } else { s.unit() };
        let near = |s: &mut Sampler, base: &Point| {
            let off = |s: &mut Sampler| {
                if lattice {
                    (s.int(0, 6) as f64 - 3.0) / 16.0
                } else {
                    0.4 * s.unit() - 0.2
                }
            };
            Point::wrapped(base.x() + off(s), base.y() + off(s))
        };
        let a = Point::new(coord(&mut s), coord(&mut s)).unwrap();
        let (b, c, d) = if metric == Metric::Torus {
            let c = near(&mut s, &a);
            (near(&mut s, &a), c, near(&mut s, &c))
        } else {
            let mut pt = || Point::new(coord(&mut s), coord(&mut s)).unwrap();
            (pt(), pt(), pt())
        };
        let e = Segment::new(a, b, metric);
        let f = Segment::new(c, d, metric);
        if a == b || c == d || (metric == Metric::Torus && (e.length() >= 0.25 || f.length() >= 0.25)) {
            continue;
        }
        t.instances += 1;
        let got = segments_cross(&e, &f, metric).unwrap();
        t.positives += usize::from(got);
        let got_t = interior_intersected(&e, &f, metric).unwrap();
        if got != oracle_cross((&a, &b), (&c, &d), metric) || got_t != oracle_touches((&a, &b), (&c, &d), metric) {
            t.mismatches += 1;
        }
    }
    t
}

pub fn crossing_suite(instances: u64, seed: u64) -> Tally {
    let mut t = Tally::default();
    for i in 0..instances {
        let g = random_graph(seed + i, 4, 300, None);
        let pairs = detectors::crossing_pairs(&g, false);
        t.instances += 1;
        t.positives += usize::from(!pairs.is_empty());
        if pairs != oracle_crossings(&g) || detectors::is_plane(&g) != pairs.is_empty() {
            t.mismatches += 1;
        }
        check_invariants(&g, &pairs, &mut t);
    }
    t
}

pub fn free_edge_suite(instances: u64, seed: u64) -> Tally {
    let mut t = Tally::default();
    for i in 0..instances {
        let g = random_graph(seed + i, 4, 300, None);
        t.instances += 1;
        let free = detectors::free_edges(&g);
        t.positives += usize::from(!free.is_empty() && free.len() < g.edge_count());
        if free != oracle_free_edges(&g) {
            t.mismatches += 1;
        }
    }
    t
}

pub fn connected_k_suite(instances: u64, seed: u64) -> Tally {
    let mut t = Tally::default();
    for i in 0..instances {
        let g = random_graph(seed + i, 5, 30, Some((0.02, 0.3)));
        let adj = adjacency_matrix(&g);
        for k in [3, 4] {
            t.instances += 1;
            let got = detectors::has_connected_k(&g, k);
            t.positives += usize::from(got);
            if got != oracle_connected_k(&adj, k) {
                t.mismatches += 1;
            }
        }
    }
    t
}

pub fn clique_suite(instances: u64, seed: u64) -> Tally {
    let mut t = Tally::default();
    for i in 0..instances {
        let g = random_graph(seed + i, 5, 30, Some((0.05, 0.24)));
        let adj = adjacency_matrix(&g);
        for k in [3, 4, 5] {
            t.instances += 1;
            let decision = detectors::has_clique_k(&g, k).unwrap();
            t.positives += usize::from(decision.is_yes());
            let sound = match &decision {
                TriStateDecision::Yes { witness } => {
                    witness.len() == k && witness.iter().all(|&u| witness.iter().all(|&v| u == v || adj[u][v]))
                }
                _ => true,
            };
            if !sound || decision.is_yes() != oracle_clique_k(&adj, k) {
                t.mismatches += 1;
            }
        }
    }
    t
}

/// Tri-state soundness of `independent_k` against the exact independence
/// number, over every `k` in `2..=n`.
pub fn independent_suite(instances: u64, seed: u64) -> Tally {
    let mut t = Tally::default();
    for i in 0..instances {
        let g = random_graph(seed + i, 2, 25, Some((0.05, 0.5)));
        let adj = adjacency_matrix(&g);
        let alpha = oracle_independence_number(&adj);
        let cover = detectors::clique_cover(&g).map(|c| c.occupied);
        for k in 2..=g.n() {
            t.instances += 1;
            let decision = detectors::independent_k(&g, k).unwrap();
            t.positives += usize::from(decision.is_yes());
            let ok = match decision {
                TriStateDecision::Yes { witness } => {
                    let distinct: HashSet<_> = witness.iter().collect();
                    witness.len() == k
                        && distinct.len() == k
                        && witness.iter().all(|&u| witness.iter().all(|&v| u == v || !adj[u][v]))
                }
                TriStateDecision::No { certificate } => {
                    alpha < k
                        && match certificate {
                            detectors::Certificate::CliqueCover { occupied, .. } => {
                                cover == Some(occupied) && occupied < k
                            }
                            detectors::Certificate::ExactMaximum { size, .. } => size == alpha,
                            detectors::Certificate::NoClique { .. } => false,
                        }
                }
                TriStateDecision::Unknown { lower, upper } => lower <= alpha && alpha <= upper,
            };
            if !ok {
                t.mismatches += 1;
            }
        }
    }
    t
}

pub fn planarity_suite(instances: u64, seed: u64) -> Tally {
    let mut t = Tally::default();
    for i in 0..instances {
        let g = random_graph(seed + i, 5, 12, Some((0.25, 0.9)));
        t.instances += 1;
        let planar = detectors::is_planar(&g);
        t.positives += usize::from(planar);
        if planar != oracle_planar(g.n(), g.edges()) {
            t.mismatches += 1;
        }
    }
    t
}

/// `is_plane` against anchor search on `n = 200` graphs with `r` log-uniform
/// in `[n^-1, n^-1/2]`.
pub fn anchor_suite(instances: u64, seed: u64) -> Tally {
    let mut t = Tally::default();
    for i in 0..instances {
        let g = random_graph(seed + i, 200, 200, Some((1.0 / 200.0, 200f64.powf(-0.5))));
        let pairs = detectors::crossing_pairs(&g, false);
        t.instances += 1;
        t.positives += usize::from(!pairs.is_empty());
        if detectors::is_plane(&g) != detectors::find_anchor(&g).is_none()
            || pairs.is_empty() != detectors::is_plane(&g)
        {
            t.mismatches += 1;
        }
        check_invariants(&g, &pairs, &mut t);
    }
    t
}

pub fn component_suite(instances: u64, seed: u64) -> Tally {
    let mut t = Tally::default();
    for i in 0..instances {
        let g = random_graph(seed + i, 1, 300, None);
        t.instances += 1;
        let mut got = graph::components(&g);
        for c in &mut got {
            c.sort_unstable();
        }
        got.sort();
        if got != oracle_components(g.n(), g.edges()) {
            t.mismatches += 1;
        }
    }
    t
}

pub fn edge_suite(instances: u64, seed: u64) -> Tally {
    let mut t = Tally::default();
    for i in 0..instances {
        let g = random_graph(seed + i, 1, 300, Some((0.001, 0.24)));
        t.instances += 1;
        let mut got = g.edges().to_vec();
        got.sort_unstable();
        if got != oracle_edges(g.points(), g.r(), g.metric()) || !g.is_consistent() {
            t.mismatches += 1;
        }
    }
    t
}
