//! Planarity of the abstract graph via the left-right criterion
//! (de Fraysseix and Rosenstiehl, in Brandes' formulation), with Kuratowski
//! subgraph extraction by edge deletion.

use serde::{Deserialize, Serialize};

use crate::graph::{components, RggGraph};

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, Default, PartialEq)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState {
    adj: Vec<Vec<(usize, usize)>>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    src: Vec<usize>,
    dst: Vec<usize>,
    oriented: Vec<bool>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<usize>,
    ordered: Vec<Vec<usize>>,
    reference: Vec<Option<usize>>,
    lowpt_edge: Vec<Option<usize>>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
}

impl LrState {
    fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let m = edges.len();
        let mut adj = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        LrState {
            adj,
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            src: vec![NONE; m],
            dst: vec![NONE; m],
            oriented: vec![false; m],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting: vec![0; m],
            ordered: vec![Vec::new(); n],
            reference: vec![None; m],
            lowpt_edge: vec![None; m],
            stack_bottom: vec![0; m],
            stack: Vec::new(),
        }
    }

    /// Orientation DFS: heights, lowpoints and nesting depths.
    fn orient(&mut self, root: usize) {
        self.height[root] = 0;
        let mut frames: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(&(v, i)) = frames.last() {
            if i < self.adj[v].len() {
                frames.last_mut().unwrap().1 += 1;
                let (w, e) = self.adj[v][i];
                if self.oriented[e] {
                    continue;
                }
                self.oriented[e] = true;
                self.src[e] = v;
                self.dst[e] = w;
                self.lowpt[e] = self.height[v];
                self.lowpt2[e] = self.height[v];
                if self.height[w] == NONE {
                    self.parent_edge[w] = e;
                    self.height[w] = self.height[v] + 1;
                    frames.push((w, 0));
                } else {
                    self.lowpt[e] = self.height[w];
                    self.finish_edge(v, e);
                }
            } else {
                frames.pop();
                let e = self.parent_edge[v];
                if e != NONE {
                    self.finish_edge(self.src[e], e);
                }
            }
        }
    }

    fn finish_edge(&mut self, v: usize, e: usize) {
        self.nesting[e] = 2 * self.lowpt[e] + usize::from(self.lowpt2[e] < self.height[v]);
        let pe = self.parent_edge[v];
        if pe == NONE {
            return;
        }
        if self.lowpt[e] < self.lowpt[pe] {
            self.lowpt2[pe] = self.lowpt[pe].min(self.lowpt2[e]);
            self.lowpt[pe] = self.lowpt[e];
        } else if self.lowpt[e] > self.lowpt[pe] {
            self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt[e]);
        } else {
            self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt2[e]);
        }
    }

    fn conflicting(&self, i: Interval, b: usize) -> bool {
        i.high.is_some_and(|h| self.lowpt[h] > self.lowpt[b])
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        let low = |i: Interval| i.low.map_or(NONE, |l| self.lowpt[l]);
        low(p.left).min(low(p.right))
    }

    /// Testing DFS; false on the first unresolvable conflict.
    fn test(&mut self, root: usize) -> bool {
        // (vertex, next child index, returning from the child at that index)
        let mut frames: Vec<(usize, usize, bool)> = vec![(root, 0, false)];
        while let Some(&(v, i, returning)) = frames.last() {
            if i < self.ordered[v].len() {
                let ei = self.ordered[v][i];
                if returning {
                    *frames.last_mut().unwrap() = (v, i + 1, false);
                    if !self.integrate(v, ei) {
                        return false;
                    }
                    continue;
                }
                self.stack_bottom[ei] = self.stack.len();
                let w = self.dst[ei];
                if self.parent_edge[w] == ei {
                    frames.last_mut().unwrap().2 = true;
                    frames.push((w, 0, false));
                } else {
                    self.lowpt_edge[ei] = Some(ei);
                    self.stack.push(ConflictPair {
                        left: Interval::default(),
                        right: Interval {
                            low: Some(ei),
                            high: Some(ei),
                        },
                    });
                    frames.last_mut().unwrap().1 = i + 1;
                    if !self.integrate(v, ei) {
                        return false;
                    }
                }
            } else {
                frames.pop();
                self.leave(v);
            }
        }
        true
    }

    /// Merges the constraints of edge `ei` out of `v` into its parent edge.
    fn integrate(&mut self, v: usize, ei: usize) -> bool {
        if self.lowpt[ei] < self.height[v] {
            let e = self.parent_edge[v];
            if ei == self.ordered[v][0] {
                self.lowpt_edge[e] = self.lowpt_edge[ei];
            } else {
                return self.add_constraints(ei, e);
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        loop {
            let mut q = self.stack.pop().expect("conflict stack underflow");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.expect("non-empty interval");
            if self.lowpt[q_low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else if let Some(l) = p.right.low {
                    self.reference[l] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q_low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(top.left, ei) || self.conflicting(top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(q.right, ei) {
                q.swap();
            }
            if self.conflicting(q.right, ei) {
                return false;
            }
            if let Some(l) = p.right.low {
                self.reference[l] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(l) = p.left.low {
                self.reference[l] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    /// Called when the DFS returns from `v` along its parent edge.
    fn leave(&mut self, v: usize) {
        let e = self.parent_edge[v];
        if e == NONE {
            return;
        }
        let u = self.src[e];
        self.trim_back_edges(u);
        if self.lowpt[e] < self.height[u] {
            let top = *self.stack.last().expect("return edge implies a conflict pair");
            let (hl, hr) = (top.left.high, top.right.high);
            self.reference[e] = match (hl, hr) {
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => hl,
                (Some(_), None) => hl,
                _ => hr,
            };
        }
    }

    /// Drops back edges ending at `u` from the conflict stack.
    fn trim_back_edges(&mut self, u: usize) {
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            self.stack.pop();
        }
        let Some(mut p) = self.stack.pop() else {
            return;
        };
        while let Some(h) = p.left.high {
            if self.dst[h] != u {
                break;
            }
            p.left.high = self.reference[h];
        }
        if p.left.high.is_none() {
            if let Some(l) = p.left.low {
                self.reference[l] = p.right.low;
                p.left.low = None;
            }
        }
        while let Some(h) = p.right.high {
            if self.dst[h] != u {
                break;
            }
            p.right.high = self.reference[h];
        }
        if p.right.high.is_none() {
            if let Some(l) = p.right.low {
                self.reference[l] = p.left.low;
                p.right.low = None;
            }
        }
        self.stack.push(p);
    }
}

/// Left-right planarity test of a simple graph on vertices `0..n`, without
/// any prefilter.
pub fn lr_planarity(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut s = LrState::new(n, edges);
    let mut roots = Vec::new();
    for v in 0..n {
        if s.height[v] == NONE {
            roots.push(v);
            s.orient(v);
        }
    }
    for v in 0..n {
        let mut out: Vec<usize> = s.adj[v].iter().map(|&(_, e)| e).filter(|&e| s.src[e] == v).collect();
        out.sort_by_key(|&e| s.nesting[e]);
        s.ordered[v] = out;
    }
    for root in roots {
        s.stack.clear();
        if !s.test(root) {
            return false;
        }
    }
    true
}

/// Planarity of a simple graph with the Euler bound as a prefilter.
pub fn is_planar_graph(n: usize, edges: &[(usize, usize)]) -> bool {
    if n >= 3 && edges.len() > 3 * n - 6 {
        return false;
    }
    if n <= 4 || edges.len() <= 8 {
        return true;
    }
    lr_planarity(n, edges)
}

type LocalGraph = (Vec<usize>, Vec<(usize, usize)>);

/// Each non-trivial component as a local graph: (members, local edges).
fn component_graphs(g: &RggGraph) -> Vec<LocalGraph> {
    let comps = components(g);
    let mut local = vec![0; g.n()];
    let mut which = vec![0; g.n()];
    for (c, members) in comps.iter().enumerate() {
        for (i, &v) in members.iter().enumerate() {
            local[v] = i;
            which[v] = c;
        }
    }
    let mut edges: Vec<Vec<(usize, usize)>> = vec![Vec::new(); comps.len()];
    for &(u, v) in g.edges() {
        edges[which[u]].push((local[u], local[v]));
    }
    comps.into_iter().zip(edges).filter(|(_, e)| !e.is_empty()).collect()
}

/// Whether the abstract graph has a planar embedding, tested per component.
pub fn is_planar(g: &RggGraph) -> bool {
    component_graphs(g)
        .iter()
        .all(|(members, edges)| is_planar_graph(members.len(), edges))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of K5 or K3,3 contained in the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Kuratowski {
    pub kind: KuratowskiKind,
    /// Vertices of degree at least 3 in the subdivision.
    pub branch_vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

fn subgraph_planar(n: usize, edges: &[(usize, usize)], keep: &[bool]) -> bool {
    let kept: Vec<(usize, usize)> = edges.iter().zip(keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
    is_planar_graph(n, &kept)
}

/// Shrinks a non-planar edge set to a minimal non-planar one: drop chunks of
/// edges while the rest stays non-planar, halving the chunk size, then single
/// edges.
fn minimal_nonplanar(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut keep = vec![true; edges.len()];
    let mut chunk = edges.len().div_ceil(2).max(1);
    loop {
        let kept: Vec<usize> = (0..edges.len()).filter(|&i| keep[i]).collect();
        for block in kept.chunks(chunk) {
            for &i in block {
                keep[i] = false;
            }
            if subgraph_planar(n, edges, &keep) {
                for &i in block {
                    keep[i] = true;
                }
            }
        }
        if chunk == 1 {
            break;
        }
        chunk = chunk.div_ceil(2);
    }
    edges.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect()
}

/// A Kuratowski subgraph if the graph is not planar.
pub fn kuratowski_witness(g: &RggGraph) -> Option<Kuratowski> {
    let (members, edges) = component_graphs(g)
        .into_iter()
        .find(|(m, e)| !is_planar_graph(m.len(), e))?;
    let core = minimal_nonplanar(members.len(), &edges);
    let mut degree = vec![0usize; members.len()];
    for &(u, v) in &core {
        degree[u] += 1;
        degree[v] += 1;
    }
    let mut branch_vertices: Vec<usize> = (0..members.len())
        .filter(|&v| degree[v] >= 3)
        .map(|v| members[v])
        .collect();
    branch_vertices.sort_unstable();
    let kind = if branch_vertices.len() == 5 {
        KuratowskiKind::K5
    } else {
        KuratowskiKind::K33
    };
    let mut edges: Vec<(usize, usize)> = core
        .iter()
        .map(|&(u, v)| (members[u].min(members[v]), members[u].max(members[v])))
        .collect();
    edges.sort_unstable();
    Some(Kuratowski {
        kind,
        branch_vertices,
        edges,
    })
}
