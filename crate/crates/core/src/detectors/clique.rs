use super::{Certificate, TriStateDecision, MAX_CLIQUE_K};
use crate::error::{Error, Result};
use crate::graph::RggGraph;

/// Smallest-last (degeneracy) ordering; returns each vertex's position.
pub(crate) fn degeneracy_positions(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let max_deg = degree.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); max_deg + 1];
    for v in 0..n {
        buckets[degree[v]].push(v);
    }
    let mut removed = vec![false; n];
    let mut position = vec![0; n];
    let mut low = 0;
    for next in 0..n {
        let v = loop {
            while buckets[low].is_empty() {
                low += 1;
            }
            let v = buckets[low].pop().unwrap();
            if !removed[v] && degree[v] == low {
                break v;
            }
        };
        removed[v] = true;
        position[v] = next;
        for &w in &adj[v] {
            if !removed[w] {
                degree[w] -= 1;
                buckets[degree[w]].push(w);
                low = low.min(degree[w]);
            }
        }
    }
    position
}

fn extend(g: &RggGraph, clique: &mut Vec<usize>, candidates: &[usize], k: usize) -> bool {
    if clique.len() == k {
        return true;
    }
    for (i, &c) in candidates.iter().enumerate() {
        if clique.len() + candidates.len() - i < k {
            return false;
        }
        let next: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&d| g.is_edge(c, d))
            .collect();
        clique.push(c);
        if extend(g, clique, &next, k) {
            return true;
        }
        clique.pop();
    }
    false
}

/// Searches for a `k`-clique among each vertex and its later neighbors in
/// degeneracy order. The witness is sorted.
pub fn has_clique_k(g: &RggGraph, k: usize) -> Result<TriStateDecision> {
    if k > MAX_CLIQUE_K {
        return Err(Error::KTooLarge { k });
    }
    if k < 2 {
        return Err(Error::InvalidK {
            k,
            reason: "k must be at least 2".into(),
        });
    }
    let no = TriStateDecision::No {
        certificate: Certificate::NoClique { k },
    };
    if k == 2 {
        return Ok(match g.edges().first() {
            Some(&(i, j)) => TriStateDecision::Yes { witness: vec![i, j] },
            None => no,
        });
    }
    let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
    let position = degeneracy_positions(&adj);
    for v in 0..g.n() {
        if g.degree(v) + 1 < k {
            continue;
        }
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| position[w] > position[v])
            .collect();
        if later.len() + 1 < k {
            continue;
        }
        let mut clique = vec![v];
        if extend(g, &mut clique, &later, k) {
            clique.sort_unstable();
            return Ok(TriStateDecision::Yes { witness: clique });
        }
    }
    Ok(no)
}
