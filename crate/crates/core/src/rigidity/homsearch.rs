//! Backtracking search for injective homomorphisms between finite graphs.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use crate::error::{Error, Result};
use crate::flipgraph::Ball;

/// A finite simple graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u != v && !adj[u].contains(&v) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for a in &mut adj {
            a.sort();
        }
        Graph { adj }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges)
    }

    pub fn from_ball(b: &Ball) -> Self {
        let edges: Vec<_> = b.edges().iter().map(|e| (e.u, e.v)).collect();
        Graph::new(b.len(), &edges)
    }

    /// The subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let pos = |v: usize| vertices.iter().position(|&w| w == v);
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if let Some(j) = pos(w) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(vertices.len(), &edges)
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Breadth-first distances from a set of sources.
    pub fn distances(&self, sources: &[usize]) -> Vec<Option<usize>> {
        let mut d = vec![None; self.len()];
        let mut q = VecDeque::new();
        for &s in sources {
            d[s] = Some(0);
            q.push_back(s);
        }
        while let Some(v) = q.pop_front() {
            for &w in &self.adj[v] {
                if d[w].is_none() {
                    d[w] = Some(d[v].unwrap() + 1);
                    q.push_back(w);
                }
            }
        }
        d
    }
}

/// Injective edge-preserving maps `domain → host` extending `seed`, up to
/// `limit` of them, sorted lexicographically by image vector.
pub fn search_graph_homs(domain: &Graph, host: &Graph, seed: &[(usize, usize)], limit: usize) -> Result<Vec<Vec<usize>>> {
    if domain.is_empty() {
        return Ok(vec![Vec::new()]);
    }
    let mut img = vec![usize::MAX; domain.len()];
    let mut used = vec![false; host.len()];
    for &(d, h) in seed {
        if img[d] != usize::MAX || used[h] {
            return Err(Error::Precondition("seed is not injective".into()));
        }
        img[d] = h;
        used[h] = true;
    }
    for &(d, _) in seed {
        for &n in domain.neighbors(d) {
            if img[n] != usize::MAX && !host.has_edge(img[d], img[n]) {
                return Ok(Vec::new());
            }
        }
    }
    // Order: BFS from the seeds (or vertex 0), so each new vertex has an assigned neighbor.
    let sources: Vec<usize> = if seed.is_empty() { vec![0] } else { seed.iter().map(|s| s.0).collect() };
    let dist = domain.distances(&sources);
    if dist.iter().any(Option::is_none) {
        return Err(Error::Precondition("domain is not connected".into()));
    }
    let mut order: Vec<usize> = (0..domain.len()).filter(|&v| img[v] == usize::MAX).collect();
    order.sort_by_key(|&v| (dist[v], v));
    let mut out = Vec::new();
    fn rec(
        k: usize,
        order: &[usize],
        domain: &Graph,
        host: &Graph,
        img: &mut Vec<usize>,
        used: &mut Vec<bool>,
        limit: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if out.len() >= limit {
            return;
        }
        if k == order.len() {
            out.push(img.clone());
            return;
        }
        let v = order[k];
        let anchor = domain.neighbors(v).iter().copied().find(|&n| img[n] != usize::MAX);
        let cands: Vec<usize> = match anchor {
            Some(n) => host.neighbors(img[n]).to_vec(),
            None => (0..host.len()).collect(),
        };
        for h in cands {
            if used[h] {
                continue;
            }
            if domain.neighbors(v).iter().any(|&n| img[n] != usize::MAX && !host.has_edge(h, img[n])) {
                continue;
            }
            img[v] = h;
            used[h] = true;
            rec(k + 1, order, domain, host, img, used, limit, out);
            used[h] = false;
            img[v] = usize::MAX;
        }
    }
    rec(0, &order, domain, host, &mut img, &mut used, limit, &mut out);
    out.sort();
    Ok(out)
}

/// [`search_graph_homs`] into an explored ball. An unseeded domain vertex at
/// distance `k` from a seed lands within `k` of that seed's image, so the ball
/// must reach the smallest such bound for every unseeded vertex.
pub fn search_injective_homs(domain: &Graph, host: &Ball, seed: &[(usize, usize)], limit: usize) -> Result<Vec<Vec<usize>>> {
    if !host.is_saturated() && !seed.is_empty() {
        let mut reach = vec![usize::MAX; domain.len()];
        let mut heap = BinaryHeap::new();
        for &(d, h) in seed {
            if host.dist(h) < reach[d] {
                reach[d] = host.dist(h);
                heap.push(Reverse((reach[d], d)));
            }
        }
        while let Some(Reverse((r, v))) = heap.pop() {
            if r > reach[v] {
                continue;
            }
            for &w in domain.neighbors(v) {
                if r + 1 < reach[w] {
                    reach[w] = r + 1;
                    heap.push(Reverse((r + 1, w)));
                }
            }
        }
        if let Some(&worst) = reach.iter().filter(|&&r| r != usize::MAX).max() {
            if worst > host.radius() {
                return Err(Error::InsufficientRadius(format!(
                    "domain images may lie at distance {worst}, beyond radius {}",
                    host.radius()
                )));
            }
        }
    }
    search_graph_homs(domain, &Graph::from_ball(host), seed, limit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paths_into_paths() {
        let p = Graph::path(4);
        assert_eq!(search_graph_homs(&p, &p, &[], 10).unwrap().len(), 2);
        let all: Vec<_> = (0..4).map(|i| (i, i)).collect();
        assert_eq!(search_graph_homs(&p, &p, &all, 10).unwrap(), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn cycles_and_limits() {
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(search_graph_homs(&c5, &c5, &[], 100).unwrap().len(), 10);
        assert_eq!(search_graph_homs(&c5, &c5, &[], 3).unwrap().len(), 3);
        let p5 = Graph::path(5);
        assert!(search_graph_homs(&c5, &p5, &[], 100).unwrap().is_empty());
    }
}
