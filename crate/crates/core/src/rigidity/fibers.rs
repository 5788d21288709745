//! Edges of the flip graph of `S1,0,(1)` split by whether capping the
//! boundary identifies their endpoints.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::flipgraph::Ball;
use crate::oracles::{capped_projection, farey_neighbors, FareyVertex};

#[derive(Clone, Debug)]
pub struct FiberPartition {
    pub image: Vec<FareyVertex>,
    /// Edges whose endpoints cap to the same triangulation.
    pub type0: Vec<(usize, usize)>,
    pub type1: Vec<(usize, usize)>,
}

pub fn fiber_edges(ball: &Ball) -> Result<FiberPartition> {
    if ball.complete_to() < 2 {
        return Err(Error::InsufficientRadius("fiber structure needs a ball complete to distance 2".into()));
    }
    let image = capped_projection(ball)?;
    let (mut type0, mut type1) = (Vec::new(), Vec::new());
    for e in ball.edges() {
        if image[e.u] == image[e.v] {
            type0.push((e.u, e.v));
        } else {
            type1.push((e.u, e.v));
        }
    }
    Ok(FiberPartition { image, type0, type1 })
}

#[derive(Clone, Debug, Default)]
pub struct FiberReport {
    pub vertices_checked: usize,
    pub fibers: usize,
    pub largest_fiber_in_ball: usize,
    pub failures: Vec<String>,
}

impl FiberReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the fiber structure on a ball: two edges of each type at every
/// fully explored vertex, fibers are paths, type-1 edges project to model
/// edges, and within graph distance `n` of any vertex its fiber has at most
/// `2n + 1` members (for `n` up to the ball radius).
pub fn check_fibers(ball: &Ball, part: &FiberPartition) -> FiberReport {
    let mut rep = FiberReport::default();
    let n = ball.len();
    let mut deg0 = vec![0usize; n];
    let mut deg1 = vec![0usize; n];
    let mut adj0 = vec![Vec::new(); n];
    for &(u, v) in &part.type0 {
        deg0[u] += 1;
        deg0[v] += 1;
        adj0[u].push(v);
        adj0[v].push(u);
    }
    for &(u, v) in &part.type1 {
        deg1[u] += 1;
        deg1[v] += 1;
        if !farey_neighbors(&part.image[u]).contains(&part.image[v]) {
            rep.failures.push(format!("type-1 edge {u}-{v} does not project to a model edge"));
        }
    }
    for v in 0..n {
        if ball.is_complete(v) {
            rep.vertices_checked += 1;
            if deg0[v] != 2 || deg1[v] != 2 {
                rep.failures.push(format!("vertex {v} has {} type-0 and {} type-1 edges", deg0[v], deg1[v]));
            }
        }
    }
    // type-0 components: acyclic with maximum degree 2
    let mut comp = vec![usize::MAX; n];
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let (mut size, mut degsum) = (0, 0);
        let mut q = VecDeque::from([s]);
        comp[s] = s;
        while let Some(v) = q.pop_front() {
            size += 1;
            degsum += deg0[v];
            if deg0[v] > 2 {
                rep.failures.push(format!("vertex {v} has type-0 degree {}", deg0[v]));
            }
            for &w in &adj0[v] {
                if comp[w] == usize::MAX {
                    comp[w] = s;
                    q.push_back(w);
                }
            }
        }
        rep.fibers += 1;
        if degsum / 2 != size - 1 {
            rep.failures.push(format!("type-0 component at {s} contains a cycle"));
        }
    }
    for v in 0..n {
        let dist = ball.distances_from(v);
        let mut count = vec![0usize; ball.radius() * 2 + 2];
        for (w, d) in dist.iter().enumerate() {
            if let Some(d) = *d {
                if d < count.len() && part.image[w] == part.image[v] {
                    count[d] += 1;
                }
            }
        }
        let mut acc = 0;
        for (k, c) in count.iter().enumerate() {
            acc += c;
            rep.largest_fiber_in_ball = rep.largest_fiber_in_ball.max(acc);
            if acc > 2 * k + 1 {
                rep.failures.push(format!("fiber of {v} has {acc} members within distance {k}"));
                break;
            }
        }
    }
    rep
}
