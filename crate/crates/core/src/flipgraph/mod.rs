//! Bounded exploration of the flip graph.
//!
//! A [`Ball`] is the subgraph induced on all vertices within distance `r` of a
//! root, found by breadth-first search with [`TriKey`] deduplication. Vertices
//! at distance `r` may have neighbors outside the ball; `complete_to` records
//! the largest distance up to which every vertex has its full neighborhood.

mod export;
mod path2;

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::arcid::{self, ArcCoord, CoordMap, KeyTable, Reference, TriKey};
use crate::error::{Error, Result};
use crate::surface::SurfaceSig;
use crate::trimap::{base_triangulation, ArcId, Triangulation};

pub use export::{export, import, Format};
pub use path2::{classify_path2, cycles_through, verify_path2, Path2Class, Path2Report};

pub const DEFAULT_BUDGET: usize = 5_000_000;

/// Budget from `FLIPGRAPH_BUDGET` if set and valid, else [`DEFAULT_BUDGET`].
pub fn budget_from_env() -> usize {
    std::env::var("FLIPGRAPH_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, Debug)]
pub struct BallConfig {
    pub radius: usize,
    pub budget: usize,
    /// Worker cap; `None` uses rayon's global pool.
    pub threads: Option<usize>,
}

impl BallConfig {
    pub fn new(radius: usize) -> Self {
        BallConfig { radius, budget: budget_from_env(), threads: None }
    }
}

/// Explicit data of an explored vertex. Absent for balls read back from JSON.
#[derive(Clone, Debug)]
pub struct VertexState {
    pub tri: Triangulation,
    pub coords: CoordMap,
    /// Parent in the BFS tree and the parent's arc whose flip gives this vertex.
    pub parent: Option<(usize, ArcId)>,
}

#[derive(Clone, Debug)]
pub struct Vertex {
    pub key: TriKey,
    pub dist: usize,
    pub degree: Option<usize>,
    pub state: Option<VertexState>,
}

/// An undirected edge `u < v`; `removed` is the arc of `u` replaced by `added` in `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub removed: ArcCoord,
    pub added: ArcCoord,
}

#[derive(Clone, Debug)]
pub struct Ball {
    surface: SurfaceSig,
    radius: usize,
    complete_to: i64,
    saturated: bool,
    reference: Option<Reference>,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    adj: Vec<Vec<(usize, usize)>>,
    table: KeyTable,
}

struct Found {
    arc: ArcId,
    tri: Triangulation,
    coords: CoordMap,
    key: TriKey,
    removed: ArcCoord,
    added: ArcCoord,
}

fn expand(tri: &Triangulation, coords: &CoordMap) -> Result<Vec<Found>> {
    tri.flippable_arcs()
        .into_iter()
        .map(|a| {
            let (out, c) = arcid::flip_with_coords(tri, coords, a.id)?;
            let key = arcid::tri_key(&out.triangulation, &c)?;
            let removed = coords.get(a.id).cloned().ok_or(Error::UnknownArc(a.id.0))?;
            let added = c.get(out.added).cloned().ok_or(Error::UnknownArc(out.added.0))?;
            Ok(Found { arc: a.id, tri: out.triangulation, coords: c, key, removed, added })
        })
        .collect()
}

impl Ball {
    /// Ball of radius `r` around the base triangulation of `sig`.
    pub fn new(sig: &SurfaceSig, radius: usize) -> Result<Ball> {
        Self::with_config(sig, &BallConfig::new(radius))
    }

    pub fn with_config(sig: &SurfaceSig, cfg: &BallConfig) -> Result<Ball> {
        let t0 = base_triangulation(sig)?;
        let (reference, coords) = arcid::base_coords(&t0);
        match cfg.threads {
            None => Self::explore(sig.clone(), reference, t0, coords, cfg),
            Some(n) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(n.max(1))
                    .build()
                    .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
                pool.install(|| Self::explore(sig.clone(), reference, t0, coords, cfg))
            }
        }
    }

    /// Ball around an arbitrary root whose coordinates are relative to `reference`.
    pub fn around(
        sig: &SurfaceSig,
        reference: Reference,
        root: Triangulation,
        coords: CoordMap,
        cfg: &BallConfig,
    ) -> Result<Ball> {
        Self::explore(sig.clone(), reference, root, coords, cfg)
    }

    fn explore(
        surface: SurfaceSig,
        reference: Reference,
        root: Triangulation,
        coords: CoordMap,
        cfg: &BallConfig,
    ) -> Result<Ball> {
        let mut table = KeyTable::new();
        let root_key = arcid::tri_key(&root, &coords)?;
        table.insert(root_key.clone())?;
        let mut vertices = vec![Vertex {
            key: root_key,
            dist: 0,
            degree: None,
            state: Some(VertexState { tri: root, coords, parent: None }),
        }];
        let mut edge_set: HashSet<(usize, usize)> = HashSet::new();
        let mut edges: Vec<Edge> = Vec::new();
        let mut frontier: Vec<usize> = vec![0];
        let mut d = 0;
        let saturated = loop {
            let expansions: Vec<Result<Vec<Found>>> = frontier
                .par_iter()
                .map(|&v| {
                    let st = vertices[v].state.as_ref().expect("explored vertices carry state");
                    expand(&st.tri, &st.coords)
                })
                .collect();
            let mut next = Vec::new();
            let mut leaks = false;
            for (&v, found) in frontier.iter().zip(expansions) {
                let found = found?;
                vertices[v].degree = Some(found.len());
                for f in found {
                    let w = match table.get(&f.key)? {
                        Some(w) => w,
                        None if d < cfg.radius => {
                            if table.len() >= cfg.budget {
                                return Err(Error::ResourceLimit { budget: cfg.budget });
                            }
                            let (w, _) = table.insert(f.key.clone())?;
                            vertices.push(Vertex {
                                key: f.key,
                                dist: d + 1,
                                degree: None,
                                state: Some(VertexState { tri: f.tri, coords: f.coords, parent: Some((v, f.arc)) }),
                            });
                            next.push(w);
                            w
                        }
                        None => {
                            leaks = true;
                            continue;
                        }
                    };
                    if w == v {
                        return Err(Error::MalformedTriangulation("flip produced a self-loop".into()));
                    }
                    if edge_set.insert((v.min(w), v.max(w))) {
                        let (u, x, removed, added) =
                            if v < w { (v, w, f.removed, f.added) } else { (w, v, f.added, f.removed) };
                        edges.push(Edge { u, v: x, removed, added });
                    }
                }
            }
            if d == cfg.radius {
                break !leaks;
            }
            if next.is_empty() {
                break true;
            }
            frontier = next;
            d += 1;
        };
        let complete_to = if saturated { cfg.radius as i64 } else { cfg.radius as i64 - 1 };
        for v in vertices.iter_mut() {
            if v.dist as i64 > complete_to {
                v.degree = None;
            }
        }
        let mut ball = Ball {
            surface,
            radius: cfg.radius,
            complete_to,
            saturated,
            reference: Some(reference),
            vertices,
            edges,
            adj: Vec::new(),
            table,
        };
        ball.canonicalize()?;
        Ok(ball)
    }

    /// Reorders vertices by `(dist, key)` and edges by endpoint, rebuilding indices.
    fn canonicalize(&mut self) -> Result<()> {
        let n = self.vertices.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            (self.vertices[a].dist, &self.vertices[a].key).cmp(&(self.vertices[b].dist, &self.vertices[b].key))
        });
        let mut new_of = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            new_of[old] = new;
        }
        let mut old_vertices: Vec<Option<Vertex>> = std::mem::take(&mut self.vertices).into_iter().map(Some).collect();
        self.vertices = order.iter().map(|&o| old_vertices[o].take().expect("permutation")).collect();
        for v in &mut self.vertices {
            if let Some(st) = &mut v.state {
                if let Some((p, a)) = st.parent {
                    st.parent = Some((new_of[p], a));
                }
            }
        }
        for e in &mut self.edges {
            let (u, v) = (new_of[e.u], new_of[e.v]);
            if u > v {
                std::mem::swap(&mut e.removed, &mut e.added);
            }
            e.u = u.min(v);
            e.v = u.max(v);
        }
        self.edges.sort_by_key(|e| (e.u, e.v));
        self.table = KeyTable::new();
        for v in &self.vertices {
            self.table.insert(v.key.clone())?;
        }
        self.adj = vec![Vec::new(); n];
        for (i, e) in self.edges.iter().enumerate() {
            self.adj[e.u].push((e.v, i));
            self.adj[e.v].push((e.u, i));
        }
        for a in &mut self.adj {
            a.sort_unstable();
        }
        Ok(())
    }

    pub(crate) fn from_parts(
        surface: SurfaceSig,
        radius: usize,
        complete_to: i64,
        vertices: Vec<Vertex>,
        edges: Vec<Edge>,
    ) -> Result<Ball> {
        let saturated = complete_to >= radius as i64;
        let mut ball = Ball {
            surface,
            radius,
            complete_to,
            saturated,
            reference: None,
            vertices,
            edges,
            adj: Vec::new(),
            table: KeyTable::new(),
        };
        ball.canonicalize()?;
        Ok(ball)
    }

    pub fn surface(&self) -> &SurfaceSig {
        &self.surface
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    /// Largest distance up to which every vertex has its full neighborhood (`-1` if none).
    pub fn complete_to(&self) -> i64 {
        self.complete_to
    }

    /// True if the whole (finite) flip graph was exhausted.
    pub fn is_saturated(&self) -> bool {
        self.saturated
    }

    pub fn reference(&self) -> Option<&Reference> {
        self.reference.as_ref()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Vertex {
        &self.vertices[i]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn index_of(&self, key: &TriKey) -> Option<usize> {
        self.table.get(key).ok().flatten()
    }

    pub fn dist(&self, v: usize) -> usize {
        self.vertices[v].dist
    }

    pub fn is_complete(&self, v: usize) -> bool {
        (self.vertices[v].dist as i64) <= self.complete_to
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree_in_ball(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<&Edge> {
        self.adj[u]
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| &self.edges[self.adj[u][i].1])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Vertices at exactly distance `d`.
    pub fn sphere(&self, d: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&v| self.vertices[v].dist == d)
    }

    pub fn state(&self, v: usize) -> Result<&VertexState> {
        self.vertices[v]
            .state
            .as_ref()
            .ok_or_else(|| Error::Precondition("ball was imported without triangulations".into()))
    }

    pub fn triangulation(&self, v: usize) -> Result<&Triangulation> {
        self.state(v).map(|s| &s.tri)
    }

    /// The arc of `v`'s triangulation whose flip leads to `w`.
    pub fn arc_between(&self, v: usize, w: usize) -> Result<ArcId> {
        let e = self
            .edge_between(v, w)
            .ok_or_else(|| Error::Precondition(format!("no edge {v}-{w}")))?;
        let coord = if e.u == v { &e.removed } else { &e.added };
        let st = self.state(v)?;
        st.coords
            .iter()
            .find(|(_, c)| c == coord)
            .map(|(a, _)| *a)
            .ok_or_else(|| Error::Precondition("edge arc missing from vertex".into()))
    }

    /// The neighbor reached from `v` by flipping `a`, if it lies in the ball.
    pub fn neighbor_via(&self, v: usize, a: ArcId) -> Result<Option<usize>> {
        let st = self.state(v)?;
        let coord = st.coords.get(a).ok_or(Error::UnknownArc(a.0))?;
        Ok(self.adj[v].iter().map(|&(w, e)| (w, &self.edges[e])).find_map(|(w, e)| {
            let mine = if e.u == v { &e.removed } else { &e.added };
            (mine == coord).then_some(w)
        }))
    }

    /// Degree histogram over fully explored vertices.
    pub fn degree_profile(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for v in 0..self.len() {
            if self.is_complete(v) {
                *m.entry(self.degree_in_ball(v)).or_insert(0) += 1;
            }
        }
        m
    }

    /// BFS path from the root to `v` as `(vertex, arc flipped to leave it)` pairs.
    pub fn path_from_root(&self, v: usize) -> Result<Vec<(usize, ArcId)>> {
        let mut path = Vec::new();
        let mut cur = v;
        while let Some((p, a)) = self.state(cur)?.parent {
            path.push((p, a));
            cur = p;
        }
        path.reverse();
        Ok(path)
    }

    /// Graph distances from `src` inside the ball.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        dist[src] = Some(0);
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have distances");
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Same vertex keys, distances, degrees and edges.
    pub fn graph_eq(&self, other: &Ball) -> bool {
        self.surface == other.surface
            && self.radius == other.radius
            && self.complete_to == other.complete_to
            && self.vertices.len() == other.vertices.len()
            && self
                .vertices
                .iter()
                .zip(&other.vertices)
                .all(|(a, b)| a.key == b.key && a.dist == b.dist && a.degree == b.degree)
            && self.edges == other.edges
    }
}

#[cfg(test)]
mod tests;

/// `count` triangulations reached by random walks of `steps` flips from the
/// base triangulation, reproducible from `seed`.
pub fn random_triangulations(sig: &SurfaceSig, count: usize, steps: usize, seed: u64) -> Result<Vec<Triangulation>> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let base = base_triangulation(sig)?;
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut t = base.clone();
        for _ in 0..steps {
            let Some(a) = t.flippable_arcs().choose(&mut rng).copied() else { break };
            t = t.flip(a.id)?;
        }
        out.push(t);
    }
    Ok(out)
}
