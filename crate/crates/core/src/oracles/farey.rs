//! Slope model of the flip graph of the once-punctured torus.

use std::collections::{HashMap, VecDeque};

use super::{arc_slots, flip_classes, replay, seed_classes, H1};
use crate::error::{Error, Result};
use crate::flipgraph::Ball;
use crate::trimap::{ArcId, SideKind, Triangulation};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// A primitive homology class up to sign, stored as `(p, q)` with `q > 0`, or `(1, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope(pub i64, pub i64);

impl Slope {
    /// Normalizes a nonzero primitive vector; `None` for zero or non-primitive input.
    pub fn from_class(h: H1) -> Option<Slope> {
        let H1(p, q) = h;
        if (p, q) == (0, 0) || gcd(p, q) != 1 {
            return None;
        }
        Some(if q < 0 || (q == 0 && p < 0) { Slope(-p, -q) } else { Slope(p, q) })
    }

    fn class(self) -> H1 {
        H1(self.0, self.1)
    }
}

impl std::fmt::Display for Slope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.0, self.1)
    }
}

fn det(u: Slope, v: Slope) -> i64 {
    u.0 * v.1 - u.1 * v.0
}

/// Interior intersections of the arcs with slopes `u` and `v` at one puncture;
/// `-1` when they coincide.
pub fn slope_intersection(u: Slope, v: Slope) -> i64 {
    if u == v {
        -1
    } else {
        det(u, v).abs() - 1
    }
}

/// Three pairwise unimodular slopes, sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FareyVertex(pub [Slope; 3]);

impl FareyVertex {
    pub fn new(mut s: [Slope; 3]) -> Result<FareyVertex> {
        s.sort();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            if det(s[i], s[j]).abs() != 1 {
                return Err(Error::Precondition(format!("{} and {} are not Farey neighbors", s[i], s[j])));
            }
        }
        Ok(FareyVertex(s))
    }

    pub fn root() -> FareyVertex {
        FareyVertex::new([Slope(1, 0), Slope(0, 1), Slope(1, 1)]).expect("standard triple")
    }
}

/// Replace each slope by the other mediant of the remaining two.
pub fn farey_neighbors(v: &FareyVertex) -> [FareyVertex; 3] {
    [0, 1, 2].map(|i| {
        let (x, y) = (v.0[(i + 1) % 3], v.0[(i + 2) % 3]);
        let sum = Slope::from_class(x.class() + y.class()).expect("unimodular sum is primitive");
        let diff = Slope::from_class(x.class() + (-y.class())).expect("unimodular difference is primitive");
        let new = if sum == v.0[i] { diff } else { sum };
        FareyVertex::new([new, x, y]).expect("mediant keeps unimodularity")
    })
}

/// BFS ball of the slope model: vertices with distances, and edges as index pairs.
pub fn farey_ball(r: usize) -> (Vec<(FareyVertex, usize)>, Vec<(usize, usize)>) {
    let mut index: HashMap<FareyVertex, usize> = HashMap::new();
    let mut verts = vec![(FareyVertex::root(), 0)];
    index.insert(FareyVertex::root(), 0);
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let (v, d) = verts[i];
        for w in farey_neighbors(&v) {
            let j = match index.get(&w) {
                Some(&j) => j,
                None if d < r => {
                    verts.push((w, d + 1));
                    index.insert(w, verts.len() - 1);
                    queue.push_back(verts.len() - 1);
                    verts.len() - 1
                }
                None => continue,
            };
            if i < j {
                edges.push((i, j));
            }
        }
    }
    (verts, edges)
}

pub(crate) fn torus_side(kind: SideKind) -> H1 {
    match kind {
        SideKind::HandleA(_) => H1(1, 0),
        SideKind::HandleB(_) => H1(0, 1),
        _ => H1(0, 0),
    }
}

/// Homology class of every arc of every vertex in a genus-one ball.
pub(crate) fn arc_classes(ball: &Ball) -> Result<Vec<Vec<(ArcId, H1)>>> {
    let root = ball.triangulation(ball.root())?;
    let seeds = seed_classes(root, torus_side)?;
    let all = replay(ball, seeds)?;
    (0..ball.len())
        .map(|v| {
            let t = ball.triangulation(v)?;
            Ok(arc_slots(t).into_iter().map(|(a, s)| (a, all[v][s.index()])).collect())
        })
        .collect()
}

/// Slopes of the reference family of a base triangulation: its arcs, then the
/// replacement of each flippable arc.
pub(crate) fn reference_classes(base: &Triangulation) -> Result<Vec<H1>> {
    let seeds = seed_classes(base, torus_side)?;
    let mut out: Vec<H1> = arc_slots(base).into_iter().map(|(_, s)| seeds[s.index()]).collect();
    for a in base.flippable_arcs() {
        let (t, vals) = flip_classes(base, &seeds, a.id)?;
        let added = t.next_arc_id().0 - 1;
        let s = t.slots_of(ArcId(added))?.0;
        out.push(vals[s.index()]);
    }
    Ok(out)
}

#[derive(Clone, Debug, Default)]
pub struct TorusReport {
    pub vertices: usize,
    pub model_vertices: usize,
    pub edges: usize,
    pub model_edges: usize,
    pub coordinate_checks: usize,
    pub failures: Vec<String>,
}

impl TorusReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compares a ball of the once-punctured torus with the slope model: the map
/// vertex ↦ slope triple must be a distance-preserving graph isomorphism onto
/// the model ball, and every stored arc coordinate must equal the intersection
/// number computed from slopes.
pub fn check_torus_ball(ball: &Ball) -> Result<TorusReport> {
    if ball.surface().to_string() != "S1,1" {
        return Err(Error::Precondition("the slope model is for S1,1".into()));
    }
    let classes = arc_classes(ball)?;
    let mut rep = TorusReport { vertices: ball.len(), edges: ball.edges().len(), ..Default::default() };
    let mut image = Vec::with_capacity(ball.len());
    for (v, arcs) in classes.iter().enumerate() {
        let slopes: Vec<Slope> = arcs.iter().filter_map(|&(_, h)| Slope::from_class(h)).collect();
        if slopes.len() != 3 {
            return Err(Error::ProjectionUndefined(format!("vertex {v} has classes {arcs:?}")));
        }
        image.push(FareyVertex::new([slopes[0], slopes[1], slopes[2]])?);
    }
    let (model, model_edges) = farey_ball(ball.radius());
    rep.model_vertices = model.len();
    rep.model_edges = model_edges.len();
    let index: HashMap<FareyVertex, usize> = model.iter().enumerate().map(|(i, (v, _))| (*v, i)).collect();
    let mut hit = vec![false; model.len()];
    for (v, img) in image.iter().enumerate() {
        match index.get(img) {
            None => rep.failures.push(format!("vertex {v} maps outside the model ball")),
            Some(&i) => {
                if hit[i] {
                    rep.failures.push(format!("two engine vertices map to {:?}", img));
                }
                hit[i] = true;
                if model[i].1 != ball.dist(v) {
                    rep.failures.push(format!("distance mismatch at vertex {v}"));
                }
            }
        }
    }
    if image[ball.root()] != FareyVertex::root() {
        rep.failures.push("root does not map to the model root".into());
    }
    let model_edge_set: std::collections::HashSet<(usize, usize)> = model_edges.iter().copied().collect();
    for e in ball.edges() {
        if let (Some(&i), Some(&j)) = (index.get(&image[e.u]), index.get(&image[e.v])) {
            if !model_edge_set.contains(&(i.min(j), i.max(j))) {
                rep.failures.push(format!("edge {}-{} is not a model edge", e.u, e.v));
            }
        }
    }
    if rep.vertices != rep.model_vertices || rep.edges != rep.model_edges {
        rep.failures.push(format!(
            "size mismatch: engine {}/{} vs model {}/{}",
            rep.vertices, rep.edges, rep.model_vertices, rep.model_edges
        ));
    }
    let refs: Vec<Slope> = reference_classes(ball.triangulation(ball.root())?)?
        .into_iter()
        .map(|h| Slope::from_class(h).ok_or_else(|| Error::Precondition("reference arc without slope".into())))
        .collect::<Result<_>>()?;
    for (v, arcs) in classes.iter().enumerate() {
        let coords = &ball.state(v)?.coords;
        for &(a, h) in arcs {
            let s = Slope::from_class(h).expect("checked above");
            let c = coords.get(a).ok_or(Error::UnknownArc(a.0))?;
            for (k, &r) in refs.iter().enumerate() {
                rep.coordinate_checks += 1;
                if c.as_slice()[k] != slope_intersection(s, r) {
                    rep.failures.push(format!("vertex {v} arc {a}: coordinate {k} is {} but slopes give {}", c.as_slice()[k], slope_intersection(s, r)));
                }
            }
        }
    }
    Ok(rep)
}
