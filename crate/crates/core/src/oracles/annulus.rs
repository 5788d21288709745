//! Winding-number model of the flip graph of the annulus with one marked
//! point on each boundary circle.
//!
//! Every arc joins the two boundary points; oriented from the point on the
//! first boundary circle, its class is an integer winding number. A
//! triangulation is a pair of consecutive windings `{k, k + 1}`.

use std::collections::HashMap;

use super::{replay, seed_classes};
use crate::error::{Error, Result};
use crate::flipgraph::Ball;
use crate::trimap::{SideKind, Slot, Triangulation};

/// The model ball: vertices `{k, k+1}` for `-r ≤ k ≤ r`, as `(k, distance)`.
pub fn annulus_model_ball(r: usize) -> Vec<(i64, usize)> {
    let r = r as i64;
    (-r..=r).map(|k| (k, k.unsigned_abs() as usize)).collect()
}

fn annulus_side(kind: SideKind) -> i64 {
    match kind {
        SideKind::Boundary { component: 0, .. } => 1,
        SideKind::Boundary { .. } => -1,
        _ => 0,
    }
}

/// Winding numbers of the arcs of every vertex, oriented away from the
/// marked point on the boundary circle through the base polygon's first corner.
pub fn annulus_windings(ball: &Ball) -> Result<Vec<Vec<i64>>> {
    let root = ball.triangulation(ball.root())?;
    let seeds = seed_classes(root, annulus_side)?;
    let all = replay(ball, seeds)?;
    let (root_vertex, _) = root.corner_vertices();
    let bottom_root = root_vertex[Slot::new(0, 0).index()];
    (0..ball.len())
        .map(|v| {
            let t = ball.triangulation(v)?;
            windings_of(t, &all[v], root, bottom_root)
        })
        .collect()
}

fn windings_of(t: &Triangulation, val: &[i64], root: &Triangulation, bottom_root: usize) -> Result<Vec<i64>> {
    let bottom = bottom_of(t, root, bottom_root)?;
    let (vert, _) = t.corner_vertices();
    let mut out = Vec::new();
    for a in t.arc_ids() {
        let (s, _) = t.slots_of(a)?;
        out.push(if vert[s.index()] == bottom { val[s.index()] } else { -val[s.index()] });
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, Default)]
pub struct AnnulusReport {
    pub vertices: usize,
    pub model_vertices: usize,
    pub coordinate_checks: usize,
    pub failures: Vec<String>,
}

impl AnnulusReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compares a ball of `S0,0,(1,1)` with the winding model, rooted at `{0, 1}`,
/// including every stored coordinate against `max(|k - m| - 1, 0)`.
pub fn check_annulus_ball(ball: &Ball) -> Result<AnnulusReport> {
    if ball.surface().to_string() != "S0,0,(1,1)" {
        return Err(Error::Precondition("the winding model is for S0,0,(1,1)".into()));
    }
    let wind = annulus_windings(ball)?;
    let mut rep = AnnulusReport { vertices: ball.len(), ..Default::default() };
    let shift = wind[ball.root()][0];
    let model: HashMap<i64, usize> = annulus_model_ball(ball.radius()).into_iter().collect();
    rep.model_vertices = model.len();
    let mut image = Vec::new();
    for (v, w) in wind.iter().enumerate() {
        if w.len() != 2 || w[1] != w[0] + 1 {
            rep.failures.push(format!("vertex {v} has windings {w:?}"));
            image.push(i64::MIN);
            continue;
        }
        let k = w[0] - shift;
        image.push(k);
        match model.get(&k) {
            Some(&d) if d == ball.dist(v) => {}
            Some(_) => rep.failures.push(format!("distance mismatch at vertex {v}")),
            None => rep.failures.push(format!("vertex {v} maps outside the model ball")),
        }
    }
    let mut seen = image.clone();
    seen.sort();
    seen.dedup();
    if seen.len() != image.len() || image.len() != model.len() {
        rep.failures.push("engine ball is not in bijection with the model".into());
    }
    for e in ball.edges() {
        if (image[e.u] - image[e.v]).abs() != 1 {
            rep.failures.push(format!("edge {}-{} is not a model edge", e.u, e.v));
        }
    }
    if ball.edges().len() + 1 != ball.len() {
        rep.failures.push("engine ball is not a path".into());
    }

    let base = ball.triangulation(ball.root())?;
    let refs = reference_windings(base)?;
    let (root_vertex, _) = base.corner_vertices();
    let bottom_root = root_vertex[Slot::new(0, 0).index()];
    let seeds = seed_classes(base, annulus_side)?;
    let all = replay(ball, seeds)?;
    for v in 0..ball.len() {
        let t = ball.triangulation(v)?;
        let coords = &ball.state(v)?.coords;
        let (vert, _) = t.corner_vertices();
        let bottom = bottom_of(t, base, bottom_root)?;
        for a in t.arc_ids() {
            let (s, _) = t.slots_of(a)?;
            let w = if vert[s.index()] == bottom { all[v][s.index()] } else { -all[v][s.index()] };
            let c = coords.get(a).ok_or(Error::UnknownArc(a.0))?;
            for (k, &r) in refs.iter().enumerate() {
                rep.coordinate_checks += 1;
                let expect = if w == r { -1 } else { ((w - r).abs() - 1).max(0) };
                if c.as_slice()[k] != expect {
                    rep.failures.push(format!("vertex {v} arc {a}: coordinate {k} is {} expected {expect}", c.as_slice()[k]));
                }
            }
        }
    }
    Ok(rep)
}

/// Corner class of the bottom point in `t`, found through a boundary segment
/// of the root (boundary segments keep their ids and directions under flips).
fn bottom_of(t: &Triangulation, root: &Triangulation, bottom_root: usize) -> Result<usize> {
    let (rv, _) = root.corner_vertices();
    let seg = (0..root.slot_count())
        .map(Slot::from_index)
        .find(|&s| root.is_boundary(s) && rv[s.index()] == bottom_root)
        .ok_or_else(|| Error::Precondition("no boundary segment at the bottom point".into()))?;
    let (vert, _) = t.corner_vertices();
    let (here, _) = t.slots_of(root.arc_at(seg).id)?;
    Ok(vert[here.index()])
}

fn reference_windings(base: &Triangulation) -> Result<Vec<i64>> {
    let seeds = seed_classes(base, annulus_side)?;
    let (rv, _) = base.corner_vertices();
    let bottom_root = rv[Slot::new(0, 0).index()];
    let orient = |t: &Triangulation, val: &[i64], a: crate::trimap::ArcId| -> Result<i64> {
        let bottom = bottom_of(t, base, bottom_root)?;
        let (vert, _) = t.corner_vertices();
        let (s, _) = t.slots_of(a)?;
        Ok(if vert[s.index()] == bottom { val[s.index()] } else { -val[s.index()] })
    };
    let mut out = Vec::new();
    for a in base.arc_ids() {
        out.push(orient(base, &seeds, a)?);
    }
    for a in base.flippable_arcs() {
        let (t, vals) = super::flip_classes(base, &seeds, a.id)?;
        let added = crate::trimap::ArcId(t.next_arc_id().0 - 1);
        out.push(orient(&t, &vals, added)?);
    }
    Ok(out)
}
