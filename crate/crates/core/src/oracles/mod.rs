//! Independent models of small flip graphs, used to check the engine.
//!
//! Nothing here reads arc coordinates or triangulation keys to reach a verdict.
//! Vertices are identified through homology: every oriented side-slot carries
//! the class of the side it represents, the classes are seeded on the cut-open
//! polygon of the base triangulation, and flips are replayed along the BFS tree
//! of a ball with the closure relation "the sides of a triangle sum to zero".
//! On the once-punctured torus an arc is determined by its slope, on the annulus
//! by its winding number, which gives complete models to compare against.

mod annulus;
mod capping;
mod enumerate;
mod exceptional;
mod farey;

use std::ops::{Add, Neg};

use crate::error::{Error, Result};
use crate::flipgraph::Ball;
use crate::trimap::{base_polygon, SideKind, Slot, Triangulation};

pub use annulus::{annulus_model_ball, annulus_windings, check_annulus_ball, AnnulusReport};
pub use capping::{cap_boundary, capped_projection};
pub use enumerate::{count_labeled, enumerate_all, gluing_count, Enumeration, OrientedClass};
pub use exceptional::{exceptional_signatures, render_exceptional_table};
pub use farey::{check_torus_ball, farey_ball, farey_neighbors, slope_intersection, FareyVertex, Slope, TorusReport};

/// An integer vector in the first homology of a genus-one surface.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct H1(pub i64, pub i64);

impl Add for H1 {
    type Output = H1;
    fn add(self, o: H1) -> H1 {
        H1(self.0 + o.0, self.1 + o.1)
    }
}

impl Neg for H1 {
    type Output = H1;
    fn neg(self) -> H1 {
        H1(-self.0, -self.1)
    }
}

pub(crate) trait Class: Copy + Default + PartialEq + Add<Output = Self> + Neg<Output = Self> + std::fmt::Debug {}
impl Class for H1 {}
impl Class for i64 {}

/// Seeds slot classes on the base triangulation from the polygon side values.
pub(crate) fn seed_classes<V: Class>(
    base: &Triangulation,
    side_value: impl Fn(SideKind) -> V,
) -> Result<Vec<V>> {
    let poly = base_polygon(&base.signature()?);
    let k = poly.sides.len();
    let mut val = vec![V::default(); base.slot_count()];
    for (s, side) in poly.sides.iter().enumerate() {
        let v = side_value(side.kind);
        val[poly.slot_of_side(s).index()] = if side.inverse { -v } else { v };
    }
    for t in 0..k - 2 {
        if t > 0 {
            val[Slot::new(t, 0).index()] = -val[Slot::new(t - 1, 2).index()];
        }
        let closing = -(val[Slot::new(t, 0).index()] + val[Slot::new(t, 1).index()]);
        if t == k - 3 {
            if val[Slot::new(t, 2).index()] != closing {
                return Err(Error::Precondition("polygon side values do not close up".into()));
            }
        } else {
            val[Slot::new(t, 2).index()] = closing;
        }
    }
    check_closed(base, &val)?;
    Ok(val)
}

/// Triangle sums vanish and glued slots carry opposite classes.
pub(crate) fn check_closed<V: Class>(t: &Triangulation, val: &[V]) -> Result<()> {
    for tri in 0..t.triangle_count() {
        let s = (0..3).map(|i| val[3 * tri + i]).fold(V::default(), |a, b| a + b);
        if s != V::default() {
            return Err(Error::Precondition(format!("triangle {tri} does not close: {s:?}")));
        }
    }
    for i in 0..t.slot_count() {
        if let Some(p) = t.partner(Slot::from_index(i)) {
            if val[p.index()] != -val[i] {
                return Err(Error::Precondition(format!("glued slots disagree at {}", Slot::from_index(i))));
            }
        }
    }
    Ok(())
}

/// Classes of the slots after flipping `arc`, given the classes before.
pub(crate) fn flip_classes<V: Class>(before: &Triangulation, val: &[V], arc: crate::trimap::ArcId) -> Result<(Triangulation, Vec<V>)> {
    let out = before.flip_detailed(arc)?;
    let mut next = val.to_vec();
    for (old, new) in out.relocated {
        next[new.index()] = val[old.index()];
    }
    let [n1, n2] = out.new_slots;
    let t = n1.tri;
    let v = -(next[Slot::new(t, 0).index()] + next[Slot::new(t, 1).index()]);
    next[n1.index()] = v;
    next[n2.index()] = -v;
    check_closed(&out.triangulation, &next)?;
    Ok((out.triangulation, next))
}

/// Replays the BFS tree of `ball` and returns the slot classes of every vertex,
/// checking that each replayed flip reproduces the stored triangulation.
pub(crate) fn replay<V: Class + Send + Sync>(ball: &Ball, root_classes: Vec<V>) -> Result<Vec<Vec<V>>> {
    let mut out: Vec<Option<Vec<V>>> = vec![None; ball.len()];
    out[ball.root()] = Some(root_classes);
    for v in 0..ball.len() {
        if v == ball.root() {
            continue;
        }
        let (p, arc) = ball
            .state(v)?
            .parent
            .ok_or_else(|| Error::Precondition("non-root vertex without parent".into()))?;
        let pv = out[p].as_ref().ok_or_else(|| Error::Precondition("parent not yet replayed".into()))?;
        let (tri, vals) = flip_classes(ball.triangulation(p)?, pv, arc)?;
        if &tri != ball.triangulation(v)? {
            return Err(Error::Precondition(format!("replayed flip disagrees with stored vertex {v}")));
        }
        out[v] = Some(vals);
    }
    Ok(out.into_iter().map(|v| v.expect("all vertices replayed")).collect())
}

/// For every interior arc of `t`, one slot carrying it.
pub(crate) fn arc_slots(t: &Triangulation) -> Vec<(crate::trimap::ArcId, Slot)> {
    t.arc_ids()
        .into_iter()
        .map(|a| (a, t.slots_of(a).expect("listed arc").0))
        .collect()
}
