//! Combinatorial triangulations as gluings of oriented triangles.
//!
//! A triangulation with `k` triangles has `3k` side-slots `(t, i)`. Side `i`
//! of triangle `t` runs from corner `i` to corner `i + 1` (indices mod 3),
//! so the slots of a triangle are cyclically ordered by the orientation.
//! Two slots are glued orientation-reversingly: gluing `(t, i)` to `(u, j)`
//! identifies corner `i` of `t` with corner `j + 1` of `u`, and corner
//! `i + 1` of `t` with corner `j` of `u`. Unpaired slots are boundary
//! segments. A triangle with two of its own slots glued together is folded.
//!
//! Every slot carries an arc id; both slots of an interior arc share it.
//! Ids are stable under [`Triangulation::flip`], which hands out a fresh id
//! to the arc it creates.

mod build;
mod canon;
mod text;
mod topology;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surface::{self, SurfaceSig};

pub use build::{base_polygon, base_triangulation, BasePolygon, PolygonSide, SideKind};
pub use canon::CanonicalClass;

/// Stable identifier of an arc (or boundary segment) within a flip lineage.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArcId(pub u32);

impl fmt::Display for ArcId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArcKind {
    Interior,
    Boundary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcRef {
    pub id: ArcId,
    pub kind: ArcKind,
}

/// A side-slot `(tri, side)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub tri: usize,
    pub side: usize,
}

impl Slot {
    pub fn new(tri: usize, side: usize) -> Self {
        debug_assert!(side < 3);
        Slot { tri, side }
    }

    pub fn index(self) -> usize {
        3 * self.tri + self.side
    }

    pub fn from_index(i: usize) -> Self {
        Slot { tri: i / 3, side: i % 3 }
    }

    /// The slot `k` steps further round the same triangle.
    pub fn rotate(self, k: usize) -> Self {
        Slot { tri: self.tri, side: (self.side + k) % 3 }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.tri, self.side)
    }
}

/// The four sides around a flippable arc, in cyclic order.
///
/// `sides[0]`/`sides[2]` and `sides[1]`/`sides[3]` are opposite. Each
/// entry is the arc occupying that side (boundary segments included).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Quad {
    pub diagonal: ArcId,
    pub sides: [ArcRef; 4],
}

/// Result of a flip with enough bookkeeping to follow slots across it.
#[derive(Clone, Debug)]
pub struct FlipOutcome {
    pub triangulation: Triangulation,
    pub removed: ArcId,
    pub added: ArcId,
    pub quad: Quad,
    /// `(old slot, new slot)` for the four outer sides of the quad. All other
    /// slots keep their index. Side directions are preserved.
    pub relocated: [(Slot, Slot); 4],
    /// The two slots of the new arc.
    pub new_slots: [Slot; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangulation {
    partner: Vec<Option<u32>>,
    arc: Vec<u32>,
    next_id: u32,
    /// Signature for the triangle-free surfaces, whose topology cannot be
    /// read off an empty gluing.
    declared: Option<SurfaceSig>,
}

impl Triangulation {
    /// Builds a gluing from explicit slot pairs; slots not mentioned are boundary.
    /// Arc ids are assigned in order of each orbit's smallest slot.
    pub fn from_pairs(triangles: usize, pairs: &[(Slot, Slot)]) -> Result<Self> {
        let n = 3 * triangles;
        let mut partner: Vec<Option<u32>> = vec![None; n];
        for &(a, b) in pairs {
            let (ia, ib) = (a.index(), b.index());
            if ia >= n || ib >= n || a.side > 2 || b.side > 2 {
                return Err(Error::MalformedTriangulation(format!("slot out of range in {a}-{b}")));
            }
            if ia == ib {
                return Err(Error::MalformedTriangulation(format!("slot {a} glued to itself")));
            }
            if partner[ia].is_some() || partner[ib].is_some() {
                return Err(Error::MalformedTriangulation(format!("slot paired twice in {a}-{b}")));
            }
            partner[ia] = Some(ib as u32);
            partner[ib] = Some(ia as u32);
        }
        let t = Self::from_partner_vec(partner);
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_partner_vec(partner: Vec<Option<u32>>) -> Self {
        let n = partner.len();
        let mut arc = vec![u32::MAX; n];
        let mut next = 0u32;
        for s in 0..n {
            if arc[s] == u32::MAX {
                arc[s] = next;
                if let Some(p) = partner[s] {
                    arc[p as usize] = next;
                }
                next += 1;
            }
        }
        Triangulation { partner, arc, next_id: next, declared: None }
    }

    /// The triangulation of a triangle-free surface (`S_{0,1}`, `S_{0,2}`,
    /// `S_{0,0,(1)}`, `S_{0,0,(2)}`).
    pub fn empty(sig: SurfaceSig) -> Result<Self> {
        if surface::triangle_count(&sig) != 0 {
            return Err(Error::Precondition(format!("{sig} needs triangles")));
        }
        Ok(Triangulation { partner: Vec::new(), arc: Vec::new(), next_id: 0, declared: Some(sig) })
    }

    pub fn triangle_count(&self) -> usize {
        self.partner.len() / 3
    }

    pub fn slot_count(&self) -> usize {
        self.partner.len()
    }

    pub fn declared_signature(&self) -> Option<&SurfaceSig> {
        self.declared.as_ref()
    }

    pub fn partner(&self, s: Slot) -> Option<Slot> {
        self.partner[s.index()].map(|p| Slot::from_index(p as usize))
    }

    pub fn arc_at(&self, s: Slot) -> ArcRef {
        let kind = if self.partner[s.index()].is_some() { ArcKind::Interior } else { ArcKind::Boundary };
        ArcRef { id: ArcId(self.arc[s.index()]), kind }
    }

    /// The id the next flip will assign.
    pub fn next_arc_id(&self) -> ArcId {
        ArcId(self.next_id)
    }

    pub fn is_boundary(&self, s: Slot) -> bool {
        self.partner[s.index()].is_none()
    }

    /// Interior arcs, sorted by id.
    pub fn arcs(&self) -> Vec<ArcRef> {
        let mut v: Vec<ArcRef> = (0..self.slot_count())
            .filter(|&s| matches!(self.partner[s], Some(p) if (p as usize) > s))
            .map(|s| ArcRef { id: ArcId(self.arc[s]), kind: ArcKind::Interior })
            .collect();
        v.sort();
        v
    }

    pub fn arc_ids(&self) -> Vec<ArcId> {
        self.arcs().into_iter().map(|a| a.id).collect()
    }

    pub fn boundary_segments(&self) -> Vec<ArcRef> {
        let mut v: Vec<ArcRef> = (0..self.slot_count())
            .filter(|&s| self.partner[s].is_none())
            .map(|s| ArcRef { id: ArcId(self.arc[s]), kind: ArcKind::Boundary })
            .collect();
        v.sort();
        v
    }

    pub fn interior_arc_count(&self) -> usize {
        self.partner.iter().filter(|p| p.is_some()).count() / 2
    }

    /// Slots carrying arc `id` (one for a boundary segment, two for an interior arc).
    pub fn slots_of(&self, id: ArcId) -> Result<(Slot, Option<Slot>)> {
        let s = self
            .arc
            .iter()
            .position(|&a| a == id.0)
            .ok_or(Error::UnknownArc(id.0))?;
        Ok((Slot::from_index(s), self.partner[s].map(|p| Slot::from_index(p as usize))))
    }

    pub fn contains_arc(&self, id: ArcId) -> bool {
        self.arc.contains(&id.0)
    }

    /// Folded: two of the triangle's own slots are glued together.
    pub fn is_folded(&self, tri: usize) -> bool {
        (0..3).any(|i| matches!(self.partner[3 * tri + i], Some(p) if p as usize / 3 == tri))
    }

    pub fn folded_triangles(&self) -> Vec<usize> {
        (0..self.triangle_count()).filter(|&t| self.is_folded(t)).collect()
    }

    /// The arcs of triangle `tri`, side by side.
    pub fn sides(&self, tri: usize) -> [ArcRef; 3] {
        [0, 1, 2].map(|i| self.arc_at(Slot::new(tri, i)))
    }

    /// Interior arcs that are not the inner side of a folded triangle.
    pub fn flippable_arcs(&self) -> Vec<ArcRef> {
        self.arcs()
            .into_iter()
            .filter(|a| {
                let (s, p) = self.slots_of(a.id).expect("listed arc exists");
                matches!(p, Some(p) if p.tri != s.tri)
            })
            .collect()
    }

    pub fn is_flippable(&self, id: ArcId) -> bool {
        matches!(self.slots_of(id), Ok((s, Some(p))) if s.tri != p.tri)
    }

    fn flip_slots(&self, id: ArcId) -> Result<(Slot, Slot)> {
        match self.slots_of(id)? {
            (_, None) => Err(Error::NotInterior(id.0)),
            (s, Some(p)) if s.tri == p.tri => Err(Error::NotFlippable(id.0)),
            (s, Some(p)) => Ok((s, p)),
        }
    }

    /// The quadrilateral around a flippable arc.
    pub fn quad(&self, id: ArcId) -> Result<Quad> {
        let (e1, e2) = self.flip_slots(id)?;
        Ok(Quad {
            diagonal: id,
            sides: [
                self.arc_at(e2.rotate(1)),
                self.arc_at(e2.rotate(2)),
                self.arc_at(e1.rotate(1)),
                self.arc_at(e1.rotate(2)),
            ],
        })
    }

    pub fn flip(&self, id: ArcId) -> Result<Triangulation> {
        self.flip_detailed(id).map(|o| o.triangulation)
    }

    /// Replaces arc `id` by the other diagonal of its quadrilateral.
    ///
    /// With `e = (t,i) ~ (u,j)`, corners `A = t.i`, `B = t.(i+1)`,
    /// `C = t.(i+2)` and `D = u.(j+2)`, the quad reads `A→D→B→C→A`. The new
    /// triangles are `t = (C, A, D)` and `u = (D, B, C)`, glued along `(t,2)`
    /// and `(u,2)`. Outer slots move; their gluings (including gluings among
    /// themselves) follow them.
    pub fn flip_detailed(&self, id: ArcId) -> Result<FlipOutcome> {
        let (e1, e2) = self.flip_slots(id)?;
        let quad = self.quad(id)?;
        let (t, u) = (e1.tri, e2.tri);
        let relocated = [
            (e1.rotate(2), Slot::new(t, 0)),
            (e2.rotate(1), Slot::new(t, 1)),
            (e2.rotate(2), Slot::new(u, 0)),
            (e1.rotate(1), Slot::new(u, 1)),
        ];
        let moved = |s: usize| -> usize {
            relocated
                .iter()
                .find(|(o, _)| o.index() == s)
                .map(|(_, n)| n.index())
                .unwrap_or(s)
        };
        let mut partner = self.partner.clone();
        let mut arc = self.arc.clone();
        let saved: Vec<(usize, Option<usize>, u32)> = relocated
            .iter()
            .map(|(old, new)| {
                let p = self.partner[old.index()].map(|p| moved(p as usize));
                (new.index(), p, self.arc[old.index()])
            })
            .collect();
        for k in 0..3 {
            partner[3 * t + k] = None;
            partner[3 * u + k] = None;
        }
        for &(new, p, a) in &saved {
            partner[new] = p.map(|p| p as u32);
            arc[new] = a;
            if let Some(p) = p {
                partner[p] = Some(new as u32);
            }
        }
        let (n1, n2) = (Slot::new(t, 2), Slot::new(u, 2));
        partner[n1.index()] = Some(n2.index() as u32);
        partner[n2.index()] = Some(n1.index() as u32);
        arc[n1.index()] = self.next_id;
        arc[n2.index()] = self.next_id;
        let triangulation =
            Triangulation { partner, arc, next_id: self.next_id + 1, declared: None };
        debug_assert!(triangulation.check_involution().is_ok());
        Ok(FlipOutcome {
            triangulation,
            removed: id,
            added: ArcId(self.next_id),
            quad,
            relocated,
            new_slots: [n1, n2],
        })
    }

    /// Number of triangles having both `a` and `b` among their sides.
    pub fn common_triangles(&self, a: ArcId, b: ArcId) -> Result<usize> {
        if a == b {
            return Err(Error::SameArc(a.0));
        }
        for x in [a, b] {
            if let (_, None) = self.slots_of(x)? {
                return Err(Error::NotInterior(x.0));
            }
        }
        Ok((0..self.triangle_count())
            .filter(|&t| {
                let s = self.sides(t);
                s.iter().any(|r| r.id == a) && s.iter().any(|r| r.id == b)
            })
            .count())
    }

    /// The triangles bordering arc `id` (one entry for an inner side or a boundary segment).
    pub fn triangles_of(&self, id: ArcId) -> Result<Vec<usize>> {
        let (s, p) = self.slots_of(id)?;
        let mut v = vec![s.tri];
        if let Some(p) = p {
            if p.tri != s.tri {
                v.push(p.tri);
            }
        }
        Ok(v)
    }

    fn check_involution(&self) -> Result<()> {
        if self.partner.len() % 3 != 0 {
            return Err(Error::MalformedTriangulation("slot count not a multiple of 3".into()));
        }
        for (s, p) in self.partner.iter().enumerate() {
            if let Some(p) = *p {
                let p = p as usize;
                if p == s || p >= self.partner.len() || self.partner[p] != Some(s as u32) {
                    return Err(Error::MalformedTriangulation(format!(
                        "pairing is not a fixed-point-free involution at {}",
                        Slot::from_index(s)
                    )));
                }
                if self.arc[p] != self.arc[s] {
                    return Err(Error::MalformedTriangulation("paired slots carry different arc ids".into()));
                }
            }
        }
        Ok(())
    }

    /// Structural validity: involution, connectivity and a consistent surface.
    pub fn validate(&self) -> Result<()> {
        self.check_involution()?;
        if self.triangle_count() == 0 {
            return match &self.declared {
                Some(_) => Ok(()),
                None => Err(Error::MalformedTriangulation("empty gluing without declared surface".into())),
            };
        }
        let sig = self.signature()?;
        if self.interior_arc_count() != surface::arc_count(&sig) {
            return Err(Error::MalformedTriangulation(format!(
                "{} arcs but {} has {}",
                self.interior_arc_count(),
                sig,
                surface::arc_count(&sig)
            )));
        }
        Ok(())
    }

    /// Same gluing with triangle `t` renamed `perm[t]` and its sides rotated by `rot[t]`.
    pub fn relabeled(&self, perm: &[usize], rot: &[usize]) -> Triangulation {
        let n = self.slot_count();
        let map = |s: usize| -> usize {
            let sl = Slot::from_index(s);
            Slot::new(perm[sl.tri], (sl.side + rot[sl.tri]) % 3).index()
        };
        let mut partner = vec![None; n];
        let mut arc = vec![0; n];
        for s in 0..n {
            partner[map(s)] = self.partner[s].map(|p| map(p as usize) as u32);
            arc[map(s)] = self.arc[s];
        }
        Triangulation { partner, arc, next_id: self.next_id, declared: self.declared.clone() }
    }

    /// The orientation-reversed gluing: side `k` becomes side `2 - k`.
    pub fn mirrored(&self) -> Triangulation {
        let n = self.slot_count();
        let map = |s: usize| -> usize {
            let sl = Slot::from_index(s);
            Slot::new(sl.tri, 2 - sl.side).index()
        };
        let mut partner = vec![None; n];
        let mut arc = vec![0; n];
        for s in 0..n {
            partner[map(s)] = self.partner[s].map(|p| map(p as usize) as u32);
            arc[map(s)] = self.arc[s];
        }
        Triangulation { partner, arc, next_id: self.next_id, declared: self.declared.clone() }
    }

    /// Same gluing with arc ids renumbered by smallest slot.
    pub fn normalized(&self) -> Triangulation {
        let mut t = Self::from_partner_vec(self.partner.clone());
        t.declared = self.declared.clone();
        t
    }
}

#[cfg(test)]
mod tests;
