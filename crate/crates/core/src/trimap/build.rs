//! A deterministic base triangulation for every signature.
//!
//! The surface is cut open into a polygon whose sides are paired by a word:
//! `a b a⁻ b⁻` per handle, `c c⁻` per slit (each slit adds one interior
//! marked point), `d ∂…∂ d⁻` for a boundary circle wrapped by a loop `d`,
//! and for surfaces without interior marked points one boundary circle left
//! open as a run of unpaired sides. The polygon is then fanned from its
//! first vertex.

use super::{Slot, Triangulation};
use crate::error::{Error, Result};
use crate::surface::{self, SurfaceSig};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideKind {
    HandleA(usize),
    HandleB(usize),
    Slit(usize),
    Wrap(usize),
    /// `k`-th segment of boundary circle `component`.
    Boundary { component: usize, index: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolygonSide {
    pub kind: SideKind,
    /// True for the second occurrence (`x⁻`) of a paired letter.
    pub inverse: bool,
    pub partner: Option<usize>,
}

/// The cut-open polygon behind [`base_triangulation`].
#[derive(Clone, Debug)]
pub struct BasePolygon {
    pub sig: SurfaceSig,
    pub sides: Vec<PolygonSide>,
}

impl BasePolygon {
    /// Slot of the fanned triangulation occupied by polygon side `s`.
    /// Side `s` runs from polygon vertex `s` to `s + 1`, matching slot direction.
    pub fn slot_of_side(&self, s: usize) -> Slot {
        let k = self.sides.len();
        if s == 0 {
            Slot::new(0, 0)
        } else if s == k - 1 {
            Slot::new(k - 3, 2)
        } else {
            Slot::new(s - 1, 1)
        }
    }
}

pub fn base_polygon(sig: &SurfaceSig) -> BasePolygon {
    let mut sides: Vec<PolygonSide> = Vec::new();
    let open_side = |kind| PolygonSide { kind, inverse: false, partner: None };
    let close = |sides: &mut Vec<PolygonSide>, first: usize| {
        let kind = sides[first].kind;
        sides.push(PolygonSide { kind, inverse: true, partner: Some(first) });
        let second = sides.len() - 1;
        sides[first].partner = Some(second);
    };
    for h in 0..sig.genus() as usize {
        let a = sides.len();
        sides.push(open_side(SideKind::HandleA(h)));
        sides.push(open_side(SideKind::HandleB(h)));
        close(&mut sides, a);
        close(&mut sides, a + 1);
    }
    let boundary = sig.boundary();
    let n = sig.interior() as usize;
    let slits = n.saturating_sub(1);
    for i in 0..slits {
        sides.push(open_side(SideKind::Slit(i)));
        let first = sides.len() - 1;
        close(&mut sides, first);
    }
    let (wrapped, open): (&[u32], Option<u32>) = if n >= 1 || boundary.is_empty() {
        (boundary, None)
    } else {
        (&boundary[..boundary.len() - 1], Some(boundary[boundary.len() - 1]))
    };
    for (c, &p) in wrapped.iter().enumerate() {
        sides.push(open_side(SideKind::Wrap(c)));
        let first = sides.len() - 1;
        for index in 0..p as usize {
            sides.push(open_side(SideKind::Boundary { component: c, index }));
        }
        close(&mut sides, first);
    }
    if let Some(p) = open {
        let component = wrapped.len();
        for index in 0..p as usize {
            sides.push(open_side(SideKind::Boundary { component, index }));
        }
    }
    BasePolygon { sig: sig.clone(), sides }
}

/// The fanned polygon triangulation of `sig`; the starting vertex of every flip graph.
pub fn base_triangulation(sig: &SurfaceSig) -> Result<Triangulation> {
    if surface::triangle_count(sig) == 0 {
        return Triangulation::empty(sig.clone());
    }
    let poly = base_polygon(sig);
    let k = poly.sides.len();
    if k < 3 {
        return Err(Error::NoTriangulation(sig.clone()));
    }
    let tris = k - 2;
    let mut pairs = Vec::new();
    for t in 0..tris.saturating_sub(1) {
        pairs.push((Slot::new(t, 2), Slot::new(t + 1, 0)));
    }
    for (s, side) in poly.sides.iter().enumerate() {
        if let Some(p) = side.partner {
            if p > s {
                pairs.push((poly.slot_of_side(s), poly.slot_of_side(p)));
            }
        }
    }
    let t = Triangulation::from_pairs(tris, &pairs)?;
    debug_assert_eq!(&t.signature()?, sig);
    Ok(t)
}
