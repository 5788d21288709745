//! Reading the surface back off a gluing.

use super::{ArcId, Slot, Triangulation};
use crate::error::{Error, Result};
use crate::surface::SurfaceSig;

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Corner classes under the gluing: `corner_classes[3t + k]` is the marked
/// point at corner `k` of triangle `t`, numbered densely.
pub(crate) fn corner_classes(partner: &[Option<u32>]) -> (Vec<usize>, usize) {
    let mut uf = UnionFind::new(partner.len());
    for (s, p) in partner.iter().enumerate() {
        if let Some(p) = *p {
            let (a, b) = (Slot::from_index(s), Slot::from_index(p as usize));
            uf.union(a.index(), b.rotate(1).index());
            uf.union(a.rotate(1).index(), b.index());
        }
    }
    let mut label = vec![usize::MAX; partner.len()];
    let mut out = vec![0; partner.len()];
    let mut next = 0;
    for c in 0..partner.len() {
        let r = uf.find(c);
        if label[r] == usize::MAX {
            label[r] = next;
            next += 1;
        }
        out[c] = label[r];
    }
    (out, next)
}

/// Signatures of the connected components of a (possibly disconnected) gluing.
pub(crate) fn component_signatures(partner: &[Option<u32>]) -> Result<Vec<SurfaceSig>> {
    let tris = partner.len() / 3;
    let mut comp = UnionFind::new(tris);
    for (s, p) in partner.iter().enumerate() {
        if let Some(p) = *p {
            comp.union(s / 3, p as usize / 3);
        }
    }
    let (corner, nv) = corner_classes(partner);
    let mut roots: Vec<usize> = (0..tris).map(|t| comp.find(t)).collect();
    roots.sort_unstable();
    roots.dedup();

    let mut out = Vec::new();
    for r in roots {
        let in_comp: Vec<usize> = (0..tris).filter(|&t| comp.find(t) == r).collect();
        let faces = in_comp.len() as i64;
        let mut boundary_vertex = vec![false; nv];
        let mut used = vec![false; nv];
        let mut pairs = 0i64;
        let mut segments: Vec<(usize, usize)> = Vec::new();
        for &t in &in_comp {
            for k in 0..3 {
                let s = Slot::new(t, k);
                used[corner[s.index()]] = true;
                match partner[s.index()] {
                    Some(p) => {
                        if (p as usize) > s.index() {
                            pairs += 1;
                        }
                    }
                    None => {
                        let (a, b) = (corner[s.index()], corner[s.rotate(1).index()]);
                        boundary_vertex[a] = true;
                        boundary_vertex[b] = true;
                        segments.push((a, b));
                    }
                }
            }
        }
        let verts = used.iter().filter(|&&u| u).count() as i64;
        let edges = pairs + segments.len() as i64;
        let chi = verts - edges + faces;

        let mut buf = UnionFind::new(nv);
        for &(a, b) in &segments {
            buf.union(a, b);
        }
        let mut per_component: Vec<(usize, u32)> = Vec::new();
        for v in 0..nv {
            if used[v] && boundary_vertex[v] {
                let root = buf.find(v);
                match per_component.iter_mut().find(|(r, _)| *r == root) {
                    Some(e) => e.1 += 1,
                    None => per_component.push((root, 1)),
                }
            }
        }
        // A boundary circle through p marked points has exactly p segments.
        for &(root, p) in &per_component {
            let segs = segments.iter().filter(|(a, _)| buf.find(*a) == root).count() as u32;
            if segs != p {
                return Err(Error::MalformedTriangulation(
                    "boundary segments do not close up into circles".into(),
                ));
            }
        }
        let b = per_component.len() as i64;
        let interior = used
            .iter()
            .zip(&boundary_vertex)
            .filter(|(u, bd)| **u && !**bd)
            .count() as u32;
        let twice_g = 2 - b - chi;
        if twice_g < 0 || twice_g % 2 != 0 {
            return Err(Error::MalformedTriangulation(format!("impossible Euler characteristic {chi}")));
        }
        let boundary: Vec<u32> = per_component.iter().map(|&(_, p)| p).collect();
        out.push(SurfaceSig::new((twice_g / 2) as u32, interior, boundary)?);
    }
    out.sort();
    Ok(out)
}

impl Triangulation {
    /// The surface this gluing triangulates. Fails if it is disconnected.
    pub fn signature(&self) -> Result<SurfaceSig> {
        if let Some(sig) = &self.declared {
            return Ok(sig.clone());
        }
        if self.triangle_count() == 0 {
            return Err(Error::MalformedTriangulation("no triangles".into()));
        }
        let mut comps = component_signatures(&self.partner)?;
        if comps.len() != 1 {
            return Err(Error::MalformedTriangulation(format!(
                "gluing has {} connected components",
                comps.len()
            )));
        }
        Ok(comps.pop().expect("one component"))
    }

    /// Marked point at each corner, as `vertex[3t + k]`, plus the vertex count.
    pub fn corner_vertices(&self) -> (Vec<usize>, usize) {
        corner_classes(&self.partner)
    }

    /// Signatures of the pieces obtained by cutting along `arcs`, sorted.
    pub fn cut_along(&self, arcs: &[ArcId]) -> Result<Vec<SurfaceSig>> {
        let mut partner = self.partner.clone();
        for &a in arcs {
            match self.slots_of(a)? {
                (_, None) => return Err(Error::NotInterior(a.0)),
                (s, Some(p)) => {
                    partner[s.index()] = None;
                    partner[p.index()] = None;
                }
            }
        }
        component_signatures(&partner)
    }

    /// Signature of the subcomplex spanned by triangles `tris` glued only along `arcs`.
    pub fn subcomplex_signature(&self, tris: &[usize], arcs: &[ArcId]) -> Result<SurfaceSig> {
        let mut index = vec![usize::MAX; self.triangle_count()];
        for (k, &t) in tris.iter().enumerate() {
            index[t] = k;
        }
        let mut partner = vec![None; 3 * tris.len()];
        for (k, &t) in tris.iter().enumerate() {
            for i in 0..3 {
                let s = Slot::new(t, i);
                if let Some(p) = self.partner(s) {
                    if index[p.tri] != usize::MAX && arcs.contains(&self.arc_at(s).id) {
                        partner[3 * k + i] = Some((3 * index[p.tri] + p.side) as u32);
                    }
                }
            }
        }
        let mut comps = component_signatures(&partner)?;
        if comps.len() != 1 {
            return Err(Error::Precondition("subcomplex is disconnected".into()));
        }
        Ok(comps.pop().expect("one component"))
    }
}
