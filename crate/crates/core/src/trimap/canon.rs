//! Canonical form of a triangulation up to homeomorphism (either orientation).

use super::{Slot, Triangulation};

/// Opaque key: equal iff the two triangulations differ by a homeomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalClass(Vec<u32>);

impl CanonicalClass {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

/// BFS code from slot `start`: triangles numbered in discovery order, each
/// read starting at the side it was entered through. A side is encoded as
/// `0` for boundary and `3·label + offset + 1` otherwise.
pub(crate) fn bfs_code(partner: &[Option<u32>], start: Slot, best: Option<&[u32]>) -> Option<Vec<u32>> {
    let tris = partner.len() / 3;
    let mut label = vec![u32::MAX; tris];
    let mut entry = vec![0usize; tris];
    let mut order = Vec::with_capacity(tris);
    label[start.tri] = 0;
    entry[start.tri] = start.side;
    order.push(start.tri);
    let mut code = Vec::with_capacity(partner.len());
    let mut head = 0;
    let mut smaller = false;
    while head < order.len() {
        let t = order[head];
        head += 1;
        for k in 0..3 {
            let s = Slot::new(t, (entry[t] + k) % 3);
            let v = match partner[s.index()] {
                None => 0,
                Some(p) => {
                    let p = Slot::from_index(p as usize);
                    if label[p.tri] == u32::MAX {
                        label[p.tri] = order.len() as u32;
                        entry[p.tri] = p.side;
                        order.push(p.tri);
                    }
                    3 * label[p.tri] + ((p.side + 3 - entry[p.tri]) % 3) as u32 + 1
                }
            };
            if let (false, Some(b)) = (smaller, best) {
                let i = code.len();
                if v > b[i] {
                    return None;
                }
                if v < b[i] {
                    smaller = true;
                }
            }
            code.push(v);
        }
    }
    Some(code)
}

impl Triangulation {
    /// Canonical class; arc ids and triangle labels are ignored.
    pub fn canonical_class(&self) -> CanonicalClass {
        if let Some(sig) = &self.declared {
            let mut v = vec![u32::MAX];
            v.extend(sig.to_string().bytes().map(u32::from));
            return CanonicalClass(v);
        }
        let mirror = self.mirrored();
        let mut best: Option<Vec<u32>> = None;
        for t in [self, &mirror] {
            for s in 0..t.slot_count() {
                if let Some(c) = bfs_code(&t.partner, Slot::from_index(s), best.as_deref()) {
                    if best.as_ref().is_none_or(|b| c < *b) {
                        best = Some(c);
                    }
                }
            }
        }
        CanonicalClass(best.unwrap_or_default())
    }
}
