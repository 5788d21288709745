//! Intrinsic arc identity via intersection numbers with a fixed reference family.
//!
//! The reference family is the base triangulation's arcs followed by, for each
//! flippable base arc, the arc that replaces it in a single flip. An arc's
//! [`ArcCoord`] lists its geometric intersection numbers with the family, with
//! `-1` marking "is this reference arc". The coordinates of an arc created by
//! a flip follow from the four sides of its quadrilateral by the max-plus
//! exchange, so coordinates travel along flip paths without any geometry.
//! A triangulation's [`TriKey`] is the sorted list of its arcs' coordinates.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::trimap::{ArcId, ArcKind, FlipOutcome, Quad, Triangulation};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcCoord(Arc<[i64]>);

impl ArcCoord {
    pub fn new(v: Vec<i64>) -> Self {
        ArcCoord(v.into())
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Index of the reference arc this is, if any.
    pub fn reference_index(&self) -> Option<usize> {
        self.0.iter().position(|&x| x == -1)
    }
}

impl fmt::Display for ArcCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Coordinates of the arcs of one triangulation, keyed by arc id.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoordMap(Vec<(ArcId, ArcCoord)>);

impl CoordMap {
    pub fn get(&self, id: ArcId) -> Option<&ArcCoord> {
        self.0
            .binary_search_by_key(&id, |(a, _)| *a)
            .ok()
            .map(|i| &self.0[i].1)
    }

    pub fn insert(&mut self, id: ArcId, c: ArcCoord) {
        match self.0.binary_search_by_key(&id, |(a, _)| *a) {
            Ok(i) => self.0[i].1 = c,
            Err(i) => self.0.insert(i, (id, c)),
        }
    }

    pub fn remove(&mut self, id: ArcId) -> Option<ArcCoord> {
        self.0
            .binary_search_by_key(&id, |(a, _)| *a)
            .ok()
            .map(|i| self.0.remove(i).1)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(ArcId, ArcCoord)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The reference family of a base triangulation.
#[derive(Clone, Debug)]
pub struct Reference {
    /// Base arc ids, in coordinate order.
    pub base_arcs: Vec<ArcId>,
    /// The flippable base arcs whose replacements occupy the remaining indices.
    pub replaced: Vec<ArcId>,
}

impl Reference {
    pub fn dimension(&self) -> usize {
        self.base_arcs.len() + self.replaced.len()
    }
}

/// Reference family and sentinel coordinates of the base arcs.
///
/// Base arcs are pairwise disjoint, and a base arc meets only its own one-flip
/// replacement, exactly once.
pub fn base_coords(t0: &Triangulation) -> (Reference, CoordMap) {
    let base_arcs = t0.arc_ids();
    let replaced: Vec<ArcId> = t0.flippable_arcs().into_iter().map(|a| a.id).collect();
    let dim = base_arcs.len() + replaced.len();
    let mut map = CoordMap::default();
    for (j, &a) in base_arcs.iter().enumerate() {
        let mut v = vec![0i64; dim];
        v[j] = -1;
        if let Some(r) = replaced.iter().position(|&x| x == a) {
            v[base_arcs.len() + r] = 1;
        }
        map.insert(a, ArcCoord::new(v));
    }
    (Reference { base_arcs, replaced }, map)
}

fn side_coord<'a>(coords: &'a CoordMap, side: crate::trimap::ArcRef) -> Result<Option<&'a ArcCoord>> {
    match side.kind {
        ArcKind::Boundary => Ok(None),
        ArcKind::Interior => coords.get(side.id).map(Some).ok_or(Error::UnknownArc(side.id.0)),
    }
}

#[inline]
fn mag(c: Option<&ArcCoord>, k: usize) -> i64 {
    c.map_or(0, |c| c.0[k].max(0))
}

/// Max-plus exchange across a quadrilateral, with `-1` read as `0` and the
/// rule that the arc crossing a reference diagonal exactly once gets `1`.
pub(crate) fn exchange(quad: &Quad, coords: &CoordMap) -> Result<ArcCoord> {
    let e = coords.get(quad.diagonal).ok_or(Error::UnknownArc(quad.diagonal.0))?;
    let s: Vec<Option<&ArcCoord>> =
        quad.sides.iter().map(|&r| side_coord(coords, r)).collect::<Result<_>>()?;
    let v: Vec<i64> = (0..e.len())
        .map(|k| {
            if e.0[k] == -1 {
                1
            } else {
                let ac = mag(s[0], k) + mag(s[2], k);
                let bd = mag(s[1], k) + mag(s[3], k);
                ac.max(bd) - e.0[k]
            }
        })
        .collect();
    Ok(ArcCoord::new(v))
}

/// Coordinates of the arc that replaces `a` when flipping `t`.
pub fn flip_coords(t: &Triangulation, coords: &CoordMap, a: ArcId) -> Result<ArcCoord> {
    let quad = t.quad(a)?;
    exchange(&quad, coords)
}

/// Flips `a` and carries the coordinate map along.
pub fn flip_with_coords(
    t: &Triangulation,
    coords: &CoordMap,
    a: ArcId,
) -> Result<(FlipOutcome, CoordMap)> {
    let out = t.flip_detailed(a)?;
    let c = exchange(&out.quad, coords)?;
    let mut next = coords.clone();
    next.remove(a);
    next.insert(out.added, c);
    Ok((out, next))
}

/// Checks the exchange relation for a flip, read back from the flipped
/// triangulation's own quadrilateral around the new arc.
pub fn ptolemy_holds(after: &Triangulation, coords_after: &CoordMap, new_arc: ArcId, removed: &ArcCoord) -> Result<bool> {
    let quad = after.quad(new_arc)?;
    let s: Vec<Option<&ArcCoord>> =
        quad.sides.iter().map(|&r| side_coord(coords_after, r)).collect::<Result<_>>()?;
    let new = coords_after.get(new_arc).ok_or(Error::UnknownArc(new_arc.0))?;
    Ok((0..new.len()).all(|k| {
        let ac = mag(s[0], k) + mag(s[2], k);
        let bd = mag(s[1], k) + mag(s[3], k);
        new.0[k] + removed.0[k] == ac.max(bd)
    }))
}

/// Label-independent identity of a flip-graph vertex.
#[derive(Clone, Debug)]
pub struct TriKey {
    digest: u64,
    coords: Arc<[ArcCoord]>,
}

impl TriKey {
    pub fn from_coords(mut v: Vec<ArcCoord>) -> Self {
        v.sort();
        let coords: Arc<[ArcCoord]> = v.into();
        let mut key = TriKey { digest: 0, coords };
        let mut h = Sha256::new();
        h.update(key.to_string().as_bytes());
        let bytes = h.finalize();
        key.digest = u64::from_be_bytes(bytes[..8].try_into().expect("sha256 has 32 bytes"));
        key
    }

    pub fn digest(&self) -> u64 {
        self.digest
    }

    pub fn digest_hex(&self) -> String {
        format!("{:016x}", self.digest)
    }

    pub fn coords(&self) -> &[ArcCoord] {
        &self.coords
    }
}

impl PartialEq for TriKey {
    fn eq(&self, other: &Self) -> bool {
        self.digest == other.digest && self.coords == other.coords
    }
}

impl Eq for TriKey {}

impl std::hash::Hash for TriKey {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.digest.hash(state);
    }
}

impl PartialOrd for TriKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TriKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl fmt::Display for TriKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for TriKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(TriKey::from_coords(Vec::new()));
        }
        let mut v = Vec::new();
        for part in s.split(';') {
            let mut c = Vec::new();
            for tok in part.split(',') {
                let x: i64 = tok.parse().map_err(|_| Error::Parse {
                    token: tok.to_string(),
                    msg: "expected an integer coordinate".into(),
                })?;
                c.push(x);
            }
            v.push(ArcCoord::new(c));
        }
        let key = TriKey::from_coords(v);
        if key.to_string() != s {
            return Err(Error::Parse { token: s.to_string(), msg: "vectors are not in sorted order".into() });
        }
        Ok(key)
    }
}

pub fn tri_key(t: &Triangulation, coords: &CoordMap) -> Result<TriKey> {
    let v = t
        .arc_ids()
        .into_iter()
        .map(|a| coords.get(a).cloned().ok_or(Error::UnknownArc(a.0)))
        .collect::<Result<Vec<_>>>()?;
    Ok(TriKey::from_coords(v))
}

/// Digest-indexed deduplication that verifies full key equality on every hit.
#[derive(Clone, Debug, Default)]
pub struct KeyTable {
    by_digest: HashMap<u64, usize>,
    keys: Vec<TriKey>,
}

impl KeyTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &TriKey) -> Result<Option<usize>> {
        match self.by_digest.get(&key.digest) {
            None => Ok(None),
            Some(&i) if self.keys[i].coords == key.coords => Ok(Some(i)),
            Some(&i) => Err(Error::DigestCollision(self.keys[i].to_string(), key.to_string())),
        }
    }

    /// Returns the index of `key` and whether it was newly inserted.
    pub fn insert(&mut self, key: TriKey) -> Result<(usize, bool)> {
        if let Some(i) = self.get(&key)? {
            return Ok((i, false));
        }
        let i = self.keys.len();
        self.by_digest.insert(key.digest, i);
        self.keys.push(key);
        Ok((i, true))
    }

    pub fn key(&self, i: usize) -> &TriKey {
        &self.keys[i]
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trimap::base_triangulation;

    fn base(s: &str) -> Triangulation {
        base_triangulation(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn base_vectors() {
        let t = base("S1,1");
        let (r, c) = base_coords(&t);
        assert_eq!(r.dimension(), 6);
        let arcs = t.arc_ids();
        let v0 = c.get(arcs[0]).unwrap().as_slice().to_vec();
        assert_eq!(v0, vec![-1, 0, 0, 1, 0, 0]);
    }

    #[test]
    fn first_flip_gives_replacement_sentinel() {
        for s in ["S1,1", "S0,4", "S0,0,(1,2)", "S1,0,(1)"] {
            let t = base(s);
            let (r, c) = base_coords(&t);
            for (j, &a) in r.replaced.iter().enumerate() {
                let new = flip_coords(&t, &c, a).unwrap();
                assert_eq!(new.reference_index(), Some(r.base_arcs.len() + j), "{s}");
                let own = r.base_arcs.iter().position(|&x| x == a).unwrap();
                assert_eq!(new.as_slice()[own], 1);
                let (out, c2) = flip_with_coords(&t, &c, a).unwrap();
                let back = flip_coords(&out.triangulation, &c2, out.added).unwrap();
                assert_eq!(&back, c.get(a).unwrap());
            }
        }
    }

    #[test]
    fn flip_back_restores_key() {
        let t = base("S0,5");
        let (_, c) = base_coords(&t);
        let k0 = tri_key(&t, &c).unwrap();
        for a in t.flippable_arcs() {
            let (out, c2) = flip_with_coords(&t, &c, a.id).unwrap();
            let k1 = tri_key(&out.triangulation, &c2).unwrap();
            assert_ne!(k0, k1);
            let (back, c3) = flip_with_coords(&out.triangulation, &c2, out.added).unwrap();
            assert_eq!(tri_key(&back.triangulation, &c3).unwrap(), k0);
        }
    }

    #[test]
    fn key_text_round_trip() {
        let t = base("S0,0,(1,2)");
        let (_, c) = base_coords(&t);
        let k = tri_key(&t, &c).unwrap();
        let text = k.to_string();
        let back: TriKey = text.parse().unwrap();
        assert_eq!(back, k);
        assert_eq!(back.digest(), k.digest());
        assert!("1,x".parse::<TriKey>().is_err());
    }

    #[test]
    fn collision_is_detected() {
        let mut table = KeyTable::new();
        let a = TriKey::from_coords(vec![ArcCoord::new(vec![1, 2])]);
        let mut b = TriKey::from_coords(vec![ArcCoord::new(vec![2, 1])]);
        b.digest = a.digest;
        table.insert(a).unwrap();
        assert!(matches!(table.insert(b), Err(Error::DigestCollision(..))));
    }
}
