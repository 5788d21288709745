//! Exhaustive generation of gluings with a prescribed signature.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::surface::{self, SurfaceSig};
use crate::trimap::Triangulation;

/// An orientation-preserving class with its number of orientation-preserving automorphisms.
#[derive(Clone, Debug)]
pub struct OrientedClass {
    pub representative: Triangulation,
    pub automorphisms: usize,
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub sig: SurfaceSig,
    pub gluings_examined: u128,
    /// Classes up to all homeomorphisms, keyed by this module's own code.
    pub classes: BTreeMap<Vec<u32>, Triangulation>,
    /// Classes up to orientation-preserving homeomorphisms.
    pub oriented: BTreeMap<Vec<u32>, OrientedClass>,
}

fn choose(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of candidate gluings: boundary slot choices times perfect matchings of the rest.
pub fn gluing_count(sig: &SurfaceSig) -> u128 {
    let slots = 3 * surface::triangle_count(sig) as u128;
    let b = sig.boundary_marked() as u128;
    if b > slots || (slots - b) % 2 == 1 {
        return 0;
    }
    let mut m = 1u128;
    let mut k = slots - b;
    while k > 1 {
        m *= k - 1;
        k -= 2;
    }
    choose(slots, b) * m
}

/// Depth-first code from `start`: triangles are numbered as discovered and
/// processed last-in first-out, each read from the side it was entered by.
fn dfs_code(partner: &[Option<u32>], start: usize) -> Vec<u32> {
    let tris = partner.len() / 3;
    let mut label = vec![u32::MAX; tris];
    let mut entry = vec![0usize; tris];
    let mut next = 0u32;
    let mut stack = vec![start / 3];
    label[start / 3] = 0;
    entry[start / 3] = start % 3;
    next += 1;
    let mut code = Vec::with_capacity(partner.len());
    while let Some(t) = stack.pop() {
        for k in 0..3 {
            let s = 3 * t + (entry[t] + k) % 3;
            match partner[s] {
                None => code.push(0),
                Some(p) => {
                    let (u, j) = (p as usize / 3, p as usize % 3);
                    if label[u] == u32::MAX {
                        label[u] = next;
                        entry[u] = j;
                        next += 1;
                        stack.push(u);
                    }
                    code.push(3 * label[u] + ((j + 3 - entry[u]) % 3) as u32 + 1);
                }
            }
        }
    }
    code
}

fn mirror(partner: &[Option<u32>]) -> Vec<Option<u32>> {
    let m = |s: usize| 3 * (s / 3) + 2 - s % 3;
    let mut out = vec![None; partner.len()];
    for (s, p) in partner.iter().enumerate() {
        out[m(s)] = p.map(|p| m(p as usize) as u32);
    }
    out
}

/// Minimal oriented code and the number of starts attaining it.
fn oriented_code(partner: &[Option<u32>]) -> (Vec<u32>, usize) {
    let mut best: Option<Vec<u32>> = None;
    let mut count = 0;
    for s in 0..partner.len() {
        let c = dfs_code(partner, s);
        match &best {
            Some(b) if c > *b => {}
            Some(b) if c == *b => count += 1,
            _ => {
                best = Some(c);
                count = 1;
            }
        }
    }
    (best.unwrap_or_default(), count)
}

fn unoriented_code(partner: &[Option<u32>]) -> Vec<u32> {
    let (a, _) = oriented_code(partner);
    let (b, _) = oriented_code(&mirror(partner));
    a.min(b)
}

/// All gluings of the right size whose surface is `sig`, up to homeomorphism.
pub fn enumerate_all(sig: &SurfaceSig, limit: u128) -> Result<Enumeration> {
    let total = gluing_count(sig);
    let mut en = Enumeration {
        sig: sig.clone(),
        gluings_examined: 0,
        classes: BTreeMap::new(),
        oriented: BTreeMap::new(),
    };
    if surface::triangle_count(sig) == 0 {
        let t = Triangulation::empty(sig.clone())?;
        en.classes.insert(Vec::new(), t.clone());
        en.oriented.insert(Vec::new(), OrientedClass { representative: t, automorphisms: 1 });
        return Ok(en);
    }
    if total > limit {
        return Err(Error::ResourceLimit { budget: limit.min(usize::MAX as u128) as usize });
    }
    let n = 3 * surface::triangle_count(sig);
    let mut partner: Vec<Option<u32>> = vec![None; n];
    let mut decided = vec![false; n];
    let boundary = sig.boundary_marked() as usize;
    fn rec(
        partner: &mut Vec<Option<u32>>,
        decided: &mut Vec<bool>,
        boundary_left: usize,
        sig: &SurfaceSig,
        en: &mut Enumeration,
    ) {
        let Some(s) = decided.iter().position(|d| !d) else {
            if boundary_left == 0 {
                en.gluings_examined += 1;
                consider(partner, sig, en);
            }
            return;
        };
        decided[s] = true;
        if boundary_left > 0 {
            rec(partner, decided, boundary_left - 1, sig, en);
        }
        for p in s + 1..partner.len() {
            if !decided[p] {
                decided[p] = true;
                partner[s] = Some(p as u32);
                partner[p] = Some(s as u32);
                rec(partner, decided, boundary_left, sig, en);
                partner[s] = None;
                partner[p] = None;
                decided[p] = false;
            }
        }
        decided[s] = false;
    }
    rec(&mut partner, &mut decided, boundary, sig, &mut en);
    Ok(en)
}

fn consider(partner: &[Option<u32>], sig: &SurfaceSig, en: &mut Enumeration) {
    let t = Triangulation::from_partner_vec(partner.to_vec());
    match t.signature() {
        Ok(s) if s == *sig => {}
        _ => return,
    }
    if t.interior_arc_count() != surface::arc_count(sig) {
        return;
    }
    let (oc, aut) = oriented_code(partner);
    en.oriented
        .entry(oc)
        .or_insert_with(|| OrientedClass { representative: t.clone(), automorphisms: aut });
    en.classes.entry(unoriented_code(partner)).or_insert(t);
}

/// Number of distinct triangulations up to isotopy, for surfaces whose pure
/// mapping class group is trivial (spheres with at most three punctures and
/// disks with at most one puncture).
///
/// Each orientation-preserving class contributes an orbit of size
/// `L / |Aut⁺|`, where `L` counts the admissible relabelings of marked points:
/// `n!` on a sphere, `p · n!` on a disk with `p` boundary points.
pub fn count_labeled(sig: &SurfaceSig, limit: u128) -> Result<u128> {
    let n = sig.interior() as u128;
    let fact = (1..=n).product::<u128>();
    let labelings = match (sig.genus(), sig.boundary()) {
        (0, []) if n <= 3 => fact,
        (0, [p]) if n <= 1 => *p as u128 * fact,
        _ => return Err(Error::Precondition(format!("{sig} has infinitely many triangulations"))),
    };
    let en = enumerate_all(sig, limit)?;
    let mut total = 0u128;
    for c in en.oriented.values() {
        let aut = c.automorphisms as u128;
        if labelings % aut != 0 {
            return Err(Error::Precondition("automorphism count does not divide the relabelings".into()));
        }
        total += labelings / aut;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(s: &str) -> SurfaceSig {
        s.parse().unwrap()
    }

    #[test]
    fn counts_of_gluings() {
        assert_eq!(gluing_count(&sig("S0,4")), 10395);
        assert_eq!(gluing_count(&sig("S0,3")), 15);
        assert_eq!(gluing_count(&sig("S1,0,(1)")), 945);
    }

    #[test]
    fn polygon_triangulations_are_catalan() {
        for (p, cat) in [(4, 2), (5, 5), (6, 14), (7, 42)] {
            let s = SurfaceSig::new(0, 0, vec![p]).unwrap();
            assert_eq!(count_labeled(&s, 1 << 40).unwrap(), cat, "{p}-gon");
        }
    }

    #[test]
    fn hexagon_has_four_oriented_classes() {
        let en = enumerate_all(&sig("S0,0,(6)"), 1 << 40).unwrap();
        assert_eq!(en.oriented.len(), 4);
        assert_eq!(en.classes.len(), 3);
    }
}
