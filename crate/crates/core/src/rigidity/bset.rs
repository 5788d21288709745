//! Configurations where two arcs border two common triangles, and the finite
//! set of 4- and 5-cycles that pins down the flip of one of them.

use std::collections::BTreeMap;

use crate::arcid::{CoordMap, TriKey};
use crate::error::{Error, Result};
use crate::flipgraph::{classify_path2, Ball, Path2Class};
use crate::surface::{self, SurfaceSig};
use crate::trimap::{ArcId, ArcKind, ArcRef, Triangulation};

/// How the two triangles bordering both `a` and `b` fit together.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arrangement {
    /// `a` and `b` meet at a marked point inside the union: a once-punctured bigon.
    First,
    /// The union is an annulus with `c` and `d` on different boundary circles.
    Second,
}

/// Two arcs `a`, `b` of `T` with their two common triangles and third sides `c`, `d`.
#[derive(Clone, Debug)]
pub struct CaseThree {
    pub a: ArcId,
    pub b: ArcId,
    pub triangles: [usize; 2],
    pub c: ArcRef,
    pub d: ArcRef,
    pub arrangement: Arrangement,
}

/// The configuration of `a` and `b` if they border two common triangles.
pub fn case_three(t: &Triangulation, a: ArcId, b: ArcId) -> Result<Option<CaseThree>> {
    if t.common_triangles(a, b)? != 2 {
        return Ok(None);
    }
    let tris: Vec<usize> = (0..t.triangle_count())
        .filter(|&x| {
            let s = t.sides(x);
            s.iter().any(|r| r.id == a) && s.iter().any(|r| r.id == b)
        })
        .collect();
    let third = |x: usize| {
        *t.sides(x).iter().find(|r| r.id != a && r.id != b).expect("a triangle with sides a, b has a third side")
    };
    let sig = t.subcomplex_signature(&tris, &[a, b])?;
    let arrangement = match (sig.genus(), sig.interior(), sig.boundary()) {
        (0, 1, [2]) => Arrangement::First,
        (0, 0, [1, 1]) => Arrangement::Second,
        _ => return Err(Error::MalformedTriangulation(format!("two triangles along {a} and {b} form {sig}"))),
    };
    Ok(Some(CaseThree { a, b, triangles: [tris[0], tris[1]], c: third(tris[0]), d: third(tris[1]), arrangement }))
}

/// The triangle across `x` from `from`, if `x` is interior and leads elsewhere.
fn across(t: &Triangulation, x: ArcRef, from: usize) -> Result<Option<usize>> {
    if x.kind == ArcKind::Boundary {
        return Ok(None);
    }
    Ok(t.triangles_of(x.id)?.into_iter().find(|&u| u != from))
}

/// For `c` bordering the `a`–`b` triangle `from`: the first side `e` of the
/// triangle across `c` that is interior and differs from `c` and `d`, provided
/// that triangle is not folded.
fn second_side(t: &Triangulation, c: ArcRef, d: ArcRef, from: usize) -> Result<Option<ArcRef>> {
    let Some(delta) = across(t, c, from)? else { return Ok(None) };
    if t.is_folded(delta) {
        return Ok(None);
    }
    Ok(t.sides(delta).into_iter().find(|s| s.kind == ArcKind::Interior && s.id != c.id && s.id != d.id))
}

#[derive(Clone, Debug, Default)]
pub struct Lemma51Report {
    pub triangulations: usize,
    pub configurations: usize,
    /// Text of each failing triangulation with the offending pair.
    pub violations: Vec<String>,
}

impl Lemma51Report {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, for every pair of arcs bordering two common triangles, that the
/// third sides differ and one of them borders a second non-folded triangle
/// with a further interior side.
pub fn check_lemma_5_1(sig: &SurfaceSig, sample: &[Triangulation]) -> Result<Lemma51Report> {
    if surface::is_simple(sig) {
        return Err(Error::Precondition(format!("{sig} is simple")));
    }
    let mut rep = Lemma51Report::default();
    for t in sample {
        rep.triangulations += 1;
        let arcs = t.arc_ids();
        for (i, &a) in arcs.iter().enumerate() {
            for &b in &arcs[i + 1..] {
                let Some(cfg) = case_three(t, a, b)? else { continue };
                rep.configurations += 1;
                let fail = |why: &str| format!("{why}: a={a} b={b} in\n{t}");
                if cfg.c.id == cfg.d.id {
                    rep.violations.push(fail("c = d"));
                    continue;
                }
                let ok = second_side(t, cfg.c, cfg.d, cfg.triangles[0])?.is_some()
                    || second_side(t, cfg.d, cfg.c, cfg.triangles[1])?.is_some();
                if !ok {
                    rep.violations.push(fail("neither c nor d borders a suitable second triangle"));
                }
            }
        }
    }
    Ok(rep)
}

pub const ROLES: [&str; 13] =
    ["T", "T_a", "T_b", "T_c", "T_e", "T_ea", "T_eb", "T_ac", "T_ca", "T_bc", "T_cb", "T_ec", "T_ce"];

/// Thirteen labeled vertices on two 4-cycles and three 5-cycles around `T`.
#[derive(Clone, Debug)]
pub struct BSet {
    pub config: CaseThree,
    pub e: ArcId,
    pub roles: BTreeMap<&'static str, TriKey>,
    /// `T, T_a, T_ea, T_e` and `T, T_b, T_eb, T_e`.
    pub four_cycles: [[TriKey; 4]; 2],
    /// `T, T_c, T_ca, T_ac, T_a`, then the same with `b` and `e`.
    pub five_cycles: [[TriKey; 5]; 3],
}

impl BSet {
    pub fn role(&self, name: &str) -> &TriKey {
        &self.roles[name]
    }

    /// Ball indices of the roles, if all of them are in the ball.
    pub fn locate(&self, ball: &Ball) -> Option<BTreeMap<&'static str, usize>> {
        self.roles.iter().map(|(r, k)| ball.index_of(k).map(|i| (*r, i))).collect()
    }

    /// Every cycle edge is an edge of `ball`.
    pub fn cycles_in(&self, ball: &Ball) -> bool {
        let cyc = self.four_cycles.iter().map(|c| c.as_slice()).chain(self.five_cycles.iter().map(|c| c.as_slice()));
        for c in cyc {
            for i in 0..c.len() {
                match (ball.index_of(&c[i]), ball.index_of(&c[(i + 1) % c.len()])) {
                    (Some(u), Some(v)) if ball.has_edge(u, v) => {}
                    _ => return false,
                }
            }
        }
        true
    }
}

/// Builds the B-set at `T` for the pair `a`, `b`: picks `c` (a third side
/// bordering a second non-folded triangle) and `e` (another interior side of
/// that triangle, not `d`), then constructs the five cycles explicitly.
pub fn build_bset(t: &Triangulation, coords: &CoordMap, a: ArcId, b: ArcId) -> Result<BSet> {
    let cfg = case_three(t, a, b)?
        .ok_or_else(|| Error::ConfigNotFound(format!("{a} and {b} do not border two common triangles")))?;
    let mut choice = None;
    for (c, d, from) in [(cfg.c, cfg.d, cfg.triangles[0]), (cfg.d, cfg.c, cfg.triangles[1])] {
        if c.id == d.id {
            break;
        }
        if let Some(e) = second_side(t, c, d, from)? {
            choice = Some((c, d, e));
            break;
        }
    }
    let (c, d, e) = choice.ok_or_else(|| Error::ConfigNotFound(format!("no admissible c, e for {a}, {b}")))?;
    let cfg = CaseThree { c, d, ..cfg };
    let four = |x: ArcId, y: ArcId| -> Result<[TriKey; 4]> {
        match classify_path2(t, coords, x, y)? {
            Path2Class::FourCycle(k) => Ok(k),
            other => Err(Error::Contradiction(format!("{x}, {y} should give a 4-cycle, got {:?}", other.cycle_len()))),
        }
    };
    let five = |x: ArcId, y: ArcId| -> Result<[TriKey; 5]> {
        match classify_path2(t, coords, x, y)? {
            Path2Class::FiveCycle(k) => Ok(k),
            other => Err(Error::Contradiction(format!("{x}, {y} should give a 5-cycle, got {:?}", other.cycle_len()))),
        }
    };
    let (c, e) = (c.id, e.id);
    let ae = four(a, e)?;
    let be = four(b, e)?;
    let ca = five(c, a)?;
    let cb = five(c, b)?;
    let ce = five(c, e)?;
    let mut roles = BTreeMap::new();
    let mut put = |r: &'static str, k: &TriKey| -> Result<()> {
        match roles.insert(r, k.clone()) {
            Some(old) if old != *k => Err(Error::Contradiction(format!("role {r} built two ways"))),
            _ => Ok(()),
        }
    };
    put("T", &ae[0])?;
    put("T_a", &ae[1])?;
    put("T_ea", &ae[2])?;
    put("T_e", &ae[3])?;
    put("T_b", &be[1])?;
    put("T_eb", &be[2])?;
    put("T_e", &be[3])?;
    put("T_c", &ca[1])?;
    put("T_ca", &ca[2])?;
    put("T_ac", &ca[3])?;
    put("T_a", &ca[4])?;
    put("T_cb", &cb[2])?;
    put("T_bc", &cb[3])?;
    put("T_b", &cb[4])?;
    put("T_ce", &ce[2])?;
    put("T_ec", &ce[3])?;
    put("T_e", &ce[4])?;
    let mut distinct: Vec<&TriKey> = roles.values().collect();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != ROLES.len() {
        return Err(Error::Contradiction(format!("B-set has only {} distinct vertices", distinct.len())));
    }
    Ok(BSet { config: cfg, e, roles, four_cycles: [ae, be], five_cycles: [ca, cb, ce] })
}
