//! Short cycles through length-2 paths.

use super::Ball;
use crate::arcid::{self, CoordMap, TriKey};
use crate::error::{Error, Result};
use crate::trimap::{ArcId, Triangulation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Path2Class {
    /// `T, T_a, T_ab = T_ba, T_b`.
    FourCycle([TriKey; 4]),
    /// `T, T_a, T_ab, T_ba, T_b`.
    FiveCycle([TriKey; 5]),
    NoShortCycle,
}

impl Path2Class {
    pub fn cycle_len(&self) -> Option<usize> {
        match self {
            Path2Class::FourCycle(_) => Some(4),
            Path2Class::FiveCycle(_) => Some(5),
            Path2Class::NoShortCycle => None,
        }
    }
}

type State = (Triangulation, CoordMap);

fn flip(s: &State, a: ArcId) -> Result<State> {
    let (out, c) = arcid::flip_with_coords(&s.0, &s.1, a)?;
    Ok((out.triangulation, c))
}

fn key(s: &State) -> Result<TriKey> {
    arcid::tri_key(&s.0, &s.1)
}

fn adjacent(s: &State, target: &TriKey) -> Result<bool> {
    for a in s.0.flippable_arcs() {
        if key(&flip(s, a.id)?)? == *target {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Classifies the path `T_a – T – T_b` by how `a` and `b` meet, and builds
/// the short cycle explicitly.
pub fn classify_path2(t: &Triangulation, coords: &CoordMap, a: ArcId, b: ArcId) -> Result<Path2Class> {
    if a == b {
        return Err(Error::SameArc(a.0));
    }
    for x in [a, b] {
        if !t.is_flippable(x) {
            t.quad(x)?;
            return Err(Error::NotFlippable(x.0));
        }
    }
    let common = t.common_triangles(a, b)?;
    if common == 2 {
        return Ok(Path2Class::NoShortCycle);
    }
    let s: State = (t.clone(), coords.clone());
    let (sa, sb) = (flip(&s, a)?, flip(&s, b)?);
    let (sab, sba) = (flip(&sa, b)?, flip(&sb, a)?);
    let (k, ka, kb, kab, kba) = (key(&s)?, key(&sa)?, key(&sb)?, key(&sab)?, key(&sba)?);
    match common {
        0 => {
            if kab != kba {
                return Err(Error::Contradiction("disjoint flips do not commute".into()));
            }
            Ok(Path2Class::FourCycle([k, ka, kab, kb]))
        }
        _ => {
            if kab == kba || !adjacent(&sab, &kba)? {
                return Err(Error::Contradiction("no pentagon through adjacent flips".into()));
            }
            Ok(Path2Class::FiveCycle([k, ka, kab, kba, kb]))
        }
    }
}

/// All simple cycles of length at most `maxlen` that traverse `x – y – z` in
/// that order, each starting `[x, y, z, ...]`.
pub fn cycles_through(ball: &Ball, path: [usize; 3], maxlen: usize) -> Result<Vec<Vec<usize>>> {
    let [x, y, z] = path;
    if x == z || !ball.has_edge(x, y) || !ball.has_edge(y, z) {
        return Err(Error::Precondition("not a length-2 path in the ball".into()));
    }
    if !ball.is_saturated() && ball.dist(y) + maxlen / 2 > ball.radius() {
        return Err(Error::InsufficientRadius(format!(
            "cycles of length {maxlen} around a vertex at distance {} need radius {}",
            ball.dist(y),
            ball.dist(y) + maxlen / 2
        )));
    }
    let mut out = Vec::new();
    if maxlen < 3 {
        return Ok(out);
    }
    let mut on_path = vec![false; ball.len()];
    on_path[x] = true;
    on_path[y] = true;
    on_path[z] = true;
    let mut stack = vec![x, y, z];
    fn dfs(ball: &Ball, stack: &mut Vec<usize>, on: &mut [bool], maxlen: usize, out: &mut Vec<Vec<usize>>) {
        let cur = *stack.last().expect("nonempty");
        let x = stack[0];
        if ball.has_edge(cur, x) {
            out.push(stack.clone());
        }
        if stack.len() == maxlen {
            return;
        }
        for w in ball.neighbors(cur) {
            if !on[w] {
                on[w] = true;
                stack.push(w);
                dfs(ball, stack, on, maxlen, out);
                stack.pop();
                on[w] = false;
            }
        }
    }
    dfs(ball, &mut stack, &mut on_path, maxlen, &mut out);
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, Default)]
pub struct Path2Report {
    pub paths: usize,
    /// Paths by number of common triangles of the two flipped arcs.
    pub by_common: [usize; 3],
    /// Description of each failing path.
    pub failures: Vec<String>,
}

impl Path2Report {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks every length-2 path `x – y – z` with `y` at distance at most
/// `radius - 2`: the explicit classification matches the number of common
/// triangles, the ball holds exactly one short cycle of the predicted length
/// through the path and none of the other length, and `x`, `z` are not adjacent.
pub fn verify_path2(ball: &Ball) -> Result<Path2Report> {
    let mut rep = Path2Report::default();
    for y in 0..ball.len() {
        if !ball.is_saturated() && ball.dist(y) + 2 > ball.radius() {
            continue;
        }
        let st = ball.state(y)?;
        let mut ns: Vec<usize> = ball.neighbors(y).collect();
        ns.sort();
        for (i, &x) in ns.iter().enumerate() {
            for &z in &ns[i + 1..] {
                rep.paths += 1;
                let (a, b) = (ball.arc_between(y, x)?, ball.arc_between(y, z)?);
                let common = st.tri.common_triangles(a, b)?;
                rep.by_common[common.min(2)] += 1;
                let class = classify_path2(&st.tri, &st.coords, a, b)?;
                let expected = match common {
                    0 => Some(4),
                    1 => Some(5),
                    _ => None,
                };
                let mut fail = |why: String| rep.failures.push(format!("path {x}-{y}-{z} (arcs {a}, {b}): {why}"));
                if class.cycle_len() != expected {
                    fail(format!("classified {:?} with {common} common triangles", class.cycle_len()));
                }
                if ball.has_edge(x, z) {
                    fail("3-cycle".into());
                }
                let cycles = cycles_through(ball, [x, y, z], 5)?;
                let fours: Vec<_> = cycles.iter().filter(|c| c.len() == 4).collect();
                let fives: Vec<_> = cycles.iter().filter(|c| c.len() == 5).collect();
                let counts = (fours.len(), fives.len());
                let want = match expected {
                    Some(4) => (1, 0),
                    Some(5) => (0, 1),
                    _ => (0, 0),
                };
                if counts != want {
                    fail(format!("found {} 4-cycles and {} 5-cycles", counts.0, counts.1));
                    continue;
                }
                let keys = match &class {
                    Path2Class::FourCycle(k) => k.to_vec(),
                    Path2Class::FiveCycle(k) => k.to_vec(),
                    Path2Class::NoShortCycle => continue,
                };
                let found = fours.first().or(fives.first()).expect("one cycle");
                let mut in_ball: Vec<&TriKey> = found.iter().map(|&v| &ball.vertex(v).key).collect();
                let mut built: Vec<&TriKey> = keys.iter().collect();
                in_ball.sort();
                built.sort();
                if in_ball != built {
                    fail("cycle in the ball differs from the constructed one".into());
                }
            }
        }
    }
    Ok(rep)
}
