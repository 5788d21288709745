//! Two parallel flip lines joined by rungs.

use crate::arcid::{self, CoordMap, TriKey};
use crate::error::{Error, Result};
use crate::flipgraph::{classify_path2, Path2Class};
use crate::trimap::{ArcId, Triangulation};

use super::bset::{case_three, Arrangement};

#[derive(Clone, Debug)]
pub struct Ladder {
    /// Line through `T` flipping only inside the annulus of `a` and `b`.
    pub gamma: Vec<TriKey>,
    /// The same flips starting from `T_e`.
    pub gamma_prime: Vec<TriKey>,
    /// Square `gamma[i], gamma[i+1], gamma_prime[i+1], gamma_prime[i]` as classified at `gamma[i]`.
    pub squares: Vec<Path2Class>,
}

impl Ladder {
    pub fn len(&self) -> usize {
        self.gamma.len() + self.gamma_prime.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gamma.is_empty()
    }

    /// Every square is a 4-cycle through the expected ladder vertices.
    pub fn squares_ok(&self) -> bool {
        self.squares.iter().enumerate().all(|(i, s)| match s {
            Path2Class::FourCycle(k) => {
                k[0] == self.gamma[i] && k[1] == self.gamma[i + 1] && k[2] == self.gamma_prime[i + 1] && k[3] == self.gamma_prime[i]
            }
            _ => false,
        })
    }
}

type State = (Triangulation, CoordMap);

/// One direction of the line: flip `first`, then repeatedly the arc of the
/// annulus that was not just created.
fn walk(start: &State, first: ArcId, other: ArcId, steps: usize) -> Result<Vec<State>> {
    let mut states = Vec::with_capacity(steps);
    let (mut cur, mut next, mut keep) = (start.clone(), first, other);
    for _ in 0..steps {
        let (out, c) = arcid::flip_with_coords(&cur.0, &cur.1, next)?;
        let created = out.added;
        cur = (out.triangulation, c);
        states.push(cur.clone());
        next = keep;
        keep = created;
    }
    Ok(states)
}

/// `2h + 1` states, from the far end of the `b` side through `start` to the far end of the `a` side.
fn line(start: &State, a: ArcId, b: ArcId, h: usize) -> Result<Vec<State>> {
    let mut states: Vec<State> = walk(start, b, a, h)?.into_iter().rev().collect();
    states.push(start.clone());
    states.extend(walk(start, a, b, h)?);
    Ok(states)
}

/// Builds the ladder of half-length `h` at `T` for `a`, `b` in the second
/// arrangement and a flippable rung arc `e` outside `{a, b, c, d}`.
pub fn build_ladder(t: &Triangulation, coords: &CoordMap, a: ArcId, b: ArcId, e: ArcId, h: usize) -> Result<Ladder> {
    let cfg = case_three(t, a, b)?
        .ok_or_else(|| Error::ConfigNotFound(format!("{a} and {b} do not border two common triangles")))?;
    if cfg.arrangement != Arrangement::Second {
        return Err(Error::ConfigNotFound("the ladder needs the annulus arrangement".into()));
    }
    if [a, b, cfg.c.id, cfg.d.id].contains(&e) || !t.is_flippable(e) {
        return Err(Error::ConfigNotFound(format!("{e} cannot serve as the rung arc")));
    }
    let start: State = (t.clone(), coords.clone());
    let states = line(&start, a, b, h)?;
    let mut gamma = Vec::new();
    let mut gamma_prime = Vec::new();
    let mut primes = Vec::new();
    for s in &states {
        let (out, c) = arcid::flip_with_coords(&s.0, &s.1, e)?;
        gamma.push(arcid::tri_key(&s.0, &s.1)?);
        gamma_prime.push(arcid::tri_key(&out.triangulation, &c)?);
        primes.push((out.triangulation, c));
    }
    // γ′ built independently from T_e must agree with the rung endpoints
    let te = &primes[h];
    let states_e = line(te, a, b, h)?;
    for (i, s) in states_e.iter().enumerate() {
        if arcid::tri_key(&s.0, &s.1)? != gamma_prime[i] {
            return Err(Error::Contradiction(format!("rung {i} does not land on the line through T_e")));
        }
    }
    let mut squares = Vec::new();
    for i in 0..states.len().saturating_sub(1) {
        let (s, s1) = (&states[i], &states[i + 1]);
        let x = s.0.arc_ids().into_iter().find(|id| !s1.0.contains_arc(*id)).expect("consecutive states differ by a flip");
        squares.push(classify_path2(&s.0, &s.1, x, e)?);
    }
    Ok(Ladder { gamma, gamma_prime, squares })
}
