//! Forcing images of vertices from short cycles.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flipgraph::{classify_path2, cycles_through, Ball, Path2Class};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// Completion of a 4-cycle from three consecutive vertices.
    R1Four,
    /// Completion of a 5-cycle from three consecutive vertices.
    R1Five,
    /// The neighbor of `T` on a 5-cycle with `T_c` and a 4-cycle with `T_e`.
    R2,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::R1Four => "R1-4",
            Rule::R1Five => "R1-5",
            Rule::R2 => "R2",
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Rules {
    pub r1: bool,
    pub r2: bool,
}

impl Rules {
    pub const ALL: Rules = Rules { r1: true, r2: true };
    pub const R1: Rules = Rules { r1: true, r2: false };
    pub const R2: Rules = Rules { r1: false, r2: true };
}

/// One forced assignment. `witness` lists host vertices: the completed cycle
/// for R1, and `[T, T_c, T_e]` followed by the chosen neighbor for R2.
#[derive(Clone, Debug)]
pub struct Forcing {
    pub rule: Rule,
    pub forced: usize,
    pub image: usize,
    pub witness: Vec<usize>,
}

#[derive(Serialize)]
struct TraceEntry {
    rule: String,
    forced: String,
    image: String,
    witness: Vec<String>,
}

/// An injective, edge-preserving partial map from a domain ball to a host ball.
#[derive(Clone, Debug)]
pub struct PartialMap<'a> {
    domain: &'a Ball,
    host: &'a Ball,
    assignment: BTreeMap<usize, usize>,
    preimage: HashMap<usize, usize>,
    trace: Vec<Forcing>,
    site_radius: Option<usize>,
}

type Site = (usize, usize, usize);

impl<'a> PartialMap<'a> {
    pub fn new(domain: &'a Ball, host: &'a Ball) -> Self {
        PartialMap { domain, host, assignment: BTreeMap::new(), preimage: HashMap::new(), trace: Vec::new(), site_radius: None }
    }

    /// Seeds by matching keys: every listed domain vertex goes to the host vertex with the same key.
    pub fn identity_on(domain: &'a Ball, host: &'a Ball, vertices: &[usize]) -> Result<Self> {
        let mut pm = PartialMap::new(domain, host);
        for &v in vertices {
            let h = host
                .index_of(&domain.vertex(v).key)
                .ok_or_else(|| Error::Precondition(format!("domain vertex {v} is not in the host")))?;
            pm.seed(v, h)?;
        }
        Ok(pm)
    }

    /// Only domain vertices within distance `r` of the domain root act as forcing sites.
    pub fn with_site_radius(mut self, r: usize) -> Self {
        self.site_radius = Some(r);
        self
    }

    pub fn domain(&self) -> &Ball {
        self.domain
    }

    pub fn host(&self) -> &Ball {
        self.host
    }

    pub fn seed(&mut self, d: usize, h: usize) -> Result<()> {
        self.assign(d, h).map(|_| ())
    }

    pub fn get(&self, d: usize) -> Option<usize> {
        self.assignment.get(&d).copied()
    }

    pub fn assignment(&self) -> &BTreeMap<usize, usize> {
        &self.assignment
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn trace(&self) -> &[Forcing] {
        &self.trace
    }

    /// Returns whether `d` was newly assigned.
    fn assign(&mut self, d: usize, h: usize) -> Result<bool> {
        if let Some(&old) = self.assignment.get(&d) {
            if old == h {
                return Ok(false);
            }
            return Err(Error::Contradiction(format!("vertex {d} forced to {h} but already sent to {old}")));
        }
        if let Some(&other) = self.preimage.get(&h) {
            return Err(Error::Contradiction(format!("host vertex {h} is the image of both {other} and {d}")));
        }
        for n in self.domain.neighbors(d) {
            if let Some(&hn) = self.assignment.get(&n) {
                if !self.host.has_edge(h, hn) {
                    return Err(Error::Contradiction(format!("edge {d}-{n} has no image edge {h}-{hn}")));
                }
            }
        }
        self.assignment.insert(d, h);
        self.preimage.insert(h, d);
        Ok(true)
    }

    fn assigned_neighbors(&self, v: usize) -> Vec<usize> {
        let mut ns: Vec<usize> = self.domain.neighbors(v).filter(|n| self.assignment.contains_key(n)).collect();
        ns.sort();
        ns
    }

    /// Closure trace as JSON, with vertices named by their keys.
    pub fn trace_json(&self) -> String {
        let entries: Vec<TraceEntry> = self
            .trace
            .iter()
            .map(|f| TraceEntry {
                rule: f.rule.to_string(),
                forced: self.domain.vertex(f.forced).key.to_string(),
                image: self.host.vertex(f.image).key.to_string(),
                witness: f.witness.iter().map(|&w| self.host.vertex(w).key.to_string()).collect(),
            })
            .collect();
        serde_json::to_string_pretty(&entries).expect("trace serializes")
    }
}

/// The domain cycle through `x – y – z`, listed `[x, y, z, ...]`, if all of it lies in the domain.
fn domain_cycle(domain: &Ball, (x, y, z): Site) -> Result<Option<Vec<usize>>> {
    let st = domain.state(y)?;
    let a = domain.arc_between(y, x)?;
    let b = domain.arc_between(y, z)?;
    let keys: Vec<_> = match classify_path2(&st.tri, &st.coords, a, b)? {
        Path2Class::FourCycle(k) => k.to_vec(),
        Path2Class::FiveCycle(k) => k.to_vec(),
        Path2Class::NoShortCycle => return Ok(None),
    };
    let Some(idx) = keys.iter().map(|k| domain.index_of(k)).collect::<Option<Vec<_>>>() else {
        return Ok(None);
    };
    // idx is [y, x, middle.., z]
    let mut cyc = vec![x, y, z];
    cyc.extend(idx[2..idx.len() - 1].iter().rev());
    Ok(Some(cyc))
}

fn require_room(host: &Ball, h: usize) -> Result<()> {
    if !host.is_saturated() && host.dist(h) + 2 > host.radius() {
        return Err(Error::InsufficientRadius(format!(
            "host vertex {h} at distance {} needs radius {}",
            host.dist(h),
            host.dist(h) + 2
        )));
    }
    Ok(())
}

fn on_cycle_of_len(host: &Ball, path: [usize; 3], len: usize) -> Result<bool> {
    Ok(cycles_through(host, path, len)?.iter().any(|c| c.len() == len))
}

impl PartialMap<'_> {
    fn try_r1(&mut self, site: Site, cache: &mut HashMap<Site, Option<Vec<usize>>>) -> Result<Vec<usize>> {
        let key = if site.0 < site.2 { site } else { (site.2, site.1, site.0) };
        if !cache.contains_key(&key) {
            cache.insert(key, domain_cycle(self.domain, key)?);
        }
        let Some(cyc) = cache[&key].clone() else { return Ok(Vec::new()) };
        if cyc.iter().all(|v| self.assignment.contains_key(v)) {
            return Ok(Vec::new());
        }
        let len = cyc.len();
        let hp = [self.assignment[&cyc[0]], self.assignment[&cyc[1]], self.assignment[&cyc[2]]];
        require_room(self.host, hp[1])?;
        let found: Vec<Vec<usize>> = cycles_through(self.host, hp, len)?.into_iter().filter(|c| c.len() == len).collect();
        let rule = if len == 4 { Rule::R1Four } else { Rule::R1Five };
        match found.len() {
            0 => Err(Error::Contradiction(format!("no host {len}-cycle through {hp:?}"))),
            1 => {
                let mut newly = Vec::new();
                for (d, &h) in cyc.iter().zip(&found[0]).skip(3) {
                    if self.assign(*d, h)? {
                        self.trace.push(Forcing { rule, forced: *d, image: h, witness: found[0].clone() });
                        newly.push(*d);
                    }
                }
                Ok(newly)
            }
            n => Err(Error::Tie { site: format!("{rule} at host path {hp:?}"), candidates: n }),
        }
    }

    fn try_r2(&mut self, t: usize, c: usize, e: usize) -> Result<Option<usize>> {
        if !self.domain.is_complete(t) {
            return Ok(None);
        }
        let st = self.domain.state(t)?;
        let (ac, ae) = (self.domain.arc_between(t, c)?, self.domain.arc_between(t, e)?);
        let mut xs = Vec::new();
        for x in self.domain.neighbors(t) {
            if self.assignment.contains_key(&x) {
                continue;
            }
            let ax = self.domain.arc_between(t, x)?;
            if st.tri.common_triangles(ax, ac)? == 1 && st.tri.common_triangles(ax, ae)? == 0 {
                xs.push(x);
            }
        }
        if xs.len() != 1 {
            return Ok(None);
        }
        let (ht, hc, he) = (self.assignment[&t], self.assignment[&c], self.assignment[&e]);
        require_room(self.host, ht)?;
        let mut cands = Vec::new();
        let mut ws: Vec<usize> = self.host.neighbors(ht).collect();
        ws.sort();
        for w in ws {
            if self.preimage.contains_key(&w) {
                continue;
            }
            if on_cycle_of_len(self.host, [w, ht, hc], 5)? && on_cycle_of_len(self.host, [w, ht, he], 4)? {
                cands.push(w);
            }
        }
        match cands.len() {
            0 => Err(Error::Contradiction(format!("no host neighbor of {ht} fits the pattern of {hc}, {he}"))),
            1 => {
                let x = xs[0];
                if self.assign(x, cands[0])? {
                    self.trace.push(Forcing { rule: Rule::R2, forced: x, image: cands[0], witness: vec![ht, hc, he, cands[0]] });
                    return Ok(Some(x));
                }
                Ok(None)
            }
            n => Err(Error::Tie { site: format!("R2 at host vertex {ht}"), candidates: n }),
        }
    }
}

/// Least fixed point of the enabled forcing rules, processed breadth-first
/// from the seeds in index order. Sites whose domain cycle leaves the domain
/// ball are skipped; host sites too close to the host frontier raise
/// `InsufficientRadius`.
pub fn rigid_closure<'a>(mut pm: PartialMap<'a>, rules: Rules) -> Result<PartialMap<'a>> {
    if pm.assignment.is_empty() {
        return Err(Error::Precondition("closure needs at least one seed".into()));
    }
    let mut queue: VecDeque<usize> = pm.assignment.keys().copied().collect();
    let mut queued = vec![false; pm.domain.len()];
    for &v in &queue {
        queued[v] = true;
    }
    let mut cache = HashMap::new();
    while let Some(y) = queue.pop_front() {
        queued[y] = false;
        if pm.site_radius.is_some_and(|r| pm.domain.dist(y) > r) {
            continue;
        }
        let mut newly = Vec::new();
        let ns = pm.assigned_neighbors(y);
        if rules.r1 {
            for (i, &x) in ns.iter().enumerate() {
                for &z in &ns[i + 1..] {
                    newly.extend(pm.try_r1((x, y, z), &mut cache)?);
                }
            }
        }
        if rules.r2 {
            let ns = pm.assigned_neighbors(y);
            for &c in &ns {
                for &e in &ns {
                    if c != e {
                        newly.extend(pm.try_r2(y, c, e)?);
                    }
                }
            }
        }
        for v in newly {
            for w in std::iter::once(v).chain(pm.assigned_neighbors(v)) {
                if !queued[w] {
                    queued[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(pm)
}

/// Re-checks a trace from its seeds: every witness must be a host cycle of
/// the stated length (or an R2 pattern around an assigned vertex) containing
/// the forced image, and every step must keep the map injective and edge-preserving.
pub fn replay_trace(domain: &Ball, host: &Ball, seeds: &[(usize, usize)], trace: &[Forcing]) -> Result<BTreeMap<usize, usize>> {
    let mut pm = PartialMap::new(domain, host);
    for &(d, h) in seeds {
        pm.seed(d, h)?;
    }
    for (k, f) in trace.iter().enumerate() {
        let bad = |why: &str| Error::Contradiction(format!("trace step {k}: {why}"));
        if f.witness.iter().any(|&w| w >= host.len()) {
            return Err(bad("witness outside the host"));
        }
        match f.rule {
            Rule::R1Four | Rule::R1Five => {
                let len = if f.rule == Rule::R1Four { 4 } else { 5 };
                let w = &f.witness;
                if w.len() != len || !(0..len).all(|i| host.has_edge(w[i], w[(i + 1) % len])) {
                    return Err(bad("witness is not a host cycle of the stated length"));
                }
                if !w.contains(&f.image) {
                    return Err(bad("witness misses the image"));
                }
                if w[..3].iter().any(|h| !pm.preimage.contains_key(h)) {
                    return Err(bad("witness path is not assigned"));
                }
            }
            Rule::R2 => {
                let w = &f.witness;
                if w.len() != 4 || w[3] != f.image || !host.has_edge(w[0], w[3]) {
                    return Err(bad("malformed R2 witness"));
                }
                if w[..3].iter().any(|h| !pm.preimage.contains_key(h)) {
                    return Err(bad("R2 pattern is not assigned"));
                }
            }
        }
        pm.assign(f.forced, f.image)?;
    }
    Ok(pm.assignment)
}
