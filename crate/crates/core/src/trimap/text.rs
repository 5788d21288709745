//! Line-oriented text form.
//!
//! ```text
//! triangles=2
//! pair (0,0)-(1,0)
//! boundary (0,1)
//! ```
//!
//! One `pair` line per interior arc and one `boundary` line per boundary
//! segment, in order of the smaller slot. Triangle-free surfaces are written
//! as `triangles=0` followed by `surface=<signature>`. Arc ids are not stored;
//! parsing numbers them by slot, as [`Triangulation::normalized`] does.

use std::fmt;
use std::str::FromStr;

use super::{Slot, Triangulation};
use crate::error::{Error, Result};
use crate::surface::SurfaceSig;

fn err(token: &str, msg: &str) -> Error {
    Error::Parse { token: token.to_string(), msg: msg.to_string() }
}

fn parse_slot(tok: &str) -> Result<Slot> {
    let inner = tok
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| err(tok, "expected `(t,i)`"))?;
    let (a, b) = inner.split_once(',').ok_or_else(|| err(tok, "expected `(t,i)`"))?;
    let tri: usize = a.parse().map_err(|_| err(a, "bad triangle index"))?;
    let side: usize = b.parse().map_err(|_| err(b, "bad side index"))?;
    if side > 2 {
        return Err(err(b, "side index must be 0, 1 or 2"));
    }
    Ok(Slot::new(tri, side))
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "triangles={}", self.triangle_count())?;
        if let Some(sig) = &self.declared {
            return writeln!(f, "surface={sig}");
        }
        for s in 0..self.slot_count() {
            match self.partner[s] {
                Some(p) if (p as usize) > s => {
                    writeln!(f, "pair {}-{}", Slot::from_index(s), Slot::from_index(p as usize))?
                }
                Some(_) => {}
                None => writeln!(f, "boundary {}", Slot::from_index(s))?,
            }
        }
        Ok(())
    }
}

impl FromStr for Triangulation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let first = lines.next().ok_or_else(|| err("", "empty input"))?;
        let count = first
            .strip_prefix("triangles=")
            .ok_or_else(|| err(first, "expected `triangles=<k>`"))?;
        let triangles: usize = count.parse().map_err(|_| err(count, "bad triangle count"))?;
        if triangles == 0 {
            let line = lines.next().ok_or_else(|| err("", "missing `surface=` line"))?;
            let sig = line
                .strip_prefix("surface=")
                .ok_or_else(|| err(line, "expected `surface=<signature>`"))?;
            let sig: SurfaceSig = sig.parse()?;
            if let Some(extra) = lines.next() {
                return Err(err(extra, "unexpected line"));
            }
            return Triangulation::empty(sig);
        }
        let mut pairs = Vec::new();
        let mut boundary = Vec::new();
        for line in lines {
            if let Some(rest) = line.strip_prefix("pair ") {
                let (a, b) = rest.split_once('-').ok_or_else(|| err(rest, "expected `(t,i)-(u,j)`"))?;
                pairs.push((parse_slot(a)?, parse_slot(b)?));
            } else if let Some(rest) = line.strip_prefix("boundary ") {
                boundary.push(parse_slot(rest)?);
            } else {
                let tok = line.split_whitespace().next().unwrap_or(line);
                return Err(err(tok, "expected `pair` or `boundary`"));
            }
        }
        let t = Triangulation::from_pairs(triangles, &pairs)?;
        let mut listed = vec![false; 3 * triangles];
        for b in &boundary {
            if b.tri >= triangles {
                return Err(err(&b.to_string(), "slot out of range"));
            }
            if !t.is_boundary(*b) || listed[b.index()] {
                return Err(err(&b.to_string(), "slot is paired or listed twice"));
            }
            listed[b.index()] = true;
        }
        if let Some(s) = (0..3 * triangles).find(|&s| t.partner[s].is_none() && !listed[s]) {
            return Err(err(&Slot::from_index(s).to_string(), "slot neither paired nor declared boundary"));
        }
        Ok(t)
    }
}
