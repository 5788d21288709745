//! Surface signatures `S_{g,n,(p_1,...,p_b)}` and the taxonomies built on them.
//!
//! A signature records the genus, the number of interior marked points and,
//! for each boundary component, the number of marked points it carries.
//! Boundary counts are kept sorted so that equal surfaces compare equal.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Homeomorphism type of a compact orientable surface with marked points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurfaceSig {
    genus: u32,
    interior: u32,
    boundary: Vec<u32>,
}

impl SurfaceSig {
    pub fn new(genus: u32, interior: u32, boundary: impl Into<Vec<u32>>) -> Result<Self> {
        let mut boundary = boundary.into();
        if boundary.iter().any(|&p| p == 0) {
            return Err(Error::InvalidSurface(
                "every boundary component needs at least one marked point".into(),
            ));
        }
        if interior as u64 + boundary.iter().map(|&p| p as u64).sum::<u64>() == 0 {
            return Err(Error::InvalidSurface("a surface needs at least one marked point".into()));
        }
        boundary.sort_unstable();
        Ok(SurfaceSig { genus, interior, boundary })
    }

    /// Shorthand for a surface without boundary.
    pub fn closed(genus: u32, interior: u32) -> Result<Self> {
        Self::new(genus, interior, Vec::new())
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn interior(&self) -> u32 {
        self.interior
    }

    pub fn boundary(&self) -> &[u32] {
        &self.boundary
    }

    pub fn boundary_components(&self) -> usize {
        self.boundary.len()
    }

    pub fn boundary_marked(&self) -> u32 {
        self.boundary.iter().sum()
    }

    pub fn total_marked(&self) -> u32 {
        self.interior + self.boundary_marked()
    }

    /// Euler characteristic of the underlying compact surface.
    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary.len() as i64
    }
}

/// `6g + 3b + 3n + Σp_i − 6`. May be negative for the smallest surfaces.
pub fn complexity(sig: &SurfaceSig) -> i64 {
    6 * sig.genus as i64 + 3 * sig.boundary.len() as i64 + 3 * sig.interior as i64
        + sig.boundary_marked() as i64
        - 6
}

/// The surfaces that admit no essential arc at all.
pub fn has_no_arcs(sig: &SurfaceSig) -> bool {
    sig.genus == 0
        && matches!(
            (sig.interior, sig.boundary.as_slice()),
            (1, []) | (0, [1]) | (0, [2]) | (0, [3])
        )
}

/// Number of arcs in every triangulation of `sig`.
pub fn arc_count(sig: &SurfaceSig) -> usize {
    if has_no_arcs(sig) {
        0
    } else if sig.genus == 0 && sig.interior == 2 && sig.boundary.is_empty() {
        1
    } else {
        complexity(sig) as usize
    }
}

/// Number of triangles in every triangulation of `sig` (0 for the degenerate cases).
pub fn triangle_count(sig: &SurfaceSig) -> usize {
    if has_no_arcs(sig) && sig.boundary.as_slice() == [3] {
        return 1;
    }
    if arc_count(sig) == 0 || (sig.genus == 0 && sig.interior == 2 && sig.boundary.is_empty()) {
        return 0;
    }
    (2 * arc_count(sig) + sig.boundary_marked() as usize) / 3
}

/// Membership in the explicit list of low-complexity surfaces for which
/// the general rigidity argument does not apply.
pub fn is_simple(sig: &SurfaceSig) -> bool {
    let (g, n, b) = (sig.genus, sig.interior, sig.boundary.as_slice());
    match (g, n, b) {
        (0, 1..=4, []) => true,
        (0, 0, [_]) => true,
        (0, 1, [_]) => true,
        (0, 2, [1]) | (0, 2, [2]) => true,
        (0, 0, [1, 1]) | (0, 0, [1, 2]) | (0, 0, [2, 2]) => true,
        (1, 1, []) | (1, 0, [1]) => true,
        _ => false,
    }
}

const EXCEPTIONAL_TABLE: &str = include_str!("../data/exceptional.txt");

fn exceptional_table() -> &'static [SurfaceSig] {
    static TABLE: OnceLock<Vec<SurfaceSig>> = OnceLock::new();
    TABLE.get_or_init(|| {
        EXCEPTIONAL_TABLE
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| l.parse().expect("shipped exceptional table is well formed"))
            .collect()
    })
}

/// True iff `sig` is an essential subsurface of `S_{0,n}` (n ≤ 4) or `S_{1,n}` (n ≤ 2).
///
/// Backed by `data/exceptional.txt`, which is regenerated by exhaustive cutting
/// (see [`crate::oracles::exceptional_signatures`] and the `regen_exceptional` example).
pub fn is_exceptional(sig: &SurfaceSig) -> bool {
    exceptional_table().binary_search(sig).is_ok()
}

/// The shipped exceptional table, sorted.
pub fn exceptional_list() -> &'static [SurfaceSig] {
    exceptional_table()
}

impl fmt::Display for SurfaceSig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{},{}", self.genus, self.interior)?;
        if !self.boundary.is_empty() {
            let ps: Vec<String> = self.boundary.iter().map(u32::to_string).collect();
            write!(f, ",({})", ps.join(","))?;
        }
        Ok(())
    }
}

fn parse_err(token: &str, msg: &str) -> Error {
    Error::Parse { token: token.to_string(), msg: msg.to_string() }
}

fn parse_count(tok: &str, what: &str) -> Result<u32> {
    if tok.is_empty() || !tok.bytes().all(|c| c.is_ascii_digit()) {
        return Err(parse_err(tok, &format!("expected a nonnegative integer for {what}")));
    }
    tok.parse().map_err(|_| parse_err(tok, &format!("{what} out of range")))
}

impl FromStr for SurfaceSig {
    type Err = Error;

    /// Grammar: `S<g>,<n>` or `S<g>,<n>,(<p1>,...,<pb>)`; no whitespace.
    fn from_str(s: &str) -> Result<Self> {
        if let Some(c) = s.chars().find(|c| c.is_whitespace()) {
            return Err(parse_err(&c.to_string(), "whitespace is not allowed in a signature"));
        }
        let rest = s
            .strip_prefix('S')
            .ok_or_else(|| parse_err(s.get(..1).unwrap_or(""), "signature must start with `S`"))?;
        let (head, tail) = match rest.find('(') {
            Some(i) => (&rest[..i], Some(&rest[i..])),
            None => (rest, None),
        };
        let parts: Vec<&str> = head.split(',').collect();
        let (g_tok, n_tok) = match (parts.as_slice(), tail.is_some()) {
            ([g, n], false) => (*g, *n),
            ([g, n, ""], true) => (*g, *n),
            ([g], _) => return Err(parse_err(g, "expected `<genus>,<interior>`")),
            (ps, _) => return Err(parse_err(ps.last().copied().unwrap_or(""), "unexpected token")),
        };
        let genus = parse_count(g_tok, "genus")?;
        let interior = parse_count(n_tok, "interior marked points")?;
        let boundary = match tail {
            None => Vec::new(),
            Some(t) => {
                let inner = t
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| parse_err(t, "boundary list must be `(p1,...,pb)`"))?;
                if inner.is_empty() {
                    return Err(parse_err(t, "empty boundary list; omit it instead"));
                }
                let mut ps = Vec::new();
                for tok in inner.split(',') {
                    let p = parse_count(tok, "boundary marked points")?;
                    if p == 0 {
                        return Err(parse_err(tok, "boundary components need at least one marked point"));
                    }
                    ps.push(p);
                }
                ps
            }
        };
        SurfaceSig::new(genus, interior, boundary).map_err(|e| parse_err(s, &e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(s: &str) -> SurfaceSig {
        s.parse().unwrap()
    }

    #[test]
    fn complexity_values() {
        assert_eq!(complexity(&sig("S1,1")), 3);
        assert_eq!(complexity(&sig("S0,0,(1,1)")), 2);
        assert_eq!(complexity(&sig("S1,0,(1)")), 4);
        for g in 0..4 {
            for n in 1..6 {
                let s = SurfaceSig::closed(g, n).unwrap();
                assert_eq!(complexity(&s), 6 * g as i64 + 3 * n as i64 - 6);
            }
        }
    }

    #[test]
    fn arc_counts() {
        assert_eq!(arc_count(&sig("S0,2")), 1);
        assert_eq!(arc_count(&sig("S0,1")), 0);
        assert_eq!(arc_count(&sig("S0,4")), 6);
        for s in ["S0,0,(1)", "S0,0,(2)", "S0,0,(3)"] {
            assert_eq!(arc_count(&sig(s)), 0);
        }
        assert_eq!(triangle_count(&sig("S0,4")), 4);
        assert_eq!(triangle_count(&sig("S0,0,(3)")), 1);
        assert_eq!(triangle_count(&sig("S0,0,(1,1)")), 2);
    }

    #[test]
    fn simple_list() {
        assert!(is_simple(&sig("S0,2,(2)")));
        assert!(!is_simple(&sig("S0,5")));
        assert!(is_simple(&sig("S0,1,(17)")));
        assert!(!is_simple(&sig("S1,2")));
        assert!(!is_simple(&sig("S0,3,(1)")));
        assert!(!is_simple(&sig("S0,0,(1,3)")));
    }

    #[test]
    fn exceptional_examples() {
        assert!(is_exceptional(&sig("S1,1")));
        assert!(!is_exceptional(&sig("S2,1")));
        assert!(is_exceptional(&sig("S0,1,(2)")));
        assert!(is_exceptional(&sig("S0,4")));
        assert!(!is_exceptional(&sig("S0,5")));
    }

    #[test]
    fn display_and_parse() {
        for s in ["S1,1", "S0,0,(1,2)", "S0,4", "S2,0,(1,1,3)"] {
            assert_eq!(sig(s).to_string(), s);
        }
        assert_eq!(sig("S0,0,(2,1)").to_string(), "S0,0,(1,2)");
        assert_eq!(sig("S0,0,(2,1)"), sig("S0,0,(1,2)"));
    }

    #[test]
    fn parse_errors_name_token() {
        let e = "Sx".parse::<SurfaceSig>().unwrap_err();
        assert!(matches!(e, Error::Parse { ref token, .. } if token == "x"), "{e}");
        let e = "S1,y".parse::<SurfaceSig>().unwrap_err();
        assert!(matches!(e, Error::Parse { ref token, .. } if token == "y"));
        let e = "S0,0,(1,0)".parse::<SurfaceSig>().unwrap_err();
        assert!(matches!(e, Error::Parse { ref token, .. } if token == "0"));
        let e = "S0, 1".parse::<SurfaceSig>().unwrap_err();
        assert!(matches!(e, Error::Parse { ref token, .. } if token == " "));
        assert!("T1,1".parse::<SurfaceSig>().is_err());
        assert!("S0,0".parse::<SurfaceSig>().is_err());
        assert!("S0,0,()".parse::<SurfaceSig>().is_err());
    }
}
