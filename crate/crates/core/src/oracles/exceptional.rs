//! The exceptional table: every surface obtained by cutting a triangulation of
//! `S0,n` (n ≤ 4) or `S1,n` (n ≤ 2) along a set of its arcs.

use std::collections::BTreeSet;

use super::enumerate::enumerate_all;
use crate::error::Result;
use crate::surface::SurfaceSig;

const AMBIENT: [&str; 6] = ["S0,1", "S0,2", "S0,3", "S0,4", "S1,1", "S1,2"];

/// All pieces of all cuts of all triangulations of the ambient surfaces, sorted.
///
/// The ambient surfaces without triangles are handled directly: `S0,1` has no
/// arcs, and cutting `S0,2` along its only arc leaves a disk with two marked
/// points.
pub fn exceptional_signatures() -> Result<Vec<SurfaceSig>> {
    let mut out = BTreeSet::new();
    for name in AMBIENT {
        let sig: SurfaceSig = name.parse()?;
        out.insert(sig.clone());
        if crate::surface::triangle_count(&sig) == 0 {
            if sig.interior() == 2 {
                out.insert(SurfaceSig::new(0, 0, vec![2])?);
            }
            continue;
        }
        let en = enumerate_all(&sig, u128::MAX)?;
        for t in en.classes.values() {
            let arcs = t.arc_ids();
            for mask in 0u64..1 << arcs.len() {
                let cut: Vec<_> = (0..arcs.len()).filter(|k| mask >> k & 1 == 1).map(|k| arcs[k]).collect();
                out.extend(t.cut_along(&cut)?);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// The table in the shipped text format.
pub fn render_exceptional_table() -> Result<String> {
    let mut s = String::from(
        "# Essential subsurfaces of S0,n (n <= 4) and S1,n (n <= 2), one per line.\n\
         # Regenerate with: cargo run --release --example regen_exceptional\n",
    );
    for sig in exceptional_signatures()? {
        s.push_str(&sig.to_string());
        s.push('\n');
    }
    Ok(s)
}
