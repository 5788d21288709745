//! Triangulations up to homeomorphism, by exhaustive gluing and by sampling
//! the flip graph.

use std::collections::BTreeSet;

use flipgraph::oracles::{count_labeled, enumerate_all, gluing_count};
use flipgraph::Ball;

fn main() -> flipgraph::Result<()> {
    for s in ["S0,4", "S1,1", "S1,0,(1)", "S0,2,(1)", "S0,0,(6)"] {
        let sig = s.parse()?;
        let en = enumerate_all(&sig, u128::MAX)?;
        let b = Ball::new(&sig, 5)?;
        let sampled: BTreeSet<_> = (0..b.len()).map(|v| b.triangulation(v).map(|t| t.canonical_class())).collect::<Result<_, _>>()?;
        println!(
            "{s}: {} gluings, {} classes ({} oriented), {} seen within distance 5",
            gluing_count(&sig),
            en.classes.len(),
            en.oriented.len(),
            sampled.len()
        );
        if let Ok(n) = count_labeled(&sig, u128::MAX) {
            println!("  the flip graph is finite with {n} vertices");
        }
    }
    Ok(())
}
