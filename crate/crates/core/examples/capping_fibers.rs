//! Capping the boundary of the one-holed torus projects its flip graph onto
//! the tree; the fibers are paths.

use std::collections::BTreeMap;

use flipgraph::rigidity::{check_fibers, fiber_edges};
use flipgraph::Ball;

fn main() -> flipgraph::Result<()> {
    let b = Ball::new(&"S1,0,(1)".parse()?, 6)?;
    let p = fiber_edges(&b)?;
    let rep = check_fibers(&b, &p);
    println!("{} vertices, {} edges inside fibers, {} edges across", b.len(), p.type0.len(), p.type1.len());
    let mut sizes: BTreeMap<_, usize> = BTreeMap::new();
    for i in &p.image {
        *sizes.entry(*i).or_default() += 1;
    }
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for n in sizes.values() {
        *hist.entry(*n).or_default() += 1;
    }
    println!("fiber sizes in the ball: {hist:?}");
    println!("root image {}", p.image[b.root()].0.map(|s| s.to_string()).join(" "));
    println!("structure checks: {}", if rep.ok() { "ok" } else { "failed" });
    Ok(())
}
