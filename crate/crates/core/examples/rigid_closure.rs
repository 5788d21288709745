//! Propagates a partial map between flip-graph balls by unique completion of
//! short cycles, starting from the closed star of a vertex.

use flipgraph::rigidity::{rigid_closure, PartialMap, Rules};
use flipgraph::Ball;

fn main() -> flipgraph::Result<()> {
    let s = "S0,0,(1,2)".parse()?;
    let dom = Ball::new(&s, 10)?;
    let host = Ball::new(&s, 12)?;
    let seeds: Vec<usize> = std::iter::once(dom.root()).chain(dom.neighbors(dom.root())).collect();
    let pm = rigid_closure(PartialMap::identity_on(&dom, &host, &seeds)?, Rules::R1)?;
    for d in 0..=dom.radius() {
        let total = dom.sphere(d).count();
        let forced = dom.sphere(d).filter(|&v| pm.get(v).is_some()).count();
        println!("distance {d:2}: {forced}/{total} forced");
    }
    for f in pm.trace().iter().take(5) {
        println!("{} forces {} via {:?}", f.rule, f.forced, f.witness);
    }
    Ok(())
}
