//! The flip graph of the once-punctured torus is the trivalent tree: compares
//! engine balls with the slope model.

use flipgraph::oracles::check_torus_ball;
use flipgraph::Ball;

fn main() -> flipgraph::Result<()> {
    let s = "S1,1".parse()?;
    for r in 0..=8 {
        let b = Ball::new(&s, r)?;
        let rep = check_torus_ball(&b)?;
        println!(
            "radius {r}: {:4} vertices (3*2^r-2 = {:4}), {:4} edges, slope model {}",
            b.len(),
            3 * (1usize << r) - 2,
            b.edges().len(),
            if rep.ok() { "agrees" } else { "DISAGREES" }
        );
    }
    Ok(())
}
