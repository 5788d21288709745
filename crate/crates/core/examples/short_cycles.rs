//! Two flips in a row close up into a square when the arcs share no triangle,
//! a pentagon when they share one, and into nothing short otherwise.

use flipgraph::flipgraph::verify_path2;
use flipgraph::Ball;

fn main() -> flipgraph::Result<()> {
    for s in ["S0,4", "S1,0,(1)", "S0,2,(2)", "S0,0,(2,2)"] {
        let b = Ball::new(&s.parse()?, 5)?;
        let rep = verify_path2(&b)?;
        let [zero, one, two] = rep.by_common;
        println!(
            "{s}: {} paths checked ({zero} squares, {one} pentagons, {two} with no short cycle), {} failures",
            rep.paths,
            rep.failures.len()
        );
    }
    Ok(())
}
