//! The annulus with one point on each boundary circle has a line as flip graph.
//! Each triangulation is a pair of consecutive winding numbers.

use flipgraph::oracles::{annulus_windings, check_annulus_ball};
use flipgraph::Ball;

fn main() -> flipgraph::Result<()> {
    let b = Ball::new(&"S0,0,(1,1)".parse()?, 6)?;
    let wind = annulus_windings(&b)?;
    let mut order: Vec<usize> = (0..b.len()).collect();
    order.sort_by_key(|&v| wind[v][0]);
    for v in order {
        println!("windings {:?} at distance {}", wind[v], b.dist(v));
    }
    let rep = check_annulus_ball(&b)?;
    println!("{} vertices, winding model {}", rep.vertices, if rep.ok() { "agrees" } else { "disagrees" });
    Ok(())
}
