//! Explores a ball in the flip graph of the four-punctured sphere and prints
//! its size, degree profile and a Graphviz rendering of the first sphere.

use flipgraph::flipgraph::{export, Format};
use flipgraph::{Ball, SurfaceSig};

fn main() -> flipgraph::Result<()> {
    let s: SurfaceSig = std::env::args().nth(1).as_deref().unwrap_or("S0,4").parse()?;
    let big = Ball::new(&s, 4)?;
    println!("{s}: {} triangulations within distance 4, {} flips", big.len(), big.edges().len());
    for d in 0..=big.radius() {
        println!("  distance {d}: {}", big.sphere(d).count());
    }
    println!("degrees (full flip graph): {:?}", big.degree_profile());
    print!("{}", export(&Ball::new(&s, 1)?, Format::Dot));
    Ok(())
}
