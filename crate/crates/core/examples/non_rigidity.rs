//! Why the small surfaces are not rigid: a segment of the annulus line embeds
//! into the torus tree in many ways, and ladders of squares appear in larger
//! flip graphs.

use flipgraph::rigidity::{build_ladder, case_three, search_injective_homs, Arrangement, Graph};
use flipgraph::Ball;

fn main() -> flipgraph::Result<()> {
    let line = Graph::path(8);
    let host = Ball::new(&"S1,1".parse()?, 10)?;
    let embs = search_injective_homs(&line.induced(&[0, 1, 2, 3, 4, 5]), &host, &[(0, host.root())], usize::MAX)?;
    println!("6-vertex segment into the torus tree from the root: {} embeddings", embs.len());
    let seed: Vec<(usize, usize)> = embs[0].iter().copied().enumerate().collect();
    let ext = search_injective_homs(&line, &host, &seed, usize::MAX)?;
    println!("extensions of one embedding by two more steps: {}", ext.len());

    let b = Ball::new(&"S1,2".parse()?, 2)?;
    let st = b.state(b.root())?;
    let arcs = st.tri.arc_ids();
    for &a in &arcs {
        for &c in &arcs {
            if a == c {
                continue;
            }
            let Some(cfg) = case_three(&st.tri, a, c)? else { continue };
            if cfg.arrangement != Arrangement::Second {
                continue;
            }
            if let Some(e) = st.tri.flippable_arcs().into_iter().find(|e| ![a, c, cfg.c.id, cfg.d.id].contains(&e.id)) {
                let l = build_ladder(&st.tri, &st.coords, a, c, e.id, 3)?;
                println!("ladder on S1,2: {} vertices, {} squares, all squares {}", l.len(), l.squares.len(), l.squares_ok());
                return Ok(());
            }
        }
    }
    println!("no ladder site at the root");
    Ok(())
}
