//! Around two arcs bounding a common pair of triangles, builds the 13-vertex
//! configuration and checks that the second completion rule recovers the flip
//! of the first arc from the others.

use flipgraph::rigidity::{build_bset, rigid_closure, PartialMap, Rules};
use flipgraph::Ball;

fn main() -> flipgraph::Result<()> {
    for s in ["S0,5", "S1,2"] {
        let ball = Ball::new(&s.parse()?, 4)?;
        let st = ball.state(ball.root())?;
        let arcs = st.tri.arc_ids();
        let mut shown = 0;
        for &a in &arcs {
            for &b in &arcs {
                if a == b || st.tri.common_triangles(a, b)? != 2 || shown == 2 {
                    continue;
                }
                let bs = build_bset(&st.tri, &st.coords, a, b)?;
                let Some(loc) = bs.locate(&ball) else { continue };
                let seeds: Vec<usize> = ["T", "T_b", "T_c", "T_e", "T_eb", "T_bc", "T_cb"].iter().map(|r| loc[r]).collect();
                let pm = PartialMap::identity_on(&ball, &ball, &seeds)?.with_site_radius(2);
                let pm = rigid_closure(pm, Rules::R2)?;
                println!(
                    "{s} arcs {a},{b}: {:?} arrangement, T_a {}",
                    bs.config.arrangement,
                    if pm.get(loc["T_a"]) == Some(loc["T_a"]) { "forced" } else { "not forced" }
                );
                shown += 1;
            }
        }
    }
    Ok(())
}
