//! Capping the boundary of `S1,0,(1)` to obtain `S1,1`.
//!
//! Collapsing the boundary circle to its marked point sends each arc to a loop
//! with the same homology class. The arc cutting off the boundary becomes
//! null-homologous and disappears; two arcs with the same slope become
//! isotopic. What remains is a slope triple, i.e. a vertex of the slope model.

use super::farey::{arc_classes, FareyVertex, Slope};
use super::H1;
use crate::error::{Error, Result};
use crate::flipgraph::Ball;

/// Image of one triangulation under capping, from the homology classes of its arcs.
pub fn cap_boundary(classes: &[H1]) -> Result<FareyVertex> {
    let mut slopes: Vec<Slope> = Vec::new();
    for &h in classes {
        if h == H1(0, 0) {
            continue;
        }
        let s = Slope::from_class(h)
            .ok_or_else(|| Error::ProjectionUndefined(format!("class {h:?} is not primitive")))?;
        if !slopes.contains(&s) {
            slopes.push(s);
        }
    }
    if slopes.len() != 3 {
        return Err(Error::ProjectionUndefined(format!("capped arcs give {} slopes: {classes:?}", slopes.len())));
    }
    FareyVertex::new([slopes[0], slopes[1], slopes[2]]).map_err(|e| Error::ProjectionUndefined(e.to_string()))
}

/// Capped image of every vertex of a ball of `S1,0,(1)`.
pub fn capped_projection(ball: &Ball) -> Result<Vec<FareyVertex>> {
    if ball.surface().to_string() != "S1,0,(1)" {
        return Err(Error::Precondition("capping applies to S1,0,(1)".into()));
    }
    arc_classes(ball)?
        .into_iter()
        .map(|arcs| cap_boundary(&arcs.into_iter().map(|(_, h)| h).collect::<Vec<_>>()))
        .collect()
}
