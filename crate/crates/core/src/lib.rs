//! Triangulations of marked surfaces, their flip graphs, and propagation of
//! local rigidity through those graphs.
//!
//! Modules, bottom up:
//!
//! - [`surface`]: signatures `S_{g,n,(p_1..p_b)}` and the surface taxonomy.
//! - [`trimap`]: triangulations as glued oriented triangles, flips, cutting.
//! - [`arcid`]: intrinsic keys for triangulations, independent of labels.
//! - [`flipgraph`]: bounded balls of the flip graph and small-cycle queries.
//! - [`rigidity`]: rigid closure of partial maps, homomorphism search,
//!   the configurations used by the propagation argument, growth bounds.
//! - [`oracles`]: independent models of small flip graphs used as checks.
//! - [`cli`]: the command-line front end.

pub mod arcid;
pub mod cli;
pub mod error;
pub mod flipgraph;
pub mod oracles;
pub mod rigidity;
pub mod surface;
pub mod trimap;

pub use error::{Error, Result};
pub use surface::SurfaceSig;
pub use crate::flipgraph::Ball;
pub use trimap::{ArcId, Slot, Triangulation};
