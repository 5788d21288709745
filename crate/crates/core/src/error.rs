use thiserror::Error;

use crate::surface::SurfaceSig;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at token `{token}`: {msg}")]
    Parse { token: String, msg: String },

    #[error("invalid surface signature: {0}")]
    InvalidSurface(String),

    #[error("malformed triangulation: {0}")]
    MalformedTriangulation(String),

    #[error("surface {0} has no nonempty triangulation")]
    NoTriangulation(SurfaceSig),

    #[error("arc {0} is the inner side of a folded triangle and cannot be flipped")]
    NotFlippable(u32),

    #[error("arc {0} is a boundary segment, not an interior arc")]
    NotInterior(u32),

    #[error("unknown arc id {0}")]
    UnknownArc(u32),

    #[error("the two arcs must be distinct (got {0} twice)")]
    SameArc(u32),

    #[error("vertex budget of {budget} exceeded")]
    ResourceLimit { budget: usize },

    #[error("insufficient radius: {0}")]
    InsufficientRadius(String),

    #[error("contradiction during rigid closure: {0}")]
    Contradiction(String),

    #[error("ambiguous forcing (tie between {candidates} candidates): {site}")]
    Tie { site: String, candidates: usize },

    #[error("no suitable arc configuration found: {0}")]
    ConfigNotFound(String),

    #[error("digest collision between distinct keys {0} and {1}")]
    DigestCollision(String, String),

    #[error("projection undefined: {0}")]
    ProjectionUndefined(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
