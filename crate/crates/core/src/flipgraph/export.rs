//! JSON and DOT serialization of balls.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Ball, Edge, Vertex};
use crate::arcid::{ArcCoord, TriKey};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            _ => Err(Error::Parse { token: s.to_string(), msg: "format must be `json` or `dot`".into() }),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonVertex {
    key: String,
    dist: usize,
    degree: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct JsonEdge {
    u: String,
    v: String,
    removed: String,
    added: String,
}

#[derive(Serialize, Deserialize)]
struct JsonBall {
    surface: String,
    root: String,
    radius: usize,
    complete_to: i64,
    vertices: Vec<JsonVertex>,
    edges: Vec<JsonEdge>,
}

fn coord_text(c: &ArcCoord) -> String {
    c.to_string()
}

fn parse_coord(s: &str) -> Result<ArcCoord> {
    s.split(',')
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| Error::Parse { token: t.to_string(), msg: "expected an integer coordinate".into() })
        })
        .collect::<Result<Vec<_>>>()
        .map(ArcCoord::new)
}

/// Deterministic serialization; vertices sorted by key, edges by endpoint keys.
pub fn export(b: &Ball, format: Format) -> String {
    let mut order: Vec<usize> = (0..b.len()).collect();
    order.sort_by(|&x, &y| b.vertex(x).key.cmp(&b.vertex(y).key));
    let mut edges: Vec<(String, String, String, String)> = b
        .edges()
        .iter()
        .map(|e| {
            let (ku, kv) = (&b.vertex(e.u).key, &b.vertex(e.v).key);
            if ku <= kv {
                (ku.to_string(), kv.to_string(), coord_text(&e.removed), coord_text(&e.added))
            } else {
                (kv.to_string(), ku.to_string(), coord_text(&e.added), coord_text(&e.removed))
            }
        })
        .collect();
    edges.sort();
    match format {
        Format::Json => {
            let jb = JsonBall {
                surface: b.surface().to_string(),
                root: b.vertex(b.root()).key.to_string(),
                radius: b.radius(),
                complete_to: b.complete_to(),
                vertices: order
                    .iter()
                    .map(|&v| {
                        let x = b.vertex(v);
                        JsonVertex { key: x.key.to_string(), dist: x.dist, degree: x.degree }
                    })
                    .collect(),
                edges: edges
                    .into_iter()
                    .map(|(u, v, removed, added)| JsonEdge { u, v, removed, added })
                    .collect(),
            };
            let mut s = serde_json::to_string_pretty(&jb).expect("plain data serializes");
            s.push('\n');
            s
        }
        Format::Dot => {
            let mut s = String::from("graph flipgraph {\n");
            let _ = writeln!(s, "  // surface {} radius {} complete_to {}", b.surface(), b.radius(), b.complete_to());
            for &v in &order {
                let x = b.vertex(v);
                let _ = writeln!(s, "  \"{}\" [label=\"{}\"];", x.key.digest_hex(), x.dist);
            }
            for e in b.edges() {
                let (hu, hv) = (b.vertex(e.u).key.digest_hex(), b.vertex(e.v).key.digest_hex());
                let (hu, hv) = if hu <= hv { (hu, hv) } else { (hv, hu) };
                let _ = writeln!(s, "  \"{hu}\" -- \"{hv}\";");
            }
            s.push_str("}\n");
            s
        }
    }
}

/// Reads a JSON export back as a graph-only ball (no triangulations attached).
pub fn import(json: &str) -> Result<Ball> {
    let jb: JsonBall = serde_json::from_str(json).map_err(|e| Error::Parse {
        token: format!("line {} column {}", e.line(), e.column()),
        msg: e.to_string(),
    })?;
    let surface = jb.surface.parse()?;
    let mut vertices = Vec::with_capacity(jb.vertices.len());
    for v in &jb.vertices {
        let key: TriKey = v.key.parse()?;
        vertices.push(Vertex { key, dist: v.dist, degree: v.degree, state: None });
    }
    let mut index = std::collections::HashMap::new();
    for (i, v) in vertices.iter().enumerate() {
        if index.insert(v.key.clone(), i).is_some() {
            return Err(Error::Parse { token: v.key.to_string(), msg: "duplicate vertex".into() });
        }
    }
    let find = |k: &str| -> Result<usize> {
        let key: TriKey = k.parse()?;
        index
            .get(&key)
            .copied()
            .ok_or_else(|| Error::Parse { token: k.to_string(), msg: "edge endpoint is not a vertex".into() })
    };
    let mut edges = Vec::with_capacity(jb.edges.len());
    for e in &jb.edges {
        let (u, v) = (find(&e.u)?, find(&e.v)?);
        let (removed, added) = (parse_coord(&e.removed)?, parse_coord(&e.added)?);
        edges.push(Edge { u, v, removed, added });
    }
    let root: TriKey = jb.root.parse()?;
    let ball = Ball::from_parts(surface, jb.radius, jb.complete_to, vertices, edges)?;
    if ball.vertex(0).key != root {
        return Err(Error::Parse { token: jb.root, msg: "root is not the unique distance-0 vertex".into() });
    }
    Ok(ball)
}
