//! Command-line front end.
//!
//! Exit codes: 0 success, 1 input error, 2 resource limit, 3 verification failure.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::error::Error;
use crate::flipgraph::{self as fg, Ball, BallConfig, Format};
use crate::oracles;
use crate::rigidity::{self, Graph, PartialMap, Rules};
use crate::surface::SurfaceSig;
use crate::trimap::Triangulation;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "flipgraph", version, about = "Explore and check flip graphs of triangulated surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Surface signature, e.g. `S1,1` or `S0,0,(1,2)`.
    #[arg(long)]
    surface: Option<String>,
    #[arg(long)]
    radius: Option<usize>,
    /// Vertex budget for exploration.
    #[arg(long, env = "FLIPGRAPH_BUDGET")]
    budget: Option<usize>,
    /// `json` (default) or `dot`.
    #[arg(long)]
    format: Option<String>,
    /// Seed for sampled checks.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    threads: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Explore a ball of the flip graph and export it.
    Ball(Common),
    /// Count homeomorphism classes of triangulations seen in a ball.
    Classes(Common),
    /// Check the classification of length-2 paths and their short cycles.
    #[command(name = "verify-lemma32")]
    VerifyLemma32(Common),
    /// Check the third-side condition for arcs bordering two common triangles.
    #[command(name = "verify-lemma51")]
    VerifyLemma51 {
        #[command(flatten)]
        common: Common,
        /// Number of sampled triangulations.
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
    /// Rigid closure from the closed star of the root into a larger ball.
    Closure {
        #[command(flatten)]
        common: Common,
        /// `r1`, `r2` or `all`.
        #[arg(long, default_value = "all")]
        rules: String,
    },
    /// Count embeddings of a path segment into a ball, one end at the root.
    Homsearch {
        #[command(flatten)]
        common: Common,
        /// Number of vertices of the path.
        #[arg(long, default_value_t = 6)]
        length: usize,
        #[arg(long, default_value_t = 100_000)]
        limit: usize,
    },
    /// Build a ladder of two parallel flip lines.
    Ladder {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 3)]
        half_length: usize,
    },
    /// Exact growth and average-distance arithmetic.
    Growth {
        /// Print the largest n satisfying the growth inequality.
        #[arg(long)]
        max_n: bool,
        /// Evaluate the inequality at n.
        #[arg(long)]
        n: Option<u32>,
        /// Print the average-distance bound at n.
        #[arg(long)]
        average: Option<u32>,
    },
    /// Type-0 / type-1 edge structure of the capping projection.
    Fibers(Common),
    /// Re-export a JSON ball in another format.
    Export {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

enum Failure {
    Lib(Error),
    Usage(String),
    /// A check found a counterexample; the payload is the witness.
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = std::result::Result<String, Failure>;

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit { .. } => EXIT_RESOURCE,
        Error::Contradiction(_)
        | Error::Tie { .. }
        | Error::DigestCollision(..)
        | Error::ProjectionUndefined(_)
        | Error::ConfigNotFound(_) => EXIT_VERIFY,
        _ => EXIT_INPUT,
    }
}

impl Common {
    fn surface(&self) -> std::result::Result<SurfaceSig, Failure> {
        let s = self.surface.as_deref().ok_or_else(|| Failure::Usage("missing --surface".into()))?;
        Ok(s.parse()?)
    }

    fn surface_or(&self, default: &str) -> std::result::Result<SurfaceSig, Failure> {
        match &self.surface {
            Some(s) => Ok(s.parse()?),
            None => Ok(default.parse()?),
        }
    }

    fn radius(&self, default: Option<usize>) -> std::result::Result<usize, Failure> {
        self.radius.or(default).ok_or_else(|| Failure::Usage("missing --radius".into()))
    }

    fn format(&self) -> std::result::Result<Format, Failure> {
        Ok(self.format.as_deref().unwrap_or("json").parse()?)
    }

    fn config(&self, radius: usize) -> std::result::Result<BallConfig, Failure> {
        let budget = self.budget.unwrap_or(fg::DEFAULT_BUDGET);
        if budget == 0 {
            return Err(Failure::Usage("--budget must be positive".into()));
        }
        Ok(BallConfig { radius, budget, threads: self.threads })
    }

    fn ball(&self, sig: &SurfaceSig, radius: usize) -> std::result::Result<Ball, Failure> {
        Ok(Ball::with_config(sig, &self.config(radius)?)?)
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn cmd_ball(c: &Common) -> Outcome {
    let sig = c.surface()?;
    let b = c.ball(&sig, c.radius(None)?)?;
    Ok(fg::export(&b, c.format()?))
}

fn cmd_classes(c: &Common) -> Outcome {
    let sig = c.surface()?;
    let r = c.radius(Some(6))?;
    let b = c.ball(&sig, r)?;
    let mut classes: Vec<_> = (0..b.len()).map(|v| Ok(b.triangulation(v)?.canonical_class())).collect::<crate::Result<_>>()?;
    classes.sort();
    classes.dedup();
    let budget = c.budget.unwrap_or(fg::DEFAULT_BUDGET) as u128;
    let enumerated = if oracles::gluing_count(&sig) <= budget {
        Some(oracles::enumerate_all(&sig, budget)?.classes.len())
    } else {
        None
    };
    if let Some(n) = enumerated {
        if n != classes.len() {
            return Err(Failure::Verify(format!(
                "{sig}: ball of radius {r} shows {} classes, exhaustive enumeration finds {n}",
                classes.len()
            )));
        }
    }
    if c.format.is_none() {
        return Ok(format!("{}\n", classes.len()));
    }
    match c.format()? {
        Format::Json => {
            #[derive(Serialize)]
            struct Out {
                surface: String,
                radius: usize,
                classes: usize,
                enumerated: Option<usize>,
            }
            Ok(json(&Out { surface: sig.to_string(), radius: r, classes: classes.len(), enumerated }))
        }
        Format::Dot => Err(Failure::Usage("classes supports --format json only".into())),
    }
}

fn cmd_path2(c: &Common) -> Outcome {
    let sig = c.surface()?;
    let r = c.radius(Some(4))?;
    let b = c.ball(&sig, r)?;
    let rep = fg::verify_path2(&b)?;
    if !rep.ok() {
        return Err(Failure::Verify(rep.failures.join("\n")));
    }
    Ok(format!(
        "{sig} radius {r}: {} paths checked (common triangles 0/1/2: {}/{}/{}), no failures\n",
        rep.paths, rep.by_common[0], rep.by_common[1], rep.by_common[2]
    ))
}

fn cmd_third_sides(c: &Common, samples: usize) -> Outcome {
    let sig = c.surface()?;
    let r = c.radius(Some(5))?;
    let sample: Vec<Triangulation> = match c.seed {
        Some(seed) => fg::random_triangulations(&sig, samples, 4 * r, seed)?,
        None => {
            let b = c.ball(&sig, r)?;
            (0..b.len().min(samples)).map(|v| b.triangulation(v).cloned()).collect::<crate::Result<_>>()?
        }
    };
    let rep = rigidity::check_lemma_5_1(&sig, &sample)?;
    if !rep.ok() {
        return Err(Failure::Verify(rep.violations.join("\n")));
    }
    Ok(format!(
        "{sig}: {} triangulations, {} configurations, no violations\n",
        rep.triangulations, rep.configurations
    ))
}

fn cmd_closure(c: &Common, rules: &str) -> Outcome {
    let sig = c.surface()?;
    let r = c.radius(Some(6))?;
    let rules = match rules {
        "r1" => Rules::R1,
        "r2" => Rules::R2,
        "all" => Rules::ALL,
        other => return Err(Failure::Lib(Error::Parse { token: other.into(), msg: "rules must be r1, r2 or all".into() })),
    };
    let dom = c.ball(&sig, r)?;
    let host = c.ball(&sig, r + 2)?;
    let mut seeds: Vec<usize> = std::iter::once(dom.root()).chain(dom.neighbors(dom.root())).collect();
    seeds.sort();
    let pm = PartialMap::identity_on(&dom, &host, &seeds)?;
    let pm = rigidity::rigid_closure(pm, rules)?;
    for (&d, &h) in pm.assignment() {
        if dom.vertex(d).key != host.vertex(h).key {
            return Err(Failure::Verify(format!("vertex {} forced to {}", dom.vertex(d).key, host.vertex(h).key)));
        }
    }
    match c.format()? {
        Format::Json => Ok(pm.trace_json() + "\n"),
        Format::Dot => Err(Failure::Usage("closure supports --format json only".into())),
    }
}

fn cmd_homsearch(c: &Common, length: usize, limit: usize) -> Outcome {
    if length == 0 {
        return Err(Failure::Usage("--length must be positive".into()));
    }
    let sig = c.surface_or("S1,1")?;
    let host = c.ball(&sig, c.radius(Some(10))?)?;
    let homs = rigidity::search_injective_homs(&Graph::path(length), &host, &[(0, host.root())], limit)?;
    let rows: Vec<Vec<String>> = homs.iter().map(|h| h.iter().map(|&v| host.vertex(v).key.digest_hex()).collect()).collect();
    #[derive(Serialize)]
    struct Out {
        surface: String,
        length: usize,
        count: usize,
        embeddings: Vec<Vec<String>>,
    }
    Ok(json(&Out { surface: sig.to_string(), length, count: rows.len(), embeddings: rows }))
}

fn cmd_ladder(c: &Common, h: usize) -> Outcome {
    let sig = c.surface_or("S1,2")?;
    let b = c.ball(&sig, c.radius(Some(2))?)?;
    for v in 0..b.len() {
        let st = b.state(v)?;
        let arcs = st.tri.arc_ids();
        for &a in &arcs {
            for &bb in &arcs {
                if a == bb {
                    continue;
                }
                let Some(cfg) = rigidity::case_three(&st.tri, a, bb)? else { continue };
                if cfg.arrangement != rigidity::Arrangement::Second {
                    continue;
                }
                for e in st.tri.flippable_arcs() {
                    if [a, bb, cfg.c.id, cfg.d.id].contains(&e.id) {
                        continue;
                    }
                    let l = rigidity::build_ladder(&st.tri, &st.coords, a, bb, e.id, h)?;
                    if !l.squares_ok() {
                        return Err(Failure::Verify(format!("ladder square is not a 4-cycle at\n{}", st.tri)));
                    }
                    #[derive(Serialize)]
                    struct Out {
                        surface: String,
                        vertices: Vec<String>,
                        edges: Vec<(String, String)>,
                        roles: std::collections::BTreeMap<String, String>,
                    }
                    let mut roles = std::collections::BTreeMap::new();
                    let mut edges = Vec::new();
                    for (i, k) in l.gamma.iter().enumerate() {
                        roles.insert(k.to_string(), format!("gamma[{i}]"));
                    }
                    for (i, k) in l.gamma_prime.iter().enumerate() {
                        roles.insert(k.to_string(), format!("gamma_prime[{i}]"));
                        edges.push((l.gamma[i].to_string(), k.to_string()));
                    }
                    for line in [&l.gamma, &l.gamma_prime] {
                        for w in line.windows(2) {
                            edges.push((w[0].to_string(), w[1].to_string()));
                        }
                    }
                    let vertices = l.gamma.iter().chain(&l.gamma_prime).map(|k| k.to_string()).collect();
                    return Ok(json(&Out { surface: sig.to_string(), vertices, edges, roles }));
                }
            }
        }
    }
    Err(Failure::Lib(Error::ConfigNotFound(format!("no ladder site in the ball of {sig}"))))
}

fn cmd_growth(max_n: bool, n: Option<u32>, average: Option<u32>) -> Outcome {
    let mut s = String::new();
    if max_n {
        s += &format!("{}\n", rigidity::growth_inequality_max_n());
    }
    if let Some(n) = n {
        if n == 0 {
            return Err(Failure::Usage("--n starts at 1".into()));
        }
        s += &format!("{}\n", rigidity::growth_inequality_holds(n));
    }
    if let Some(n) = average {
        if n == 0 {
            return Err(Failure::Usage("--average starts at 1".into()));
        }
        let (b, sum) = (rigidity::average_distance_bound(n), rigidity::average_distance_sum(n));
        if b != sum {
            return Err(Failure::Verify(format!("bound {b} but the sum gives {sum}")));
        }
        s += &format!("{b}\n");
    }
    if s.is_empty() {
        return Err(Failure::Usage("growth needs --max-n, --n or --average".into()));
    }
    Ok(s)
}

fn cmd_fibers(c: &Common) -> Outcome {
    let sig = c.surface_or("S1,0,(1)")?;
    let b = c.ball(&sig, c.radius(Some(6))?)?;
    let part = rigidity::fiber_edges(&b)?;
    let rep = rigidity::check_fibers(&b, &part);
    if !rep.ok() {
        return Err(Failure::Verify(rep.failures.join("\n")));
    }
    Ok(format!(
        "{} vertices, {} type-0 edges, {} type-1 edges, {} fibers, largest fiber in a ball {}\n",
        b.len(),
        part.type0.len(),
        part.type1.len(),
        rep.fibers,
        rep.largest_fiber_in_ball
    ))
}

fn cmd_export(c: &Common, input: &Option<PathBuf>) -> Outcome {
    let path = input.as_ref().ok_or_else(|| Failure::Usage("missing --input".into()))?;
    let text = std::fs::read_to_string(path).map_err(Error::from)?;
    let b = fg::import(&text)?;
    Ok(fg::export(&b, c.format()?))
}

fn dispatch(cmd: &Command) -> (Outcome, Option<PathBuf>) {
    match cmd {
        Command::Ball(c) => (cmd_ball(c), c.out.clone()),
        Command::Classes(c) => (cmd_classes(c), c.out.clone()),
        Command::VerifyLemma32(c) => (cmd_path2(c), c.out.clone()),
        Command::VerifyLemma51 { common, samples } => (cmd_third_sides(common, *samples), common.out.clone()),
        Command::Closure { common, rules } => (cmd_closure(common, rules), common.out.clone()),
        Command::Homsearch { common, length, limit } => (cmd_homsearch(common, *length, *limit), common.out.clone()),
        Command::Ladder { common, half_length } => (cmd_ladder(common, *half_length), common.out.clone()),
        Command::Growth { max_n, n, average } => (cmd_growth(*max_n, *n, *average), None),
        Command::Fibers(c) => (cmd_fibers(c), c.out.clone()),
        Command::Export { common, input } => (cmd_export(common, input), common.out.clone()),
    }
}

/// Runs the command line `args` (including the program name) and returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let (outcome, path) = dispatch(&cli.command);
    match outcome {
        Ok(text) => {
            let written = match path {
                Some(p) => std::fs::write(&p, text.as_bytes()).map_err(Error::from),
                None => out.write_all(text.as_bytes()).map_err(Error::from),
            };
            match written {
                Ok(()) => EXIT_OK,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    EXIT_INPUT
                }
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Verify(witness)) => {
            let _ = writeln!(err, "verification failed; witness follows");
            let _ = writeln!(out, "{witness}");
            EXIT_VERIFY
        }
    }
}

/// Runs with the process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
