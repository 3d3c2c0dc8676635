//! Command-line front end: graphs come in as graph6, results go out as
//! JSON (or graph6 for generators).
//!
//! Exit codes: 0 yes / success, 1 no / rejected, 2 search budget ran out,
//! 3 input outside the engine's preconditions, 64 usage or parse error.

pub mod graph6;
pub mod json;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::io::{Read, Write};
use wqoim_core::antichains::{self, Family};
use wqoim_core::containment::{search_model, SearchOutcome};
use wqoim_core::decompose::{self, DecomposeError, Engine};
use wqoim_core::dichotomy::{classify, complement_filter};
use wqoim_core::{Graph, Relation};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

/// Environment variable holding the default node budget.
pub const BUDGET_VAR: &str = "WQOIM_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "wqoim", version, about = "Induced-minor containment, wqo dichotomy and decomposition certificates")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Is H contained in G? Prints the model when it is.
    Contains {
        /// graph6 file for the pattern H (`-` for stdin)
        h: String,
        /// graph6 file for the host G (`-` for stdin)
        g: String,
        #[arg(long, value_enum, default_value_t = RelationArg::InducedMinor)]
        relation: RelationArg,
        /// Root edges `uH,vH,uG,vG`; only with the induced-minor relation.
        #[arg(long, value_delimiter = ',', num_args = 4)]
        rooted: Option<Vec<usize>>,
        /// Node budget; defaults to $WQOIM_BUDGET, else unlimited.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Is the class excluding H well-quasi-ordered by induced minors?
    Dichotomy { h: String },
    /// Emit a decomposition certificate.
    Decompose {
        kind: Kind,
        g: String,
        #[arg(long, value_enum, default_value_t = EngineArg::Proof)]
        engine: EngineArg,
    },
    /// Check a certificate against a graph.
    Verify { kind: Kind, g: String, cert: String },
    /// Print a member of an antichain family as graph6.
    Gen { family: String, index: usize },
    /// Check the first members of a family for pairwise incomparability.
    VerifyAntichain {
        family: String,
        #[arg(long, default_value_t = 3)]
        count: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Print seeded random graphs G(n, p) as graph6.
    Random {
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum RelationArg {
    InducedMinor,
    InducedSubgraph,
    Contraction,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    K4hat,
    Gem,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum EngineArg {
    Proof,
    BruteForce,
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// A failure that ends the command with a message and an exit code.
struct Exit(i32, String);

type CmdResult = Result<i32, Exit>;

fn usage(msg: impl Into<String>) -> Exit {
    Exit(EXIT_USAGE, msg.into())
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String, Exit> {
        if path == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|e| usage(format!("stdin: {e}")))?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))
        }
    }

    fn graph(&mut self, path: &str) -> Result<Graph, Exit> {
        let text = self.read(path)?;
        graph6::decode_first(&text).map_err(|e| usage(format!("{path}: {e}")))
    }

    fn json<T: Serialize>(&mut self, v: &T) -> Result<(), Exit> {
        let s = serde_json::to_string(v).map_err(|e| Exit(EXIT_USAGE, e.to_string()))?;
        writeln!(self.out, "{s}").map_err(|e| usage(e.to_string()))
    }

    fn line(&mut self, s: &str) -> Result<(), Exit> {
        writeln!(self.out, "{s}").map_err(|e| usage(e.to_string()))
    }
}

fn budget(flag: Option<u64>) -> Result<Option<u64>, Exit> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| usage(format!("{BUDGET_VAR}={v} is not a node count"))),
        Err(_) => Ok(None),
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let mut io = Io { stdin, out, err };
    match dispatch(cli.cmd, &mut io) {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            let _ = writeln!(io.err, "wqoim: {msg}");
            code
        }
    }
}

fn dispatch(cmd: Command, io: &mut Io) -> CmdResult {
    match cmd {
        Command::Contains { h, g, relation, rooted, budget: b } => {
            let (h, g) = (io.graph(&h)?, io.graph(&g)?);
            let rel = match (rooted, relation) {
                (None, RelationArg::InducedMinor) => Relation::InducedMinor,
                (None, RelationArg::InducedSubgraph) => Relation::InducedSubgraph,
                (None, RelationArg::Contraction) => Relation::Contraction,
                (Some(r), RelationArg::InducedMinor) => {
                    Relation::RootedInducedMinor { pattern_root: (r[0], r[1]), host_root: (r[2], r[3]) }
                }
                (Some(_), _) => return Err(usage("--rooted only applies to the induced-minor relation")),
            };
            contains(io, &h, &g, rel, budget(b)?)
        }
        Command::Dichotomy { h } => {
            let h = io.graph(&h)?;
            if h.n() == 0 {
                return Err(usage("dichotomy needs a nonempty graph"));
            }
            let verdict = classify(&h);
            io.json(&json::verdict_json(&verdict, complement_filter(&h)))?;
            Ok(if verdict.is_wqo() { EXIT_YES } else { EXIT_NO })
        }
        Command::Decompose { kind, g, engine } => {
            let g = io.graph(&g)?;
            let engine = match engine {
                EngineArg::Proof => Engine::Proof,
                EngineArg::BruteForce => Engine::BruteForce,
            };
            decompose_cmd(io, kind, &g, engine)
        }
        Command::Verify { kind, g, cert } => {
            let g = io.graph(&g)?;
            let text = io.read(&cert)?;
            let cert: json::CertificateJson =
                serde_json::from_str(&text).map_err(|e| usage(format!("certificate: {e}")))?;
            let ok = match kind {
                Kind::K4hat => cert.to_k4hat(g.n()).map(|c| decompose::verify_k4hat(&g, &c)),
                Kind::Gem => cert.to_gem(g.n()).map(|c| decompose::verify_gem(&g, &c)),
            };
            match ok {
                Ok(true) => Ok(EXIT_YES),
                Ok(false) => Err(Exit(EXIT_NO, "certificate rejected".into())),
                Err(e) => Err(Exit(EXIT_NO, format!("certificate rejected: {e}"))),
            }
        }
        Command::Gen { family, index } => {
            let family: Family = family.parse().map_err(|e| usage(format!("{e}")))?;
            let g = antichains::gen(family, index).map_err(|e| usage(e.to_string()))?;
            io.line(&graph6::encode(&g))?;
            Ok(EXIT_YES)
        }
        Command::VerifyAntichain { family, count, budget: b } => {
            let family: Family = family.parse().map_err(|e| usage(format!("{e}")))?;
            let b = budget(b)?.or(Some(antichains::DEFAULT_BUDGET));
            let report = antichains::verify_pairwise_incomparable(family, count, b).map_err(|e| usage(e.to_string()))?;
            io.json(&json::ReportJson::from(&report))?;
            Ok(if report.comparable_count() > 0 {
                EXIT_NO
            } else if report.unknown_count() > 0 {
                EXIT_UNKNOWN
            } else {
                EXIT_YES
            })
        }
        Command::Random { n, p, count, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(usage(format!("edge probability {p} is not in [0, 1]")));
            }
            if n > wqoim_core::graph::MAX_VERTICES {
                return Err(usage(format!("at most {} vertices", wqoim_core::graph::MAX_VERTICES)));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                let g = Graph::from_fn(n, |_, _| rng.gen_bool(p)).map_err(|e| usage(e.to_string()))?;
                io.line(&graph6::encode(&g))?;
            }
            Ok(EXIT_YES)
        }
    }
}

fn relation_name(rel: Relation) -> &'static str {
    match rel {
        Relation::InducedMinor => "induced-minor",
        Relation::InducedSubgraph => "induced-subgraph",
        Relation::Contraction => "contraction",
        Relation::RootedInducedMinor { .. } => "rooted-induced-minor",
    }
}

fn contains(io: &mut Io, h: &Graph, g: &Graph, rel: Relation, budget: Option<u64>) -> CmdResult {
    let outcome = search_model(h, g, rel, budget).map_err(|e| usage(e.to_string()))?;
    let (result, model, code) = match &outcome {
        SearchOutcome::Found(m) => ("contained", Some(json::model_json(m)), EXIT_YES),
        SearchOutcome::Absent => ("absent", None, EXIT_NO),
        SearchOutcome::Unknown => ("unknown", None, EXIT_UNKNOWN),
    };
    io.json(&json::ContainsJson { schema: json::SCHEMA, relation: relation_name(rel).into(), result: result.into(), model })?;
    Ok(code)
}

fn decompose_cmd(io: &mut Io, kind: Kind, g: &Graph, engine: Engine) -> CmdResult {
    let cert = match kind {
        Kind::K4hat => decompose::decompose_k4hat_with(g, engine).map(|c| json::CertificateJson::from_k4hat(&c)),
        Kind::Gem => decompose::decompose_gem_with(g, engine).map(|c| json::CertificateJson::from_gem(&c)),
    };
    match cert {
        Ok(c) => {
            io.json(&c)?;
            Ok(EXIT_YES)
        }
        Err(e @ (DecomposeError::NotBiconnected { .. } | DecomposeError::PatternFound { .. })) => {
            let diag = match &e {
                DecomposeError::NotBiconnected { cut_vertex } => json::PreconditionJson {
                    schema: json::SCHEMA,
                    error: "not-biconnected".into(),
                    cut_vertex: *cut_vertex,
                    pattern: None,
                    model: None,
                },
                DecomposeError::PatternFound { model } => json::PreconditionJson {
                    schema: json::SCHEMA,
                    error: "pattern-found".into(),
                    cut_vertex: None,
                    pattern: Some(if kind == Kind::Gem { "gem" } else { "k4hat" }.into()),
                    model: Some(json::model_json(model)),
                },
                _ => unreachable!(),
            };
            io.json(&diag)?;
            Err(Exit(EXIT_PRECONDITION, e.to_string()))
        }
        Err(e) => Err(Exit(EXIT_NO, e.to_string())),
    }
}
