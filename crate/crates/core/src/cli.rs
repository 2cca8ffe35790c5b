//! The `uct` command line.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage error,
//! 3 a size limit was hit.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::checker::{default_suite, run_suite, Check, Report, SuiteOptions, DEFAULT_SEED};
use crate::constructors::unitary_cayley;
use crate::error::Error;
use crate::field::FieldTable;
use crate::graph::{
    all_pairs_distances, clique_number, connected_components, io, triameter_with_witness, Graph,
};
use crate::limits::{Limits, DEFAULT_FIELD_CAP, DEFAULT_VERTEX_CAP, HARD_VERTEX_CEILING};
use crate::ring::RingSpec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

const SPEC_HELP: &str = "Ring specs: `tri:N,P,K` is T_N(GF(P^K)); `zn:M` is Z_M.";

#[derive(Debug, Parser)]
#[command(name = "uct", version, about = "Unitary Cayley graphs of finite rings", after_help = SPEC_HELP)]
pub struct Cli {
    /// Maximum number of vertices (ring elements) to build, at most 2^20.
    #[arg(long, global = true, env = "UCT_VERTEX_CAP", default_value_t = DEFAULT_VERTEX_CAP)]
    pub cap: u64,
    /// Maximum field order p^k.
    #[arg(long, global = true, default_value_t = DEFAULT_FIELD_CAP)]
    pub field_cap: u64,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Finite field tables.
    Field {
        #[command(subcommand)]
        command: FieldCommand,
    },
    /// Build a unitary Cayley graph and export it.
    Build {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, value_enum, default_value_t = Format::Edges)]
        format: Format,
        /// Output file; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Degree, components, diameter, triameter and clique number.
    Invariants {
        #[command(flatten)]
        ring: RingArgs,
        /// Read the graph from an edge list instead of building a ring.
        #[arg(long, conflicts_with_all = ["ring", "n", "p", "k", "modulus"])]
        edges: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the structure checks and write a JSON verdict report.
    #[command(after_help = SPEC_HELP)]
    Verify {
        /// Ring to check (repeatable); the default suite if omitted.
        #[arg(long = "spec")]
        specs: Vec<String>,
        /// Restrict to these checks (repeatable): prop0, prop1, theorem1,
        /// connectivity, triameter, clique, theorem3, quotient, zn.
        #[arg(long = "check")]
        checks: Vec<String>,
        /// Seed for randomized spot checks.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum FieldCommand {
    /// Print q and the modulus; with --table, the multiplication table as CSV.
    Info {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long)]
        table: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RingKind {
    Tri,
    Zn,
}

#[derive(Debug, Args)]
pub struct RingArgs {
    #[arg(long, value_enum)]
    pub ring: Option<RingKind>,
    /// Matrix dimension for `--ring tri`.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub k: Option<u32>,
    /// Modulus for `--ring zn`.
    #[arg(long)]
    pub modulus: Option<u64>,
}

impl RingArgs {
    fn spec(&self) -> Result<RingSpec, Error> {
        let missing = |what: &str| Error::InvalidParameter(format!("missing --{what}"));
        let spec = match self.ring.ok_or_else(|| missing("ring"))? {
            RingKind::Tri => RingSpec::tri(
                self.n.ok_or_else(|| missing("n"))?,
                self.p.ok_or_else(|| missing("p"))?,
                self.k.unwrap_or(1),
            ),
            RingKind::Zn => RingSpec::zn(self.modulus.ok_or_else(|| missing("modulus"))?),
        };
        // re-parse to apply the same validation as spec strings
        spec.to_string().parse()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Edges,
    Text,
}

/// Invariants as reported by `uct invariants`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantSummary {
    pub vertices: usize,
    pub edges: usize,
    /// Common degree, or `"irregular"`.
    pub degree: Value,
    pub components: usize,
    pub diameter: Value,
    pub triameter: Value,
    pub clique: usize,
}

const DISCONNECTED: &str = "undefined: disconnected";

pub fn invariant_summary(g: &Graph) -> InvariantSummary {
    let components = connected_components(g).len();
    let (diameter, triameter) = if components == 1 && g.vertex_count() > 0 {
        let dm = all_pairs_distances(g);
        let diam = dm.diameter().expect("connected");
        let tri = triameter_with_witness(&dm).expect("connected").value;
        (json!(diam), json!(tri))
    } else {
        (json!(DISCONNECTED), json!(DISCONNECTED))
    };
    InvariantSummary {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        degree: g.regular_degree().map_or(json!("irregular"), |d| json!(d)),
        components,
        diameter,
        triameter,
        clique: clique_number(g),
    }
}

fn error_code(e: &Error) -> i32 {
    if e.is_resource_limit() {
        EXIT_LIMIT
    } else {
        EXIT_USAGE
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Parses `args` (program name first) and runs the command, writing to the
/// given streams. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(stdout, "{rendered}")
            } else {
                write!(stderr, "{rendered}")
            };
            return code;
        }
    };
    if cli.cap > HARD_VERTEX_CEILING {
        let _ = writeln!(stderr, "error: {}", Error::CapAboveCeiling(cli.cap));
        return EXIT_USAGE;
    }
    let limits = Limits {
        vertex_cap: cli.cap,
        field_cap: cli.field_cap,
    };
    let result = match cli.threads {
        None => dispatch(&cli.command, &limits, stdout, stderr),
        Some(t) => {
            let pool = match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
                Ok(p) => p,
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    return EXIT_USAGE;
                }
            };
            let (mut out, mut err) = (Vec::new(), Vec::new());
            let r = pool.install(|| dispatch(&cli.command, &limits, &mut out, &mut err));
            let _ = stdout.write_all(&out);
            let _ = stderr.write_all(&err);
            r
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            error_code(&e)
        }
    }
}

fn dispatch(
    command: &Command,
    limits: &Limits,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Error> {
    match command {
        Command::Field {
            command: FieldCommand::Info { p, k, table },
        } => field_info(*p, *k, *table, limits, stdout),
        Command::Build { ring, format, out } => build(ring, *format, out.as_ref(), limits, stdout, stderr),
        Command::Invariants { ring, edges, format } => {
            let (name, g) = match edges {
                Some(path) => {
                    let g = io::read_edge_list(BufReader::new(File::open(path)?))?;
                    (path.display().to_string(), g)
                }
                None => {
                    let spec = ring.spec()?;
                    (spec.to_string(), unitary_cayley(&spec, limits)?.graph)
                }
            };
            let s = invariant_summary(&g);
            match format {
                Format::Text => {
                    writeln!(stdout, "graph: {name}")?;
                    writeln!(stdout, "vertices: {}", s.vertices)?;
                    writeln!(stdout, "edges: {}", s.edges)?;
                    writeln!(stdout, "degree: {}", plain(&s.degree))?;
                    writeln!(stdout, "components: {}", s.components)?;
                    writeln!(stdout, "diameter: {}", plain(&s.diameter))?;
                    writeln!(stdout, "triameter: {}", plain(&s.triameter))?;
                    writeln!(stdout, "clique: {}", s.clique)?;
                }
                _ => {
                    serde_json::to_writer(&mut *stdout, &s).map_err(|e| Error::Io(e.to_string()))?;
                    writeln!(stdout)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            specs,
            checks,
            seed,
            out,
        } => verify(specs, checks, *seed, out.as_ref(), limits, stdout, stderr),
    }
}

fn field_info(p: u64, k: u32, table: bool, limits: &Limits, out: &mut dyn Write) -> Result<i32, Error> {
    let f = FieldTable::new(p, k, limits.field_cap)?;
    let modulus: Vec<String> = f.modulus().iter().map(u32::to_string).collect();
    writeln!(out, "p: {}", f.characteristic())?;
    writeln!(out, "k: {}", f.degree())?;
    writeln!(out, "q: {}", f.order())?;
    writeln!(out, "modulus: {}", modulus.join(","))?;
    if table {
        let header: Vec<String> = f.elements().map(|e| e.to_string()).collect();
        writeln!(out, "*,{}", header.join(","))?;
        for a in f.elements() {
            let row: Vec<String> = f.elements().map(|b| f.mul(a, b).to_string()).collect();
            writeln!(out, "{a},{}", row.join(","))?;
        }
    }
    Ok(EXIT_OK)
}

fn write_graph(g: &Graph, name: &str, format: Format, out: &mut dyn Write) -> Result<(), Error> {
    match format {
        Format::Edges => io::write_edge_list(g, out),
        Format::Dot => io::write_dot(g, name, out),
        Format::Json => {
            io::write_json(g, &mut *out)?;
            writeln!(out)?;
            Ok(())
        }
        Format::Text => io::write_text(g, out),
    }
}

fn build(
    ring: &RingArgs,
    format: Format,
    out: Option<&PathBuf>,
    limits: &Limits,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Error> {
    let spec = ring.spec()?;
    let g = unitary_cayley(&spec, limits)?.graph;
    let name = format!("C({spec})");
    let counts = format!("vertices: {}\nedges: {}\n", g.vertex_count(), g.edge_count());
    match out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            write_graph(&g, &name, format, &mut w)?;
            w.flush()?;
            write!(stdout, "{counts}")?;
        }
        None => {
            write_graph(&g, &name, format, stdout)?;
            write!(stderr, "{counts}")?;
        }
    }
    Ok(EXIT_OK)
}

fn verify(
    specs: &[String],
    checks: &[String],
    seed: u64,
    out: Option<&PathBuf>,
    limits: &Limits,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Error> {
    let specs: Vec<RingSpec> = if specs.is_empty() {
        default_suite()
    } else {
        specs.iter().map(|s| s.parse()).collect::<Result<_, _>>()?
    };
    let checks: Option<Vec<Check>> = if checks.is_empty() {
        None
    } else {
        Some(checks.iter().map(|c| c.parse()).collect::<Result<_, _>>()?)
    };
    if let Some(cs) = &checks {
        for spec in &specs {
            for c in cs {
                if let Err(reason) = c.applies_to(spec) {
                    return Err(Error::WrongField {
                        check: c.name().into(),
                        spec: spec.to_string(),
                        reason,
                    });
                }
            }
        }
    }
    let opts = SuiteOptions {
        limits: *limits,
        seed,
        checks,
    };
    let report = Report::new(run_suite(&specs, &opts));
    for v in &report.verdicts {
        let status = if v.pass { "PASS" } else { "FAIL" };
        writeln!(stderr, "{status} {} {}", v.spec, v.claim_id)?;
    }
    let json = serde_json::to_string_pretty(&report).map_err(|e| Error::Io(e.to_string()))?;
    match out {
        Some(path) => std::fs::write(path, json + "\n")?,
        None => writeln!(stdout, "{json}")?,
    }
    Ok(if report.all_pass() { EXIT_OK } else { EXIT_FAILED })
}
