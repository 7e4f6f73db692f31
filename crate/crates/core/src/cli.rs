//! Command-line front end.
//!
//! Every command writes its JSON report to standard output and a short human
//! summary to standard error. Exit codes: 0 success or property holds, 1
//! property fails, 2 usage or validation error, 3 I/O error.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::aut;
use crate::connectivity;
use crate::constructions::{self, ConstructionParams};
use crate::error::Error;
use crate::hypergraph::{Hypergraph, Permutation};
use crate::io::{self, Format};
use crate::minimality::{self, Mode, ScanOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "asymhg", version, about = "Generate and verify asymmetric uniform hypergraphs")]
pub struct Cli {
    /// Worker threads for parallel scans; reports do not depend on it.
    #[arg(long, global = true, env = "ASYM_JOBS", default_value_t = 1)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a construction and write it to a file.
    Gen(GenArgs),
    /// Automorphism analysis of a hypergraph file.
    Aut(AutArgs),
    /// Scan induced sub-hypergraphs for minimal asymmetry.
    Minimal(MinimalArgs),
    /// Hypergraph dual of a regular graph file.
    Dual(DualArgs),
    /// Maximum number of edge-disjoint Berge paths between two vertices.
    Connect(ConnectArgs),
    /// Structural statistics.
    Stats(StatsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "G")]
    G,
    #[value(name = "H")]
    H,
    #[value(name = "H3")]
    H3,
    #[value(name = "H5")]
    H5,
    Frucht,
    RandomRegular,
    Dual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Txt,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    /// Component lengths for H, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub ts: Vec<usize>,
    #[arg(long = "t-prime")]
    pub t_prime: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file; the document goes to standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Expect {
    Asym,
    Sym,
}

#[derive(Debug, Args)]
pub struct AutArgs {
    pub path: PathBuf,
    /// Compute group generators and order.
    #[arg(long)]
    pub group: bool,
    #[arg(long, default_value_t = 1000)]
    pub limit: u64,
    /// Restrict to automorphisms fixing the named edge setwise.
    #[arg(long)]
    pub stabilize: Option<String>,
    #[arg(long, value_enum)]
    pub expect: Option<Expect>,
}

#[derive(Debug, Args)]
pub struct MinimalArgs {
    pub path: PathBuf,
    #[arg(long, default_value = "deletion1")]
    pub mode: String,
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long = "max-exhaustive", default_value_t = minimality::DEFAULT_MAX_EXHAUSTIVE_N)]
    pub max_exhaustive: usize,
    /// Also list a witness automorphism for every single-vertex deletion.
    #[arg(long)]
    pub witnesses: bool,
}

#[derive(Debug, Args)]
pub struct DualArgs {
    pub path: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
}

#[derive(Debug, Args)]
pub struct ConnectArgs {
    pub path: PathBuf,
    #[arg(long)]
    pub from: String,
    #[arg(long)]
    pub to: String,
    #[arg(long, default_value_t = 0)]
    pub min: usize,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    pub path: PathBuf,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn report(code: i32, report: &Value, summary: String) -> Self {
        let mut stdout = serde_json::to_string_pretty(report).expect("json values serialize");
        stdout.push('\n');
        Self { code, stdout, stderr: summary }
    }

    fn error(e: &Error) -> Self {
        let code = match e {
            Error::Io(_) => EXIT_IO,
            _ => EXIT_USAGE,
        };
        Self { code, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let result = crate::with_jobs(cli.jobs, || match &cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Aut(a) => cmd_aut(a),
        Command::Minimal(a) => cmd_minimal(a),
        Command::Dual(a) => cmd_dual(a),
        Command::Connect(a) => cmd_connect(a),
        Command::Stats(a) => cmd_stats(a),
    });
    result.unwrap_or_else(|e| Outcome::error(&e))
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, Error> {
    v.ok_or_else(|| Error::InvalidParams(format!("missing --{flag}")))
}

fn gen_params(a: &GenArgs) -> Result<ConstructionParams, Error> {
    Ok(match a.family {
        FamilyArg::G => ConstructionParams::G { k: need(a.k, "k")?, t: need(a.t, "t")? },
        FamilyArg::H => {
            if a.ts.is_empty() {
                return Err(Error::InvalidParams("missing --ts".into()));
            }
            ConstructionParams::H { k: a.k.unwrap_or(a.ts.len() + 1), ts: a.ts.clone() }
        }
        FamilyArg::H3 => ConstructionParams::H3 { t: need(a.t, "t")?, t_prime: need(a.t_prime, "t-prime")? },
        FamilyArg::H5 => ConstructionParams::H5 { t: need(a.t, "t")?, t_prime: need(a.t_prime, "t-prime")? },
        FamilyArg::Frucht => ConstructionParams::Frucht,
        FamilyArg::RandomRegular => {
            ConstructionParams::RandomRegular { n: need(a.n, "n")?, r: need(a.r, "r")?, seed: a.seed }
        }
        FamilyArg::Dual => ConstructionParams::Dual { r: a.r.or(a.k).unwrap_or(3), n: a.n, seed: a.seed },
    })
}

fn stats_value(h: &Hypergraph) -> Value {
    let hist: serde_json::Map<String, Value> =
        h.degree_histogram().into_iter().map(|(d, c)| (d.to_string(), json!(c))).collect();
    json!({
        "k": h.k(),
        "n": h.n(),
        "m": h.m(),
        "max_degree": h.max_degree(),
        "max_codegree": h.max_codegree().ok(),
        "linear": h.is_linear().ok(),
        "regular": h.is_regular(),
        "degree_histogram": hist,
    })
}

fn stats_line(h: &Hypergraph) -> String {
    format!(
        "{}-graph: n={} m={} max_degree={} linear={}\n",
        h.k(),
        h.n(),
        h.m(),
        h.max_degree(),
        h.is_linear().map_or("n/a".to_string(), |b| b.to_string())
    )
}

fn output_format(format: Option<FormatArg>, out: Option<&Path>) -> Format {
    match (format, out) {
        (Some(FormatArg::Json), _) => Format::Json,
        (Some(FormatArg::Txt), _) => Format::Text,
        (None, Some(p)) => Format::from_path(p),
        (None, None) => Format::Json,
    }
}

/// Writes `h` to `out`, or returns the document for standard output.
fn emit(h: &Hypergraph, out: Option<&Path>, format: Format, meta: Value) -> Result<Option<String>, Error> {
    match out {
        Some(path) => {
            io::write_file(path, h, format, Some(meta))?;
            Ok(None)
        }
        None => Ok(Some(match format {
            Format::Json => io::to_json(h, Some(meta)),
            Format::Text => io::to_text(h)?,
        })),
    }
}

pub fn cmd_gen(a: &GenArgs) -> Result<Outcome, Error> {
    let params = gen_params(a)?;
    let generated = constructions::generate(&params)?;
    let h = &generated.graph;
    let meta = json!({ "params": params, "warnings": generated.warnings });
    let format = output_format(a.format, a.out.as_deref());
    let mut stderr = String::new();
    for w in &generated.warnings {
        stderr.push_str(&format!("warning: {w}\n"));
    }
    let summary = json!({
        "n": h.n(),
        "m": h.m(),
        "max_degree": h.max_degree(),
        "linear": h.is_linear().ok(),
        "warnings": generated.warnings,
    });
    match emit(h, a.out.as_deref(), format, meta)? {
        None => {
            let mut out = Outcome::report(EXIT_OK, &summary, stats_line(h));
            out.stderr = stderr + &out.stderr;
            Ok(out)
        }
        Some(doc) => Ok(Outcome { code: EXIT_OK, stdout: doc, stderr: stderr + &stats_line(h) }),
    }
}

fn load(path: &Path) -> Result<Hypergraph, Error> {
    Ok(io::read_file(path)?.0)
}

fn cycles_by_label(h: &Hypergraph, p: &Permutation) -> Vec<Vec<String>> {
    p.cycles().into_iter().map(|c| c.into_iter().map(|v| h.label(v).to_string()).collect()).collect()
}

pub fn cmd_aut(a: &AutArgs) -> Result<Outcome, Error> {
    let h = load(&a.path)?;
    let report = match &a.stabilize {
        Some(name) => {
            let e = h.edge_by_name(name).ok_or_else(|| Error::UnknownEdgeName(name.clone()))?;
            aut::edge_stabilizer_report(&h, e)?
        }
        None if a.group => aut::automorphism_group(&h, a.limit)?,
        None => aut::symmetry_report(&h)?,
    };
    let mut value = serde_json::to_value(&report).expect("report serializes");
    value["witness_cycles"] = json!(report.witness.as_ref().map(|p| cycles_by_label(&h, p)));
    if let Some(name) = &a.stabilize {
        value["stabilized_edge"] = json!(name);
    }
    let code = match a.expect {
        Some(Expect::Asym) if !report.asymmetric => EXIT_PROPERTY_FAILED,
        Some(Expect::Sym) if report.asymmetric => EXIT_PROPERTY_FAILED,
        _ => EXIT_OK,
    };
    let summary = format!(
        "{}{}\n",
        if report.asymmetric { "asymmetric" } else { "symmetric" },
        report.group_order.map_or(String::new(), |o| format!(", group order {o}"))
    );
    Ok(Outcome::report(code, &value, summary))
}

pub fn cmd_minimal(a: &MinimalArgs) -> Result<Outcome, Error> {
    let h = load(&a.path)?;
    let mode: Mode = a.mode.parse()?;
    let opts = ScanOptions { mode, max_exhaustive_n: a.max_exhaustive, samples: a.samples, seed: a.seed };
    let report = minimality::check_minimal(&h, &opts)?;
    let mut value = serde_json::to_value(&report).expect("report serializes");
    if a.witnesses {
        value["deletion_witnesses"] = match minimality::deletion_witness_table(&h) {
            Ok(table) => serde_json::to_value(table).expect("table serializes"),
            Err(Error::AsymmetricSubgraphFound { label, .. }) => json!({ "asymmetric_after_deleting": label }),
            Err(e) => return Err(e),
        };
    }
    let code = if report.passed() { EXIT_OK } else { EXIT_PROPERTY_FAILED };
    let summary = format!(
        "{:?}: root {}, {} subsets checked, {}\n",
        report.mode,
        if report.asymmetric_root { "asymmetric" } else { "symmetric" },
        report.subsets_checked,
        if report.all_symmetric { "all symmetric" } else { "asymmetric subset found" }
    );
    Ok(Outcome::report(code, &value, summary))
}

pub fn cmd_dual(a: &DualArgs) -> Result<Outcome, Error> {
    let g = load(&a.path)?;
    let d = constructions::dual(&g)?;
    let format = output_format(a.format, a.out.as_deref());
    let meta = json!({ "dual_of": a.path.display().to_string() });
    match emit(&d, a.out.as_deref(), format, meta)? {
        None => Ok(Outcome::report(EXIT_OK, &stats_value(&d), stats_line(&d))),
        Some(doc) => Ok(Outcome { code: EXIT_OK, stdout: doc, stderr: stats_line(&d) }),
    }
}

pub fn cmd_connect(a: &ConnectArgs) -> Result<Outcome, Error> {
    let h = load(&a.path)?;
    let find = |l: &str| h.vertex_by_label(l).ok_or_else(|| Error::UnknownLabel(l.to_string()));
    let (u, v) = (find(&a.from)?, find(&a.to)?);
    let family = connectivity::max_edge_disjoint_paths(&h, u, v)?;
    let edge_label = |e: usize| h.edge_name(e).map_or_else(|| e.to_string(), str::to_string);
    let paths: Vec<Value> = family
        .paths
        .iter()
        .map(|p| {
            json!({
                "vertices": p.vertices.iter().map(|&x| h.label(x)).collect::<Vec<_>>(),
                "edges": p.edges.iter().map(|&e| edge_label(e)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let value = json!({ "from": a.from, "to": a.to, "count": family.count, "paths": paths });
    let code = if family.count >= a.min { EXIT_OK } else { EXIT_PROPERTY_FAILED };
    Ok(Outcome::report(code, &value, format!("{} edge-disjoint paths\n", family.count)))
}

pub fn cmd_stats(a: &StatsArgs) -> Result<Outcome, Error> {
    let h = load(&a.path)?;
    Ok(Outcome::report(EXIT_OK, &stats_value(&h), stats_line(&h)))
}
