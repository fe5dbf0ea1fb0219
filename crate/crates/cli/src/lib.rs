//! Command-line front end for the `powerdom` library.
//!
//! Exit codes: 0 on success, 1 on validation or usage errors, 2 when an
//! exact search runs out of budget, 3 when a claim check fails.

pub mod claims;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use powerdom::constructive::constructive_kpds;
use powerdom::edgelist;
use powerdom::families::{FamilySpec, LabeledGraph};
use powerdom::forts::verify_fort;
use powerdom::propagation::{is_kpds, propagate};
use powerdom::solvers::{solve_exact, Param, SolveError, DEFAULT_BUDGET};
use powerdom::transforms::{blowup_clique, blowup_independent};
use powerdom::{Graph, VertexSet};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_CLAIM_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "powerdom",
    version,
    about = "Power domination experiments on graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a family instance as an edge list (labels go to `<out>.labels`).
    Gen {
        #[command(subcommand)]
        family: Family,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Compute a domination parameter of a graph.
    Solve(SolveArgs),
    /// Print the propagation trace of a seed set.
    Propagate {
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Comma-separated vertex ids.
        #[arg(long, value_delimiter = ',')]
        seed: Vec<usize>,
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report structural properties and optionally validate a seed or fort.
    Check {
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Comma-separated ids that must form a k-power dominating set.
        #[arg(long, value_delimiter = ',')]
        seed: Option<Vec<usize>>,
        /// Comma-separated ids that must form a k-fort.
        #[arg(long, value_delimiter = ',')]
        fort: Option<Vec<usize>>,
        input: PathBuf,
    },
    /// Blow up a regular graph.
    Transform {
        #[command(subcommand)]
        kind: Transform,
    },
    /// Run the claim suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::Paper)]
        suite: Suite,
        #[arg(long = "max-n", default_value_t = 24)]
        max_n: usize,
        #[arg(long, env = "POWERDOM_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Where to write the JSON report; printed after the table if absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Suite {
    Paper,
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// D_{r,q}: q blocks of two r-cliques joined by a perfect matching.
    Drq {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        q: usize,
    },
    /// F_{0,q}: 3-regular with total domination number 2q.
    F0q {
        #[arg(long)]
        q: usize,
    },
    /// The 6-vertex base graph H.
    Hbase,
    /// H_{0,q}: q chained copies of H.
    H0q {
        #[arg(long)]
        q: usize,
    },
    /// A_j: K_{k+j+2} minus j edges at one vertex.
    Aj {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        j: usize,
    },
    /// G_{r,q}: claw-free r-regular (odd or even construction by parity of r).
    G {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        q: usize,
    },
    /// C_{k,t}: t copies of A_l chained into a (k+l+1)-regular graph.
    Ckt {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        t: usize,
    },
}

impl Family {
    fn spec(&self) -> FamilySpec {
        match *self {
            Family::Drq { r, q } => FamilySpec::Drq { r, q },
            Family::F0q { q } => FamilySpec::F0q { q },
            Family::Hbase => FamilySpec::Hbase,
            Family::H0q { q } => FamilySpec::H0q { q },
            Family::Aj { k, j } => FamilySpec::Aj { k, j },
            Family::G { r, q } if r % 2 == 1 => FamilySpec::GoddRq { r, q },
            Family::G { r, q } => FamilySpec::GevenRq { r, q },
            Family::Ckt { k, l, t } => FamilySpec::Ckt { k, l, t },
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Transform {
    /// Replace each vertex by an independent set of size k+2.
    BlowupIndep(TransformArgs),
    /// Replace each vertex by a clique of size k+1.
    BlowupClique(TransformArgs),
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[arg(long)]
    pub k: usize,
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParamArg {
    /// k-power domination number.
    Pk,
    /// Domination number.
    Dom,
    /// Total domination number.
    Tdom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Exact,
    Constructive,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, value_enum, default_value_t = ParamArg::Pk)]
    pub param: ParamArg,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Exact)]
    pub method: MethodArg,
    #[arg(long, env = "POWERDOM_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

/// Outcome of a command that ran to completion.
enum Failure {
    Invalid(anyhow::Error),
    Budget(SolveError),
    Claims,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Invalid(e)
    }
}

/// Parses `argv` (including the program name), runs the command, writes
/// to the given streams and returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn std::io::Write, stderr: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_INVALID
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(cli.command, stdout) {
        Ok(()) => EXIT_OK,
        Err(Failure::Invalid(e)) => {
            let _ = writeln!(stderr, "error: {e:#}");
            EXIT_INVALID
        }
        Err(Failure::Budget(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_BUDGET
        }
        Err(Failure::Claims) => {
            let _ = writeln!(stderr, "error: at least one claim failed");
            EXIT_CLAIM_FAILED
        }
    }
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    edgelist::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(text: &str, output: Option<&Path>, stdout: &mut dyn std::io::Write) -> anyhow::Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => stdout
            .write_all(text.as_bytes())
            .context("writing to stdout"),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report types serialize");
    text.push('\n');
    text
}

fn write_labeled(
    g: &LabeledGraph,
    output: Option<&Path>,
    stdout: &mut dyn std::io::Write,
) -> anyhow::Result<()> {
    emit(&edgelist::write(&g.graph), output, stdout)?;
    if let Some(path) = output {
        let mut sidecar = path.as_os_str().to_owned();
        sidecar.push(".labels");
        fs::write(&sidecar, g.label_text())
            .with_context(|| format!("writing {}", Path::new(&sidecar).display()))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct SolveReport {
    param: String,
    value: usize,
    witness: VertexSet,
    method: String,
    explored: u64,
    lower_bound_used: usize,
}

#[derive(Serialize)]
struct ConstructiveReport {
    param: String,
    value: usize,
    witness: VertexSet,
    method: String,
    certified: bool,
    bound: String,
    sequence: Vec<(usize, usize)>,
    initial_packing: VertexSet,
    violations: Vec<String>,
}

#[derive(Serialize)]
struct CheckReport {
    n: usize,
    m: usize,
    regular_degree: Option<usize>,
    connected: bool,
    claw_free: bool,
    claw: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed_is_kpds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fort_boundary: Option<VertexSet>,
}

fn execute(command: Command, stdout: &mut dyn std::io::Write) -> Result<(), Failure> {
    match command {
        Command::Gen { family, output } => {
            let g = family.spec().generate().map_err(|e| anyhow!(e))?;
            write_labeled(&g, output.as_deref(), stdout)?;
        }
        Command::Solve(args) => solve(args, stdout)?,
        Command::Propagate {
            k,
            seed,
            input,
            output,
        } => {
            let g = read_graph(&input)?;
            let seed = g.vertex_set(seed).map_err(|e| anyhow!(e))?;
            emit(
                &to_json(&propagate(&g, k, &seed)),
                output.as_deref(),
                stdout,
            )?;
        }
        Command::Check {
            k,
            seed,
            fort,
            input,
        } => {
            let g = read_graph(&input)?;
            let claw = g.claw_witness();
            let mut report = CheckReport {
                n: g.order(),
                m: g.edge_count(),
                regular_degree: g.regular_degree(),
                connected: g.is_connected(),
                claw_free: claw.is_none(),
                claw: claw.map(|c| std::iter::once(c.center).chain(c.leaves).collect()),
                seed_is_kpds: None,
                fort_boundary: None,
            };
            let mut problem = None;
            if let Some(seed) = seed {
                let seed = g.vertex_set(seed).map_err(|e| anyhow!(e))?;
                let ok = is_kpds(&g, k, &seed);
                report.seed_is_kpds = Some(ok);
                if !ok {
                    problem = Some(anyhow!("seed {seed} is not a {k}-power dominating set"));
                }
            }
            if let Some(fort) = fort {
                let fort = g.vertex_set(fort).map_err(|e| anyhow!(e))?;
                match verify_fort(&g, k, &fort) {
                    Ok(cert) => report.fort_boundary = Some(cert.boundary),
                    Err(e) => problem = Some(anyhow!("{fort} is not a {k}-fort: {e}")),
                }
            }
            emit(&to_json(&report), None, stdout)?;
            if let Some(e) = problem {
                return Err(Failure::Invalid(e));
            }
        }
        Command::Transform { kind } => {
            let (args, blown) = match &kind {
                Transform::BlowupIndep(a) => (a, blowup_independent(&read_graph(&a.input)?, a.k)),
                Transform::BlowupClique(a) => (a, blowup_clique(&read_graph(&a.input)?, a.k)),
            };
            let blown = blown.map_err(|e| anyhow!(e))?;
            write_labeled(&blown, args.output.as_deref(), stdout)?;
        }
        Command::Verify {
            suite: Suite::Paper,
            max_n,
            budget,
            output,
        } => {
            let records = claims::verify_claims(max_n, budget);
            let table = claims::render_table(&records);
            stdout.write_all(table.as_bytes()).map_err(|e| anyhow!(e))?;
            let json = to_json(&records);
            match output {
                Some(path) => emit(&json, Some(&path), stdout)?,
                None => {
                    stdout.write_all(b"\n").map_err(|e| anyhow!(e))?;
                    emit(&json, None, stdout)?;
                }
            }
            if !claims::all_passed(&records) {
                return Err(Failure::Claims);
            }
        }
    }
    Ok(())
}

fn solve(args: SolveArgs, stdout: &mut dyn std::io::Write) -> Result<(), Failure> {
    let g = read_graph(&args.input)?;
    let param = match args.param {
        ParamArg::Pk => Param::PowerDomination(args.k),
        ParamArg::Dom => Param::Domination,
        ParamArg::Tdom => Param::TotalDomination,
    };
    let text = match args.method {
        MethodArg::Exact => {
            let r = solve_exact(&g, param, args.budget).map_err(|e| match e {
                SolveError::BudgetExhausted { .. } => Failure::Budget(e),
                other => Failure::Invalid(anyhow!(other)),
            })?;
            to_json(&SolveReport {
                param: param.to_string(),
                value: r.value,
                witness: r.witness,
                method: r.method.to_string(),
                explored: r.explored,
                lower_bound_used: r.lower_bound_used,
            })
        }
        MethodArg::Constructive => {
            if args.param != ParamArg::Pk {
                return Err(Failure::Invalid(anyhow!(
                    "the constructive method only computes k-power dominating sets"
                )));
            }
            let sol = constructive_kpds(&g, args.k);
            to_json(&ConstructiveReport {
                param: param.to_string(),
                value: sol.pds.len(),
                witness: sol.pds,
                method: "constructive".into(),
                certified: sol.certified,
                bound: sol.bound.to_string(),
                sequence: sol.sequence.iter().map(|s| (s.vertex, s.gain)).collect(),
                initial_packing: sol.initial_packing,
                violations: sol.violations.iter().map(ToString::to_string).collect(),
            })
        }
    };
    emit(&text, args.output.as_deref(), stdout)?;
    Ok(())
}
