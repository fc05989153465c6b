use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use moorex::constructions::Family;
use moorex::edgelist::{parse_edge_list, write_edge_list};
use moorex::expansion::{DEFAULT_SUBSET_CAP, HARD_SUBSET_CAP};
use moorex::report::{self, AnalyzeOptions, Format, Map, Table2Family, Value};
use moorex::{Error, Graph, Regime};

/// Moore-bound accounting, spectra and expansion for degree-diameter graphs.
#[derive(Parser, Debug)]
#[command(name = "moorex", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a family instance as an edge list.
    Generate(GenerateArgs),
    /// Full report for one edge-list file.
    Analyze(AnalyzeArgs),
    /// Every closed-form bound for raw (d, k, n).
    Bounds(BoundsArgs),
    /// Guarantees for a published family, closed form against recomputation.
    Table2(Table2Args),
    /// Certify a graph file or a built-in suite; exit 1 on any failure.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Structured => Format::Structured,
        }
    }
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Args, Debug)]
struct AnalysisFlags {
    /// Largest n for exhaustive expansion.
    #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
    exact_cap: usize,
    /// Treat the graph as d-regular.
    #[arg(long)]
    force_d: Option<u64>,
    /// Tolerance for the eigenvalue certificate (default 1e-6 max(1, mu - n)).
    #[arg(long)]
    tol: Option<f64>,
}

impl AnalysisFlags {
    fn options(&self) -> Result<AnalyzeOptions, Error> {
        if self.exact_cap > HARD_SUBSET_CAP {
            return Err(Error::InvalidParameter(format!("--exact-cap is at most {HARD_SUBSET_CAP}")));
        }
        if let Some(t) = self.tol {
            if !(t.is_finite() && t >= 0.0) {
                return Err(Error::InvalidParameter("--tol must be a non-negative number".into()));
            }
        }
        Ok(AnalyzeOptions { exact_cap: self.exact_cap, force_d: self.force_d, tol: self.tol })
    }
}

#[derive(Args, Debug)]
struct GenerateArgs {
    /// cycle, complete, complete_bipartite, petersen, debruijn_digraph,
    /// debruijn_undirected, kautz, polarity, two_cliques_bridged
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    input: PathBuf,
    #[command(flatten)]
    flags: AnalysisFlags,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long)]
    d: u64,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    n: u64,
    /// Use the directed Moore bound and the digraph rows.
    #[arg(long)]
    directed: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct Table2Args {
    /// debruijn, kautz, polarity, mms, canale_gomez, alegre
    family: String,
    #[arg(long)]
    d: u64,
    /// Diameter; polarity and mms are fixed at 2.
    #[arg(long)]
    k: Option<u32>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Edge-list file to certify.
    #[arg(required_unless_present = "suite", conflicts_with = "suite")]
    input: Option<PathBuf>,
    /// Built-in suite name (`standard`).
    #[arg(long)]
    suite: Option<String>,
    #[command(flatten)]
    flags: AnalysisFlags,
    #[command(flatten)]
    out: OutputArgs,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("moorex: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Command) -> Result<u8, Failure> {
    match cmd {
        Command::Generate(a) => {
            let family = family_from(&a)?;
            let g = family.build()?;
            emit(a.output.as_deref(), &write_edge_list(&g))?;
            Ok(0)
        }
        Command::Analyze(a) => {
            let g = load(&a.input)?;
            let report = report::analyze(&g, &a.flags.options()?)?;
            let mut tree = report.to_value();
            label(&mut tree, &a.input);
            emit(a.out.output.as_deref(), &tree.render(a.out.format.into()))?;
            Ok(0)
        }
        Command::Bounds(a) => {
            let regime = if a.directed { Regime::Directed } else { Regime::Undirected };
            let tree = report::bounds_table(regime, a.d, a.k, a.n)?;
            emit(a.out.output.as_deref(), &tree.render(a.out.format.into()))?;
            Ok(0)
        }
        Command::Table2(a) => {
            let family = Table2Family::parse(&a.family)?;
            let k = match (a.k, family.fixed_diameter()) {
                (Some(k), _) => k,
                (None, Some(k)) => k,
                (None, None) => return Err(Error::InvalidParameter(format!("{} needs --k", family.id())).into()),
            };
            let table = report::table2(family, a.d, k)?;
            emit(a.out.output.as_deref(), &table.to_value().render(a.out.format.into()))?;
            Ok(0)
        }
        Command::Verify(a) => {
            let opts = a.flags.options()?;
            let cert = match (&a.input, &a.suite) {
                (Some(path), _) => {
                    let g = load(path)?;
                    report::verify_graph(&g, &path.display().to_string(), &opts)?
                }
                (None, Some(suite)) => report::verify_suite(suite, &opts)?,
                (None, None) => unreachable!("clap requires an input or a suite"),
            };
            emit(a.out.output.as_deref(), &cert.to_value().render(a.out.format.into()))?;
            for f in cert.failures() {
                eprintln!("moorex: FAIL {} {}: {}", f.subject, f.check, f.detail);
            }
            Ok(cert.exit_code() as u8)
        }
    }
}

fn family_from(a: &GenerateArgs) -> Result<Family, Error> {
    let params: Vec<(&str, usize)> = [("n", a.n), ("m", a.m), ("b", a.b), ("d", a.d), ("k", a.k), ("q", a.q)]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k, v)))
        .collect();
    Family::from_parts(&a.family, &params)
}

fn load(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure { code: 2, message: format!("{}: {e}", path.display()) })?;
    parse_edge_list(&text).map_err(|e| Failure { code: 2, message: format!("{}: {e}", path.display()) })
}

fn label(tree: &mut Value, path: &Path) {
    if let Value::Map(m) = tree {
        let name = path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned());
        m.insert("input".into(), Map::new().with("file", name).into());
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure { code: 2, message: format!("{}: {e}", p.display()) }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
