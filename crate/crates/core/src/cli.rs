//! The `mbs` command line.
//!
//! Exit codes: 0 success, 1 invalid surface (`validate`), 2 / 3 for the
//! `s3` verdicts fail / inconclusive, 64 usage, 65 malformed input,
//! 70 arithmetic overflow.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{genus_bounds, verdict, S3Verdict};
use crate::error::Error;
use crate::graphs::{
    genus_extremes, rotation_count, times_circle, verify_product_theorem, xuong_max_genus,
    Multigraph,
};
use crate::homology::{h1, h1_cw_oracle, rank_h1};
use crate::io::{read_graph, read_surface, surface_to_json};
use crate::neighborhood::{
    genus_range, system_count, trace_boundary, validate_slopes, CircularPermutationSystem,
    SearchMode, SlopeSystem,
};
use crate::surface::{disk_sum, MultibranchedSurface};

/// Default cap on enumerated systems; `--force` lifts it.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 1_000_000;

pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_SOFTWARE: i32 = 70;

#[derive(Parser, Debug)]
#[command(
    name = "mbs",
    version,
    about = "Homology, neighborhood boundaries and genus bounds of multibranched surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a surface file and list its violations.
    Validate { file: PathBuf },
    /// First homology group.
    Homology {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Recompute from a cell structure and compare.
        #[arg(long)]
        check: bool,
    },
    /// Boundary of the neighborhood for one or many permutation systems.
    Boundary(BoundaryArgs),
    /// Bounds on the minimum and maximum embeddable genus.
    Bounds {
        file: PathBuf,
        #[command(flatten)]
        search: SampleArgs,
        #[arg(long)]
        json: bool,
    },
    /// Necessary condition for embedding in S^3.
    S3 {
        file: PathBuf,
        #[command(flatten)]
        search: SampleArgs,
        #[arg(long)]
        json: bool,
    },
    #[command(subcommand)]
    /// Embedding genus of a graph and its product with a circle.
    Graph(GraphCommand),
    /// Disk sum of two surfaces along one sector of each.
    Disksum {
        file_a: PathBuf,
        file_b: PathBuf,
        #[arg(long)]
        sector_a: String,
        #[arg(long)]
        sector_b: String,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Args, Debug)]
struct SampleArgs {
    /// Examine this many random systems instead of all of them.
    #[arg(long, requires = "seed")]
    sample: Option<u64>,
    #[arg(long, requires = "sample")]
    seed: Option<u64>,
    /// Enumerate even past the default limit.
    #[arg(long)]
    force: bool,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("how").required(true).args(["perm", "enumerate", "sample"])))]
struct BoundaryArgs {
    file: PathBuf,
    /// Permutation literal `branch:c1,c2,...;branch:...`.
    #[arg(long)]
    perm: Option<String>,
    #[arg(long)]
    enumerate: bool,
    /// Examine only the first N systems in enumeration order.
    #[arg(long, requires = "enumerate")]
    limit: Option<u64>,
    #[arg(long, requires = "enumerate")]
    force: bool,
    #[arg(long, requires = "seed")]
    sample: Option<u64>,
    #[arg(long, requires = "sample")]
    seed: Option<u64>,
    /// Slope literal `branch:p/q;...`, validated against the surface.
    #[arg(long)]
    slopes: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum GraphCommand {
    /// Minimum and/or maximum embedding genus.
    Genus(GenusArgs),
    /// The surface G x S^1.
    Product(ProductArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Exhaustive,
    Xuong,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("which").required(true).args(["min", "max", "both"])))]
struct GenusArgs {
    file: PathBuf,
    #[arg(long)]
    min: bool,
    #[arg(long)]
    max: bool,
    #[arg(long)]
    both: bool,
    #[arg(long, value_enum, default_value = "exhaustive")]
    method: Method,
    #[arg(long)]
    force: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("action").required(true).args(["emit", "verify"])))]
struct ProductArgs {
    file: PathBuf,
    /// Write G x S^1 as a surface file.
    #[arg(long)]
    emit: Option<PathBuf>,
    /// Check the boundary genus against the embedding genus for every rotation.
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    force: bool,
    #[arg(long)]
    json: bool,
}

enum Failure {
    Usage(String),
    Data(String),
    Overflow(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Overflow(_) => Failure::Overflow(e.to_string()),
            Error::SearchTooLarge { .. } | Error::EmptySample => Failure::Usage(e.to_string()),
            _ => Failure::Data(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<i32, Failure>;

struct Io<'a> {
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn line(&mut self, s: impl AsRef<str>) -> std::result::Result<(), Failure> {
        writeln!(self.out, "{}", s.as_ref()).map_err(|e| Failure::Io(e.to_string()))
    }

    fn json<T: Serialize>(&mut self, value: &T) -> std::result::Result<(), Failure> {
        let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Io(e.to_string()))?;
        self.line(text)
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let mut io = Io { out };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(failure) => {
            let (code, msg) = match failure {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Data(m) => (EXIT_DATA, m),
                Failure::Overflow(m) => (EXIT_SOFTWARE, m),
                Failure::Io(m) => (EXIT_SOFTWARE, m),
            };
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn dispatch(command: Command, io: &mut Io) -> Outcome {
    match command {
        Command::Validate { file } => validate(&file, io),
        Command::Homology { file, json, check } => homology(&file, json, check, io),
        Command::Boundary(args) => boundary(args, io),
        Command::Bounds { file, search, json } => bounds(&file, &search, json, io),
        Command::S3 { file, search, json } => s3(&file, &search, json, io),
        Command::Graph(GraphCommand::Genus(args)) => graph_genus(args, io),
        Command::Graph(GraphCommand::Product(args)) => graph_product(args, io),
        Command::Disksum {
            file_a,
            file_b,
            sector_a,
            sector_b,
            output,
        } => {
            let a = load_valid(&file_a)?;
            let b = load_valid(&file_b)?;
            let x = disk_sum(&a, &sector_a, &b, &sector_b)?;
            write_file(&output, &surface_to_json(&x))?;
            io.line(format!(
                "wrote {}: {}, {}",
                output.display(),
                plural(x.branches.len(), "branch", "branches"),
                plural(x.sectors.len(), "sector", "sectors")
            ))?;
            Ok(0)
        }
    }
}

fn plural(n: usize, one: &str, many: &str) -> String {
    format!("{n} {}", if n == 1 { one } else { many })
}

fn write_file(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    std::fs::write(path, format!("{text}\n"))
        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load_valid(path: &Path) -> std::result::Result<MultibranchedSurface, Failure> {
    let x = read_surface(path)?;
    let report = x.validate();
    if !report.is_valid() {
        return Err(Failure::Data(format!(
            "{}: invalid multibranched surface:\n{report}",
            path.display()
        )));
    }
    Ok(x)
}

fn load_graph(path: &Path) -> std::result::Result<Multigraph, Failure> {
    Ok(read_graph(path)?)
}

fn validate(file: &Path, io: &mut Io) -> Outcome {
    let x = read_surface(file)?;
    let report = x.validate();
    if report.is_valid() {
        io.line(format!(
            "valid: {}, {}, {}, euler characteristic {}",
            plural(x.branches.len(), "branch", "branches"),
            plural(x.sectors.len(), "sector", "sectors"),
            plural(x.prebranches.len(), "prebranch", "prebranches"),
            x.euler_characteristic()
        ))?;
        Ok(0)
    } else {
        io.line(format!("invalid: {}", file.display()))?;
        io.line(report.to_string())?;
        Ok(EXIT_INVALID)
    }
}

#[derive(Serialize)]
struct HomologyReport {
    h1: String,
    free_rank: usize,
    torsion: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_agrees: Option<bool>,
}

fn homology(file: &Path, json: bool, check: bool, io: &mut Io) -> Outcome {
    let x = load_valid(file)?;
    let group = h1(&x)?;
    let oracle = if check { Some(h1_cw_oracle(&x)?) } else { None };
    let agrees = oracle.as_ref().map(|o| *o == group);
    if json {
        io.json(&HomologyReport {
            h1: group.to_string(),
            free_rank: group.free_rank,
            torsion: group.torsion.iter().map(ToString::to_string).collect(),
            oracle_agrees: agrees,
        })?;
    } else {
        io.line(format!("H1 = {group}"))?;
        if let Some(o) = &oracle {
            match agrees {
                Some(true) => io.line("cell complex check: agrees")?,
                _ => io.line(format!(
                    "cell complex check: MISMATCH, cell complex gives {o}"
                ))?,
            }
        }
    }
    Ok(if agrees == Some(false) {
        EXIT_SOFTWARE
    } else {
        0
    })
}

/// Refuses exhaustive searches past the default limit unless forced.
fn guard(total: Option<u128>, force: bool, what: &str) -> std::result::Result<(), Failure> {
    match total {
        Some(t) if t <= DEFAULT_ENUMERATION_LIMIT as u128 || force => Ok(()),
        _ => Err(Failure::Usage(format!(
            "{} {what} exceed the limit of {DEFAULT_ENUMERATION_LIMIT}; pass --force, or sample instead",
            total.map_or_else(|| "more than 2^128".to_string(), |t| t.to_string())
        ))),
    }
}

fn search_mode(
    x: &MultibranchedSurface,
    args: &SampleArgs,
) -> std::result::Result<SearchMode, Failure> {
    match (args.sample, args.seed) {
        (Some(count), Some(seed)) => Ok(SearchMode::Sample { count, seed }),
        _ => {
            guard(system_count(x)?, args.force, "permutation systems")?;
            Ok(SearchMode::Exhaustive)
        }
    }
}

fn boundary(args: BoundaryArgs, io: &mut Io) -> Outcome {
    let x = load_valid(&args.file)?;
    if let Some(literal) = &args.slopes {
        let slopes: SlopeSystem = literal
            .parse()
            .map_err(|e: Error| Failure::Usage(e.to_string()))?;
        let violations = validate_slopes(&x, &slopes)?;
        if !violations.is_empty() {
            let list: Vec<String> = violations.iter().map(|v| format!("  {v}")).collect();
            return Err(Failure::Data(format!(
                "slope system rejected:\n{}",
                list.join("\n")
            )));
        }
    }
    if let Some(literal) = &args.perm {
        let p: CircularPermutationSystem = literal
            .parse()
            .map_err(|e: Error| Failure::Usage(e.to_string()))?;
        let b = trace_boundary(&x, &p)?;
        if args.json {
            io.json(&b)?;
        } else {
            io.line(format!("permutation system: {p}"))?;
            for (i, c) in b.components.iter().enumerate() {
                let sides: Vec<String> = c.sides.iter().map(ToString::to_string).collect();
                io.line(format!(
                    "component {}: genus {} [{}]",
                    i + 1,
                    c.genus,
                    sides.join(" ")
                ))?;
            }
            io.line(format!("components: {}", b.total_components))?;
            io.line(format!("total genus: {}", b.total_genus))?;
        }
        return Ok(0);
    }
    let mode = match (args.sample, args.seed, args.limit) {
        (Some(count), Some(seed), _) => SearchMode::Sample { count, seed },
        (_, _, Some(count)) => SearchMode::Prefix { count },
        _ => {
            guard(system_count(&x)?, args.force, "permutation systems")?;
            SearchMode::Exhaustive
        }
    };
    let r = genus_range(&x, mode)?;
    if args.json {
        io.json(&r)?;
    } else {
        let total = r
            .systems_total
            .map_or_else(|| "more than 2^128".to_string(), |t| t.to_string());
        io.line(format!(
            "systems examined: {} of {total}{}",
            r.systems_examined,
            if r.exact { " (exhaustive)" } else { "" }
        ))?;
        io.line(format!(
            "min total genus: {}  witness {}",
            r.min_genus, r.witness_min
        ))?;
        io.line(format!(
            "max total genus: {}  witness {}",
            r.max_genus, r.witness_max
        ))?;
    }
    Ok(0)
}

fn bounds(file: &Path, search: &SampleArgs, json: bool, io: &mut Io) -> Outcome {
    let x = load_valid(file)?;
    let r = genus_bounds(&x, search_mode(&x, search)?)?;
    if json {
        io.json(&r)?;
        return Ok(0);
    }
    let exact = |e: bool| if e { "exact" } else { "sampled" };
    io.line(format!("rank H1: {}", r.rank_h1))?;
    io.line(format!(
        "boundary genus: min {} ({}), max {} ({})",
        r.min_boundary_genus,
        exact(r.min_boundary_genus_exact),
        r.max_boundary_genus,
        exact(r.max_boundary_genus_exact)
    ))?;
    io.line(format!(
        "lower bound for min genus: {} (raw {})",
        r.lower_bound_min_genus, r.lower_bound_min_genus_raw
    ))?;
    io.line(format!(
        "lower bound for max genus: {} (raw {})",
        r.lower_bound_max_genus, r.lower_bound_max_genus_raw
    ))?;
    io.line(format!(
        "upper bound for max genus: {}",
        r.upper_bound_max_genus
    ))?;
    io.line(format!(
        "S^3 criterion: {} ({})",
        r.s3_obstruction,
        r.s3_obstruction.description()
    ))?;
    for note in &r.notes {
        io.line(format!("note: {note}"))?;
    }
    Ok(0)
}

#[derive(Serialize)]
struct S3Report {
    verdict: S3Verdict,
    description: &'static str,
    rank_h1: u64,
    max_boundary_genus: u64,
    exact: bool,
}

fn s3(file: &Path, search: &SampleArgs, json: bool, io: &mut Io) -> Outcome {
    let x = load_valid(file)?;
    let mode = search_mode(&x, search)?;
    let rank = rank_h1(&x)? as u64;
    let range = genus_range(&x, mode)?;
    let verdict = verdict(rank, range.max_genus, range.exact);
    if json {
        io.json(&S3Report {
            verdict,
            description: verdict.description(),
            rank_h1: rank,
            max_boundary_genus: range.max_genus,
            exact: range.exact,
        })?;
    } else {
        io.line(format!(
            "{verdict}: {} (max boundary genus {} {} rank H1 {})",
            verdict.description(),
            range.max_genus,
            if range.max_genus >= rank { ">=" } else { "<" },
            rank
        ))?;
    }
    Ok(verdict.exit_code())
}

#[derive(Serialize, Default)]
struct GenusReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    min_genus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    min_witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_genus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_witness: Option<String>,
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    rotation_systems: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spanning_trees: Option<u64>,
}

fn graph_genus(args: GenusArgs, io: &mut Io) -> Outcome {
    let g = load_graph(&args.file)?;
    let want_min = args.min || args.both;
    let want_max = args.max || args.both;
    let mut report = GenusReport::default();
    match args.method {
        Method::Xuong => {
            if want_min {
                return Err(Failure::Usage(
                    "--method xuong only gives the maximum genus; use --max".to_string(),
                ));
            }
            let limit = (!args.force).then_some(DEFAULT_ENUMERATION_LIMIT);
            let r = xuong_max_genus(&g, limit)?;
            report.method = "xuong";
            report.max_genus = Some(r.max_genus);
            report.max_witness = Some(format!("spanning tree {{{}}}", r.witness_tree.join(",")));
            report.spanning_trees = Some(r.spanning_trees);
        }
        Method::Exhaustive => {
            g.validate()?;
            guard(rotation_count(&g), args.force, "rotation systems")?;
            let e = genus_extremes(&g, None)?;
            report.method = "exhaustive";
            report.rotation_systems = Some(e.rotation_systems);
            if want_min {
                report.min_genus = Some(e.min_genus);
                report.min_witness = Some(e.min_witness.to_string());
            }
            if want_max {
                report.max_genus = Some(e.max_genus);
                report.max_witness = Some(e.max_witness.to_string());
            }
        }
    }
    if args.json {
        io.json(&report)?;
    } else {
        if let (Some(g), Some(w)) = (report.min_genus, &report.min_witness) {
            io.line(format!("min genus: {g}  witness {w}"))?;
        }
        if let (Some(g), Some(w)) = (report.max_genus, &report.max_witness) {
            io.line(format!("max genus: {g}  witness {w}"))?;
        }
        if let Some(n) = report.rotation_systems {
            io.line(format!("rotation systems: {n}"))?;
        }
        if let Some(n) = report.spanning_trees {
            io.line(format!("spanning trees: {n}"))?;
        }
    }
    Ok(0)
}

fn graph_product(args: ProductArgs, io: &mut Io) -> Outcome {
    let g = load_graph(&args.file)?;
    if let Some(path) = &args.emit {
        let x = times_circle(&g)?;
        write_file(path, &surface_to_json(&x))?;
        io.line(format!(
            "wrote {}: {}, {}",
            path.display(),
            plural(x.branches.len(), "branch", "branches"),
            plural(x.sectors.len(), "sector", "sectors")
        ))?;
        return Ok(0);
    }
    g.validate()?;
    guard(rotation_count(&g), args.force, "rotation systems")?;
    let r = verify_product_theorem(&g, None)?;
    if args.json {
        io.json(&r)?;
    } else {
        io.line(format!("rotation systems: {}", r.rotation_systems))?;
        io.line(format!("rank H1(G x S^1): {}", r.rank_h1))?;
        io.line(format!(
            "embedding genus: min {}, max {}",
            r.min_genus, r.max_genus
        ))?;
        io.line(format!(
            "boundary genus: min {}, max {}",
            r.min_boundary_genus, r.max_boundary_genus
        ))?;
        io.line(format!(
            "rank - max boundary genus = {} (2 x min genus = {})",
            r.min_side,
            2 * r.min_genus
        ))?;
        io.line(format!(
            "rank - min boundary genus = {} (2 x max genus = {})",
            r.max_side,
            2 * r.max_genus
        ))?;
        io.line(format!(
            "per-rotation check (one torus per face): {}",
            if r.bridge_ok { "ok" } else { "FAILED" }
        ))?;
        if let Some(c) = &r.counterexample {
            io.line(format!("counterexample: {c}"))?;
        }
        io.line(if r.passed { "pass" } else { "fail" })?;
    }
    Ok(if r.passed { 0 } else { EXIT_INVALID })
}
