use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use graph_boundary::euclid::{
    classify_prop4, radial_laplacian_identity_check, sector_check, DEFAULT_MAX_ALPHA,
};
use graph_boundary::generators::{enumerate_connected, Family, GridGraph, MAX_ENUMERATION_ORDER};
use graph_boundary::io::{parse_edge_list, parse_labeled, write_edge_list};
use graph_boundary::report::{to_dot, to_text};
use graph_boundary::sweep::{sweep_rows, SweepCheck};
use graph_boundary::verify::{verify_graph, Check, GraphVerdict, Status};
use graph_boundary::{boundary, DistanceMatrix, Error, Graph};

/// Seed used by the random families when `--seed` is not given.
const DEFAULT_SEED: u64 = 42;
/// Relative paths given to `--out` and `--coords` are resolved against this
/// directory when it is set.
const OUT_DIR_ENV: &str = "GBOUND_OUT_DIR";

#[derive(Parser)]
#[command(
    name = "gbound",
    version,
    about = "Distance-based boundaries of graphs and the bounds they satisfy",
    after_help = "Exit status: 0 on success, 1 when a check fails, 2 on invalid input.\n\
                  Relative output paths are resolved against $GBOUND_OUT_DIR when it is set."
)]
struct Cli {
    /// Worker threads; defaults to the number of available cores.
    #[arg(long, global = true, env = "GBOUND_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and write it as a canonical edge list.
    Gen(GenArgs),
    /// Compute ∂G, (∂G)* and the slices of a graph.
    Boundary(BoundaryArgs),
    /// Run boundary and inequality checks; exits 1 if any check fails.
    Verify(VerifyArgs),
    /// Emit one CSV row per family size and bound check.
    Sweep(SweepArgs),
    /// Geodesic non-uniqueness witnesses at full-degree boundary vertices of a lattice graph.
    Prop4(Prop4Args),
    /// Narrow disk-sector comparison and the radial Laplacian identity.
    Sector(SectorArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Family name: path, cycle, complete, star, hypercube, grid, ring, tree, er,
    /// disk, annulus, rectangle, lshape, slitdisk, sector.
    #[arg(long)]
    family: String,
    /// Comma-separated family parameters, e.g. `5,5` for grid or `30,0.2` for er.
    #[arg(long, default_value = "")]
    params: String,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write lattice coordinates to this JSON sidecar (lattice families only).
    #[arg(long)]
    coords: Option<PathBuf>,
}

#[derive(Args)]
struct Source {
    /// Edge-list file (`-` for standard input).
    #[arg(long = "in", value_name = "FILE", conflicts_with = "family")]
    input: Option<PathBuf>,
    /// Read `--in` as whitespace-separated vertex labels, one edge per line.
    #[arg(long, requires = "input")]
    labeled: bool,
    /// Generate the graph from a family instead of reading a file.
    #[arg(long)]
    family: Option<String>,
    #[arg(long, default_value = "")]
    params: String,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Lattice coordinate sidecar written by `gen --coords`.
    #[arg(long, requires = "input")]
    coords: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct BoundaryArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Include every slice B_v in JSON output.
    #[arg(long)]
    slices: bool,
    /// Draw (∂G)* as double circles in DOT output.
    #[arg(long)]
    overlay_cejz: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: Source,
    /// With `--family enum`, check every connected labeled graph up to this order.
    #[arg(long, default_value_t = 5)]
    nmax: usize,
    /// `all` or a comma list of thm1, thm2, prop1, prop2, prop3, diameter-pair,
    /// mps, laplacian-oracle, dichotomy, prop4.
    #[arg(long, default_value = "all")]
    checks: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// grid, path, cycle, complete, star, ring, tree, hypercube or er.
    #[arg(long)]
    family: String,
    /// Comma-separated instance sizes.
    #[arg(long)]
    sizes: String,
    /// Edge probability for `er`.
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// `all` or a comma list of thm1, thm2, mps.
    #[arg(long, default_value = "thm1")]
    checks: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Prop4Args {
    #[command(flatten)]
    source: Source,
    /// Report every witness rather than the first per vertex.
    #[arg(long)]
    all: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SectorArgs {
    /// Sector radius.
    #[arg(long)]
    r: f64,
    /// Opening fraction; the opening angle is 2π·alpha.
    #[arg(long)]
    alpha: f64,
    /// Largest accepted alpha (never above 1/6).
    #[arg(long, default_value_t = DEFAULT_MAX_ALPHA)]
    max_alpha: f64,
    /// Finite-difference step for the radial Laplacian identity.
    #[arg(long, default_value_t = 1e-3)]
    step: f64,
    /// Largest accepted relative deviation of the radial identity.
    #[arg(long, default_value_t = 1e-5)]
    tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Loaded {
    graph: Graph,
    grid: Option<GridGraph>,
    labels: Option<Vec<String>>,
}

/// Ends the run with status 1 after the report has been written.
struct ChecksFailed;

fn resolve(path: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            let path = resolve(path);
            fs::write(&path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load(source: &Source) -> Result<Loaded> {
    match (&source.input, &source.family) {
        (Some(path), None) => {
            let text = read_input(path)?;
            let (graph, labels) = if source.labeled {
                let (g, labels) = parse_labeled(&text)?;
                (g, Some(labels))
            } else {
                (parse_edge_list(&text)?, None)
            };
            let grid = match &source.coords {
                Some(path) => Some(GridGraph::from_sidecar(graph.clone(), &read_input(path)?)?),
                None => None,
            };
            Ok(Loaded {
                graph,
                grid,
                labels,
            })
        }
        (None, Some(family)) => {
            let built = Family::parse(family, &source.params)?.build(source.seed)?;
            Ok(Loaded {
                graph: built.graph,
                grid: built.grid,
                labels: None,
            })
        }
        (None, None) => bail!("give either --in FILE or --family NAME"),
        (Some(_), Some(_)) => unreachable!("clap rejects --in with --family"),
    }
}

fn pretty(value: &serde_json::Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn cmd_gen(args: &GenArgs) -> Result<()> {
    let built = Family::parse(&args.family, &args.params)?.build(args.seed)?;
    if let Some(path) = &args.coords {
        let Some(grid) = &built.grid else {
            bail!("family {} has no lattice coordinates", args.family);
        };
        emit(Some(path), &pretty(&grid.sidecar_json())?)?;
    }
    emit(args.out.as_deref(), &write_edge_list(&built.graph))
}

fn cmd_boundary(args: &BoundaryArgs) -> Result<()> {
    let loaded = load(&args.source)?;
    let report = boundary(&loaded.graph)?;
    let text = match args.format {
        Format::Text => to_text(&report),
        Format::Json => pretty(&report.to_json(args.slices, loaded.labels.as_deref()))?,
        Format::Dot => to_dot(
            &loaded.graph,
            &report,
            args.overlay_cejz,
            loaded.grid.as_ref(),
        ),
    };
    emit(args.out.as_deref(), &text)
}

fn verdict_text(v: &GraphVerdict) -> String {
    let mut out = format!(
        "n: {}\nm: {}\nmax_degree: {}\ndiameter: {}\nboundary_size: {}\ncejz_size: {}\n",
        v.n, v.m, v.max_degree, v.diameter, v.boundary_size, v.cejz_size
    );
    for o in &v.outcomes {
        let status = match o.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        out.push_str(&format!("{status} {}: {}", o.check, o.detail));
        if let Some(margin) = &o.margin {
            out.push_str(&format!(" [margin {margin}]"));
        }
        out.push('\n');
    }
    out
}

fn cmd_verify(args: &VerifyArgs) -> Result<Result<(), ChecksFailed>> {
    let checks = Check::parse_list(&args.checks)?;
    if args.format == Format::Dot {
        bail!("verify writes text or json");
    }
    if args.source.family.as_deref() == Some("enum") {
        return verify_enumeration(args, &checks);
    }
    let loaded = load(&args.source)?;
    let verdict = verify_graph(&loaded.graph, &checks, loaded.grid.as_ref())?;
    let text = match args.format {
        Format::Json => pretty(&serde_json::to_value(&verdict)?)?,
        _ => verdict_text(&verdict),
    };
    emit(args.out.as_deref(), &text)?;
    Ok(if verdict.pass() {
        Ok(())
    } else {
        Err(ChecksFailed)
    })
}

fn verify_enumeration(args: &VerifyArgs, checks: &[Check]) -> Result<Result<(), ChecksFailed>> {
    if args.nmax == 0 || args.nmax > MAX_ENUMERATION_ORDER {
        bail!("--nmax must be in 1..={MAX_ENUMERATION_ORDER}");
    }
    let graphs: Vec<Graph> = enumerate_connected(args.nmax)?.collect();
    let verdicts = graphs
        .par_iter()
        .map(|g| verify_graph(g, checks, None))
        .collect::<graph_boundary::Result<Vec<_>>>()?;

    let mut tally: BTreeMap<&str, [usize; 3]> = checks.iter().map(|c| (c.name(), [0; 3])).collect();
    let mut failures = Vec::new();
    for (index, (g, verdict)) in graphs.iter().zip(&verdicts).enumerate() {
        for o in &verdict.outcomes {
            let slot = match o.status {
                Status::Pass => 0,
                Status::Fail => 1,
                Status::Skipped => 2,
            };
            tally.get_mut(o.check.name()).expect("requested check")[slot] += 1;
            if o.status == Status::Fail {
                failures.push(json!({
                    "index": index,
                    "edges": write_edge_list(g),
                    "check": o.check.name(),
                    "detail": o.detail,
                }));
            }
        }
    }
    let text = match args.format {
        Format::Json => pretty(&json!({
            "nmax": args.nmax,
            "graphs": graphs.len(),
            "checks": tally
                .iter()
                .map(|(name, [pass, fail, skipped])| {
                    (name.to_string(), json!({ "pass": pass, "fail": fail, "skipped": skipped }))
                })
                .collect::<serde_json::Map<_, _>>(),
            "failures": failures,
        }))?,
        _ => {
            let mut out = format!("graphs: {} (n ≤ {})\n", graphs.len(), args.nmax);
            for (name, [pass, fail, skipped]) in &tally {
                let status = if *fail == 0 { "PASS" } else { "FAIL" };
                out.push_str(&format!(
                    "{status} {name}: {pass} pass, {fail} fail, {skipped} skipped\n"
                ));
            }
            for f in &failures {
                out.push_str(&format!("violation: {f}\n"));
            }
            out
        }
    };
    emit(args.out.as_deref(), &text)?;
    Ok(if failures.is_empty() {
        Ok(())
    } else {
        Err(ChecksFailed)
    })
}

fn cmd_sweep(args: &SweepArgs) -> Result<Result<(), ChecksFailed>> {
    let checks = SweepCheck::parse_list(&args.checks)?;
    let sizes = args
        .sizes
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .with_context(|| format!("bad size {s:?}"))
        })
        .collect::<Result<Vec<_>>>()?;
    if sizes.is_empty() {
        bail!("--sizes is empty");
    }
    let families = sizes
        .iter()
        .map(|&size| Family::sized(&args.family, size, args.p))
        .collect::<graph_boundary::Result<Vec<_>>>()?;
    let rows = families
        .par_iter()
        .map(|family| sweep_rows(family, args.seed, &checks))
        .collect::<graph_boundary::Result<Vec<_>>>()?;

    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut all_pass = true;
    for row in rows.iter().flatten() {
        all_pass &= row.pass;
        writer.serialize(row)?;
    }
    let bytes = writer.into_inner().map_err(|e| e.into_error())?;
    emit(args.out.as_deref(), &String::from_utf8(bytes)?)?;
    Ok(if all_pass { Ok(()) } else { Err(ChecksFailed) })
}

fn cmd_prop4(args: &Prop4Args) -> Result<Result<(), ChecksFailed>> {
    let loaded = load(&args.source)?;
    let Some(grid) = &loaded.grid else {
        bail!("prop4 needs a lattice family or --coords");
    };
    let dm = DistanceMatrix::compute(&grid.graph)?;
    let report = graph_boundary::boundary::boundary_from(&grid.graph, &dm)?;
    let (entries, missing) = match classify_prop4(grid, &dm, &report, args.all) {
        Ok(entries) => (entries, None),
        Err(Error::WitnessNotFound(u)) => (Vec::new(), Some(u)),
        Err(e) => return Err(e.into()),
    };
    let verified = missing.is_none()
        && entries
            .iter()
            .all(|e| e.witnesses.iter().all(|w| w.verify(&dm)));
    let text = pretty(&json!({
        "n": grid.graph.n(),
        "m": grid.graph.m(),
        "dim": grid.dim,
        "full_degree": grid.full_degree(),
        "boundary_size": report.boundary.len(),
        "full_degree_boundary": entries.len(),
        "entries": entries
            .iter()
            .map(|e| {
                let mut value = serde_json::to_value(e)?;
                value["position"] = json!(grid.position(e.vertex));
                Ok(value)
            })
            .collect::<Result<Vec<_>>>()?,
        "missing_witness": missing,
        "verified": verified,
    }))?;
    emit(args.out.as_deref(), &text)?;
    Ok(if verified { Ok(()) } else { Err(ChecksFailed) })
}

fn cmd_sector(args: &SectorArgs) -> Result<Result<(), ChecksFailed>> {
    let sector = sector_check(args.r, args.alpha, args.max_alpha)?;
    let half_angle = std::f64::consts::PI * args.alpha;
    let points: Vec<Vec<f64>> = [0.5, 1.0]
        .iter()
        .map(|s| vec![s * args.r * half_angle.cos(), s * args.r * half_angle.sin()])
        .collect();
    let deviation = radial_laplacian_identity_check(2, &points, args.step)?;
    let radial_pass = deviation < args.tol;
    let text = pretty(&json!({
        "sector": sector,
        "radial_laplacian": {
            "step": args.step,
            "points": points,
            "max_relative_deviation": deviation,
            "tolerance": args.tol,
            "pass": radial_pass,
        },
    }))?;
    emit(args.out.as_deref(), &text)?;
    Ok(if sector.holds && radial_pass {
        Ok(())
    } else {
        Err(ChecksFailed)
    })
}

fn run(cli: &Cli) -> Result<Result<(), ChecksFailed>> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring the thread pool")?;
    }
    match &cli.command {
        Command::Gen(args) => cmd_gen(args).map(Ok),
        Command::Boundary(args) => cmd_boundary(args).map(Ok),
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Prop4(args) => cmd_prop4(args),
        Command::Sector(args) => cmd_sector(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(ChecksFailed)) => {
            eprintln!("gbound: one or more checks failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("gbound: {e:#}");
            ExitCode::from(2)
        }
    }
}
