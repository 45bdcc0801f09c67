//! `eigclust`: cluster eigenvalue files, generate test spectra, run timing
//! benchmarks and check clusterings.
//!
//! Exit codes: 0 success, 1 admissible but coarser than the components
//! (`check`), 2 malformed input or missing files, 3 invalid flag combination,
//! 4 inadmissible clustering (`check`).

mod io;
mod plan;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eigclust::bench::{self, Algorithm as BenchAlgorithm, BenchCase, BenchSettings};
use eigclust::generate::{Distribution, OriginMultiplicity};
use eigclust::validate::{is_admissible, oracle_components, Admissibility};
use eigclust::{
    cluster_delaunay, cluster_naive, cluster_real, deduplicate, perturb, reduce_conjugate_pairs,
    ArithmeticMode, BuildOptions, Clustering, DelaunayOptions, DsuKind, Error, InsertionOrder,
    Spectrum64, Triangulation64,
};

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn malformed(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::malformed(e.to_string())
    }
}

fn io_failure(path: &Path) -> impl Fn(std::io::Error) -> Failure + '_ {
    move |e| Failure::malformed(format!("cannot write {}: {e}", path.display()))
}

#[derive(Parser)]
#[command(
    name = "eigclust",
    version,
    about = "Cluster eigenvalues by δ-closeness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cluster a CSV file of `re,im` points; writes one label per line.
    Cluster(ClusterArgs),
    /// Write a synthetic spectrum as CSV.
    Generate(GenerateArgs),
    /// Time clusterers and write one CSV row per run.
    Bench(BenchArgs),
    /// Check a labelling against the δ-closeness components.
    Check(CheckArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Naive,
    Real,
    Delaunay,
}

#[derive(Clone, Copy, ValueEnum)]
enum DsuArg {
    Labels,
    Forest,
}

impl From<DsuArg> for DsuKind {
    fn from(d: DsuArg) -> Self {
        match d {
            DsuArg::Labels => DsuKind::LabelVector,
            DsuArg::Forest => DsuKind::Forest,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Brio,
    Random,
}

impl From<OrderArg> for InsertionOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Brio => InsertionOrder::Brio,
            OrderArg::Random => InsertionOrder::Random,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Float,
    Filtered,
    Exact,
}

impl From<ModeArg> for ArithmeticMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Float => ArithmeticMode::Float,
            ModeArg::Filtered => ArithmeticMode::Filtered,
            ModeArg::Exact => ArithmeticMode::Exact,
        }
    }
}

#[derive(Args)]
struct ClusterArgs {
    /// Input CSV, one `re,im` point per line.
    input: PathBuf,
    #[arg(long, default_value_t = 0.1)]
    delta: f64,
    #[arg(long, value_enum, default_value = "delaunay")]
    algorithm: AlgorithmArg,
    #[arg(long, value_enum, default_value = "forest")]
    dsu: DsuArg,
    /// Predicate arithmetic (delaunay only).
    #[arg(long, value_enum, default_value = "filtered")]
    mode: ModeArg,
    /// Collapse exactly repeated points before triangulating (default).
    #[arg(long, overrides_with = "no_dedup")]
    dedup: bool,
    #[arg(long, overrides_with = "dedup")]
    no_dedup: bool,
    /// Randomly displace points before triangulating; the default magnitude is
    /// max |coordinate| · 2^-26.
    #[arg(long, value_name = "MAG", num_args = 0..=1)]
    perturb: Option<Option<f64>>,
    /// Cluster one member of each complex-conjugate pair and copy its label.
    #[arg(long)]
    conjugate_pairs: bool,
    /// Insertion order of the triangulation (delaunay only).
    #[arg(long, value_enum, default_value = "brio")]
    order: OrderArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write labels here instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Write the triangulation's finite edges as pairs of input line numbers.
    #[arg(long, value_name = "PATH")]
    dump_triangulation: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DistKind {
    Circles,
    Squares,
    Uniform,
    Real,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    dist: DistKind,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of circles or squares (default 5 circles, 49 squares).
    #[arg(long)]
    count: Option<usize>,
    /// Circle spacing or square center spacing (default 0.2 resp. 0.15).
    #[arg(long)]
    spacing: Option<f64>,
    /// Points at the origin: a count or `n/D` (circles only, default 1).
    #[arg(long, value_parser = parse_origin)]
    origin: Option<OriginMultiplicity>,
    /// Square side (squares only, default 0.04).
    #[arg(long)]
    side: Option<f64>,
    /// Output CSV path; standard output if omitted.
    output: Option<PathBuf>,
}

fn parse_origin(s: &str) -> Result<OriginMultiplicity, String> {
    match s.strip_prefix("n/") {
        Some(d) => d
            .parse()
            .ok()
            .filter(|&d| d > 0)
            .map(OriginMultiplicity::FractionOfN)
            .ok_or_else(|| format!("bad divisor in {s:?}")),
        None => s
            .parse()
            .map(OriginMultiplicity::Count)
            .map_err(|_| format!("expected a count or n/D, got {s:?}")),
    }
}

#[derive(Args)]
struct BenchArgs {
    /// TOML plan; without it a single case is built from the flags below.
    #[arg(long)]
    plan: Option<PathBuf>,
    /// Per-run budget in seconds; overrides the plan.
    #[arg(long)]
    timeout: Option<f64>,
    /// Overrides the plan's δ.
    #[arg(long)]
    delta: Option<f64>,
    /// naive, naive/labels, real, delaunay, delaunay/nodedup or delaunay/perturb.
    #[arg(long, conflicts_with = "plan")]
    algorithm: Option<String>,
    #[arg(long, value_enum, default_value = "filtered", conflicts_with = "plan")]
    mode: ModeArg,
    /// Distribution id such as `uniform`, `circles:5:0.2:n/6` or `squares:0.02`.
    #[arg(long, conflicts_with = "plan")]
    dist: Option<String>,
    #[arg(long, value_delimiter = ',', conflicts_with = "plan")]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 1, conflicts_with = "plan")]
    repetitions: usize,
    #[arg(long, default_value_t = 0, conflicts_with = "plan")]
    seed: u64,
    /// Output CSV path; standard output if omitted.
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    points: PathBuf,
    labels: PathBuf,
    #[arg(long, default_value_t = 0.1)]
    delta: f64,
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(io_failure(p))?)),
        None => Box::new(BufWriter::new(std::io::stdout().lock())),
    })
}

fn output_name(path: Option<&Path>) -> PathBuf {
    path.map_or_else(|| PathBuf::from("<stdout>"), Path::to_path_buf)
}

fn cmd_cluster(a: &ClusterArgs) -> Result<(), Failure> {
    let delaunay = matches!(a.algorithm, AlgorithmArg::Delaunay);
    if !delaunay {
        let flag = if a.perturb.is_some() {
            Some("--perturb")
        } else if a.no_dedup {
            Some("--no-dedup")
        } else if a.dump_triangulation.is_some() {
            Some("--dump-triangulation")
        } else {
            None
        };
        if let Some(flag) = flag {
            return Err(Failure::usage(format!(
                "{flag} requires --algorithm delaunay"
            )));
        }
    }

    let raw = io::read_points(&a.input)?;
    let s = if a.conjugate_pairs {
        reduce_conjugate_pairs(raw)?
    } else {
        Spectrum64::from_points(raw)?
    };
    let line = |rep: usize| s.origin_index()[rep] + 1;

    let clustering = match a.algorithm {
        AlgorithmArg::Naive => cluster_naive(&s, a.delta, a.dsu.into())?,
        AlgorithmArg::Real => cluster_real(&s, a.delta).map_err(|e| match e {
            Error::NonRealPoint { index, im } => Failure::usage(format!(
                "--algorithm real needs real input, but line {} has imaginary part {im:?}",
                line(index)
            )),
            e => e.into(),
        })?,
        AlgorithmArg::Delaunay => {
            let opts = DelaunayOptions {
                seed: a.seed,
                mode: a.mode.into(),
                dsu: a.dsu.into(),
                dedup: !a.no_dedup,
                order: a.order.into(),
                perturb: a
                    .perturb
                    .map(|m| m.unwrap_or_else(|| bench::default_perturbation(&s))),
                ..Default::default()
            };
            let c = cluster_delaunay(&s, a.delta, &opts).map_err(|e| match e {
                Error::DuplicatePoint { first, second } => Failure::usage(format!(
                    "lines {} and {} hold the same point; --no-dedup needs --perturb for such input",
                    first + 1,
                    second + 1
                )),
                e => e.into(),
            })?;
            if let Some(path) = &a.dump_triangulation {
                dump_triangulation(&s, &opts, path)?;
            }
            c
        }
    };

    let out = a.output.as_deref();
    let mut w = open_output(out)?;
    io::write_labels(clustering.labels(), &mut w)
        .and_then(|_| w.flush())
        .map_err(|e| {
            Failure::malformed(format!("cannot write {}: {e}", output_name(out).display()))
        })?;
    eprintln!("{}", clustering.k());
    Ok(())
}

/// Rebuilds the triangulation the clusterer used and writes its edges.
fn dump_triangulation(
    s: &Spectrum64,
    opts: &DelaunayOptions<f64>,
    path: &Path,
) -> Result<(), Failure> {
    let mut work = match opts.perturb {
        Some(m) => perturb(s, m, opts.seed)?,
        None => s.clone(),
    };
    if opts.dedup {
        work = deduplicate(&work);
    }
    let build = BuildOptions {
        seed: opts.seed,
        mode: opts.mode,
        duplicates: opts.duplicates,
        order: opts.order,
        check_each_insertion: false,
    };
    let t = Triangulation64::build(&work, &build)?;
    let mut w = BufWriter::new(File::create(path).map_err(io_failure(path))?);
    let line = |v: usize| work.origin_index()[v] + 1;
    for e in t.finite_edges() {
        writeln!(w, "{} {}", line(e.a), line(e.b)).map_err(io_failure(path))?;
    }
    w.flush().map_err(io_failure(path))
}

fn cmd_generate(a: &GenerateArgs) -> Result<(), Failure> {
    let misplaced = |flag: &str, dist: &str| {
        Err(Failure::usage(format!(
            "{flag} does not apply to --dist {dist}"
        )))
    };
    let dist = match a.dist {
        DistKind::Circles => {
            if a.side.is_some() {
                return misplaced("--side", "circles");
            }
            let Distribution::Circles {
                circles,
                spacing,
                origin,
            } = Distribution::circles()
            else {
                unreachable!()
            };
            Distribution::Circles {
                circles: a.count.unwrap_or(circles),
                spacing: a.spacing.unwrap_or(spacing),
                origin: a.origin.unwrap_or(origin),
            }
        }
        DistKind::Squares => {
            if a.origin.is_some() {
                return misplaced("--origin", "squares");
            }
            let Distribution::Squares {
                side,
                spacing,
                squares,
            } = Distribution::squares(0.04)
            else {
                unreachable!()
            };
            Distribution::Squares {
                side: a.side.unwrap_or(side),
                spacing: a.spacing.unwrap_or(spacing),
                squares: a.count.unwrap_or(squares),
            }
        }
        DistKind::Uniform | DistKind::Real => {
            let name = if matches!(a.dist, DistKind::Uniform) {
                "uniform"
            } else {
                "real"
            };
            for (flag, set) in [
                ("--count", a.count.is_some()),
                ("--spacing", a.spacing.is_some()),
                ("--origin", a.origin.is_some()),
                ("--side", a.side.is_some()),
            ] {
                if set {
                    return misplaced(flag, name);
                }
            }
            if matches!(a.dist, DistKind::Uniform) {
                Distribution::Uniform
            } else {
                Distribution::Real
            }
        }
    };
    if a.n == 0 {
        return Err(Failure::malformed("--n must be at least 1"));
    }
    let s = dist.generate(a.n, a.seed)?;
    let out = a.output.as_deref();
    let mut w = open_output(out)?;
    io::write_points(s.raw_points(), &mut w)
        .and_then(|_| w.flush())
        .map_err(|e| {
            Failure::malformed(format!("cannot write {}: {e}", output_name(out).display()))
        })
}

fn cmd_bench(a: &BenchArgs) -> Result<(), Failure> {
    let (cases, mut settings) = match &a.plan {
        Some(path) => {
            let p = plan::read_plan(path)?;
            (p.cases, p.settings)
        }
        None => {
            let (Some(algorithm), Some(dist)) = (&a.algorithm, &a.dist) else {
                return Err(Failure::usage(
                    "bench needs --plan or all of --algorithm, --dist and --sizes",
                ));
            };
            if a.sizes.is_empty() {
                return Err(Failure::usage("bench needs --sizes without --plan"));
            }
            let algorithm: BenchAlgorithm = algorithm
                .parse()
                .map_err(|e: Error| Failure::usage(e.to_string()))?;
            let distribution: Distribution = dist
                .parse()
                .map_err(|e: Error| Failure::usage(e.to_string()))?;
            let case = BenchCase {
                algorithm,
                mode: a.mode.into(),
                distribution,
                sizes: a.sizes.clone(),
                repetitions: a.repetitions,
                seed: a.seed,
            };
            (vec![case], BenchSettings::default())
        }
    };
    if let Some(t) = a.timeout {
        settings.timeout = Some(plan::timeout(t)?);
    }
    if let Some(d) = a.delta {
        settings.delta = d;
    }
    let records = bench::run_bench(&cases, &settings)?;
    let out = a.output.as_deref();
    let mut w = open_output(out)?;
    bench::write_csv(&records, &mut w)
        .and_then(|_| w.flush())
        .map_err(|e| {
            Failure::malformed(format!("cannot write {}: {e}", output_name(out).display()))
        })?;
    for e in bench::exponent_estimates(&records)? {
        eprintln!(
            "{} {} {}: n {}..{} (harmonic mean {:.1}) exponent {:.3}",
            e.algorithm, e.mode, e.distribution, e.n1, e.n2, e.harmonic_mean, e.exponent
        );
    }
    Ok(())
}

fn cmd_check(a: &CheckArgs) -> Result<ExitCode, Failure> {
    let points = io::read_points(&a.points)?;
    let labels = io::read_labels(&a.labels)?;
    if labels.len() != points.len() {
        return Err(Failure::malformed(format!(
            "{} has {} labels for {} points",
            a.labels.display(),
            labels.len(),
            points.len()
        )));
    }
    let given = Clustering::from_labels(labels);
    match is_admissible(&points, a.delta, &given)? {
        Admissibility::Admissible => {}
        Admissibility::SeparationBetween { i, j } => {
            println!(
                "inadmissible: lines {} and {} are within delta but in different clusters",
                i + 1,
                j + 1
            );
            return Ok(ExitCode::from(4));
        }
        Admissibility::SeparationWithin { i } => {
            println!(
                "inadmissible: line {} has no other member of its cluster within delta",
                i + 1
            );
            return Ok(ExitCode::from(4));
        }
    }
    let components = oracle_components(&points, a.delta)?;
    if components == given {
        println!(
            "ok: {} clusters, equal to the connected components",
            given.k()
        );
        Ok(ExitCode::SUCCESS)
    } else {
        println!(
            "admissible but not minimal: {} clusters where the connected components give {}",
            given.k(),
            components.k()
        );
        Ok(ExitCode::from(1))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Cluster(a) => cmd_cluster(a).map(|_| ExitCode::SUCCESS),
        Command::Generate(a) => cmd_generate(a).map(|_| ExitCode::SUCCESS),
        Command::Bench(a) => cmd_bench(a).map(|_| ExitCode::SUCCESS),
        Command::Check(a) => cmd_check(a),
    };
    result.unwrap_or_else(|f| {
        eprintln!("eigclust: {}", f.message);
        ExitCode::from(f.code)
    })
}
