//! Timing harness and scaling-exponent estimates.
//!
//! A run that exceeds the time budget is recorded as censored; once a size is
//! censored, larger sizes of the same series are recorded as censored without
//! being run. Timed sections are single-threaded.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::deadline::Deadline;
use crate::delaunay::DuplicatePolicy;
use crate::delaunay_cluster::{self, DelaunayOptions};
use crate::dsu::DsuKind;
use crate::error::{Error, Result};
use crate::generate::Distribution;
use crate::naive::{self, NaiveOptions};
use crate::point::Closeness;
use crate::predicates::ArithmeticMode;
use crate::real::cluster_real;
use crate::spectrum::{broadcast_labels, Spectrum};

/// How the Delaunay path treats exactly repeated points.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum DuplicateHandling {
    #[default]
    Dedup,
    /// Insert every copy; the triangulation merges them into one vertex.
    Keep,
    /// Perturb by `max |coordinate| · 2^-26` (or `2^-26` for an all-zero input).
    Perturb,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Algorithm {
    Naive(DsuKind),
    Real,
    Delaunay(DuplicateHandling),
}

impl Algorithm {
    pub fn uses_predicates(&self) -> bool {
        matches!(self, Algorithm::Delaunay(_))
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Naive(DsuKind::LabelVector) => "naive/labels",
            Algorithm::Naive(DsuKind::Forest) => "naive/forest",
            Algorithm::Real => "real",
            Algorithm::Delaunay(DuplicateHandling::Dedup) => "delaunay",
            Algorithm::Delaunay(DuplicateHandling::Keep) => "delaunay/nodedup",
            Algorithm::Delaunay(DuplicateHandling::Perturb) => "delaunay/perturb",
        })
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "naive" | "naive/forest" => Algorithm::Naive(DsuKind::Forest),
            "naive/labels" => Algorithm::Naive(DsuKind::LabelVector),
            "real" => Algorithm::Real,
            "delaunay" => Algorithm::Delaunay(DuplicateHandling::Dedup),
            "delaunay/nodedup" => Algorithm::Delaunay(DuplicateHandling::Keep),
            "delaunay/perturb" => Algorithm::Delaunay(DuplicateHandling::Perturb),
            _ => return Err(Error::InvalidParameter(format!("unknown algorithm {s:?}"))),
        })
    }
}

pub fn mode_id(mode: ArithmeticMode) -> &'static str {
    match mode {
        ArithmeticMode::Float => "float",
        ArithmeticMode::Filtered => "filtered",
        ArithmeticMode::Exact => "exact",
    }
}

/// Default perturbation magnitude for a spectrum.
pub fn default_perturbation(s: &Spectrum<f64>) -> f64 {
    let scale = 2f64.powi(-26);
    match s.max_abs_coordinate() {
        m if m > 0.0 => m * scale,
        _ => scale,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchCase {
    pub algorithm: Algorithm,
    pub mode: ArithmeticMode,
    pub distribution: Distribution,
    /// Sizes, run in ascending order.
    pub sizes: Vec<usize>,
    pub repetitions: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchSettings {
    pub delta: f64,
    /// Budget per single run.
    pub timeout: Option<Duration>,
}

impl Default for BenchSettings {
    fn default() -> Self {
        Self {
            delta: 0.1,
            timeout: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub algorithm: String,
    pub mode: String,
    pub distribution: String,
    pub n: usize,
    pub seed: u64,
    pub rep: usize,
    /// `None` when censored.
    pub seconds: Option<f64>,
    pub k: Option<usize>,
    pub censored: bool,
}

pub const CSV_HEADER: &str = "algorithm,mode,distribution,n,seed,rep,seconds,k,censored";

/// Clusters one spectrum and returns the number of clusters.
fn run_once(
    algorithm: Algorithm,
    mode: ArithmeticMode,
    s: &Spectrum<f64>,
    delta: f64,
    seed: u64,
    deadline: &Deadline,
) -> Result<usize> {
    match algorithm {
        Algorithm::Naive(dsu) => {
            let opts = NaiveOptions {
                dsu,
                skip_same_cluster: true,
            };
            let run = naive::run(s.points(), Closeness::new(delta)?, opts, deadline)?;
            Ok(broadcast_labels(&run.clustering, s)?.k())
        }
        Algorithm::Real => Ok(cluster_real(s, delta)?.k()),
        Algorithm::Delaunay(dups) => {
            let mut opts = DelaunayOptions {
                seed,
                mode,
                ..Default::default()
            };
            match dups {
                DuplicateHandling::Dedup => {}
                DuplicateHandling::Keep => {
                    opts.dedup = false;
                    opts.duplicates = DuplicatePolicy::Merge;
                }
                DuplicateHandling::Perturb => {
                    opts.dedup = false;
                    opts.perturb = Some(default_perturbation(s));
                }
            }
            Ok(delaunay_cluster::run(s, delta, &opts, deadline)?
                .clustering
                .k())
        }
    }
}

/// Times every case; see the module documentation for censoring.
pub fn run_bench(cases: &[BenchCase], settings: &BenchSettings) -> Result<Vec<BenchRecord>> {
    Closeness::new(settings.delta)?;
    let mut out = Vec::new();
    for case in cases {
        if case.repetitions == 0 {
            return Err(Error::InvalidParameter(
                "repetitions must be at least 1".into(),
            ));
        }
        let mode = if case.algorithm.uses_predicates() {
            case.mode
        } else {
            ArithmeticMode::Float
        };
        let mut sizes = case.sizes.clone();
        sizes.sort_unstable();
        let mut censored = false;
        for &n in &sizes {
            let s = if censored {
                None
            } else {
                Some(case.distribution.generate(n, case.seed)?)
            };
            for rep in 0..case.repetitions {
                let mut record = BenchRecord {
                    algorithm: case.algorithm.to_string(),
                    mode: mode_id(mode).to_string(),
                    distribution: case.distribution.id(),
                    n,
                    seed: case.seed,
                    rep,
                    seconds: None,
                    k: None,
                    censored: true,
                };
                if let Some(s) = &s {
                    if !censored {
                        let deadline = settings.timeout.map_or(Deadline::none(), Deadline::after);
                        let start = Instant::now();
                        match run_once(
                            case.algorithm,
                            mode,
                            s,
                            settings.delta,
                            case.seed,
                            &deadline,
                        ) {
                            Ok(k) => {
                                let t = start.elapsed().as_secs_f64().max(1e-9);
                                let over = settings.timeout.is_some_and(|b| t > b.as_secs_f64());
                                if over {
                                    censored = true;
                                } else {
                                    record.seconds = Some(t);
                                    record.k = Some(k);
                                    record.censored = false;
                                }
                            }
                            Err(Error::TimedOut) => censored = true,
                            Err(e) => return Err(e),
                        }
                    }
                }
                out.push(record);
            }
        }
    }
    Ok(out)
}

pub fn write_csv<W: Write>(records: &[BenchRecord], mut w: W) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{}",
            r.algorithm,
            r.mode,
            r.distribution,
            r.n,
            r.seed,
            r.rep,
            r.seconds.map(|s| format!("{s:.9}")).unwrap_or_default(),
            r.k.map(|k| k.to_string()).unwrap_or_default(),
            r.censored
        )?;
    }
    Ok(())
}

/// `log(t2 / t1) / log(n2 / n1)`.
pub fn scaling_exponent(n1: f64, t1: f64, n2: f64, t2: f64) -> Result<f64> {
    if n1 == n2 {
        return Err(Error::InvalidParameter(format!(
            "scaling exponent needs distinct sizes, got {n1} twice"
        )));
    }
    Ok((t2 / t1).ln() / (n2 / n1).ln())
}

/// `((1/n1 + 1/n2) / 2)^-1`.
pub fn harmonic_mean(n1: f64, n2: f64) -> f64 {
    2.0 / (1.0 / n1 + 1.0 / n2)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExponentEstimate {
    pub algorithm: String,
    pub mode: String,
    pub distribution: String,
    pub n1: usize,
    pub n2: usize,
    pub harmonic_mean: f64,
    pub exponent: f64,
}

/// One estimate per consecutive pair of timed sizes in each series, using the
/// minimum time over repetitions.
pub fn exponent_estimates(records: &[BenchRecord]) -> Result<Vec<ExponentEstimate>> {
    type Key = (String, String, String);
    let mut series: BTreeMap<Key, BTreeMap<usize, f64>> = BTreeMap::new();
    for r in records {
        let key = (r.algorithm.clone(), r.mode.clone(), r.distribution.clone());
        let times = series.entry(key).or_default();
        if let Some(t) = r.seconds {
            let best = times.entry(r.n).or_insert(t);
            *best = best.min(t);
        }
    }
    let mut out = Vec::new();
    for ((algorithm, mode, distribution), times) in series {
        let timed: Vec<(usize, f64)> = times.into_iter().collect();
        for w in timed.windows(2) {
            let ((n1, t1), (n2, t2)) = (w[0], w[1]);
            out.push(ExponentEstimate {
                algorithm: algorithm.clone(),
                mode: mode.clone(),
                distribution: distribution.clone(),
                n1,
                n2,
                harmonic_mean: harmonic_mean(n1 as f64, n2 as f64),
                exponent: scaling_exponent(n1 as f64, t1, n2 as f64, t2)?,
            });
        }
    }
    Ok(out)
}
