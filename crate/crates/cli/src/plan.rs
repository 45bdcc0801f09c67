//! Benchmark plans in TOML.
//!
//! ```toml
//! timeout = 600.0   # seconds per run, optional
//! delta = 0.1       # optional
//!
//! [[case]]
//! algorithm = "delaunay"          # naive, naive/labels, real, delaunay, delaunay/nodedup, delaunay/perturb
//! mode = "filtered"               # float, filtered, exact
//! distribution = "squares:0.02"
//! sizes = [4096, 8192, 16384]
//! repetitions = 3
//! seed = 1
//! ```

use std::path::Path;
use std::time::Duration;

use eigclust::bench::{Algorithm, BenchCase, BenchSettings};
use eigclust::generate::Distribution;
use eigclust::ArithmeticMode;
use serde::Deserialize;

use crate::Failure;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PlanFile {
    timeout: Option<f64>,
    delta: Option<f64>,
    #[serde(rename = "case", default)]
    cases: Vec<CaseEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CaseEntry {
    algorithm: String,
    #[serde(default = "default_mode")]
    mode: String,
    distribution: String,
    sizes: Vec<usize>,
    #[serde(default = "one")]
    repetitions: usize,
    #[serde(default)]
    seed: u64,
}

fn default_mode() -> String {
    "filtered".into()
}

fn one() -> usize {
    1
}

pub fn parse_mode(s: &str) -> Result<ArithmeticMode, String> {
    match s {
        "float" => Ok(ArithmeticMode::Float),
        "filtered" => Ok(ArithmeticMode::Filtered),
        "exact" => Ok(ArithmeticMode::Exact),
        _ => Err(format!("unknown arithmetic mode {s:?}")),
    }
}

pub fn timeout(seconds: f64) -> Result<Duration, Failure> {
    Duration::try_from_secs_f64(seconds)
        .ok()
        .filter(|d| !d.is_zero())
        .ok_or_else(|| Failure::usage(format!("invalid timeout {seconds}")))
}

pub struct Plan {
    pub cases: Vec<BenchCase>,
    pub settings: BenchSettings,
}

pub fn parse_plan(text: &str, origin: &str) -> Result<Plan, Failure> {
    let file: PlanFile =
        toml::from_str(text).map_err(|e| Failure::malformed(format!("{origin}: {e}")))?;
    let bad =
        |i: usize, msg: String| Failure::malformed(format!("{origin}: case {}: {msg}", i + 1));
    if file.cases.is_empty() {
        return Err(Failure::malformed(format!("{origin}: no [[case]] entries")));
    }
    let mut cases = Vec::new();
    for (i, c) in file.cases.into_iter().enumerate() {
        let algorithm: Algorithm = c.algorithm.parse().map_err(|e| bad(i, format!("{e}")))?;
        let distribution: Distribution =
            c.distribution.parse().map_err(|e| bad(i, format!("{e}")))?;
        let mode = parse_mode(&c.mode).map_err(|e| bad(i, e))?;
        if c.sizes.is_empty() || c.sizes.contains(&0) {
            return Err(bad(
                i,
                "sizes must be a non-empty list of positive counts".into(),
            ));
        }
        cases.push(BenchCase {
            algorithm,
            mode,
            distribution,
            sizes: c.sizes,
            repetitions: c.repetitions,
            seed: c.seed,
        });
    }
    let mut settings = BenchSettings::default();
    if let Some(d) = file.delta {
        settings.delta = d;
    }
    settings.timeout = file.timeout.map(timeout).transpose()?;
    Ok(Plan { cases, settings })
}

pub fn read_plan(path: &Path) -> Result<Plan, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::malformed(format!("cannot read plan {}: {e}", path.display())))?;
    parse_plan(&text, &path.display().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_documented_example() {
        let plan = parse_plan(
            r#"
            timeout = 600.0
            [[case]]
            algorithm = "delaunay"
            mode = "filtered"
            distribution = "squares:0.02"
            sizes = [4096, 8192, 16384]
            repetitions = 3
            seed = 1

            [[case]]
            algorithm = "naive/labels"
            distribution = "circles"
            sizes = [100]
            "#,
            "plan",
        )
        .unwrap();
        assert_eq!(plan.cases.len(), 2);
        assert_eq!(plan.settings.timeout, Some(Duration::from_secs(600)));
        assert_eq!(plan.settings.delta, 0.1);
        assert_eq!(plan.cases[0].distribution, Distribution::squares(0.02));
        assert_eq!(plan.cases[1].repetitions, 1);
        assert_eq!(plan.cases[1].mode, ArithmeticMode::Filtered);
    }

    #[test]
    fn rejects_bad_plans() {
        for text in [
            "",
            "[[case]]\nalgorithm = \"fast\"\ndistribution = \"uniform\"\nsizes = [1]",
            "[[case]]\nalgorithm = \"real\"\ndistribution = \"uniform\"\nsizes = []",
            "[[case]]\nalgorithm = \"real\"\ndistribution = \"uniform\"\nsizes = [1]\ncolour = 3",
            "timeout = -1.0\n[[case]]\nalgorithm = \"real\"\ndistribution = \"real\"\nsizes = [1]",
        ] {
            assert!(parse_plan(text, "plan").is_err(), "{text}");
        }
    }
}
