//! Point and label files.

use std::fs;
use std::io::Write;
use std::path::Path;

use eigclust::PlanePoint;

use crate::Failure;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::malformed(format!("cannot read {}: {e}", path.display())))
}

/// Non-empty lines of a file, numbered from 1. A single trailing newline is
/// allowed; blank lines elsewhere are errors because output is per line.
fn lines(path: &Path, text: &str) -> Result<Vec<(usize, String)>, Failure> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            return Err(Failure::malformed(format!(
                "{}:{}: blank line",
                path.display(),
                i + 1
            )));
        }
        out.push((i + 1, line.to_string()));
    }
    if out.is_empty() {
        return Err(Failure::malformed(format!("{}: no data", path.display())));
    }
    Ok(out)
}

fn parse_coordinate(path: &Path, line: usize, field: &str) -> Result<f64, Failure> {
    match field.trim().parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        Ok(_) => Err(Failure::malformed(format!(
            "{}:{line}: non-finite coordinate {field:?}",
            path.display()
        ))),
        Err(_) => Err(Failure::malformed(format!(
            "{}:{line}: cannot parse {field:?} as a number",
            path.display()
        ))),
    }
}

/// Reads `re,im` per line.
pub fn read_points(path: &Path) -> Result<Vec<PlanePoint>, Failure> {
    let text = read(path)?;
    lines(path, &text)?
        .into_iter()
        .map(|(no, line)| {
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 2 {
                return Err(Failure::malformed(format!(
                    "{}:{no}: expected `re,im`, found {} field(s)",
                    path.display(),
                    fields.len()
                )));
            }
            Ok(PlanePoint::new(
                parse_coordinate(path, no, fields[0])?,
                parse_coordinate(path, no, fields[1])?,
            ))
        })
        .collect()
}

/// Reads one positive integer label per line.
pub fn read_labels(path: &Path) -> Result<Vec<u64>, Failure> {
    let text = read(path)?;
    lines(path, &text)?
        .into_iter()
        .map(|(no, line)| match line.parse::<u64>() {
            Ok(l) if l > 0 => Ok(l),
            _ => Err(Failure::malformed(format!(
                "{}:{no}: expected a positive integer label, found {line:?}",
                path.display()
            ))),
        })
        .collect()
}

/// Binary64 values are written with the shortest round-trip representation.
pub fn write_points<W: Write>(points: &[PlanePoint], mut w: W) -> std::io::Result<()> {
    for p in points {
        writeln!(w, "{:?},{:?}", p.re, p.im)?;
    }
    Ok(())
}

pub fn write_labels<W: Write>(labels: &[usize], mut w: W) -> std::io::Result<()> {
    for l in labels {
        writeln!(w, "{l}")?;
    }
    Ok(())
}
