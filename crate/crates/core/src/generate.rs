//! Synthetic spectra for tests and benchmarks.
//!
//! All generators draw from ChaCha8 seeded with the given seed, so the same
//! arguments reproduce the same points bit for bit on every platform.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::point::Point;
use crate::spectrum::Spectrum;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn positive(name: &str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(invalid(format!(
            "{name} must be positive and finite, got {x}"
        )))
    }
}

/// `origin` copies of zero followed by points on concentric circles of radii
/// `spacing, 2·spacing, ..., circles·spacing`; point `i` of the rest goes to
/// circle `i mod circles` at a uniformly random angle.
pub fn gen_circles(
    n: usize,
    circles: usize,
    spacing: f64,
    origin: usize,
    seed: u64,
) -> Result<Spectrum<f64>> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    if circles == 0 {
        return Err(invalid("need at least one circle"));
    }
    positive("circle spacing", spacing)?;
    if origin > n {
        return Err(invalid(format!(
            "origin multiplicity {origin} exceeds n = {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts = vec![Point::new(0.0, 0.0); origin];
    for i in 0..n - origin {
        let r = spacing * ((i % circles) + 1) as f64;
        let t = rng.random_range(0.0..TAU);
        pts.push(Point::new(r * t.cos(), r * t.sin()));
    }
    Spectrum::from_points(pts)
}

/// Points spread evenly over `squares` axis-aligned squares of side `side`,
/// uniform inside each. Square centers sit on a grid with `ceil(sqrt(squares))`
/// columns and pitch `center_spacing`, starting at `center_spacing / 2`.
pub fn gen_squares(
    n: usize,
    side: f64,
    center_spacing: f64,
    squares: usize,
    seed: u64,
) -> Result<Spectrum<f64>> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    if squares == 0 {
        return Err(invalid("need at least one square"));
    }
    positive("square side", side)?;
    positive("center spacing", center_spacing)?;
    let cols = (squares as f64).sqrt().ceil() as usize;
    let half = side / 2.0;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts = (0..n)
        .map(|i| {
            let s = i % squares;
            let cx = ((s % cols) as f64 + 0.5) * center_spacing;
            let cy = ((s / cols) as f64 + 0.5) * center_spacing;
            Point::new(
                cx + rng.random_range(-half..=half),
                cy + rng.random_range(-half..=half),
            )
        })
        .collect();
    Spectrum::from_points(pts)
}

/// Uniform in the unit square.
pub fn gen_uniform(n: usize, seed: u64) -> Result<Spectrum<f64>> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts = (0..n)
        .map(|_| Point::new(rng.random_range(0.0..1.0), rng.random_range(0.0..1.0)))
        .collect();
    Spectrum::from_points(pts)
}

/// Uniform reals in `[0, 1)`.
pub fn gen_real(n: usize, seed: u64) -> Result<Spectrum<f64>> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..1.0)).collect();
    Spectrum::from_reals(&v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OriginMultiplicity {
    Count(usize),
    /// `n / d` copies.
    FractionOfN(usize),
}

impl OriginMultiplicity {
    pub fn resolve(self, n: usize) -> usize {
        match self {
            Self::Count(c) => c,
            Self::FractionOfN(d) => n / d.max(1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Distribution {
    Circles {
        circles: usize,
        spacing: f64,
        origin: OriginMultiplicity,
    },
    Squares {
        side: f64,
        spacing: f64,
        squares: usize,
    },
    Uniform,
    Real,
}

impl Distribution {
    /// Five circles 0.2 apart with a single origin point.
    pub fn circles() -> Self {
        Self::Circles {
            circles: 5,
            spacing: 0.2,
            origin: OriginMultiplicity::Count(1),
        }
    }

    /// 49 squares of the given side on a 0.15 grid.
    pub fn squares(side: f64) -> Self {
        Self::Squares {
            side,
            spacing: 0.15,
            squares: 49,
        }
    }

    pub fn generate(&self, n: usize, seed: u64) -> Result<Spectrum<f64>> {
        match *self {
            Self::Circles {
                circles,
                spacing,
                origin,
            } => gen_circles(n, circles, spacing, origin.resolve(n).min(n), seed),
            Self::Squares {
                side,
                spacing,
                squares,
            } => gen_squares(n, side, spacing, squares, seed),
            Self::Uniform => gen_uniform(n, seed),
            Self::Real => gen_real(n, seed),
        }
    }

    /// Compact identifier, also accepted by [`FromStr`].
    pub fn id(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Circles {
                circles,
                spacing,
                origin,
            } => {
                write!(f, "circles:{circles}:{spacing}:")?;
                match origin {
                    OriginMultiplicity::Count(c) => write!(f, "{c}"),
                    OriginMultiplicity::FractionOfN(d) => write!(f, "n/{d}"),
                }
            }
            Self::Squares {
                side,
                spacing,
                squares,
            } => write!(f, "squares:{side}:{spacing}:{squares}"),
            Self::Uniform => f.write_str("uniform"),
            Self::Real => f.write_str("real"),
        }
    }
}

impl FromStr for Distribution {
    type Err = Error;

    /// `circles[:COUNT[:SPACING[:ORIGIN]]]` with ORIGIN a count or `n/D`,
    /// `squares[:SIDE[:SPACING[:COUNT]]]`, `uniform` or `real`.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(':');
        let kind = parts.next().unwrap_or("");
        let rest: Vec<&str> = parts.collect();
        let num = |i: usize| -> Result<Option<f64>> {
            rest.get(i)
                .map(|x| {
                    x.parse::<f64>()
                        .map_err(|_| invalid(format!("bad number {x:?} in distribution {s:?}")))
                })
                .transpose()
        };
        let count = |i: usize| -> Result<Option<usize>> {
            rest.get(i)
                .map(|x| {
                    x.parse::<usize>()
                        .map_err(|_| invalid(format!("bad count {x:?} in distribution {s:?}")))
                })
                .transpose()
        };
        let arity = |max: usize| {
            if rest.len() > max {
                Err(invalid(format!("too many fields in distribution {s:?}")))
            } else {
                Ok(())
            }
        };
        match kind {
            "circles" => {
                arity(3)?;
                let origin = match rest.get(2) {
                    None => OriginMultiplicity::Count(1),
                    Some(o) => match o.strip_prefix("n/") {
                        Some(d) => OriginMultiplicity::FractionOfN(
                            d.parse()
                                .ok()
                                .filter(|&d: &usize| d > 0)
                                .ok_or_else(|| invalid(format!("bad origin fraction {o:?}")))?,
                        ),
                        None => OriginMultiplicity::Count(count(2)?.unwrap()),
                    },
                };
                Ok(Self::Circles {
                    circles: count(0)?.unwrap_or(5),
                    spacing: num(1)?.unwrap_or(0.2),
                    origin,
                })
            }
            "squares" => {
                arity(3)?;
                Ok(Self::Squares {
                    side: num(0)?.unwrap_or(0.04),
                    spacing: num(1)?.unwrap_or(0.15),
                    squares: count(2)?.unwrap_or(49),
                })
            }
            "uniform" => {
                arity(0)?;
                Ok(Self::Uniform)
            }
            "real" => {
                arity(0)?;
                Ok(Self::Real)
            }
            _ => Err(invalid(format!("unknown distribution {s:?}"))),
        }
    }
}
