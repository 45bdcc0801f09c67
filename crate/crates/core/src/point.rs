use num_traits::Float;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A point of the plane; `re` is the x-coordinate and `im` the y-coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point<T> {
    pub re: T,
    pub im: T,
}

/// Hashable identity of a point under numeric equality (`-0.0` and `0.0` coincide).
pub(crate) type ExactKey = [(u64, i16, i8); 2];

impl<T: Scalar> Point<T> {
    pub const fn new(re: T, im: T) -> Self {
        Self { re, im }
    }

    pub fn real(re: T) -> Self {
        Self { re, im: T::zero() }
    }

    /// Builds a point, rejecting NaN and infinite coordinates.
    pub fn try_new(re: T, im: T) -> Result<Self> {
        let p = Self { re, im };
        if p.is_finite() {
            Ok(p)
        } else {
            Err(Error::NonFinite { index: 0 })
        }
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn conj(self) -> Self {
        Self {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn is_real(&self) -> bool {
        self.im == T::zero()
    }

    #[inline]
    pub fn dist_sq(self, other: Self) -> T {
        let dx = self.re - other.re;
        let dy = self.im - other.im;
        dx * dx + dy * dy
    }

    pub(crate) fn exact_key(self) -> ExactKey {
        [key(self.re), key(self.im)]
    }
}

fn key<T: Float>(x: T) -> (u64, i16, i8) {
    let (mantissa, exponent, sign) = x.integer_decode();
    if mantissa == 0 {
        (0, 0, 1)
    } else {
        (mantissa, exponent, sign)
    }
}

/// Boundary-inclusive closeness `|a - b| <= delta`, compared as squared
/// distances in the scalar type.
///
/// Every clusterer prunes with this one comparator, so their outputs agree
/// exactly rather than up to a tolerance band around δ.
#[derive(Debug, Clone, Copy)]
pub struct Closeness<T> {
    delta: T,
    delta_sq: T,
}

impl<T: Scalar> Closeness<T> {
    pub fn new(delta: T) -> Result<Self> {
        if !delta.is_finite() || delta <= T::zero() {
            return Err(Error::InvalidDelta(delta.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(Self {
            delta,
            delta_sq: delta * delta,
        })
    }

    pub fn delta(&self) -> T {
        self.delta
    }

    pub fn delta_sq(&self) -> T {
        self.delta_sq
    }

    #[inline]
    pub fn close(&self, a: Point<T>, b: Point<T>) -> bool {
        a.dist_sq(b) <= self.delta_sq
    }

    #[inline]
    pub fn close_sq(&self, dist_sq: T) -> bool {
        dist_sq <= self.delta_sq
    }
}

pub(crate) fn check_finite<T: Scalar>(points: &[Point<T>]) -> Result<()> {
    match points.iter().position(|p| !p.is_finite()) {
        Some(index) => Err(Error::NonFinite { index }),
        None => Ok(()),
    }
}
