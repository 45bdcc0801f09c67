use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};
use rand::distr::uniform::SampleUniform;

/// Floating-point coordinate type: `f32` or `f64`.
pub trait Scalar:
    Float + FromPrimitive + SampleUniform + Debug + Display + Default + Send + Sync + 'static
{
    /// Smallest nonzero coordinate difference admitted by the predicate filter.
    ///
    /// Together with [`Scalar::FILTER_MAX`] this keeps every product of up to four
    /// differences inside the normal range, where the static error bounds hold.
    const FILTER_MIN: Self;
    /// Largest coordinate difference admitted by the predicate filter.
    const FILTER_MAX: Self;
}

impl Scalar for f64 {
    // 2^-240 and 2^240
    const FILTER_MIN: f64 = 5.659799424266695e-73;
    const FILTER_MAX: f64 = 1.7668470647783843e72;
}

impl Scalar for f32 {
    // 2^-24 and 2^24
    const FILTER_MIN: f32 = 5.9604645e-8;
    const FILTER_MAX: f32 = 16777216.0;
}
