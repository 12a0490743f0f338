//! Scalar abstraction: everything numeric is generic over a real float type.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real scalar the whole crate is generic over. Implemented by `f32`/`f64`.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + NumAssign
    + Sum<Self>
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Float
        + FloatConst
        + FromPrimitive
        + NumAssign
        + Sum<Self>
        + Debug
        + Display
        + LowerExp
        + Send
        + Sync
        + 'static
{
}

/// Shorthand for converting an `f64` literal into the working scalar.
#[inline]
pub(crate) fn real<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("f64 literal must convert into the scalar type")
}

#[inline]
pub(crate) fn to_f64<T: Scalar>(x: T) -> f64 {
    x.to_f64().expect("scalar must convert to f64")
}

/// Neumaier-compensated accumulator. Grid reductions sum thousands of terms;
/// plain summation would eat several digits of the 1e-13-level comparisons
/// the verification suite makes.
#[derive(Clone, Copy, Debug)]
pub(crate) struct CompensatedSum<T> {
    sum: T,
    compensation: T,
}

impl<T: Scalar> CompensatedSum<T> {
    pub(crate) fn new() -> Self {
        Self {
            sum: T::zero(),
            compensation: T::zero(),
        }
    }

    #[inline]
    pub(crate) fn add(&mut self, x: T) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub(crate) fn value(&self) -> T {
        self.sum + self.compensation
    }
}
