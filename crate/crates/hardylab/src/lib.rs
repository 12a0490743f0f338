//! Numerical laboratory for shift operators on Hardy spaces of the unit disc.
//!
//! The crate works with two interchangeable representations of a function on
//! the unit circle: a finite coefficient expansion ([`hardy::AnalyticPoly`],
//! [`hardy::LaurentPoly`]) and uniform boundary samples
//! ([`spectral::GridFunction`]). Coefficient arithmetic is exact convolution;
//! grid arithmetic uses trapezoid-rule quadrature on power-of-two grids, which
//! is exact for trigonometric polynomials of degree below the grid size and
//! converges geometrically for functions analytic past the circle.
//!
//! On top of these sit the backward/forward shift and Riesz projection
//! operators ([`operators`]), Blaschke products and the golden-ratio extremal
//! family ([`inner`]), a suite of identity/inequality checks ([`verify`]), and
//! multistart gradient ascent for operator norm ratios ([`optimize`]).
//!
//! Everything is generic over the scalar type through [`scalar::Scalar`];
//! `f64` aliases are exported at the crate root.

pub mod error;
pub mod hardy;
pub mod inner;
pub mod operators;
pub mod optimize;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use report::{CheckRecord, CheckValue};
pub use scalar::Scalar;

/// `f64` complex scalar used by the default aliases below.
pub type C64 = num_complex::Complex<f64>;

/// Analytic polynomial with `f64` coefficients.
pub type AnalyticPoly64 = hardy::AnalyticPoly<f64>;
/// Laurent polynomial with `f64` coefficients.
pub type LaurentPoly64 = hardy::LaurentPoly<f64>;
/// Boundary samples on a power-of-two grid, `f64` scalars.
pub type GridFunction64 = spectral::GridFunction<f64>;
/// Finite Blaschke product over `f64`.
pub type BlaschkeProduct64 = inner::BlaschkeProduct<f64>;
/// Golden-ratio extremal function over `f64`.
pub type ExtremalFunction64 = inner::ExtremalFunction<f64>;
/// Golden-ratio constant pack over `f64`.
pub type PhiConstants64 = inner::PhiConstants<f64>;
