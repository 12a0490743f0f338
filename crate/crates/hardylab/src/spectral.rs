//! Boundary sampling and quadrature on uniform circle grids.
//!
//! All grids are power-of-two sized (n ≥ 4). The uniform average over the
//! n-th roots of unity integrates trigonometric polynomials of frequency
//! |k| < n exactly, and converges geometrically for functions analytic in a
//! neighbourhood of the closed disc — so doubling the grid until two
//! consecutive values agree is a reliable (and cheap) convergence guard.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::hardy::LaurentPoly;
use crate::scalar::{real, CompensatedSum, Scalar};

/// Default grid size used by the verification suite and the CLI.
pub const DEFAULT_GRID_SIZE: usize = 4096;
/// Hard ceiling for the doubling guard.
pub const MAX_GRID_SIZE: usize = 1 << 20;
/// Relative agreement between consecutive doublings that counts as converged.
pub const QUADRATURE_RTOL: f64 = 1e-12;

/// Checks that `n` is a power of two and at least 4.
pub fn validate_grid_size(n: usize) -> Result<()> {
    if n >= 4 && n.is_power_of_two() {
        Ok(())
    } else {
        Err(Error::InvalidGridSize { n })
    }
}

/// The n-th roots of unity in index order, `ω_j = exp(2πi j / n)`.
pub fn circle_grid<T: Scalar>(n: usize) -> Vec<Complex<T>> {
    let step = T::TAU() / real::<T>(n as f64);
    (0..n)
        .map(|j| Complex::from_polar(T::one(), step * real::<T>(j as f64)))
        .collect()
}

/// Samples of a boundary function on a uniform circle grid.
#[derive(Clone, Debug, PartialEq)]
pub struct GridFunction<T: Scalar> {
    samples: Vec<Complex<T>>,
}

/// Evaluates `f` at the n-th roots of unity.
pub fn sample_on_grid<T, F>(f: F, n: usize) -> Result<GridFunction<T>>
where
    T: Scalar,
    F: Fn(Complex<T>) -> Complex<T>,
{
    validate_grid_size(n)?;
    let samples: Vec<Complex<T>> = circle_grid(n).into_iter().map(f).collect();
    GridFunction::from_samples(samples)
}

impl<T: Scalar> GridFunction<T> {
    /// Wraps raw samples; the length must be a valid grid size and every
    /// sample finite.
    pub fn from_samples(samples: Vec<Complex<T>>) -> Result<Self> {
        validate_grid_size(samples.len())?;
        if !samples.iter().all(|s| s.re.is_finite() && s.im.is_finite()) {
            return Err(Error::NonFinite {
                context: "grid samples",
            });
        }
        Ok(Self { samples })
    }

    pub fn n(&self) -> usize {
        self.samples.len()
    }

    pub fn samples(&self) -> &[Complex<T>] {
        &self.samples
    }

    /// Pointwise map, preserving the grid.
    pub fn map<F>(&self, f: F) -> Self
    where
        F: Fn(Complex<T>) -> Complex<T>,
    {
        Self {
            samples: self.samples.iter().map(|&s| f(s)).collect(),
        }
    }

    pub(crate) fn from_samples_unchecked(samples: Vec<Complex<T>>) -> Self {
        debug_assert!(validate_grid_size(samples.len()).is_ok());
        Self { samples }
    }

    /// Mean of `|g|^p` over the grid (the p-th power of the p-norm, no root
    /// taken). `p = 2` and `p = 4` avoid `powf` entirely.
    pub fn pnorm_pow(&self, p: T) -> Result<T> {
        if !(p >= T::one() && p.is_finite()) {
            return Err(Error::InvalidParameter {
                what: format!("p-norm exponent must be finite and >= 1, got {p}"),
            });
        }
        let two = real::<T>(2.0);
        let four = real::<T>(4.0);
        let mut acc = CompensatedSum::new();
        if p == two {
            for &s in &self.samples {
                acc.add(s.norm_sqr());
            }
        } else if p == four {
            for &s in &self.samples {
                let m2 = s.norm_sqr();
                acc.add(m2 * m2);
            }
        } else {
            let half_p = p / two;
            for &s in &self.samples {
                acc.add(s.norm_sqr().powf(half_p));
            }
        }
        Ok(acc.value() / real::<T>(self.n() as f64))
    }

    /// The p-norm itself, `(mean |g|^p)^{1/p}`.
    pub fn pnorm(&self, p: T) -> Result<T> {
        let pow = self.pnorm_pow(p)?;
        let two = real::<T>(2.0);
        let four = real::<T>(4.0);
        if p == two {
            Ok(pow.sqrt())
        } else if p == four {
            Ok(pow.sqrt().sqrt())
        } else {
            Ok(pow.powf(p.recip()))
        }
    }

    /// L² pairing `(1/n) Σ_j f_j conj(g_j)` on a shared grid.
    pub fn inner_product(&self, other: &Self) -> Result<Complex<T>> {
        if self.n() != other.n() {
            return Err(Error::GridSizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let mut re = CompensatedSum::new();
        let mut im = CompensatedSum::new();
        for (&a, &b) in self.samples.iter().zip(&other.samples) {
            let term = a * b.conj();
            re.add(term.re);
            im.add(term.im);
        }
        let n = real::<T>(self.n() as f64);
        Ok(Complex::new(re.value() / n, im.value() / n))
    }
}

/// Discrete Fourier coefficients `c_k = (1/n) Σ_j g_j ω_j^{-k}` for
/// `kmin ≤ k ≤ kmax`. Exact (up to rounding) when the underlying function is
/// a trigonometric polynomial with all frequencies inside `(-n+|k|, n-|k|)`;
/// otherwise aliased tails fold in, so pick `n` comfortably above the
/// bandwidth of interest.
pub fn fourier_coefficients<T: Scalar>(
    g: &GridFunction<T>,
    kmin: i64,
    kmax: i64,
) -> Result<LaurentPoly<T>> {
    if kmin > kmax {
        return Err(Error::InvalidParameter {
            what: format!("empty frequency window [{kmin}, {kmax}]"),
        });
    }
    let n = g.n();
    let roots = circle_grid::<T>(n);
    let n_i64 = n as i64;
    let inv_n = real::<T>(n as f64).recip();
    let mut coeffs = Vec::with_capacity((kmax - kmin + 1) as usize);
    for k in kmin..=kmax {
        let mut re = CompensatedSum::new();
        let mut im = CompensatedSum::new();
        for (j, &s) in g.samples.iter().enumerate() {
            // ω_j^{-k} = ω_{(-jk) mod n}; indices stay well inside i64.
            let idx = (((j as i64) * (-k)) % n_i64 + n_i64) % n_i64;
            let term = s * roots[idx as usize];
            re.add(term.re);
            im.add(term.im);
        }
        coeffs.push(Complex::new(re.value() * inv_n, im.value() * inv_n));
    }
    LaurentPoly::new(kmin, coeffs)
}

/// Doubles the grid from `start_n` until two consecutive values of
/// `mean |f|^p` agree to [`QUADRATURE_RTOL`], then returns the refined value
/// and the grid size that produced it. Errors if [`MAX_GRID_SIZE`] is reached
/// without stabilizing.
pub fn converged_pnorm_pow<T, F>(f: F, p: T, start_n: usize) -> Result<(T, usize)>
where
    T: Scalar,
    F: Fn(Complex<T>) -> Complex<T>,
{
    validate_grid_size(start_n)?;
    let rtol = real::<T>(QUADRATURE_RTOL);
    let mut n = start_n;
    let mut prev = sample_on_grid(&f, n)?.pnorm_pow(p)?;
    while n < MAX_GRID_SIZE {
        n *= 2;
        let next = sample_on_grid(&f, n)?.pnorm_pow(p)?;
        let diff = (next - prev).abs();
        if diff <= rtol * next.abs().max(prev.abs()) {
            return Ok((next, n));
        }
        prev = next;
    }
    Err(Error::QuadratureNotConverged { max_n: MAX_GRID_SIZE })
}
