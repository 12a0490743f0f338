//! Seeded random inputs for the verification suite and the optimizer.
//!
//! Every draw happens in `f64` and is then converted to the working scalar,
//! so a given seed produces the same sample sequence in every lane. The
//! generator is ChaCha8 with explicit streams: `(seed, stream)` pairs give
//! independent, schedule-free substreams for parallel work.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::Result;
use crate::hardy::AnalyticPoly;
use crate::inner::BlaschkeProduct;
use crate::scalar::{real, Scalar};

/// Root generator for a seed (stream 0).
pub fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent substream for parallel or per-case use.
pub fn rng_stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Standard complex Gaussian: real and imaginary parts are independent
/// standard normals.
pub fn complex_gaussian<T: Scalar, R: Rng>(rng: &mut R) -> Complex<T> {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex::new(real::<T>(re), real::<T>(im))
}

/// Complex number of modulus one with uniform phase.
pub fn random_unimodular<T: Scalar, R: Rng>(rng: &mut R) -> Complex<T> {
    let theta = rng.random_range(0.0..std::f64::consts::TAU);
    Complex::from_polar(T::one(), real::<T>(theta))
}

/// Polynomial of exact degree `degree` with independent standard complex
/// Gaussian coefficients (the last one resampled away from zero, so the
/// degree is what it says).
pub fn gaussian_poly<T: Scalar, R: Rng>(rng: &mut R, degree: usize) -> AnalyticPoly<T> {
    let mut coeffs: Vec<Complex<T>> = (0..=degree).map(|_| complex_gaussian(rng)).collect();
    while coeffs[degree].norm() < real::<T>(1e-6) {
        coeffs[degree] = complex_gaussian(rng);
    }
    AnalyticPoly::new(coeffs).expect("gaussian coefficients are finite")
}

/// Blaschke product with `degree` zeros: moduli uniform in (0.1, 0.9),
/// phases uniform, rotation a uniform unimodular. The modulus cap keeps
/// every pole at radius ≥ 1/0.9 ≈ 1.11, so boundary grids converge fast.
pub fn random_blaschke<T: Scalar, R: Rng>(rng: &mut R, degree: usize) -> Result<BlaschkeProduct<T>> {
    let zeros = (0..degree)
        .map(|_| {
            let m = rng.random_range(0.1..0.9);
            let theta = rng.random_range(0.0..std::f64::consts::TAU);
            Complex::from_polar(real::<T>(m), real::<T>(theta))
        })
        .collect();
    BlaschkeProduct::new(zeros, random_unimodular(rng))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_independent() {
        let a: Complex<f64> = complex_gaussian(&mut rng_stream(7, 3));
        let b: Complex<f64> = complex_gaussian(&mut rng_stream(7, 3));
        let c: Complex<f64> = complex_gaussian(&mut rng_stream(7, 4));
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn lanes_share_the_draw_sequence() {
        let a32: Complex<f32> = complex_gaussian(&mut rng_from(11));
        let a64: Complex<f64> = complex_gaussian(&mut rng_from(11));
        assert_eq!(a32.re, a64.re as f32);
        assert_eq!(a32.im, a64.im as f32);
    }

    #[test]
    fn random_blaschke_respects_the_modulus_law() {
        let mut rng = rng_from(5);
        for _ in 0..20 {
            let b: BlaschkeProduct<f64> = random_blaschke(&mut rng, 6).unwrap();
            for z in b.zeros() {
                let m = z.norm();
                assert!((0.1..0.9).contains(&m), "modulus {m} outside law");
            }
            assert!((b.rotation().norm() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn gaussian_poly_has_requested_degree() {
        let mut rng = rng_from(9);
        for d in [0usize, 1, 5, 20] {
            let p: AnalyticPoly<f64> = gaussian_poly(&mut rng, d);
            assert_eq!(p.degree(), Some(d));
        }
    }
}
