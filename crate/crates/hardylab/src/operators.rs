//! Shift operators and the Riesz projection, on both representations.
//!
//! Coefficient actions are pure index bookkeeping, so they are exact: the
//! backward shift drops the constant term and shifts everything down, its
//! iterates drop a prefix, the forward shift prepends a zero, and the Riesz
//! projection keeps the nonnegative frequencies of a Laurent expansion.

use num_complex::Complex;

use crate::hardy::{AnalyticPoly, LaurentPoly};
use crate::scalar::Scalar;
use crate::spectral::GridFunction;

/// Backward shift `Bf = (f - f(0)) / z`.
pub fn backward_shift<T: Scalar>(f: &AnalyticPoly<T>) -> AnalyticPoly<T> {
    iterate_backward_shift(f, 1)
}

/// `n`-fold backward shift: drops the first `n` coefficients. `n = 0` is the
/// identity.
pub fn iterate_backward_shift<T: Scalar>(f: &AnalyticPoly<T>, n: usize) -> AnalyticPoly<T> {
    let coeffs = f.coeffs();
    if n >= coeffs.len() {
        return AnalyticPoly::zero();
    }
    AnalyticPoly::new(coeffs[n..].to_vec()).expect("shifted coefficients stay finite")
}

/// Forward shift `Sf = z·f`.
pub fn forward_shift<T: Scalar>(f: &AnalyticPoly<T>) -> AnalyticPoly<T> {
    if f.is_zero() {
        return AnalyticPoly::zero();
    }
    let mut coeffs = Vec::with_capacity(f.coeffs().len() + 1);
    coeffs.push(Complex::new(T::zero(), T::zero()));
    coeffs.extend_from_slice(f.coeffs());
    AnalyticPoly::new(coeffs).expect("shifted coefficients stay finite")
}

/// Backward shift on boundary samples: `(g(ω) - f0) · ω̄` pointwise, where
/// `f0` is the value of the underlying analytic function at the origin.
/// On the circle `1/ω = ω̄`, so this needs no division.
pub fn backward_shift_grid<T: Scalar>(g: &GridFunction<T>, f0: Complex<T>) -> GridFunction<T> {
    let omega = crate::spectral::circle_grid::<T>(g.n());
    let samples = g
        .samples()
        .iter()
        .zip(&omega)
        .map(|(&s, &w)| (s - f0) * w.conj())
        .collect();
    GridFunction::from_samples_unchecked(samples)
}

/// Riesz projection: keeps the frequencies `k ≥ 0` of a Laurent polynomial,
/// bitwise, as an analytic polynomial.
pub fn riesz_projection<T: Scalar>(b: &LaurentPoly<T>) -> AnalyticPoly<T> {
    let Some((kmin, kmax)) = b.support() else {
        return AnalyticPoly::zero();
    };
    if kmax < 0 {
        return AnalyticPoly::zero();
    }
    let lo = kmin.max(0);
    let mut coeffs = Vec::with_capacity((kmax - lo + 1) as usize + lo as usize);
    for k in 0..=kmax {
        coeffs.push(b.coeff(k));
    }
    AnalyticPoly::new(coeffs).expect("projected coefficients stay finite")
}

/// Multiplication by `z̄` on the circle: shifts every frequency down by one.
pub fn multiply_by_conj_z<T: Scalar>(b: &LaurentPoly<T>) -> LaurentPoly<T> {
    let Some((kmin, _)) = b.support() else {
        return LaurentPoly::zero();
    };
    LaurentPoly::new(kmin - 1, b.coeffs().to_vec()).expect("shifted coefficients stay finite")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::sample_on_grid;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn backward_shift_drops_and_shifts() {
        let f = AnalyticPoly::new(vec![c(3.0, 1.0), c(2.0, 0.0), c(0.0, -1.0)]).unwrap();
        let bf = backward_shift(&f);
        assert_eq!(bf.coeffs(), &[c(2.0, 0.0), c(0.0, -1.0)]);
        assert!(backward_shift(&backward_shift(&bf)).is_zero());
    }

    #[test]
    fn backward_inverts_forward_exactly() {
        let f = AnalyticPoly::new(vec![c(0.1, 0.2), c(-0.3, 0.4), c(0.5, -0.6)]).unwrap();
        assert_eq!(backward_shift(&forward_shift(&f)), f);
        // The other order subtracts the constant term.
        let fb = forward_shift(&backward_shift(&f));
        assert_eq!(fb.coeff(0), c(0.0, 0.0));
        assert_eq!(fb.coeff(1), f.coeff(1));
        assert_eq!(fb.coeff(2), f.coeff(2));
    }

    #[test]
    fn iteration_is_repeated_single_shift() {
        let f = AnalyticPoly::new((0..8).map(|k| c(k as f64 + 1.0, -(k as f64))).collect())
            .unwrap();
        let mut stepwise = f.clone();
        for _ in 0..3 {
            stepwise = backward_shift(&stepwise);
        }
        assert_eq!(iterate_backward_shift(&f, 3), stepwise);
        assert_eq!(iterate_backward_shift(&f, 0), f);
        assert!(iterate_backward_shift(&f, 8).is_zero());
    }

    #[test]
    fn grid_shift_matches_coefficient_shift() {
        let f = AnalyticPoly::new(vec![c(0.7, -0.1), c(0.2, 0.5), c(-0.4, 0.3)]).unwrap();
        let n = 16;
        let g = sample_on_grid(|z| f.eval(z), n).unwrap();
        let shifted = backward_shift_grid(&g, f.coeff(0));
        let bf = backward_shift(&f);
        let expected = sample_on_grid(|z| bf.eval(z), n).unwrap();
        for (a, b) in shifted.samples().iter().zip(expected.samples()) {
            assert_relative_eq!((a - b).norm(), 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn riesz_keeps_nonnegative_frequencies() {
        // |1+z|² = z̄ + 2 + z, so P₊ gives 2 + z.
        let f = AnalyticPoly::from_real(&[1.0, 1.0]).unwrap();
        let b = f.autocorrelation();
        let p = riesz_projection(&b);
        assert_eq!(p.coeffs(), &[c(2.0, 0.0), c(1.0, 0.0)]);

        // z̄·|1+z|² = z̄² + 2z̄ + 1 projects to the constant 1, which matches
        // ⟨f², Bf⟩ = 1 for f = 1+z.
        let shifted = multiply_by_conj_z(&b);
        assert_eq!(shifted.support(), Some((-2, 0)));
        let proj = riesz_projection(&shifted);
        assert_eq!(proj.coeffs(), &[c(1.0, 0.0)]);
        let bf = backward_shift(&f);
        assert_eq!(f.square().inner_product(&bf), c(1.0, 0.0));
    }

    #[test]
    fn riesz_of_purely_negative_part_is_zero() {
        let b = LaurentPoly::new(-3, vec![c(1.0, 0.0), c(0.0, 2.0)]).unwrap();
        assert!(riesz_projection(&b).is_zero());
    }

    #[test]
    fn projection_preserves_tail_bitwise() {
        // P₊(z̄·|f|²) has squared norm exactly equal to the positive-frequency
        // energy of |f|²: the coefficients are the same floats.
        let f = AnalyticPoly::new(vec![c(0.3, -0.4), c(1.0, 0.25), c(-0.7, 0.1), c(0.05, 0.9)])
            .unwrap();
        let b = f.autocorrelation();
        let projected = riesz_projection(&multiply_by_conj_z(&b));
        assert_eq!(projected.h2_norm_sq(), b.tail_energy());
    }
}
