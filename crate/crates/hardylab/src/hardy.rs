//! Coefficient-side representations: analytic polynomials (power series
//! truncations in H²) and Laurent polynomials on the circle.
//!
//! Norms are returned as *powers* (`h2_norm_sq`, `h4_norm4`) so callers take
//! roots exactly once; this avoids silent precision loss from root/power
//! round-trips in derived identities.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{real, CompensatedSum, Scalar};

/// Tail coefficients at or below this modulus (componentwise) are trimmed by
/// the constructors. Keeps representations canonical without ever touching a
/// coefficient that could matter at working precision.
pub const TRIM_THRESHOLD: f64 = 1e-300;

fn is_negligible<T: Scalar>(c: Complex<T>) -> bool {
    let t = real::<T>(TRIM_THRESHOLD);
    c.re.abs() <= t && c.im.abs() <= t
}

fn all_finite<T: Scalar>(coeffs: &[Complex<T>]) -> bool {
    coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite())
}

/// Analytic polynomial `a_0 + a_1 z + … + a_d z^d`, the finite elements of H².
///
/// The zero polynomial is the empty coefficient vector; constructors trim
/// negligible trailing coefficients so representations stay canonical.
#[derive(Clone, Debug, PartialEq)]
pub struct AnalyticPoly<T: Scalar> {
    coeffs: Vec<Complex<T>>,
}

impl<T: Scalar> AnalyticPoly<T> {
    /// Builds a polynomial from coefficients in ascending degree order.
    /// Rejects non-finite coefficients and trims the negligible tail.
    pub fn new(mut coeffs: Vec<Complex<T>>) -> Result<Self> {
        if !all_finite(&coeffs) {
            return Err(Error::NonFinite {
                context: "polynomial coefficients",
            });
        }
        while coeffs.last().is_some_and(|&c| is_negligible(c)) {
            coeffs.pop();
        }
        Ok(Self { coeffs })
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// Polynomial with the given real coefficients.
    pub fn from_real(coeffs: &[T]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&x| Complex::new(x, T::zero())).collect())
    }

    /// The monomial `c · z^k`.
    pub fn monomial(k: usize, c: Complex<T>) -> Result<Self> {
        let mut coeffs = vec![Complex::new(T::zero(), T::zero()); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    /// Coefficient of `z^k`; zero beyond the stored range.
    pub fn coeff(&self, k: usize) -> Complex<T> {
        self.coeffs
            .get(k)
            .copied()
            .unwrap_or_else(|| Complex::new(T::zero(), T::zero()))
    }

    /// Degree of the trimmed polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation at a point of the closed disc (or anywhere, really —
    /// polynomials are entire; the name just records intended use).
    pub fn eval(&self, z: Complex<T>) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Pointwise scaling by a complex factor.
    pub fn scaled(&self, factor: Complex<T>) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&c| c * factor).collect(),
        }
    }

    /// Coefficientwise sum.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + other.coeff(k));
        }
        while coeffs.last().is_some_and(|&c| is_negligible(c)) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Squared H² norm `Σ |a_k|²` (Parseval), compensated summation in
    /// ascending index order.
    pub fn h2_norm_sq(&self) -> T {
        let mut acc = CompensatedSum::new();
        for &c in &self.coeffs {
            acc.add(c.norm_sqr());
        }
        acc.value()
    }

    /// Coefficient convolution, i.e. the product of the two polynomials.
    pub fn multiply(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut coeffs = vec![Complex::new(T::zero(), T::zero()); n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        while coeffs.last().is_some_and(|&c| is_negligible(c)) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn square(&self) -> Self {
        self.multiply(self)
    }

    /// Fourth power of the H⁴ norm, computed as `‖f²‖₂²`. This is *defined*
    /// as the composition of `multiply` and `h2_norm_sq`, so the two routes
    /// agree bitwise.
    pub fn h4_norm4(&self) -> T {
        self.square().h2_norm_sq()
    }

    /// H² pairing `⟨f, g⟩ = Σ a_k conj(b_k)`.
    pub fn inner_product(&self, other: &Self) -> Complex<T> {
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut re = CompensatedSum::new();
        let mut im = CompensatedSum::new();
        for k in 0..n {
            let term = self.coeffs[k] * other.coeffs[k].conj();
            re.add(term.re);
            im.add(term.im);
        }
        Complex::new(re.value(), im.value())
    }

    /// Autocorrelation `b_k = Σ_j a_{j+k} conj(a_j)`, the Fourier expansion
    /// of the boundary modulus squared `|f|²`. Negative indices are filled as
    /// `b_{-k} = conj(b_k)`, so Hermitian symmetry holds bitwise and `b_0`
    /// (the squared H² norm) has exactly zero imaginary part.
    pub fn autocorrelation(&self) -> LaurentPoly<T> {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let d = self.coeffs.len() - 1;
        let mut coeffs = vec![Complex::new(T::zero(), T::zero()); 2 * d + 1];
        for k in 0..=d {
            let mut re = CompensatedSum::new();
            let mut im = CompensatedSum::new();
            for j in 0..=(d - k) {
                let term = self.coeffs[j + k] * self.coeffs[j].conj();
                re.add(term.re);
                im.add(term.im);
            }
            let b = Complex::new(re.value(), im.value());
            coeffs[d + k] = b;
            coeffs[d - k] = b.conj();
        }
        LaurentPoly::from_parts(-(d as i64), coeffs)
    }
}

/// Laurent polynomial `Σ_{k=kmin}^{kmax} b_k z^k` on the unit circle.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly<T: Scalar> {
    kmin: i64,
    coeffs: Vec<Complex<T>>,
}

impl<T: Scalar> LaurentPoly<T> {
    /// Builds from the lowest frequency and coefficients in ascending order.
    /// Rejects non-finite input and trims negligible coefficients from both
    /// ends (adjusting `kmin`).
    pub fn new(kmin: i64, coeffs: Vec<Complex<T>>) -> Result<Self> {
        if !all_finite(&coeffs) {
            return Err(Error::NonFinite {
                context: "Laurent coefficients",
            });
        }
        Ok(Self::from_parts(kmin, coeffs))
    }

    pub(crate) fn from_parts(mut kmin: i64, mut coeffs: Vec<Complex<T>>) -> Self {
        while coeffs.last().is_some_and(|&c| is_negligible(c)) {
            coeffs.pop();
        }
        let leading = coeffs.iter().take_while(|&&c| is_negligible(c)).count();
        if leading > 0 {
            coeffs.drain(..leading);
            kmin += leading as i64;
        }
        if coeffs.is_empty() {
            kmin = 0;
        }
        Self { kmin, coeffs }
    }

    pub fn zero() -> Self {
        Self {
            kmin: 0,
            coeffs: Vec::new(),
        }
    }

    /// Frequency support as `(kmin, kmax)`; `None` when identically zero.
    pub fn support(&self) -> Option<(i64, i64)> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some((self.kmin, self.kmin + self.coeffs.len() as i64 - 1))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `z^k`; zero outside the stored support.
    pub fn coeff(&self, k: i64) -> Complex<T> {
        if k < self.kmin {
            return Complex::new(T::zero(), T::zero());
        }
        self.coeffs
            .get((k - self.kmin) as usize)
            .copied()
            .unwrap_or_else(|| Complex::new(T::zero(), T::zero()))
    }

    /// Coefficients in ascending frequency order starting at `kmin`.
    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    /// Evaluation at a point on the circle (or any nonzero point).
    pub fn eval(&self, z: Complex<T>) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc * z.powi(self.kmin as i32)
    }

    /// Energy in the strictly positive frequencies: `Σ_{k ≥ 1} |b_k|²`,
    /// compensated summation in ascending frequency order.
    pub fn tail_energy(&self) -> T {
        let mut acc = CompensatedSum::new();
        if let Some((_, kmax)) = self.support() {
            let mut k = 1.max(self.kmin);
            while k <= kmax {
                acc.add(self.coeff(k).norm_sqr());
                k += 1;
            }
        }
        acc.value()
    }

    /// Largest deviation from Hermitian symmetry, `max_k |b_{-k} - conj(b_k)|`.
    /// Zero exactly when the polynomial is real on the circle.
    pub fn hermitian_defect(&self) -> T {
        let Some((kmin, kmax)) = self.support() else {
            return T::zero();
        };
        let bound = kmax.abs().max(kmin.abs());
        let mut worst = T::zero();
        for k in 0..=bound {
            let defect = (self.coeff(-k) - self.coeff(k).conj()).norm();
            worst = worst.max(defect);
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn constructor_trims_tail_and_rejects_nan() {
        let p = AnalyticPoly::new(vec![c(1.0, 0.0), c(0.0, 0.0), c(1e-301, -1e-310)]).unwrap();
        assert_eq!(p.degree(), None.or(Some(0)));
        assert_eq!(p.coeffs().len(), 1);
        assert!(AnalyticPoly::new(vec![c(f64::NAN, 0.0)]).is_err());

        let z = AnalyticPoly::<f64>::new(vec![c(0.0, 0.0); 3]).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn quartic_norm_of_one_plus_z() {
        // (1+z)² = 1 + 2z + z², so ‖1+z‖₄⁴ = 1 + 4 + 1 = 6 exactly.
        let f = AnalyticPoly::from_real(&[1.0, 1.0]).unwrap();
        assert_eq!(f.h2_norm_sq(), 2.0);
        assert_eq!(f.h4_norm4(), 6.0);
        assert_eq!(f.h4_norm4(), f.square().h2_norm_sq());

        let sq = f.square();
        assert_eq!(sq.coeffs(), &[c(1.0, 0.0), c(2.0, 0.0), c(1.0, 0.0)]);
    }

    #[test]
    fn autocorrelation_of_one_plus_z() {
        // |1+z|² on the circle is z̄ + 2 + z.
        let f = AnalyticPoly::from_real(&[1.0, 1.0]).unwrap();
        let b = f.autocorrelation();
        assert_eq!(b.support(), Some((-1, 1)));
        assert_eq!(b.coeff(-1), c(1.0, 0.0));
        assert_eq!(b.coeff(0), c(2.0, 0.0));
        assert_eq!(b.coeff(1), c(1.0, 0.0));
        assert_eq!(b.tail_energy(), 1.0);
        assert_eq!(b.hermitian_defect(), 0.0);
    }

    #[test]
    fn tail_energy_matches_norm_combination() {
        // For any f: Σ_{k≥1} |b_k|² = (‖f‖₄⁴ − ‖f‖₂⁴) / 2, since
        // ‖f‖₄⁴ = Σ_k |b_k|² = b_0² + 2·Σ_{k≥1}|b_k|².
        let f = AnalyticPoly::new(vec![c(0.3, -0.4), c(1.0, 0.25), c(-0.7, 0.1)]).unwrap();
        let b = f.autocorrelation();
        let h2 = f.h2_norm_sq();
        let lhs = b.tail_energy();
        let rhs = (f.h4_norm4() - h2 * h2) / 2.0;
        assert_relative_eq!(lhs, rhs, max_relative = 1e-14);
    }

    #[test]
    fn autocorrelation_center_is_exactly_real() {
        let f = AnalyticPoly::new(vec![c(0.1, 0.9), c(-0.5, 0.4), c(0.2, -0.3)]).unwrap();
        let b = f.autocorrelation();
        assert_eq!(b.coeff(0).im, 0.0);
        assert_eq!(b.coeff(0).re, f.h2_norm_sq());
    }

    #[test]
    fn inner_product_against_monomials_reads_coefficients() {
        let f = AnalyticPoly::new(vec![c(0.5, 0.5), c(-1.0, 2.0)]).unwrap();
        let e1 = AnalyticPoly::monomial(1, c(1.0, 0.0)).unwrap();
        assert_eq!(f.inner_product(&e1), c(-1.0, 2.0));
        assert_relative_eq!(
            f.inner_product(&f).re,
            f.h2_norm_sq(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn laurent_trims_both_ends() {
        let b = LaurentPoly::new(-2, vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(b.support(), Some((-1, -1)));
        assert_eq!(b.coeff(-1), c(1.0, 0.0));
        assert_eq!(b.coeff(5), c(0.0, 0.0));
        assert!(LaurentPoly::<f64>::new(3, vec![c(0.0, 0.0)]).unwrap().is_zero());
    }

    #[test]
    fn evaluation_agrees_between_representations() {
        let f = AnalyticPoly::new(vec![c(1.0, 0.0), c(0.0, 1.0), c(-0.5, 0.0)]).unwrap();
        let z = Complex::from_polar(1.0, 0.7);
        let direct = f.coeff(0) + f.coeff(1) * z + f.coeff(2) * z * z;
        assert_relative_eq!((f.eval(z) - direct).norm(), 0.0, epsilon = 1e-15);

        let b = f.autocorrelation();
        let on_circle = b.eval(z);
        assert_relative_eq!(on_circle.re, f.eval(z).norm_sqr(), max_relative = 1e-13);
        assert!(on_circle.im.abs() < 1e-14);
    }
}
