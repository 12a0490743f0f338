//! Finite Blaschke products, golden-ratio constants, and the extremal family
//! for the backward shift on H⁴.
//!
//! The extremal family is `f = μ·(I − √(1/(2φ)))` with `I` inner and
//! `I(0) = √(φ/2)`: these are exactly the functions on which the shift acts
//! with the largest possible H⁴ norm ratio, and the whole verification suite
//! revolves around measuring that.

use num_complex::Complex;
use rand::Rng;

use crate::error::{Error, Result};
use crate::sampling;
use crate::scalar::{real, to_f64, Scalar};
use crate::spectral::{circle_grid, GridFunction};

/// Zeros must sit at least this far inside the unit circle.
pub const ZERO_MARGIN: f64 = 1e-12;
/// The adjusted final modulus in [`make_inner_prescribed_origin`] must stay
/// below `1 −` this margin, or the draw is rejected and retried.
pub const ADJUSTED_MODULUS_MARGIN: f64 = 1e-9;
/// Retry budget for the prescribed-origin sampler.
pub const RESAMPLING_BUDGET: usize = 1000;

/// Finite Blaschke product `rotation · Π_j (a_j − z)/(1 − conj(a_j) z)`.
///
/// The factor convention makes a single factor with zero `a` take the value
/// `a` at the origin; all per-factor phases live in the single rotation.
#[derive(Clone, Debug, PartialEq)]
pub struct BlaschkeProduct<T: Scalar> {
    zeros: Vec<Complex<T>>,
    rotation: Complex<T>,
}

impl<T: Scalar> BlaschkeProduct<T> {
    /// Builds a product from its zeros and a rotation. Every zero must have
    /// modulus below `1 − 1e−12`; the rotation must be finite and nonzero and
    /// is normalized to exact working-precision modulus one.
    pub fn new(zeros: Vec<Complex<T>>, rotation: Complex<T>) -> Result<Self> {
        for z in &zeros {
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(Error::NonFinite {
                    context: "Blaschke zeros",
                });
            }
            let m = z.norm();
            if m >= T::one() - real::<T>(ZERO_MARGIN) {
                return Err(Error::ZeroOutsideDisc { modulus: to_f64(m) });
            }
        }
        let rot_norm = rotation.norm();
        if !rot_norm.is_finite() || rot_norm <= T::zero() {
            return Err(Error::InvalidRotation);
        }
        Ok(Self {
            zeros,
            rotation: rotation / rot_norm,
        })
    }

    /// The constant function 1 (empty product).
    pub fn identity() -> Self {
        Self {
            zeros: Vec::new(),
            rotation: Complex::new(T::one(), T::zero()),
        }
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    pub fn zeros(&self) -> &[Complex<T>] {
        &self.zeros
    }

    pub fn rotation(&self) -> Complex<T> {
        self.rotation
    }

    /// Evaluates the product at `z` in the closed unit disc.
    pub fn eval(&self, z: Complex<T>) -> Result<Complex<T>> {
        let m = z.norm();
        if !m.is_finite() || m > T::one() + real::<T>(1e-12) {
            return Err(Error::PointOutsideDisc { modulus: to_f64(m) });
        }
        let one = Complex::new(T::one(), T::zero());
        let mut acc = self.rotation;
        for &a in &self.zeros {
            acc = acc * (a - z) / (one - a.conj() * z);
        }
        Ok(acc)
    }

    /// Value at the origin: `rotation · Π a_j`.
    pub fn origin_value(&self) -> Complex<T> {
        let mut acc = self.rotation;
        for &a in &self.zeros {
            acc = acc * a;
        }
        acc
    }

    /// Largest deviation of the boundary modulus from 1 over `points`
    /// equispaced boundary points. Inner functions should pin this near zero.
    pub fn boundary_modulus_defect(&self, points: usize) -> T {
        let step = T::TAU() / real::<T>(points.max(1) as f64);
        let mut worst = T::zero();
        for j in 0..points.max(1) {
            let z = Complex::from_polar(T::one(), step * real::<T>(j as f64));
            let v = self.eval(z).expect("boundary point is in the closed disc");
            worst = worst.max((v.norm() - T::one()).abs());
        }
        worst
    }

    /// Boundary samples on the standard grid.
    pub fn sample(&self, n: usize) -> Result<GridFunction<T>> {
        crate::spectral::validate_grid_size(n)?;
        let samples: Result<Vec<Complex<T>>> =
            circle_grid(n).into_iter().map(|z| self.eval(z)).collect();
        GridFunction::from_samples(samples?)
    }
}

/// Builds a degree-`degree` Blaschke product whose origin value is exactly
/// the positive real `c`.
///
/// The first `degree − 1` zero moduli are drawn as `c^{t_j}` where the
/// exponents `t_j` are a seeded random partition of unity (each `t_j` within
/// ±20% of `1/degree`); the final zero is placed on the positive real axis
/// with modulus `c / Π |a_j|` — a one-dimensional correction that pins the
/// origin value exactly — and the rotation cancels the accumulated phase of
/// the sampled zeros. Splitting `c` multiplicatively keeps every modulus
/// near `c^{1/degree}`, well inside the disc, so the correction virtually
/// never needs the resampling fallback and boundary grids stay converged.
pub fn make_inner_prescribed_origin<T: Scalar>(
    c: T,
    degree: usize,
    seed: u64,
) -> Result<BlaschkeProduct<T>> {
    if !(c > T::zero() && c < T::one()) || !c.is_finite() {
        return Err(Error::InvalidOriginTarget { value: to_f64(c) });
    }
    if degree == 0 {
        return Err(Error::InvalidDegree { degree });
    }
    let mut rng = sampling::rng_stream(seed, 0);
    for _ in 0..RESAMPLING_BUDGET {
        let weights: Vec<f64> = (0..degree).map(|_| rng.random_range(0.8..1.2)).collect();
        let total: f64 = weights.iter().sum();

        let mut zeros: Vec<Complex<T>> = Vec::with_capacity(degree);
        let mut phase_sum = T::zero();
        let mut modulus_product = T::one();
        for &w in weights.iter().take(degree - 1) {
            let m = c.powf(real::<T>(w / total));
            let theta = real::<T>(rng.random_range(0.0..std::f64::consts::TAU));
            zeros.push(Complex::from_polar(m, theta));
            phase_sum += theta;
            modulus_product = modulus_product * m;
        }

        let last = c / modulus_product;
        if !(last > T::zero() && last < T::one() - real::<T>(ADJUSTED_MODULUS_MARGIN)) {
            continue;
        }
        zeros.push(Complex::new(last, T::zero()));
        let rotation = Complex::from_polar(T::one(), -phase_sum);
        return BlaschkeProduct::new(zeros, rotation);
    }
    Err(Error::SamplingBudget {
        attempts: RESAMPLING_BUDGET,
    })
}

/// Closed-form golden-ratio constants used throughout the suite.
///
/// All fields are derived from `phi` alone, so a deliberately wrong `phi`
/// (see [`PhiConstants::for_phi`]) propagates into every derived value —
/// handy as a negative control for the verification suite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhiConstants<T: Scalar> {
    /// Golden ratio `(1 + √5)/2`.
    pub phi: T,
    /// `φ^{1/4}`, the operator norm of the backward shift on H⁴.
    pub phi_fourth_root: T,
    /// `√(φ/2)`, the prescribed origin value of the extremal inner factor.
    pub i0: T,
    /// `√(1/(2φ))`, the constant subtracted from the inner factor.
    pub shift: T,
    /// `1 − φ²/4 = ‖Bf‖₄⁴` for the unit-scale extremal function.
    pub bf_norm4: T,
    /// `(1/φ)(1 − φ²/4) = ‖f‖₄⁴` for the unit-scale extremal function.
    pub f_norm4: T,
    /// `1/(3φ+1) = ‖Bf‖₂⁴`.
    pub bf_h2_sq_norm4: T,
    /// `(φ−1)/√(3φ+1) = f(0)²` after normalizing `‖Bf‖₂ = 1` … the limit x².
    pub f0_sq: T,
    /// `4φ/(3−φ) = μ⁴` for the normalized extremal representative.
    pub mu4: T,
}

impl<T: Scalar> PhiConstants<T> {
    /// Populates every field from an arbitrary `phi`. Only
    /// `phi = (1+√5)/2` makes the whole table mutually consistent.
    pub fn for_phi(phi: T) -> Self {
        let one = T::one();
        let two = real::<T>(2.0);
        let three = real::<T>(3.0);
        let four = real::<T>(4.0);
        let bf_norm4 = one - phi * phi / four;
        let three_phi_plus_one = three * phi + one;
        Self {
            phi,
            phi_fourth_root: phi.sqrt().sqrt(),
            i0: (phi / two).sqrt(),
            shift: (two * phi).recip().sqrt(),
            bf_norm4,
            f_norm4: bf_norm4 / phi,
            bf_h2_sq_norm4: three_phi_plus_one.recip(),
            f0_sq: (phi - one) / three_phi_plus_one.sqrt(),
            mu4: four * phi / (three - phi),
        }
    }
}

/// The golden-ratio constant table.
pub fn phi_constants<T: Scalar>() -> PhiConstants<T> {
    PhiConstants::for_phi((T::one() + real::<T>(5.0).sqrt()) / real::<T>(2.0))
}

/// A member of the extremal family `μ·(I − √(1/(2φ)))` with `I` a finite
/// Blaschke product taking the value `√(φ/2)` at the origin.
#[derive(Clone, Debug)]
pub struct ExtremalFunction<T: Scalar> {
    inner: BlaschkeProduct<T>,
    scale: Complex<T>,
}

impl<T: Scalar> ExtremalFunction<T> {
    /// Wraps an inner factor, checking `I(0) = √(φ/2)` to 1e−12.
    pub fn new(inner: BlaschkeProduct<T>, scale: Complex<T>) -> Result<Self> {
        let c = phi_constants::<T>();
        let got = inner.origin_value();
        let defect = (got - Complex::new(c.i0, T::zero())).norm();
        if defect > real::<T>(1e-12) {
            return Err(Error::OriginMismatch {
                got: to_f64(got.re),
                want: to_f64(c.i0),
            });
        }
        if !(scale.re.is_finite() && scale.im.is_finite()) || scale.norm() == T::zero() {
            return Err(Error::InvalidParameter {
                what: "extremal scale must be finite and nonzero".into(),
            });
        }
        Ok(Self { inner, scale })
    }

    /// The minimal member: single Blaschke factor with zero at `√(φ/2)`,
    /// unit scale.
    pub fn degree_one() -> Self {
        let c = phi_constants::<T>();
        let inner = BlaschkeProduct::new(
            vec![Complex::new(c.i0, T::zero())],
            Complex::new(T::one(), T::zero()),
        )
        .expect("golden origin value is well inside the disc");
        Self {
            inner,
            scale: Complex::new(T::one(), T::zero()),
        }
    }

    /// Seeded member with an inner factor of the given degree, unit scale.
    pub fn seeded(degree: usize, seed: u64) -> Result<Self> {
        let c = phi_constants::<T>();
        let inner = make_inner_prescribed_origin(c.i0, degree, seed)?;
        Self::new(inner, Complex::new(T::one(), T::zero()))
    }

    /// Same function with a different scale μ.
    pub fn with_scale(&self, scale: Complex<T>) -> Result<Self> {
        Self::new(self.inner.clone(), scale)
    }

    pub fn inner(&self) -> &BlaschkeProduct<T> {
        &self.inner
    }

    pub fn scale(&self) -> Complex<T> {
        self.scale
    }

    /// Value at the origin, `μ·(√(φ/2) − √(1/(2φ)))`.
    pub fn origin(&self) -> Complex<T> {
        let c = phi_constants::<T>();
        self.scale * (self.inner.origin_value() - Complex::new(c.shift, T::zero()))
    }

    /// Boundary samples `μ·(I(ω) − √(1/(2φ)))` together with the origin
    /// value (which grid-side backward shifts need).
    pub fn boundary_grid(&self, n: usize) -> Result<(GridFunction<T>, Complex<T>)> {
        let c = phi_constants::<T>();
        let shift = Complex::new(c.shift, T::zero());
        let inner_samples = self.inner.sample(n)?;
        let samples = inner_samples.map(|v| self.scale * (v - shift));
        Ok((samples, self.origin()))
    }
}

/// Boundary samples of an extremal function: free-function form of
/// [`ExtremalFunction::boundary_grid`].
pub fn extremal_function_grid<T: Scalar>(
    e: &ExtremalFunction<T>,
    n: usize,
) -> Result<(GridFunction<T>, Complex<T>)> {
    e.boundary_grid(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn factor_convention_examples() {
        let b = BlaschkeProduct::<f64>::identity();
        assert_eq!(b.eval(Complex::new(0.3, 0.2)).unwrap(), Complex::new(1.0, 0.0));

        let half = BlaschkeProduct::new(vec![Complex::new(0.5, 0.0)], Complex::new(1.0, 0.0))
            .unwrap();
        assert_relative_eq!(half.eval(Complex::new(0.0, 0.0)).unwrap().re, 0.5);
        // At z = 1 the factor is (0.5−1)/(1−0.5) = −1.
        let at_one = half.eval(Complex::new(1.0, 0.0)).unwrap();
        assert_relative_eq!(at_one.re, -1.0, max_relative = 1e-15);
        assert_relative_eq!(at_one.norm(), 1.0, max_relative = 1e-15);
    }

    #[test]
    fn origin_value_is_product_of_zeros() {
        let b = BlaschkeProduct::new(
            vec![Complex::new(0.5, 0.0), Complex::new(0.4, 0.0)],
            Complex::new(1.0, 0.0),
        )
        .unwrap();
        assert_relative_eq!(b.origin_value().re, 0.2, max_relative = 1e-15);
        assert_eq!(b.origin_value(), b.eval(Complex::new(0.0, 0.0)).unwrap());
        assert!(b.origin_value().norm() < 1.0);
    }

    #[test]
    fn rejects_boundary_zeros_and_outside_points() {
        let res = BlaschkeProduct::new(vec![Complex::new(1.0 - 1e-13, 0.0)], Complex::new(1.0, 0.0));
        assert!(res.is_err());
        let b = BlaschkeProduct::new(vec![Complex::new(0.5, 0.0)], Complex::new(1.0, 0.0)).unwrap();
        assert!(b.eval(Complex::new(1.1, 0.0)).is_err());
    }

    #[test]
    fn boundary_modulus_is_one() {
        let mut rng = sampling::rng_from(42);
        for _ in 0..10 {
            let b: BlaschkeProduct<f64> = sampling::random_blaschke(&mut rng, 5).unwrap();
            assert!(b.boundary_modulus_defect(4 * 5 * 8) <= 1e-12);
        }
    }

    #[test]
    fn prescribed_origin_hits_exactly() {
        // Degree 1 with c = 0.5 must give literally the zero 0.5, rotation 1.
        let b = make_inner_prescribed_origin::<f64>(0.5, 1, 0).unwrap();
        assert_eq!(b.zeros(), &[Complex::new(0.5, 0.0)]);
        assert_eq!(b.rotation(), Complex::new(1.0, 0.0));

        for (c, degree, seed) in [(0.3, 5, 7u64), (0.9, 6, 1), (0.05, 3, 2), (0.8994537, 6, 9)] {
            let b = make_inner_prescribed_origin::<f64>(c, degree, seed).unwrap();
            assert_eq!(b.degree(), degree);
            let v = b.origin_value();
            assert!((v - Complex::new(c, 0.0)).norm() <= 1e-14, "origin {v} for c={c}");
            assert!(b.boundary_modulus_defect(4 * degree * 8) <= 1e-12);
        }

        assert!(make_inner_prescribed_origin::<f64>(1.5, 2, 0).is_err());
        assert!(make_inner_prescribed_origin::<f64>(0.5, 0, 0).is_err());
    }

    #[test]
    fn constant_table_is_self_consistent() {
        let c = phi_constants::<f64>();
        assert_relative_eq!(c.phi, 1.618033988749895, max_relative = 1e-15);
        assert!((c.phi * c.phi - (c.phi + 1.0)).abs() <= 1e-15);
        assert!((c.i0 * c.shift - 0.5).abs() <= 1e-15);
        assert!((c.bf_norm4 / c.f_norm4 - c.phi).abs() <= 1e-15);
        assert_relative_eq!(c.phi_fourth_root, c.phi.powf(0.25), max_relative = 1e-15);
        assert_relative_eq!(c.bf_h2_sq_norm4, 0.17082039324993692, max_relative = 1e-14);
        // A corrupted phi breaks the defining identity.
        let bad = PhiConstants::<f64>::for_phi(1.6);
        assert!((bad.phi * bad.phi - (bad.phi + 1.0)).abs() > 1e-3);
    }

    #[test]
    fn extremal_members_report_consistent_origins() {
        let e = ExtremalFunction::<f64>::degree_one();
        let c = phi_constants::<f64>();
        assert_relative_eq!(e.origin().re, c.i0 - c.shift, max_relative = 1e-15);

        let seeded = ExtremalFunction::<f64>::seeded(5, 3).unwrap();
        assert_eq!(seeded.inner().degree(), 5);
        let (grid, origin) = seeded.boundary_grid(4096).unwrap();
        assert_eq!(grid.n(), 4096);
        assert!((origin - seeded.origin()).norm() == 0.0);

        // Wrong origin value is rejected.
        let plain = BlaschkeProduct::new(vec![Complex::new(0.5, 0.0)], Complex::new(1.0, 0.0))
            .unwrap();
        assert!(ExtremalFunction::new(plain, Complex::new(1.0, 0.0)).is_err());
    }
}
