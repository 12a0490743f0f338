//! Check records: the common currency between the verification suite, the
//! optimizer campaigns and the CLI.

use serde::ser::{Serialize, Serializer};

/// A measured value in a report: real, complex, or absent.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CheckValue {
    Real(f64),
    Complex { re: f64, im: f64 },
    None,
}

impl Serialize for CheckValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match *self {
            CheckValue::Real(x) => serializer.serialize_f64(x),
            CheckValue::Complex { re, im } => [re, im].serialize(serializer),
            CheckValue::None => serializer.serialize_str("none"),
        }
    }
}

impl From<f64> for CheckValue {
    fn from(x: f64) -> Self {
        CheckValue::Real(x)
    }
}

impl From<num_complex::Complex<f64>> for CheckValue {
    fn from(z: num_complex::Complex<f64>) -> Self {
        CheckValue::Complex { re: z.re, im: z.im }
    }
}

/// One named check: a measured value, what it should be, how far off it is,
/// and the tolerance that judges it. `pass` is always `residual ≤ tol`
/// (so a NaN residual fails).
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub value: CheckValue,
    pub expected: CheckValue,
    pub residual: f64,
    pub tol: f64,
    pub pass: bool,
}

impl CheckRecord {
    pub fn new(
        name: impl Into<String>,
        value: impl Into<CheckValue>,
        expected: impl Into<CheckValue>,
        residual: f64,
        tol: f64,
    ) -> Self {
        Self {
            name: name.into(),
            value: value.into(),
            expected: expected.into(),
            residual,
            tol,
            pass: residual <= tol,
        }
    }

    /// Records a check that could not run (construction failure etc.): the
    /// residual is NaN, which never passes.
    pub fn failed(name: impl Into<String>, tol: f64) -> Self {
        Self {
            name: name.into(),
            value: CheckValue::None,
            expected: CheckValue::None,
            residual: f64::NAN,
            tol,
            pass: false,
        }
    }

    /// One human-readable line, 7 significant digits.
    pub fn human_line(&self) -> String {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        format!(
            "{verdict}  {name:<42} value={value} expected={expected} residual={residual:.6e} tol={tol:.1e}",
            name = self.name,
            value = render_value(&self.value),
            expected = render_value(&self.expected),
            residual = self.residual,
            tol = self.tol,
        )
    }

    /// Copy with every numeric field rounded to 15 significant digits, the
    /// machine-output precision contract.
    pub fn rounded_for_machine(&self) -> Self {
        let round_value = |v: &CheckValue| match *v {
            CheckValue::Real(x) => CheckValue::Real(round_sig(x, 15)),
            CheckValue::Complex { re, im } => CheckValue::Complex {
                re: round_sig(re, 15),
                im: round_sig(im, 15),
            },
            CheckValue::None => CheckValue::None,
        };
        Self {
            name: self.name.clone(),
            value: round_value(&self.value),
            expected: round_value(&self.expected),
            residual: round_sig(self.residual, 15),
            tol: self.tol,
            pass: self.pass,
        }
    }
}

fn render_value(v: &CheckValue) -> String {
    match *v {
        CheckValue::Real(x) => format!("{x:.6e}"),
        CheckValue::Complex { re, im } => format!("{re:.6e}{im:+.6e}i"),
        CheckValue::None => "none".to_string(),
    }
}

/// Rounds to `digits` significant decimal digits (no-op for zero and
/// non-finite values).
pub fn round_sig(x: f64, digits: i32) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let magnitude = x.abs().log10().floor() as i32;
    let shift = digits - 1 - magnitude;
    let factor = 10f64.powi(shift);
    (x * factor).round() / factor
}
