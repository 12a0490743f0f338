//! End-to-end acceptance gate: one test per headline claim, each printing a
//! single PASS/FAIL line (visible under `--nocapture`). Sampled criteria
//! reuse one shared verification-suite run at seed 0, 100 trials, on an
//! 8192-point boundary grid.

use std::sync::OnceLock;

use hardylab::optimize::{
    finite_difference_gradient, gradient, maximize_ratio, truncated_extremal_bound, OperatorSpec,
    OptimizeConfig,
};
use hardylab::report::{CheckRecord, CheckValue};
use hardylab::sampling;
use hardylab::verify::{extremal_report, full_suite, maximize_gain_profile};
use num_complex::Complex;

const PHI: f64 = 1.618033988749895;

fn suite() -> &'static [CheckRecord] {
    static SUITE: OnceLock<Vec<CheckRecord>> = OnceLock::new();
    SUITE.get_or_init(|| full_suite::<f64>(0, 100, 8192).expect("suite runs"))
}

fn degree_one_report() -> &'static [CheckRecord] {
    static REPORT: OnceLock<Vec<CheckRecord>> = OnceLock::new();
    REPORT.get_or_init(|| extremal_report::<f64>(1, 0, 8192).expect("extremal report runs"))
}

fn find<'a>(checks: &'a [CheckRecord], name: &str) -> &'a CheckRecord {
    checks
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("missing check record '{name}'"))
}

fn real_value(rec: &CheckRecord) -> f64 {
    match rec.value {
        CheckValue::Real(x) => x,
        _ => panic!("check '{}' does not carry a real value", rec.name),
    }
}

fn complex_value(rec: &CheckRecord) -> Complex<f64> {
    match rec.value {
        CheckValue::Complex { re, im } => Complex::new(re, im),
        CheckValue::Real(x) => Complex::new(x, 0.0),
        CheckValue::None => panic!("check '{}' carries no value", rec.name),
    }
}

/// Prints the one-line verdict for a criterion and fails the test on FAIL.
fn criterion(name: &str, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("{verdict}  {name}: {detail}");
    assert!(pass, "{name}: {detail}");
}

#[test]
fn extremal_ratio_and_norms() {
    let report = degree_one_report();
    let checks = [
        ("measured_ratio", 1.618_033_988_7_f64, 1e-9),
        ("measured_quartic_norm", 0.213_525_491_6, 1e-9),
        ("measured_shifted_quartic_norm", 0.345_491_502_8, 1e-9),
        ("measured_h2_norm_sq", 0.309_016_994_4, 1e-10),
    ];
    let mut detail = String::new();
    let mut pass = true;
    for (name, reference, tol) in checks {
        let got = real_value(find(report, name));
        let err = (got - reference).abs();
        pass &= err <= tol;
        detail.push_str(&format!("{name}={got:.10} (|Δ|={err:.2e}, tol={tol:.0e})  "));
    }
    criterion("extremal ratio and norms", pass, detail.trim_end());
}

#[test]
fn backward_shift_of_inner_functions() {
    let rec = find(suite(), "norm_inner_identity");
    criterion(
        "quartic norm of shifted inner functions",
        rec.pass && rec.tol == 1e-10,
        &format!(
            "worst |‖BI‖₄⁴ − (1 − |I(0)|⁴)| = {:.3e} over 100 Blaschke products (tol 1e-10)",
            rec.residual
        ),
    );
}

#[test]
fn cubic_pairing_bound_suite() {
    let names = [
        ("cubic_bound_nonnegativity", 1e-10),
        ("cubic_bound_equality_shifted_inner", 1e-10),
        ("riesz_identity_random", 1e-12),
        ("tail_energy_identity_random", 1e-12),
    ];
    let mut detail = String::new();
    let mut pass = true;
    for (name, tol) in names {
        let rec = find(suite(), name);
        pass &= rec.pass && rec.tol == tol;
        detail.push_str(&format!("{name}: residual={:.3e} tol={tol:.0e}  ", rec.residual));
    }
    criterion("cubic pairing bound suite", pass, detail.trim_end());
}

#[test]
fn gain_profile_analysis() {
    let (r_star, f_max) = maximize_gain_profile::<f64>(1e-12).expect("maximizer runs");
    let loc_err = (r_star - 0.618_033_988_7).abs();
    let fix_err = (f_max - r_star).abs();
    let phi_err = (1.0 + f_max - PHI).abs();
    let identity = find(suite(), "moment_inequality_identity_random");
    let pass = loc_err <= 1e-10
        && fix_err <= 1e-12
        && phi_err <= 1e-10
        && identity.pass
        && identity.tol == 1e-12;
    criterion(
        "gain profile analysis",
        pass,
        &format!(
            "r*={r_star:.12} (|Δ|={loc_err:.2e}), |F(r*)−r*|={fix_err:.2e}, \
             |1+F(r*)−φ|={phi_err:.2e}, product/reduced identity residual={:.3e} over 1000 draws",
            identity.residual
        ),
    );
}

#[test]
fn truncated_witness_lower_bound() {
    let bound = truncated_extremal_bound::<f64>(128);
    let pass = (PHI - 1e-4..=PHI).contains(&bound);
    criterion(
        "truncated extremal witness at degree 128",
        pass,
        &format!("bound={bound:.12}, φ−bound={:.3e} (must lie in [0, 1e-4])", PHI - bound),
    );
}

#[test]
fn optimizer_rediscovers_golden_ratio() {
    let cfg = OptimizeConfig {
        degree: 128,
        ..OptimizeConfig::default()
    };
    let campaign = maximize_ratio::<f64>(&OperatorSpec::BackwardShift, &cfg).expect("campaign");
    let in_window = (PHI - 1e-3..=PHI + 1e-9).contains(&campaign.best_ratio);

    let degree_one = OptimizeConfig {
        degree: 1,
        ..OptimizeConfig::default()
    };
    let exact = maximize_ratio::<f64>(&OperatorSpec::BackwardShift, &degree_one).expect("campaign");
    let exact_err = (exact.best_ratio - 1.0).abs();

    criterion(
        "optimizer rediscovers the golden ratio",
        in_window && exact_err <= 1e-12,
        &format!(
            "degree-128 best_ratio={:.12} (φ−best={:.3e}, window [φ−1e-3, φ+1e-9]); \
             degree-1 best_ratio={:.15} (|Δ|={:.2e})",
            campaign.best_ratio,
            PHI - campaign.best_ratio,
            exact.best_ratio,
            exact_err
        ),
    );
}

#[test]
fn iterates_and_riesz_brackets() {
    let mut iterate_ratios = Vec::new();
    for n in 1..=6 {
        let cfg = OptimizeConfig {
            degree: 64,
            ..OptimizeConfig::default()
        };
        let res = maximize_ratio::<f64>(&OperatorSpec::IteratedBackwardShift { n }, &cfg)
            .expect("iterate campaign");
        iterate_ratios.push(res.best_ratio);
    }
    let iterates_monotone = iterate_ratios.windows(2).all(|w| w[1] >= w[0] - 1e-6);
    let roots: Vec<f64> = iterate_ratios.iter().map(|r| r.powf(0.25)).collect();
    let roots_in_band = roots
        .iter()
        .all(|&r| (1.1278 - 1e-3..=1.414_213_6 + 1e-9).contains(&r));

    let mut riesz_roots = Vec::new();
    for degree in [4usize, 8, 16, 32] {
        let cfg = OptimizeConfig {
            degree,
            ..OptimizeConfig::default()
        };
        let res =
            maximize_ratio::<f64>(&OperatorSpec::RieszProjection, &cfg).expect("riesz campaign");
        riesz_roots.push(res.best_ratio.powf(0.25));
    }
    let riesz_monotone = riesz_roots.windows(2).all(|w| w[1] >= w[0] - 1e-9);
    let riesz_bounded = riesz_roots.iter().all(|&r| r <= 2f64.sqrt() + 1e-9);

    criterion(
        "iterated shifts and Riesz projection brackets",
        iterates_monotone && roots_in_band && riesz_monotone && riesz_bounded,
        &format!(
            "iterate fourth roots {:?} (nondecreasing within 1e-6, band [1.1268, 1.4142136]); \
             riesz fourth roots {:?} (nondecreasing, ≤ √2 + 1e-9)",
            roots.iter().map(|r| (r * 1e7).round() / 1e7).collect::<Vec<_>>(),
            riesz_roots.iter().map(|r| (r * 1e7).round() / 1e7).collect::<Vec<_>>()
        ),
    );
}

#[test]
fn gradient_consistency() {
    let specs = [
        OperatorSpec::BackwardShift,
        OperatorSpec::IteratedBackwardShift { n: 3 },
        OperatorSpec::RieszProjection,
    ];
    let mut worst = 0f64;
    for (which, spec) in specs.iter().enumerate() {
        let mut rng = sampling::rng_stream(0xACCE97, which as u64);
        for i in 0..100 {
            let dim = match spec {
                OperatorSpec::RieszProjection => 2 * (1 + i % 8) + 1,
                _ => 4 + i % 12,
            };
            let mut point: Vec<Complex<f64>> = (0..dim)
                .map(|_| sampling::complex_gaussian::<f64, _>(&mut rng))
                .collect();
            let norm = point.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            for c in &mut point {
                *c /= norm;
            }
            let analytic = gradient(&point, spec).expect("gradient");
            let numeric = finite_difference_gradient(&point, spec).expect("fd gradient");
            let scale = analytic.iter().fold(1f64, |m, g| m.max(g.abs()));
            let err = analytic
                .iter()
                .zip(&numeric)
                .fold(0f64, |m, (a, b)| m.max((a - b).abs()));
            worst = worst.max(err / scale);
        }
    }
    criterion(
        "analytic gradients match finite differences",
        worst <= 1e-6,
        &format!("worst relative error {worst:.3e} over 100 points × 3 operator kinds (tol 1e-6)"),
    );
}

#[test]
fn cross_backend_agreement() {
    let rec = find(suite(), "cross_backend_quartic_norm");
    criterion(
        "coefficient and grid backends agree",
        rec.pass && rec.tol == 1e-11,
        &format!(
            "worst relative quartic-norm disagreement {:.3e} over 100 polynomials of degree ≤ 32 \
             on 256-point grids (tol 1e-11)",
            rec.residual
        ),
    );
}

#[test]
fn structural_moments_of_the_extremal_function() {
    let report = degree_one_report();
    let cubic = find(report, "measured_cubic_moment");
    let second = find(report, "measured_second_moment");
    let second_value = complex_value(second);
    let phi = PHI;
    let closed_form = -(phi / 2.0).sqrt() * (1.0 - phi / 2.0);
    let second_err = (second_value.re - closed_form).abs();
    let pass = cubic.pass
        && cubic.tol == 1e-10
        && second_err <= 1e-7
        && second_value.im.abs() <= 1e-10;
    criterion(
        "structural moments of the extremal function",
        pass,
        &format!(
            "|cubic moment|={:.3e} (tol 1e-10); second moment={:.10} vs closed form {closed_form:.10} \
             (|Δ|={second_err:.2e}, tol 1e-7), |imag|={:.2e} (tol 1e-10)",
            cubic.residual,
            second_value.re,
            second_value.im.abs()
        ),
    );
}

#[test]
fn h2_energy_contraction() {
    let mut rng = sampling::rng_stream(0xACCE97, 11);
    let mut worst = 0f64;
    for i in 0..1000 {
        let f = sampling::gaussian_poly::<f64, _>(&mut rng, 1 + i % 20);
        worst = worst.max(hardylab::verify::h2_contraction_residual(&f));
    }
    criterion(
        "H² energy contraction",
        worst <= 1e-15,
        &format!(
            "worst relative |‖Bf‖₂² − (‖f‖₂² − |f(0)|²)| = {worst:.3e} over 1000 polynomials \
             (tol 1e-15, bit-level in place of exact equality)"
        ),
    );
}
