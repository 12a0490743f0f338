//! Command-line driver: verification suite, operator-norm campaigns,
//! extremal-family reports and degree sweeps.
//!
//! Exit codes are a stable contract: 0 every check passed, 1 a check failed
//! (or a campaign exceeded its soundness ceiling, or a construction failed),
//! 2 usage error. Machine-readable output (`--json`, `--csv`) goes to stdout
//! and is byte-identical across runs with identical flags, except for the
//! wall_time_ms sweep column; provenance headers for machine formats go to
//! stderr so stdout stays parseable.

use clap::{Args, Parser, Subcommand};

use hardylab::error::Error;
use hardylab::optimize::{laurent_grid_size, maximize_ratio, OperatorSpec, OptimizeConfig};
use hardylab::report::{round_sig, CheckRecord, CheckValue};
use hardylab::spectral::DEFAULT_GRID_SIZE;
use hardylab::verify::{extremal_report, full_suite};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(
    name = "hardylab",
    version,
    about = "Hardy-space laboratory: verification suite, shift-operator norm campaigns, \
             extremal reports and degree sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the suite of closed-form and sampled identity checks.
    Verify(VerifyArgs),
    /// Estimate sup ‖Tf‖₄⁴/‖f‖₄⁴ for one operator by multistart ascent.
    Norm(NormArgs),
    /// Print the golden constant table and measured extremal quantities.
    Extremal(ExtremalArgs),
    /// Run norm campaigns over a degree list (or iterate orders).
    Sweep(SweepArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Root seed for the sampled checks.
    #[arg(long, env = "HARDYLAB_SEED", default_value_t = 0)]
    seed: u64,
    /// Sample budget; 0 runs only the deterministic closed-form checks.
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Boundary grid size (power of two, at least 4).
    #[arg(long, default_value_t = DEFAULT_GRID_SIZE)]
    grid_size: usize,
    /// Emit one JSON document instead of human-readable lines.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct NormArgs {
    /// Operator: backshift, iterate:N (N ≥ 1) or riesz.
    #[arg(long, default_value = "backshift", value_parser = parse_fixed_operator)]
    operator: OperatorSpec,
    /// Polynomial degree of the search space (Laurent half-bandwidth for riesz).
    #[arg(long, default_value_t = 16)]
    degree: usize,
    /// Independent multistart count.
    #[arg(long, default_value_t = 16)]
    starts: usize,
    /// Root seed; start i draws from substream (seed, i).
    #[arg(long, env = "HARDYLAB_SEED", default_value_t = 0)]
    seed: u64,
    /// Iteration cap per start.
    #[arg(long, default_value_t = 5000)]
    max_iter: usize,
    /// Emit one JSON document instead of human-readable lines.
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit the best-so-far convergence history as CSV (iteration,best_ratio).
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct ExtremalArgs {
    /// Degree of the inner Blaschke factor (≥ 1).
    #[arg(long, default_value_t = 1)]
    blaschke_degree: usize,
    /// Seed for the inner-factor construction.
    #[arg(long, env = "HARDYLAB_SEED", default_value_t = 0)]
    seed: u64,
    /// Emit one JSON document instead of human-readable lines.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Operator: backshift, iterate:N, riesz, or iterate:A..B to sweep the
    /// iterate order at one fixed degree.
    #[arg(long, default_value = "backshift", value_parser = parse_operator)]
    operator: OperatorToken,
    /// Comma-separated strictly ascending degree list, e.g. 4,8,16,32.
    #[arg(long, required = true, value_delimiter = ',')]
    degrees: Vec<usize>,
    /// Independent multistart count per campaign.
    #[arg(long, default_value_t = 16)]
    starts: usize,
    /// Root seed shared by every campaign in the sweep.
    #[arg(long, env = "HARDYLAB_SEED", default_value_t = 0)]
    seed: u64,
    /// Emit CSV instead of an aligned table.
    #[arg(long)]
    csv: bool,
}

/// Operator flag as parsed: either one operator or an iterate-order range.
#[derive(Clone, Copy, Debug)]
enum OperatorToken {
    Fixed(OperatorSpec),
    IterateRange { lo: usize, hi: usize },
}

fn parse_operator(s: &str) -> Result<OperatorToken, String> {
    match s {
        "backshift" => return Ok(OperatorToken::Fixed(OperatorSpec::BackwardShift)),
        "riesz" => return Ok(OperatorToken::Fixed(OperatorSpec::RieszProjection)),
        _ => {}
    }
    let rest = s.strip_prefix("iterate:").ok_or_else(|| {
        format!("unknown operator '{s}' (expected backshift, iterate:N, iterate:A..B or riesz)")
    })?;
    let parse_order = |t: &str| -> Result<usize, String> {
        let n: usize = t
            .parse()
            .map_err(|_| format!("iterate order '{t}' is not a positive integer"))?;
        if n == 0 {
            return Err("iterate order must be at least 1".into());
        }
        Ok(n)
    };
    if let Some((a, b)) = rest.split_once("..") {
        let lo = parse_order(a)?;
        let hi = parse_order(b)?;
        if hi < lo {
            return Err(format!("iterate range {lo}..{hi} is empty"));
        }
        Ok(OperatorToken::IterateRange { lo, hi })
    } else {
        Ok(OperatorToken::Fixed(OperatorSpec::IteratedBackwardShift {
            n: parse_order(rest)?,
        }))
    }
}

fn parse_fixed_operator(s: &str) -> Result<OperatorSpec, String> {
    match parse_operator(s)? {
        OperatorToken::Fixed(spec) => Ok(spec),
        OperatorToken::IterateRange { .. } => {
            Err("iterate ranges (iterate:A..B) are only valid for sweep".into())
        }
    }
}

fn operator_name(spec: &OperatorSpec) -> String {
    match spec {
        OperatorSpec::BackwardShift => "backshift".into(),
        OperatorSpec::IteratedBackwardShift { n } => format!("iterate:{n}"),
        OperatorSpec::RieszProjection => "riesz".into(),
    }
}

/// 15 significant digits: the machine-output rendering.
fn machine(x: f64) -> String {
    format!("{}", round_sig(x, 15))
}

/// 7 significant digits: the human-output rendering.
fn human(x: f64) -> String {
    format!("{}", round_sig(x, 7))
}

fn exit_usage(msg: &str) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(2)
}

/// Library errors that reflect bad flag values are usage errors (exit 2);
/// everything else is a runtime failure (exit 1).
fn exit_for(err: &Error) -> ! {
    eprintln!("error: {err}");
    let code = match err {
        Error::InvalidGridSize { .. }
        | Error::InvalidDegree { .. }
        | Error::InvalidParameter { .. } => 2,
        _ => 1,
    };
    std::process::exit(code)
}

#[derive(serde::Serialize)]
struct Meta {
    version: &'static str,
    seed: u64,
    grid_size: usize,
}

#[derive(serde::Serialize)]
struct Report {
    meta: Meta,
    checks: Vec<CheckRecord>,
}

fn print_json(seed: u64, grid_size: usize, checks: &[CheckRecord]) {
    let report = Report {
        meta: Meta {
            version: VERSION,
            seed,
            grid_size,
        },
        checks: checks.iter().map(CheckRecord::rounded_for_machine).collect(),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serialization cannot fail")
    );
}

fn print_human_checks(checks: &[CheckRecord]) {
    for c in checks {
        println!("{}", c.human_line());
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    println!("{passed}/{} checks passed", checks.len());
}

/// Informational record: a reported value with nothing to compare against.
fn info_record(name: impl Into<String>, value: f64) -> CheckRecord {
    CheckRecord::new(name, value, CheckValue::None, 0.0, 0.0)
}

fn main() {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Norm(args) => cmd_norm(args),
        Command::Extremal(args) => cmd_extremal(args),
        Command::Sweep(args) => cmd_sweep(args),
    };
    std::process::exit(code)
}

fn cmd_verify(args: &VerifyArgs) -> i32 {
    let checks = match full_suite::<f64>(args.seed, args.trials, args.grid_size) {
        Ok(c) => c,
        Err(e) => exit_for(&e),
    };
    if args.json {
        print_json(args.seed, args.grid_size, &checks);
    } else {
        println!(
            "hardylab verify  version={VERSION}  seed={}  trials={}  grid_size={}",
            args.seed, args.trials, args.grid_size
        );
        print_human_checks(&checks);
    }
    i32::from(!checks.iter().all(|c| c.pass))
}

fn cmd_norm(args: &NormArgs) -> i32 {
    let cfg = OptimizeConfig {
        degree: args.degree,
        starts: args.starts,
        seed: args.seed,
        max_iter: args.max_iter,
        ..OptimizeConfig::default()
    };
    let result = match maximize_ratio::<f64>(&args.operator, &cfg) {
        Ok(r) => r,
        Err(e) => exit_for(&e),
    };
    let ceiling = args.operator.soundness_ceiling();
    let sound = result.best_ratio <= ceiling;
    let fourth_root = result.best_ratio.powf(0.25);
    let converged = result.per_start.iter().filter(|s| s.converged).count();
    // Only the Riesz campaign integrates on a grid; shift campaigns are
    // coefficient-exact, reported as grid_size 0.
    let grid_size = match args.operator {
        OperatorSpec::RieszProjection => laurent_grid_size(args.degree),
        _ => 0,
    };
    let provenance = format!(
        "hardylab norm  version={VERSION}  operator={}  degree={}  starts={}  seed={}  max_iter={}",
        operator_name(&args.operator),
        args.degree,
        args.starts,
        args.seed,
        args.max_iter
    );

    if args.csv {
        eprintln!("{provenance}");
        println!("iteration,best_ratio");
        for (i, r) in result.monotone_history.iter().enumerate() {
            println!("{i},{}", machine(*r));
        }
    } else if args.json {
        let mut checks = vec![
            info_record("best_ratio", result.best_ratio),
            info_record("best_ratio_fourth_root", fourth_root),
            CheckRecord::new(
                "soundness_ceiling",
                result.best_ratio,
                ceiling,
                (result.best_ratio - ceiling).max(0.0),
                0.0,
            ),
            info_record("converged_starts", converged as f64),
        ];
        for (i, s) in result.per_start.iter().enumerate() {
            checks.push(info_record(format!("start_{i:02}_final_ratio"), s.final_ratio));
        }
        print_json(args.seed, grid_size, &checks);
    } else {
        println!("{provenance}");
        println!("best_ratio          {}", human(result.best_ratio));
        println!("fourth_root         {}", human(fourth_root));
        println!(
            "soundness_ceiling   {}  ({})",
            human(ceiling),
            if sound { "ok" } else { "VIOLATED" }
        );
        for (i, s) in result.per_start.iter().enumerate() {
            println!(
                "start {i:>3}  final_ratio={}  iterations={}  converged={}",
                human(s.final_ratio),
                s.iterations,
                if s.converged { "yes" } else { "no" }
            );
        }
    }
    let unconverged = args.starts - converged;
    if unconverged > 0 {
        eprintln!(
            "warning: {unconverged} of {} starts did not reach the gradient tolerance",
            args.starts
        );
    }
    i32::from(!sound)
}

fn cmd_extremal(args: &ExtremalArgs) -> i32 {
    let checks = match extremal_report::<f64>(args.blaschke_degree, args.seed, DEFAULT_GRID_SIZE) {
        Ok(c) => c,
        Err(e) => exit_for(&e),
    };
    if args.json {
        print_json(args.seed, DEFAULT_GRID_SIZE, &checks);
    } else {
        println!(
            "hardylab extremal  version={VERSION}  blaschke_degree={}  seed={}  grid_size={DEFAULT_GRID_SIZE}",
            args.blaschke_degree, args.seed
        );
        print_human_checks(&checks);
    }
    i32::from(!checks.iter().all(|c| c.pass))
}

fn cmd_sweep(args: &SweepArgs) -> i32 {
    if args.degrees.is_empty() {
        exit_usage("degree list must be nonempty");
    }
    if !args.degrees.windows(2).all(|w| w[0] < w[1]) {
        exit_usage("degrees must be strictly ascending");
    }
    // Each campaign is (row label, operator, search degree): labels are the
    // degrees themselves, or the iterate orders when sweeping a range.
    let (label_column, campaigns): (&str, Vec<(usize, OperatorSpec)>) = match args.operator {
        OperatorToken::Fixed(spec) => (
            "degree",
            args.degrees.iter().map(|&d| (d, spec)).collect(),
        ),
        OperatorToken::IterateRange { lo, hi } => {
            if args.degrees.len() != 1 {
                exit_usage("an iterate range sweep takes exactly one degree");
            }
            (
                "n",
                (lo..=hi)
                    .map(|n| (n, OperatorSpec::IteratedBackwardShift { n }))
                    .collect(),
            )
        }
    };
    let fixed_degree = args.degrees[0];
    let operator_label = match args.operator {
        OperatorToken::Fixed(spec) => operator_name(&spec),
        OperatorToken::IterateRange { lo, hi } => format!("iterate:{lo}..{hi}"),
    };
    let provenance = format!(
        "hardylab sweep  version={VERSION}  operator={operator_label}  starts={}  seed={}",
        args.starts, args.seed
    );

    let mut rows = Vec::new();
    let mut sound = true;
    for &(label, spec) in &campaigns {
        let degree = match args.operator {
            OperatorToken::Fixed(_) => label,
            OperatorToken::IterateRange { .. } => fixed_degree,
        };
        let cfg = OptimizeConfig {
            degree,
            starts: args.starts,
            seed: args.seed,
            ..OptimizeConfig::default()
        };
        let clock = std::time::Instant::now();
        let result = match maximize_ratio::<f64>(&spec, &cfg) {
            Ok(r) => r,
            Err(e) => exit_for(&e),
        };
        let wall_time_ms = clock.elapsed().as_millis();
        sound &= result.best_ratio <= spec.soundness_ceiling();
        rows.push((label, result.best_ratio, wall_time_ms));
    }

    if args.csv {
        eprintln!("{provenance}");
        println!("{label_column},best_ratio,fourth_root,wall_time_ms");
        for &(label, ratio, ms) in &rows {
            println!("{label},{},{},{ms}", machine(ratio), machine(ratio.powf(0.25)));
        }
    } else {
        println!("{provenance}");
        println!(
            "{label_column:>8}  {:>18}  {:>12}  {:>12}",
            "best_ratio", "fourth_root", "wall_time_ms"
        );
        for &(label, ratio, ms) in &rows {
            println!(
                "{label:>8}  {:>18}  {:>12}  {ms:>12}",
                human(ratio),
                human(ratio.powf(0.25))
            );
        }
    }
    if !sound {
        eprintln!("error: a campaign exceeded its soundness ceiling");
    }
    i32::from(!sound)
}
