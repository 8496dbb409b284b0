//! Command-line front end: build nodal systems, verify interpolation
//! conditions, run Lebesgue and convergence studies, compare coefficient
//! routes. CSV output is deterministic (17 significant digits, runtimes
//! zeroed unless --timings is passed).

use clap::{Args, Parser, Subcommand};
use hermite_fejer::experiments::{
    self, fmt_f64, ExperimentRecord, QuantityKind, TestFunction,
};
use hermite_fejer::hermite::{compare_coefficients, HermiteBasis};
use hermite_fejer::{plot, JacobiParams, NodalSystem};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_NUMERICAL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_TOLERANCE: u8 = 3;

const VALUE_TOL: f64 = 1e-9;
const DERIV_TOL: f64 = 1e-6;

#[derive(Parser)]
#[command(name = "hfc", version, about = "Fifth-order Hermite-Fejér interpolation on the unit circle")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    /// Jacobi exponent alpha (> -1)
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    /// Jacobi exponent beta (> -1)
    #[arg(long, allow_hyphen_values = true)]
    beta: f64,
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write the nodal system (k, Re z_k, Im z_k, x_k) as CSV
    Nodes {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
    },
    /// Check the interpolation conditions on seeded random node values
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        /// RNG seed for the node values
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Lebesgue constants over an n-ladder
    Lebesgue {
        #[command(flatten)]
        common: Common,
        /// Comma-separated degrees, e.g. 4,8,16
        #[arg(long)]
        n: String,
        #[arg(long, default_value_t = 512)]
        samples: usize,
        /// Also write a log-x SVG chart next to the CSV
        #[arg(long)]
        plot: bool,
        /// Record wall-clock runtimes (breaks byte-reproducibility)
        #[arg(long)]
        timings: bool,
    },
    /// Sup-error convergence study for one test function
    Converge {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: String,
        /// one of: one, z, z8, exp, pole, rough
        #[arg(long, default_value = "exp")]
        function: String,
        #[arg(long, default_value_t = 512)]
        samples: usize,
        #[arg(long)]
        plot: bool,
        #[arg(long)]
        timings: bool,
    },
    /// Closed-form vs condition-oracle coefficient comparison table
    Coeffs {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_NUMERICAL)
        }
    }
}

fn validate(alpha: f64, beta: f64, ns: &[usize], samples: usize) -> Option<ExitCode> {
    if !(alpha > -1.0) || !(beta > -1.0) {
        eprintln!("usage error: --alpha and --beta must both exceed -1");
        return Some(ExitCode::from(EXIT_USAGE));
    }
    if ns.iter().any(|&n| n < 1) {
        eprintln!("usage error: --n must be at least 1");
        return Some(ExitCode::from(EXIT_USAGE));
    }
    if samples < 64 {
        eprintln!("usage error: --samples must be at least 64");
        return Some(ExitCode::from(EXIT_USAGE));
    }
    None
}

fn parse_n_list(s: &str) -> Option<Vec<usize>> {
    s.split(',').map(|tok| tok.trim().parse::<usize>().ok()).collect()
}

fn emit(common: &Common, text: &str) -> std::io::Result<()> {
    match &common.out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_plot(common: &Common, svg: &str) -> std::io::Result<()> {
    let path = match &common.out {
        Some(p) => p.with_extension("svg"),
        None => PathBuf::from("chart.svg"),
    };
    std::fs::write(path, svg)
}

fn alpha_range_warning(alpha: f64) {
    if alpha > 0.5 {
        eprintln!(
            "warning: alpha = {alpha} lies outside (-1, 1/2]; logarithmic Lebesgue growth is only expected inside that range"
        );
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cmd {
        Cmd::Nodes { common, n } => {
            if let Some(code) = validate(common.alpha, common.beta, &[n], 64) {
                return Ok(code);
            }
            let sys = NodalSystem::build(JacobiParams::new(common.alpha, common.beta, n)?)?;
            let mut text = String::from("k,re_z,im_z,x\n");
            for (k, &z) in sys.nodes.iter().enumerate() {
                let _ = writeln!(text, "{k},{},{},{}", fmt_f64(z.re), fmt_f64(z.im), fmt_f64(z.re));
            }
            emit(&common, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { common, n, seed } => {
            if let Some(code) = validate(common.alpha, common.beta, &[n], 64) {
                return Ok(code);
            }
            let sys = NodalSystem::build(JacobiParams::new(common.alpha, common.beta, n)?)?;
            let hb = HermiteBasis::build(sys)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let values: Vec<Complex64> = (0..hb.sys.num_nodes())
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let report = hb.interpolate(values)?.verify_conditions();
            let mut text =
                String::from("k,value_residual,deriv1_scaled,deriv2_scaled,deriv3_scaled,deriv4_scaled\n");
            for row in &report.per_node {
                let _ = writeln!(
                    text,
                    "{},{},{},{},{},{}",
                    row.node_index,
                    fmt_f64(row.value_residual),
                    fmt_f64(row.scaled_derivs[0]),
                    fmt_f64(row.scaled_derivs[1]),
                    fmt_f64(row.scaled_derivs[2]),
                    fmt_f64(row.scaled_derivs[3]),
                );
            }
            emit(&common, &text)?;
            println!("max value residual:            {:e}", report.max_value_residual);
            println!("max scaled derivative residual: {:e}", report.max_scaled_deriv_residual);
            if report.max_value_residual > VALUE_TOL
                || report.max_scaled_deriv_residual > DERIV_TOL
            {
                eprintln!(
                    "tolerance breach: value tol {VALUE_TOL:e}, derivative tol {DERIV_TOL:e}"
                );
                return Ok(ExitCode::from(EXIT_TOLERANCE));
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Lebesgue { common, n, samples, plot: emit_plot, timings } => {
            let Some(ns) = parse_n_list(&n) else {
                eprintln!("usage error: --n expects a comma-separated list of integers");
                return Ok(ExitCode::from(EXIT_USAGE));
            };
            if let Some(code) = validate(common.alpha, common.beta, &ns, samples) {
                return Ok(code);
            }
            alpha_range_warning(common.alpha);
            let mut records = Vec::new();
            for &n in &ns {
                let start = std::time::Instant::now();
                let sys = NodalSystem::build(JacobiParams::new(common.alpha, common.beta, n)?)?;
                let hb = HermiteBasis::build(sys)?;
                let value = experiments::lebesgue_constant(&hb, samples);
                records.push(ExperimentRecord {
                    alpha: common.alpha,
                    beta: common.beta,
                    n,
                    quantity_kind: QuantityKind::LebesgueConstant,
                    value,
                    samples,
                    runtime_ms: if timings { start.elapsed().as_secs_f64() * 1e3 } else { 0.0 },
                });
            }
            records.sort_by(|a, b| (a.n, a.quantity_kind).cmp(&(b.n, b.quantity_kind)));
            let mut buf = Vec::new();
            experiments::write_csv(&records, &mut buf)?;
            emit(&common, &String::from_utf8(buf)?)?;
            if emit_plot {
                let pts: Vec<(f64, f64)> =
                    records.iter().map(|r| (r.n as f64, r.value)).collect();
                write_plot(&common, &plot::line_chart_svg("Lebesgue constant", "n", "value", &pts))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Converge { common, n, function, samples, plot: emit_plot, timings } => {
            let Some(ns) = parse_n_list(&n) else {
                eprintln!("usage error: --n expects a comma-separated list of integers");
                return Ok(ExitCode::from(EXIT_USAGE));
            };
            let Some(f) = TestFunction::parse(&function) else {
                eprintln!("usage error: unknown --function '{function}' (one, z, z8, exp, pole, rough)");
                return Ok(ExitCode::from(EXIT_USAGE));
            };
            if let Some(code) = validate(common.alpha, common.beta, &ns, samples) {
                return Ok(code);
            }
            alpha_range_warning(common.alpha);
            let rows = experiments::convergence_study(
                |z| f.eval(z),
                common.alpha,
                common.beta,
                &ns,
                samples,
            )?;
            for r in &rows {
                println!(
                    "n={:4}  sup_error={:.6e}  omega={:.6e}  err/(omega*log n)={:.4e}",
                    r.n, r.sup_error, r.omega, r.ratio
                );
            }
            let records = experiments::convergence_records(common.alpha, common.beta, &rows, timings);
            let mut buf = Vec::new();
            experiments::write_csv(&records, &mut buf)?;
            emit(&common, &String::from_utf8(buf)?)?;
            if emit_plot {
                let pts: Vec<(f64, f64)> =
                    rows.iter().map(|r| (r.n as f64, r.sup_error)).collect();
                write_plot(
                    &common,
                    &plot::line_chart_svg(
                        &format!("sup error, f = {}", f.name()),
                        "n",
                        "value",
                        &pts,
                    ),
                )?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Coeffs { common, n } => {
            if let Some(code) = validate(common.alpha, common.beta, &[n], 64) {
                return Ok(code);
            }
            let sys = NodalSystem::build(JacobiParams::new(common.alpha, common.beta, n)?)?;
            let hb = HermiteBasis::build(sys)?;
            let rows = compare_coefficients(&hb);
            let mut text = String::from(
                "k,p,closed_form_re,closed_form_im,oracle_re,oracle_im,rel_diff\n",
            );
            for r in &rows {
                let _ = writeln!(
                    text,
                    "{},{},{},{},{},{},{}",
                    r.node_index,
                    r.p,
                    fmt_f64(r.closed_form.re),
                    fmt_f64(r.closed_form.im),
                    fmt_f64(r.oracle.re),
                    fmt_f64(r.oracle.im),
                    fmt_f64(r.rel_diff),
                );
            }
            emit(&common, &text)?;
            let worst = rows.iter().map(|r| r.rel_diff).fold(0.0, f64::max);
            let mismatched = rows.iter().filter(|r| r.rel_diff > 1e-8).count();
            println!("rows: {}, mismatched (> 1e-8 relative): {mismatched}, worst relative difference: {worst:e}", rows.len());
            Ok(ExitCode::SUCCESS)
        }
    }
}
