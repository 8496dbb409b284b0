//! End-to-end acceptance suite. Each test prints one pass/fail line for its
//! criterion; run with `cargo test --test acceptance -- --nocapture` to see
//! them.

use hermite_fejer::experiments::{self, TestFunction};
use hermite_fejer::hermite::{compare_coefficients, HermiteBasis};
use hermite_fejer::jacobi::{jacobi_eval_complex, leading_constant};
use hermite_fejer::jets::ComplexJet;
use hermite_fejer::nodal::szego_x;
use hermite_fejer::{JacobiParams, NodalSystem};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

const PARAM_SETS: [(f64, f64); 4] = [(-0.5, -0.5), (0.0, 0.0), (0.5, 0.5), (0.3, -0.2)];

fn build(alpha: f64, beta: f64, n: usize) -> HermiteBasis {
    let sys = NodalSystem::build(JacobiParams::new(alpha, beta, n).unwrap()).unwrap();
    HermiteBasis::build(sys).unwrap()
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn circle(m: usize) -> impl Iterator<Item = Complex64> {
    (0..m).map(move |j| Complex64::from_polar(1.0, std::f64::consts::TAU * j as f64 / m as f64))
}

struct Criterion {
    id: usize,
    name: &'static str,
    failures: Vec<String>,
}

impl Criterion {
    fn new(id: usize, name: &'static str) -> Self {
        Criterion { id, name, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(detail());
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("criterion {}: PASS — {}", self.id, self.name);
        } else {
            println!("criterion {}: FAIL — {}", self.id, self.name);
            for f in &self.failures {
                println!("    {f}");
            }
            panic!("criterion {} failed", self.id);
        }
    }
}

#[test]
fn criterion_1_hermite_conditions() {
    let mut crit = Criterion::new(1, "interpolation conditions at all nodes");
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (alpha, beta) in PARAM_SETS {
        for n in [4usize, 8, 16, 32] {
            let hb = build(alpha, beta, n);
            let values: Vec<Complex64> = (0..hb.sys.num_nodes())
                .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let report = hb.interpolate(values).unwrap().verify_conditions();
            crit.check(report.max_value_residual <= 1e-9, || {
                format!(
                    "({alpha},{beta},n={n}): value residual {:e} > 1e-9",
                    report.max_value_residual
                )
            });
            crit.check(report.max_scaled_deriv_residual <= 1e-6, || {
                format!(
                    "({alpha},{beta},n={n}): scaled derivative residual {:e} > 1e-6",
                    report.max_scaled_deriv_residual
                )
            });
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    crit.check(elapsed <= 10.0, || format!("runtime {elapsed:.1}s > 10s"));
    crit.finish();
}

#[test]
fn criterion_2_coefficient_cross_validation() {
    let mut crit = Criterion::new(2, "closed-form vs oracle coefficients (or reproducible discrepancy report)");
    let mut total_mismatches = 0usize;
    for (alpha, beta) in PARAM_SETS {
        for n in [4usize, 8, 16, 32] {
            let hb = build(alpha, beta, n);
            let rows = compare_coefficients(&hb);
            let rows_again = compare_coefficients(&build(alpha, beta, n));
            for (r, r2) in rows.iter().zip(rows_again.iter()) {
                // p = 1 must agree outright; higher p may disagree, but the
                // discrepancy must be reproducible and reported with both values
                if r.p == 1 {
                    crit.check(r.rel_diff <= 1e-8, || {
                        format!(
                            "({alpha},{beta},n={n}) k={} p=1: closed {} vs oracle {}",
                            r.node_index, r.closed_form, r.oracle
                        )
                    });
                } else if r.rel_diff > 1e-8 {
                    total_mismatches += 1;
                    let reproducible = (r.closed_form - r2.closed_form).norm() == 0.0
                        && (r.oracle - r2.oracle).norm() == 0.0;
                    crit.check(reproducible, || {
                        format!(
                            "({alpha},{beta},n={n}) k={} p={}: discrepancy not reproducible",
                            r.node_index, r.p
                        )
                    });
                }
            }
        }
    }
    if total_mismatches > 0 {
        // documented, reproducible discrepancy: print a representative report
        let hb = build(0.0, 0.0, 4);
        println!("  discrepancy report (printed closed forms vs condition oracle), alpha=beta=0, n=4:");
        for r in compare_coefficients(&hb).iter().filter(|r| r.rel_diff > 1e-8).take(12) {
            println!(
                "    k={:2} p={}: closed_form={:+.12e}{:+.12e}i  oracle={:+.12e}{:+.12e}i  rel={:.3e}",
                r.node_index, r.p, r.closed_form.re, r.closed_form.im, r.oracle.re, r.oracle.im,
                r.rel_diff
            );
        }
        println!("  total mismatching (p,k) cells across all tested systems: {total_mismatches}");
    }
    crit.finish();
}

#[test]
fn criterion_3_partition_of_unity() {
    let mut crit = Criterion::new(3, "sum of A_0k is identically 1 on the circle");
    for (alpha, beta) in PARAM_SETS {
        for n in [4usize, 8, 16, 32] {
            let hb = build(alpha, beta, n);
            let ones = vec![c(1.0, 0.0); hb.sys.num_nodes()];
            let q = hb.interpolate(ones).unwrap();
            let max_dev = circle(512)
                .map(|z| (q.eval(z) - c(1.0, 0.0)).norm())
                .fold(0.0, f64::max);
            crit.check(max_dev <= 1e-9 * n as f64, || {
                format!("({alpha},{beta},n={n}): deviation {max_dev:e} > {:e}", 1e-9 * n as f64)
            });
        }
    }
    crit.finish();
}

#[test]
fn criterion_4_node_polynomial_identity() {
    let mut crit = Criterion::new(4, "W(z) matches K_n P_n((1+z^2)/2z) z^n off the circle");
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for (alpha, beta) in PARAM_SETS {
        for n in [1usize, 2, 5, 12] {
            let sys = NodalSystem::build(JacobiParams::new(alpha, beta, n).unwrap()).unwrap();
            let log_k = leading_constant(&sys.params).log_abs;
            for _ in 0..64 {
                let z = Complex64::from_polar(1.5, rng.gen_range(0.0..std::f64::consts::TAU));
                let w = sys.eval_w(z);
                let x = szego_x(z).unwrap();
                let rhs = log_k.exp() * jacobi_eval_complex(&sys.params, x) * z.powu(n as u32);
                let rel = (w - rhs).norm() / w.norm();
                crit.check(rel <= 1e-9, || {
                    format!("({alpha},{beta},n={n}) z={z}: relative deviation {rel:e}")
                });
            }
        }
    }
    crit.finish();
}

#[test]
fn criterion_5_lebesgue_growth() {
    let mut crit = Criterion::new(5, "log-like growth of the Lebesgue constants");
    let start = Instant::now();
    let ns = [4usize, 8, 16, 32, 64];
    let lambdas: Vec<f64> = ns
        .iter()
        .map(|&n| experiments::lebesgue_constant(&build(0.0, 0.0, n), 512))
        .collect();
    println!("  Lebesgue constants (alpha=beta=0): {:?}", lambdas);
    let diffs: Vec<f64> = lambdas.windows(2).map(|w| w[1] - w[0]).collect();
    for (i, &d) in diffs.iter().enumerate() {
        crit.check(d <= 3.0 * diffs[0], || {
            format!(
                "difference L_{} - L_{} = {d:.4} exceeds 3x first difference {:.4}",
                ns[i + 1],
                ns[i],
                diffs[0]
            )
        });
    }
    for i in 1..ns.len() {
        let prev = lambdas[i - 1] / ns[i - 1] as f64;
        let cur = lambdas[i] / ns[i] as f64;
        crit.check(cur < prev, || {
            format!("Lambda_n/n not decreasing: {prev:.4} -> {cur:.4} at n={}", ns[i])
        });
    }
    let elapsed = start.elapsed().as_secs_f64();
    crit.check(elapsed <= 60.0, || format!("runtime {elapsed:.1}s > 60s"));
    crit.finish();
}

#[test]
fn criterion_6_convergence() {
    let mut crit = Criterion::new(6, "sup-error convergence for exp and constant functions");
    let ns = [4usize, 8, 16, 32, 64];
    let rows = experiments::convergence_study(|z| z.exp(), 0.0, 0.0, &ns, 512).unwrap();
    let errs: Vec<f64> = rows.iter().map(|r| r.sup_error).collect();
    println!("  sup errors for exp: {:?}", errs);
    for i in 1..errs.len() {
        crit.check(errs[i] < errs[i - 1], || {
            format!("no strict decrease from n={} to n={}", ns[i - 1], ns[i])
        });
    }
    // err * n / log n stays within a factor-10 band of its n=8 value
    let scaled: Vec<f64> = rows
        .iter()
        .map(|r| r.sup_error * r.n as f64 / (r.n as f64).ln())
        .collect();
    let reference = scaled[1];
    for (i, &s) in scaled.iter().enumerate() {
        crit.check(s <= 10.0 * reference && s >= reference / 10.0, || {
            format!("err*n/log n = {s:e} at n={} outside factor-10 band of {reference:e}", ns[i])
        });
    }
    let rows = experiments::convergence_study(|_| c(1.0, 0.0), 0.0, 0.0, &ns, 512).unwrap();
    for r in &rows {
        crit.check(r.sup_error <= 1e-9, || {
            format!("constant function error {:e} at n={}", r.sup_error, r.n)
        });
    }
    crit.finish();
}

#[test]
fn criterion_7_jet_engine() {
    let mut crit = Criterion::new(7, "jet derivatives vs finite differences and exact monomials");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let h = 1e-3;
    for trial in 0..100 {
        let deg = rng.gen_range(1..=10usize);
        let coeffs: Vec<Complex64> =
            (0..=deg).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
        let eval =
            |z: Complex64| coeffs.iter().rev().fold(c(0.0, 0.0), |acc, &ck| acc * z + ck);
        let a = c(rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5));
        let jet_z = ComplexJet::variable(a);
        let jet = coeffs
            .iter()
            .rev()
            .fold(ComplexJet::zero(), |acc, &ck| acc * jet_z + ComplexJet::constant(ck));
        let d1 = (eval(a + h) - eval(a - h)) / (2.0 * h);
        let d2 = (eval(a + h) - 2.0 * eval(a) + eval(a - h)) / (h * h);
        // truncation error of the central formulas is h^2 times the
        // next-but-one derivative; that scale dominates the comparison
        let s1 = d1.norm().max(jet.derivative(3).norm()).max(1.0);
        let s2 = d2.norm().max(jet.derivative(4).norm()).max(1.0);
        crit.check((jet.derivative(1) - d1).norm() <= 1e-6 * s1, || {
            format!("trial {trial}: order-1 FD mismatch")
        });
        crit.check((jet.derivative(2) - d2).norm() <= 1e-6 * s2, || {
            format!("trial {trial}: order-2 FD mismatch")
        });
    }
    // exact monomial derivatives: d^r/dz^r z^m at a is m!/(m-r)! a^(m-r)
    for m in 0..=10u32 {
        let a = c(0.7, -0.3);
        let jet = ComplexJet::variable(a).pow(m);
        for r in 0..=5usize {
            let mut exact = c(1.0, 0.0);
            if (r as u32) <= m {
                for i in 0..r as u32 {
                    exact *= (m - i) as f64;
                }
                exact *= a.powu(m - r as u32);
            } else {
                exact = c(0.0, 0.0);
            }
            let got = jet.derivative(r);
            crit.check((got - exact).norm() <= 1e-12 * exact.norm().max(1.0), || {
                format!("monomial z^{m} order {r}: {got} vs {exact}")
            });
        }
    }
    crit.finish();
}

#[test]
fn criterion_8_fundamental_polynomial_growth() {
    let mut crit = Criterion::new(8, "scaled |L_k| suprema bounded across k; endpoints O(1)");
    let sys = NodalSystem::build(JacobiParams::new(0.0, 0.0, 32).unwrap()).unwrap();
    let rows = experiments::check_lk_growth(&sys, 512);
    let interior: Vec<f64> =
        rows.iter().filter(|r| r.k >= 1 && r.k <= 32).map(|r| r.scaled).collect();
    let max = interior.iter().cloned().fold(0.0, f64::max);
    let min = interior.iter().cloned().fold(f64::INFINITY, f64::min);
    println!("  scaled |L_k| range over k=1..32: [{min:.4}, {max:.4}], ratio {:.2}", max / min);
    crit.check(max / min <= 50.0, || format!("spread {:.2} > 50", max / min));
    let l0 = rows.iter().find(|r| r.k == 0).unwrap().max_abs;
    let llast = rows.iter().find(|r| r.k == 65).unwrap().max_abs;
    println!("  endpoint suprema: |L_0| = {l0:.4}, |L_65| = {llast:.4}");
    crit.check(l0 <= 10.0, || format!("|L_0| = {l0:.4} > 10"));
    crit.check(llast <= 10.0, || format!("|L_2n+1| = {llast:.4} > 10"));
    crit.finish();
}

#[test]
fn criterion_9_cli_regression() {
    let mut crit = Criterion::new(9, "CLI determinism and exit codes");
    let bin = env!("CARGO_BIN_EXE_hfc");
    let dir = tempfile::tempdir().unwrap();
    let run = |args: &[&str]| {
        std::process::Command::new(bin)
            .args(args)
            .current_dir(dir.path())
            .output()
            .expect("binary runs")
    };
    let pairs: [(&str, Vec<&str>); 3] = [
        ("nodes", vec!["nodes", "--alpha", "-0.5", "--beta", "-0.5", "--n", "2"]),
        ("verify", vec!["verify", "--alpha", "0", "--beta", "0", "--n", "8"]),
        (
            "converge",
            vec![
                "converge", "--alpha", "0", "--beta", "0", "--n", "4,8,16", "--function", "exp",
                "--samples", "128",
            ],
        ),
    ];
    for (name, base) in &pairs {
        let file_a = dir.path().join(format!("{name}_a.csv"));
        let file_b = dir.path().join(format!("{name}_b.csv"));
        for (file, _) in [(&file_a, 0), (&file_b, 1)] {
            let mut args = base.clone();
            let s = file.to_str().unwrap().to_string();
            let s_leaked: &str = Box::leak(s.into_boxed_str());
            args.extend_from_slice(&["--out", s_leaked]);
            let out = run(&args);
            crit.check(out.status.code() == Some(0), || {
                format!(
                    "{name}: exit {:?}, stderr: {}",
                    out.status.code(),
                    String::from_utf8_lossy(&out.stderr)
                )
            });
        }
        let a = std::fs::read(&file_a).unwrap();
        let b = std::fs::read(&file_b).unwrap();
        crit.check(!a.is_empty() && a == b, || format!("{name}: CSV not byte-identical"));
    }
    // nodes CSV carries the Chebyshev projections e^(+-i pi/4), e^(+-i 3pi/4)
    let nodes_csv = std::fs::read_to_string(dir.path().join("nodes_a.csv")).unwrap();
    let q = std::f64::consts::FRAC_1_SQRT_2;
    for want in [q, -q] {
        crit.check(
            nodes_csv.lines().any(|l| {
                let mut cols = l.split(',').skip(1);
                matches!(
                    (cols.next().map(str::parse::<f64>), cols.next().map(str::parse::<f64>)),
                    (Some(Ok(re)), Some(Ok(im)))
                        if (re - want).abs() < 1e-12 && (im - q).abs() < 1e-12
                )
            }),
            || format!("nodes CSV missing projection with re={want}"),
        );
    }
    // exit-code contract
    let out = run(&["verify", "--alpha", "-2", "--beta", "0", "--n", "4"]);
    crit.check(out.status.code() == Some(2), || {
        format!("invalid alpha: expected exit 2, got {:?}", out.status.code())
    });
    let out = run(&["converge", "--alpha", "0", "--beta", "0", "--n", "4", "--function", "bogus"]);
    crit.check(out.status.code() == Some(2), || {
        format!("unknown function: expected exit 2, got {:?}", out.status.code())
    });
    let out = run(&["verify", "--n", "4"]);
    crit.check(out.status.code() == Some(2), || {
        format!("missing flags: expected exit 2, got {:?}", out.status.code())
    });
    let out = run(&["verify", "--alpha", "0", "--beta", "0", "--n", "8"]);
    crit.check(out.status.code() == Some(0), || {
        format!("verify: expected exit 0, got {:?}", out.status.code())
    });
    crit.finish();
}

#[test]
fn constant_one_interpolation_on_suite_functions() {
    // harness self-consistency: the study pipeline reports the
    // partition-of-unity residual for f = one
    let rows = experiments::convergence_study(
        |z| TestFunction::One.eval(z),
        0.3,
        -0.2,
        &[4, 8],
        128,
    )
    .unwrap();
    for r in rows {
        assert!(r.sup_error <= 1e-9 * r.n as f64);
    }
}
