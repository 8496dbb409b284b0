//! Empirical studies: Lebesgue-type sums, fundamental-polynomial and
//! coefficient growth tables, modulus of continuity, and sup-error
//! convergence ladders, with CSV output.

use crate::error::Result;
use crate::hermite::{HermiteBasis, Interpolant};
use crate::jacobi::{leading_constant, JacobiParams};
use crate::nodal::NodalSystem;
use num_complex::Complex64;
use std::io::{self, Write};
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum QuantityKind {
    LebesgueConstant,
    SupError,
    LkBoundRatio,
    CpkRatio,
    Omega,
}

impl QuantityKind {
    pub fn as_str(self) -> &'static str {
        match self {
            QuantityKind::LebesgueConstant => "lebesgue_constant",
            QuantityKind::SupError => "sup_error",
            QuantityKind::LkBoundRatio => "lk_bound_ratio",
            QuantityKind::CpkRatio => "cpk_ratio",
            QuantityKind::Omega => "omega",
        }
    }
}

/// One row of a study.
#[derive(Clone, Copy, Debug)]
pub struct ExperimentRecord {
    pub alpha: f64,
    pub beta: f64,
    pub n: usize,
    pub quantity_kind: QuantityKind,
    pub value: f64,
    pub samples: usize,
    pub runtime_ms: f64,
}

/// Round-trip-exact decimal rendering (17 significant digits).
pub fn fmt_f64(x: f64) -> String {
    format!("{:.16e}", x)
}

/// Writes records in the fixed column order
/// `alpha,beta,n,quantity_kind,value,samples,runtime_ms`.
pub fn write_csv<W: Write>(records: &[ExperimentRecord], mut out: W) -> io::Result<()> {
    writeln!(out, "alpha,beta,n,quantity_kind,value,samples,runtime_ms")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            fmt_f64(r.alpha),
            fmt_f64(r.beta),
            r.n,
            r.quantity_kind.as_str(),
            fmt_f64(r.value),
            r.samples,
            fmt_f64(r.runtime_ms)
        )?;
    }
    Ok(())
}

/// Circle sample points: m equally spaced angles plus the nodes themselves
/// (the A_0k peak near the nodes; uniform-only sampling under-reports).
fn circle_samples(sys: &NodalSystem, m: usize) -> Vec<Complex64> {
    let mut pts: Vec<Complex64> = (0..m)
        .map(|j| Complex64::from_polar(1.0, std::f64::consts::TAU * j as f64 / m as f64))
        .collect();
    pts.extend_from_slice(&sys.nodes);
    pts
}

/// The Lebesgue-type sum over the fundamental polynomials at z.
pub fn lebesgue_function(hb: &HermiteBasis, z: Complex64) -> f64 {
    (0..hb.sys.num_nodes()).map(|k| hb.a0k(k, z).norm()).sum()
}

/// Maximum of the Lebesgue function over m circle samples plus all nodes.
pub fn lebesgue_constant(hb: &HermiteBasis, m_samples: usize) -> f64 {
    circle_samples(&hb.sys, m_samples)
        .into_iter()
        .map(|z| lebesgue_function(hb, z))
        .fold(0.0, f64::max)
}

/// One row of the |L_k| growth table.
#[derive(Clone, Copy, Debug)]
pub struct LkGrowthRow {
    pub k: usize,
    pub max_abs: f64,
    /// max |L_k| * k^(3/2 - alpha) for interior 1 <= k <= n; raw max for the
    /// endpoint rows k = 0 and k = 2n+1.
    pub scaled: f64,
}

/// Scaled suprema of |L_k| over the sampled circle, rows for k = 0..=n and
/// k = 2n+1.
pub fn check_lk_growth(sys: &NodalSystem, m_samples: usize) -> Vec<LkGrowthRow> {
    let pts = circle_samples(sys, m_samples);
    let alpha = sys.params.alpha;
    let n = sys.n();
    let mut rows = Vec::with_capacity(n + 2);
    let max_abs_of = |k: usize| -> f64 {
        pts.iter().map(|&z| crate::basis::lagrange_eval(sys, k, z).norm()).fold(0.0, f64::max)
    };
    let m0 = max_abs_of(0);
    rows.push(LkGrowthRow { k: 0, max_abs: m0, scaled: m0 });
    for k in 1..=n {
        let m = max_abs_of(k);
        rows.push(LkGrowthRow { k, max_abs: m, scaled: m * (k as f64).powf(1.5 - alpha) });
    }
    let last = 2 * n + 1;
    let ml = max_abs_of(last);
    rows.push(LkGrowthRow { k: last, max_abs: ml, scaled: ml });
    rows
}

/// One row of the coefficient growth table.
#[derive(Clone, Copy, Debug)]
pub struct CpkGrowthRow {
    pub p: usize,
    pub k: usize,
    pub abs_cpk: f64,
    /// |c_pk| * K_n^p * n^(p(alpha-1)) * k^(p/2 - p*alpha), the K_n^p factor
    /// applied in log-space.
    pub scaled: f64,
    pub log_scaled: f64,
}

/// Scaled coefficient magnitudes per (p, k) for the interior k = 1..=n.
pub fn check_cpk_growth(hb: &HermiteBasis) -> Vec<CpkGrowthRow> {
    let params = &hb.sys.params;
    let (alpha, nf) = (params.alpha, params.n as f64);
    let log_kn = leading_constant(params).log_abs;
    let mut rows = Vec::new();
    for p in 1..=4usize {
        let pf = p as f64;
        for k in 1..=params.n {
            let kf = k as f64;
            let abs_cpk = hb.coeffs[k].c[p - 1].norm();
            let log_scaled = abs_cpk.max(f64::MIN_POSITIVE).ln()
                + pf * log_kn
                + pf * (alpha - 1.0) * nf.ln()
                + (pf / 2.0 - pf * alpha) * kf.ln();
            rows.push(CpkGrowthRow { p, k, abs_cpk, scaled: log_scaled.exp(), log_scaled });
        }
    }
    rows
}

/// Empirical modulus of continuity of f on the unit circle: the largest
/// oscillation over arc-offsets up to delta from m base points.
pub fn modulus_of_continuity<F>(f: F, delta: f64, m_samples: usize) -> f64
where
    F: Fn(Complex64) -> Complex64,
{
    let mut omega = 0.0f64;
    for i in 0..m_samples {
        let theta = std::f64::consts::TAU * i as f64 / m_samples as f64;
        let base = f(Complex64::from_polar(1.0, theta));
        for step in 1..=8 {
            let s = delta * step as f64 / 8.0;
            let fwd = f(Complex64::from_polar(1.0, theta + s));
            omega = omega.max((fwd - base).norm());
        }
    }
    omega
}

/// One cell of a convergence study.
#[derive(Clone, Copy, Debug)]
pub struct ConvergenceRow {
    pub n: usize,
    pub sup_error: f64,
    pub omega: f64,
    /// sup_error / (omega(f, 1/n) * log n); log 1 is clamped away from zero.
    pub ratio: f64,
    pub samples: usize,
    pub runtime_ms: f64,
}

/// Sup-circle error of Q_n against f over a geometric n-ladder.
pub fn convergence_study<F>(
    f: F,
    alpha: f64,
    beta: f64,
    n_list: &[usize],
    m_samples: usize,
) -> Result<Vec<ConvergenceRow>>
where
    F: Fn(Complex64) -> Complex64,
{
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let start = Instant::now();
        let sys = NodalSystem::build(JacobiParams::new(alpha, beta, n)?)?;
        let hb = HermiteBasis::build(sys)?;
        let values: Vec<Complex64> = hb.sys.nodes.iter().map(|&z| f(z)).collect();
        let q: Interpolant = hb.interpolate(values)?;
        let sup_error = circle_samples(&hb.sys, m_samples)
            .into_iter()
            .map(|z| (q.eval(z) - f(z)).norm())
            .fold(0.0, f64::max);
        let omega = modulus_of_continuity(&f, 1.0 / n as f64, m_samples.max(64));
        let log_n = (n as f64).ln().max(0.1);
        let ratio = if omega > 0.0 { sup_error / (omega * log_n) } else { 0.0 };
        rows.push(ConvergenceRow {
            n,
            sup_error,
            omega,
            ratio,
            samples: m_samples,
            runtime_ms: start.elapsed().as_secs_f64() * 1e3,
        });
    }
    Ok(rows)
}

/// Flattens study rows into records, sorted by n then quantity kind.
pub fn convergence_records(
    alpha: f64,
    beta: f64,
    rows: &[ConvergenceRow],
    with_timings: bool,
) -> Vec<ExperimentRecord> {
    let mut records = Vec::with_capacity(2 * rows.len());
    for r in rows {
        let rt = if with_timings { r.runtime_ms } else { 0.0 };
        records.push(ExperimentRecord {
            alpha,
            beta,
            n: r.n,
            quantity_kind: QuantityKind::SupError,
            value: r.sup_error,
            samples: r.samples,
            runtime_ms: rt,
        });
        records.push(ExperimentRecord {
            alpha,
            beta,
            n: r.n,
            quantity_kind: QuantityKind::Omega,
            value: r.omega,
            samples: r.samples,
            runtime_ms: rt,
        });
    }
    records.sort_by(|a, b| (a.n, a.quantity_kind).cmp(&(b.n, b.quantity_kind)));
    records
}

/// The fixed study-function suite on the closed unit disk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TestFunction {
    One,
    Z,
    Z8,
    Exp,
    /// 1/(z-2): analytic with a pole just outside the disk.
    Pole,
    /// sum_{j>=1} z^j / j^2 (the dilogarithm): continuous on the closed
    /// disk with a rough modulus of continuity at z = 1.
    Rough,
}

impl TestFunction {
    pub const ALL: [TestFunction; 6] = [
        TestFunction::One,
        TestFunction::Z,
        TestFunction::Z8,
        TestFunction::Exp,
        TestFunction::Pole,
        TestFunction::Rough,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TestFunction::One => "one",
            TestFunction::Z => "z",
            TestFunction::Z8 => "z8",
            TestFunction::Exp => "exp",
            TestFunction::Pole => "pole",
            TestFunction::Rough => "rough",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == s)
    }

    pub fn eval(self, z: Complex64) -> Complex64 {
        match self {
            TestFunction::One => Complex64::new(1.0, 0.0),
            TestFunction::Z => z,
            TestFunction::Z8 => z.powu(8),
            TestFunction::Exp => z.exp(),
            TestFunction::Pole => Complex64::new(1.0, 0.0) / (z - 2.0),
            TestFunction::Rough => dilog(z),
        }
    }
}

// Bernoulli numbers B_0..B_22 (odd entries beyond B_1 vanish).
const BERNOULLI: [f64; 23] = [
    1.0,
    -0.5,
    1.0 / 6.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    1.0 / 42.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    5.0 / 66.0,
    0.0,
    -691.0 / 2730.0,
    0.0,
    7.0 / 6.0,
    0.0,
    -3617.0 / 510.0,
    0.0,
    43867.0 / 798.0,
    0.0,
    -174611.0 / 330.0,
    0.0,
    854513.0 / 138.0,
];

/// The dilogarithm sum_{j>=1} z^j/j^2 on the closed unit disk.
///
/// Near z = 1 the reflection Li2(z) = pi^2/6 - ln(z)ln(1-z) - Li2(1-z)
/// reduces to a geometrically convergent direct series; elsewhere the
/// Bernoulli series in w = -ln(1-z) converges since |w| < 2 pi.
pub fn dilog(z: Complex64) -> Complex64 {
    let zero = Complex64::new(0.0, 0.0);
    if z == zero {
        return zero;
    }
    let one = Complex64::new(1.0, 0.0);
    let pi2_6 = std::f64::consts::PI * std::f64::consts::PI / 6.0;
    let w = one - z;
    if w.norm() < 0.5 {
        if w == zero {
            return Complex64::new(pi2_6, 0.0);
        }
        return Complex64::new(pi2_6, 0.0) - z.ln() * w.ln() - dilog_direct(w);
    }
    let w = -(one - z).ln();
    let mut term = w; // w^(k+1)/(k+1)! at k=0
    let mut sum = BERNOULLI[0] * term;
    for (k, &bk) in BERNOULLI.iter().enumerate().skip(1) {
        term = term * w / (k as f64 + 1.0);
        if bk != 0.0 {
            sum += bk * term;
        }
    }
    sum
}

fn dilog_direct(z: Complex64) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut zj = Complex64::new(1.0, 0.0);
    for j in 1..=60u32 {
        zj *= z;
        sum += zj / (j as f64 * j as f64);
    }
    sum
}
