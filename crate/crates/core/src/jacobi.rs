//! Jacobi polynomials P_n^(alpha,beta): evaluation, first two derivatives,
//! zeros, and the leading-coefficient constant K_n in log-space.

use crate::error::{Error, Result};
use statrs::function::gamma::ln_gamma;

/// Parameters of a Jacobi polynomial family member.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JacobiParams {
    pub alpha: f64,
    pub beta: f64,
    pub n: usize,
}

impl JacobiParams {
    /// Validates alpha, beta > -1 and n >= 1.
    pub fn new(alpha: f64, beta: f64, n: usize) -> Result<Self> {
        if !(alpha > -1.0) || !(beta > -1.0) || !alpha.is_finite() || !beta.is_finite() {
            return Err(Error::InvalidParams { alpha, beta });
        }
        if n < 1 {
            return Err(Error::InvalidDegree);
        }
        Ok(JacobiParams { alpha, beta, n })
    }
}

/// P_n^(a,b)(x) by the standard three-term recurrence.
fn eval_raw(a: f64, b: f64, n: usize, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut p_prev = 1.0;
    let mut p = 0.5 * (a + b + 2.0) * x + 0.5 * (a - b);
    for m in 2..=n {
        let m = m as f64;
        let c0 = 2.0 * m + a + b;
        // 2m(m+a+b)(2m+a+b-2) P_m
        //   = (2m+a+b-1)[(2m+a+b)(2m+a+b-2)x + a^2-b^2] P_{m-1}
        //   - 2(m+a-1)(m+b-1)(2m+a+b) P_{m-2}
        let denom = 2.0 * m * (m + a + b) * (c0 - 2.0);
        let t1 = (c0 - 1.0) * (c0 * (c0 - 2.0) * x + a * a - b * b);
        let t2 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * c0;
        let p_next = (t1 * p - t2 * p_prev) / denom;
        p_prev = p;
        p = p_next;
    }
    p
}

/// Evaluates P_n^(alpha,beta) at x.
pub fn jacobi_eval(params: &JacobiParams, x: f64) -> f64 {
    eval_raw(params.alpha, params.beta, params.n, x)
}

/// Same recurrence with a complex argument; used by the W(z) identity check.
pub fn jacobi_eval_complex(params: &JacobiParams, x: num_complex::Complex64) -> num_complex::Complex64 {
    use num_complex::Complex64;
    let (a, b, n) = (params.alpha, params.beta, params.n);
    if n == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let mut p_prev = Complex64::new(1.0, 0.0);
    let mut p = 0.5 * (a + b + 2.0) * x + 0.5 * (a - b);
    for m in 2..=n {
        let m = m as f64;
        let c0 = 2.0 * m + a + b;
        let denom = 2.0 * m * (m + a + b) * (c0 - 2.0);
        let t1 = (c0 - 1.0) * (c0 * (c0 - 2.0) * x + a * a - b * b);
        let t2 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * c0;
        let p_next = (t1 * p - t2 * p_prev) / denom;
        p_prev = p;
        p = p_next;
    }
    p
}

/// First or second derivative of P_n^(alpha,beta) at x, via the shift
/// identity d/dx P_n^(a,b) = ((n+a+b+1)/2) P_{n-1}^(a+1,b+1).
pub fn jacobi_deriv(params: &JacobiParams, x: f64, order: u32) -> Result<f64> {
    let (a, b, n) = (params.alpha, params.beta, params.n);
    match order {
        1 => {
            if n < 1 {
                return Ok(0.0);
            }
            Ok(0.5 * (n as f64 + a + b + 1.0) * eval_raw(a + 1.0, b + 1.0, n - 1, x))
        }
        2 => {
            if n < 2 {
                return Ok(0.0);
            }
            let s = n as f64 + a + b;
            Ok(0.25 * (s + 1.0) * (s + 2.0) * eval_raw(a + 2.0, b + 2.0, n - 2, x))
        }
        other => Err(Error::UnsupportedOrder(other)),
    }
}

const ZERO_TOL: f64 = 1e-12;

/// Zeros of P_n^(alpha,beta), strictly increasing in (-1, 1).
///
/// Newton iteration from the Chebyshev-angle guesses cos((2k-1)pi/(2n));
/// if the resulting set is not n distinct well-converged roots, every root
/// is re-bracketed by a sign scan and bisected.
pub fn jacobi_zeros(params: &JacobiParams) -> Result<Vec<f64>> {
    let n = params.n;
    let mut roots = Vec::with_capacity(n);
    for k in 1..=n {
        let guess = ((2.0 * k as f64 - 1.0) * std::f64::consts::PI / (2.0 * n as f64)).cos();
        if let Some(r) = newton(params, guess) {
            roots.push(r);
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if !zeros_valid(params, &roots) {
        roots = bracketed_zeros(params)?;
    }
    if !zeros_valid(params, &roots) {
        return Err(Error::RootFinding {
            n,
            detail: "bisection fallback did not isolate n simple roots".into(),
        });
    }
    Ok(roots)
}

fn newton(params: &JacobiParams, x0: f64) -> Option<f64> {
    let mut x = x0;
    for _ in 0..100 {
        let p = jacobi_eval(params, x);
        let dp = jacobi_deriv(params, x, 1).ok()?;
        if dp == 0.0 {
            return None;
        }
        let step = p / dp;
        x -= step;
        if !x.is_finite() {
            return None;
        }
        x = x.clamp(-1.0, 1.0);
        if step.abs() < 1e-15 {
            return Some(x);
        }
    }
    None
}

fn zeros_valid(params: &JacobiParams, roots: &[f64]) -> bool {
    if roots.len() != params.n {
        return false;
    }
    for (i, &r) in roots.iter().enumerate() {
        if !(r > -1.0 && r < 1.0) {
            return false;
        }
        if i > 0 && r - roots[i - 1] < 1e-12 {
            return false;
        }
        let dp = jacobi_deriv(params, r, 1).unwrap_or(f64::NAN);
        if !(jacobi_eval(params, r).abs() <= ZERO_TOL * dp.abs().max(1.0)) {
            return false;
        }
    }
    true
}

/// Sign-scan fallback: brackets each root on a fine angular grid, then bisects.
fn bracketed_zeros(params: &JacobiParams) -> Result<Vec<f64>> {
    let n = params.n;
    let m = 32 * n + 64;
    let grid: Vec<f64> = (0..=m)
        .map(|j| (std::f64::consts::PI * j as f64 / m as f64).cos())
        .rev()
        .collect();
    let mut roots = Vec::with_capacity(n);
    let mut prev_x = grid[0];
    let mut prev_p = jacobi_eval(params, prev_x);
    for &x in &grid[1..] {
        let p = jacobi_eval(params, x);
        if prev_p == 0.0 {
            roots.push(prev_x);
        } else if prev_p * p < 0.0 {
            roots.push(bisect(params, prev_x, x, prev_p));
        }
        prev_x = x;
        prev_p = p;
    }
    if roots.len() != n {
        return Err(Error::RootFinding {
            n,
            detail: format!("sign scan found {} brackets, expected {}", roots.len(), n),
        });
    }
    // polish
    for r in roots.iter_mut() {
        if let Some(p) = newton(params, *r) {
            if (p - *r).abs() < 1e-6 {
                *r = p;
            }
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(roots)
}

fn bisect(params: &JacobiParams, mut lo: f64, mut hi: f64, p_lo: f64) -> f64 {
    let mut sign_lo = p_lo.signum();
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let p = jacobi_eval(params, mid);
        if p == 0.0 || hi - lo < 1e-16 {
            return mid;
        }
        if p.signum() == sign_lo {
            lo = mid;
            sign_lo = p.signum();
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// The leading-coefficient constant K_n = 2^(2n) n! G(a+b+n+1)/G(a+b+2n+1),
/// held as log-magnitude plus sign (always +1 for valid parameters).
#[derive(Clone, Copy, Debug)]
pub struct LeadingConstant {
    pub log_abs: f64,
    pub sign: f64,
}

impl LeadingConstant {
    pub fn value(&self) -> f64 {
        self.sign * self.log_abs.exp()
    }
}

pub fn leading_constant(params: &JacobiParams) -> LeadingConstant {
    let (a, b, n) = (params.alpha, params.beta, params.n as f64);
    let log_abs = 2.0 * n * std::f64::consts::LN_2 + ln_gamma(n + 1.0) + ln_gamma(a + b + n + 1.0)
        - ln_gamma(a + b + 2.0 * n + 1.0);
    LeadingConstant { log_abs, sign: 1.0 }
}
