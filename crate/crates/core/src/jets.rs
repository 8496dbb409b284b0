//! Degree-5 truncated Taylor arithmetic over complex scalars.
//!
//! A jet carries the coefficients c_0..c_5 of a Taylor expansion at some
//! point; the k-th derivative there is k! * c_k. Ring operations follow
//! truncated Cauchy-product semantics, which is all the construction needs:
//! every quantity built here is a polynomial, so no division is required.

use num_complex::Complex64;
use std::ops::{Add, Mul, Sub};

pub const JET_LEN: usize = 6;

const FACTORIALS: [f64; JET_LEN] = [1.0, 1.0, 2.0, 6.0, 24.0, 120.0];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexJet {
    pub c: [Complex64; JET_LEN],
}

impl ComplexJet {
    pub fn zero() -> Self {
        ComplexJet { c: [Complex64::new(0.0, 0.0); JET_LEN] }
    }

    pub fn constant(v: Complex64) -> Self {
        let mut j = Self::zero();
        j.c[0] = v;
        j
    }

    /// The jet of the identity function z at expansion point a: (a, 1, 0, ...).
    pub fn variable(a: Complex64) -> Self {
        let mut j = Self::constant(a);
        j.c[1] = Complex64::new(1.0, 0.0);
        j
    }

    /// k-th derivative at the expansion point, k = 0..=5.
    pub fn derivative(&self, k: usize) -> Complex64 {
        self.c[k] * FACTORIALS[k]
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = *self;
        for c in out.c.iter_mut() {
            *c *= s;
        }
        out
    }

    /// Integer power by repeated multiplication (exponents stay tiny here).
    pub fn pow(&self, m: u32) -> Self {
        let mut out = Self::constant(Complex64::new(1.0, 0.0));
        for _ in 0..m {
            out = out * *self;
        }
        out
    }

    /// Jet at a of the monic polynomial with the given roots.
    pub fn from_roots(roots: &[Complex64], a: Complex64) -> Self {
        let mut out = Self::constant(Complex64::new(1.0, 0.0));
        for &r in roots {
            let mut lin = Self::variable(a);
            lin.c[0] -= r;
            out = out * lin;
        }
        out
    }
}

impl Add for ComplexJet {
    type Output = ComplexJet;
    fn add(self, rhs: ComplexJet) -> ComplexJet {
        let mut out = self;
        for (a, b) in out.c.iter_mut().zip(rhs.c.iter()) {
            *a += b;
        }
        out
    }
}

impl Sub for ComplexJet {
    type Output = ComplexJet;
    fn sub(self, rhs: ComplexJet) -> ComplexJet {
        let mut out = self;
        for (a, b) in out.c.iter_mut().zip(rhs.c.iter()) {
            *a -= b;
        }
        out
    }
}

impl Mul for ComplexJet {
    type Output = ComplexJet;
    fn mul(self, rhs: ComplexJet) -> ComplexJet {
        let mut out = ComplexJet::zero();
        for i in 0..JET_LEN {
            for j in 0..JET_LEN - i {
                out.c[i + j] += self.c[i] * rhs.c[j];
            }
        }
        out
    }
}
