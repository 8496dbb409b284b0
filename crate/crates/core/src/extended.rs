//! Double-double arithmetic for the per-node precomputation.
//!
//! The fundamental-polynomial coefficients come from products over all
//! 2n+2 linear factors followed by a back-substitution with genuine
//! cancellation; in plain f64 the results carry relative errors of
//! 50-3000 ulps, which is what limits how well the exact algebraic
//! identities of the operator (e.g. the partition of unity) can be
//! observed at evaluation time. Carrying the precomputation in
//! double-double (~31 significant digits) and rounding once at the end
//! makes every stored per-node quantity correct to the last bit for the
//! node set actually in use.
//!
//! Algorithms are the standard error-free transformations (two_sum,
//! two_prod via FMA) from the QD library of Hida, Li and Bailey.

use num_complex::Complex64;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Dd {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub(crate) const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    #[inline]
    pub(crate) fn from_f64(a: f64) -> Dd {
        Dd { hi: a, lo: 0.0 }
    }

    #[inline]
    pub(crate) fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub(crate) fn add(self, o: Dd) -> Dd {
        let (s1, mut s2) = two_sum(self.hi, o.hi);
        let (t1, t2) = two_sum(self.lo, o.lo);
        s2 += t1;
        let (s1, mut s2) = quick_two_sum(s1, s2);
        s2 += t2;
        let (hi, lo) = quick_two_sum(s1, s2);
        Dd { hi, lo }
    }

    #[inline]
    pub(crate) fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub(crate) fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    #[inline]
    pub(crate) fn mul(self, o: Dd) -> Dd {
        let (p1, mut p2) = two_prod(self.hi, o.hi);
        p2 += self.hi * o.lo + self.lo * o.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub(crate) fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul(Dd::from_f64(q1)));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.mul(Dd::from_f64(q2)));
        let q3 = r.hi / o.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add(Dd::from_f64(q3))
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct DdComplex {
    pub(crate) re: Dd,
    pub(crate) im: Dd,
}

impl DdComplex {
    pub(crate) const ZERO: DdComplex = DdComplex { re: Dd::ZERO, im: Dd::ZERO };
    pub(crate) const ONE: DdComplex = DdComplex { re: Dd { hi: 1.0, lo: 0.0 }, im: Dd::ZERO };

    #[inline]
    pub(crate) fn from_c64(z: Complex64) -> DdComplex {
        DdComplex { re: Dd::from_f64(z.re), im: Dd::from_f64(z.im) }
    }

    #[inline]
    pub(crate) fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    #[inline]
    pub(crate) fn add(self, o: DdComplex) -> DdComplex {
        DdComplex { re: self.re.add(o.re), im: self.im.add(o.im) }
    }

    #[inline]
    pub(crate) fn sub(self, o: DdComplex) -> DdComplex {
        DdComplex { re: self.re.sub(o.re), im: self.im.sub(o.im) }
    }

    #[inline]
    pub(crate) fn neg(self) -> DdComplex {
        DdComplex { re: self.re.neg(), im: self.im.neg() }
    }

    #[inline]
    pub(crate) fn mul(self, o: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    #[inline]
    pub(crate) fn div(self, o: DdComplex) -> DdComplex {
        let den = o.re.mul(o.re).add(o.im.mul(o.im));
        let num = self.mul(DdComplex { re: o.re, im: o.im.neg() });
        DdComplex { re: num.re.div(den), im: num.im.div(den) }
    }

    #[inline]
    pub(crate) fn scale_f64(self, s: f64) -> DdComplex {
        let sd = Dd::from_f64(s);
        DdComplex { re: self.re.mul(sd), im: self.im.mul(sd) }
    }
}

/// Degree-5 truncated Taylor jet with double-double coefficients; the
/// extended-precision counterpart of `jets::ComplexJet`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct DdJet {
    pub(crate) c: [DdComplex; 6],
}

impl DdJet {
    pub(crate) fn one() -> DdJet {
        let mut c = [DdComplex::ZERO; 6];
        c[0] = DdComplex::ONE;
        DdJet { c }
    }

    pub(crate) fn mul(self, o: DdJet) -> DdJet {
        let mut out = [DdComplex::ZERO; 6];
        for i in 0..6 {
            for j in 0..6 - i {
                out[i + j] = out[i + j].add(self.c[i].mul(o.c[j]));
            }
        }
        DdJet { c: out }
    }

    pub(crate) fn pow(self, m: u32) -> DdJet {
        let mut out = DdJet::one();
        for _ in 0..m {
            out = out.mul(self);
        }
        out
    }

    /// Jet at `a` of the monic polynomial with the given roots; `skip`
    /// omits one root (for the factor-cancelled Lagrange numerator).
    pub(crate) fn from_roots(roots: &[Complex64], a: Complex64, skip: Option<usize>) -> DdJet {
        let ad = DdComplex::from_c64(a);
        let mut out = DdJet::one();
        for (j, &r) in roots.iter().enumerate() {
            if skip == Some(j) {
                continue;
            }
            let mut lin = [DdComplex::ZERO; 6];
            lin[0] = ad.sub(DdComplex::from_c64(r));
            lin[1] = DdComplex::ONE;
            out = out.mul(DdJet { c: lin });
        }
        out
    }

    pub(crate) fn div_scalar(self, s: DdComplex) -> DdJet {
        let mut out = self;
        for c in out.c.iter_mut() {
            *c = c.div(s);
        }
        out
    }

    /// k-th derivative at the expansion point as a double-double complex.
    pub(crate) fn derivative(self, k: usize) -> DdComplex {
        const FACTORIALS: [f64; 6] = [1.0, 1.0, 2.0, 6.0, 24.0, 120.0];
        self.c[k].scale_f64(FACTORIALS[k])
    }
}
