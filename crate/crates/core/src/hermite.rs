//! The fifth-order Hermite-Fejér construction: per-node coefficients
//! c_1k..c_4k, the fundamental polynomials A_0k, and the interpolation
//! operator Q_n.
//!
//! Two independent routes produce the coefficients. The closed forms are
//! implemented verbatim; the oracle imposes the vanishing-derivative
//! conditions directly on jets of [L_k]^5 and A_pk = R^p L_k^(5-p), which
//! yields a triangular 4x4 system solved by forward substitution. The
//! oracle is the route the operator actually uses; the closed forms exist
//! for cross-validation and the comparison report.

use crate::basis::{self, NodeBasisData};
use crate::error::{Error, Result};
use crate::extended::{DdComplex, DdJet};
use crate::jets::ComplexJet;
use crate::nodal::NodalSystem;
use num_complex::Complex64;

/// The four per-node correction coefficients.
#[derive(Clone, Copy, Debug)]
pub struct HermiteCoefficients {
    pub node_index: usize,
    /// c_1k, c_2k, c_3k, c_4k
    pub c: [Complex64; 4],
}

/// Closed-form coefficients from the node's derivative data.
pub fn coeffs_closed_form(data: &NodeBasisData) -> HermiteCoefficients {
    let r1 = data.r_derivs[0];
    let [l1, l2, l3, l4] = data.l_self_derivs;
    let c1 = -5.0 * l1 / r1;
    let c2 = -5.0 / (2.0 * r1 * r1) * (l2 + 10.0 * l1 * l1);
    let c3 = -5.0 / (6.0 * r1.powu(3)) * (-18.0 * l2 * l1 + l3 - 198.0 * l1.powu(3));
    let c4 = -5.0 / (24.0 * r1.powu(4))
        * (l4 - 24.0 * l3 * l1 + l2 * l2 - 156.0 * l1 * l1 * l2 + 2544.0 * l1.powu(4));
    HermiteCoefficients { node_index: data.node_index, c: [c1, c2, c3, c4] }
}

/// Independent determination of c_1k..c_4k from the interpolation
/// conditions themselves.
///
/// The jet of A_pk at z_k vanishes below order p, so requiring derivative
/// orders 1..4 of A_0k to vanish gives a triangular system with diagonal
/// entries p! [R'(z_k)]^p; forward substitution solves it. The whole solve
/// runs in double-double: the back-substitution cancels several digits at
/// the outer nodes, and the evaluation-time identities (partition of
/// unity above all) are only as good as these coefficients.
pub fn coeffs_oracle(sys: &NodalSystem, k: usize) -> Result<HermiteCoefficients> {
    oracle_with_gamma(sys, k).map(|(coeffs, _)| coeffs)
}

/// The oracle solve, also returning gamma_p = c_p [R'(z_k)]^p, the
/// coefficients of the local quartic bracket used by the evaluator.
fn oracle_with_gamma(
    sys: &NodalSystem,
    k: usize,
) -> Result<(HermiteCoefficients, [Complex64; 4])> {
    let zk = sys.nodes[k];
    let num_jet = DdJet::from_roots(&sys.nodes, zk, Some(k));
    let rp = num_jet.c[0];
    if rp.to_c64().norm() == 0.0 {
        return Err(Error::DegenerateSystem { i: k, j: k });
    }
    let l_jet = num_jet.div_scalar(rp);
    let r_jet = DdJet::from_roots(&sys.nodes, zk, None);
    let l5 = l_jet.pow(5);
    let a_jets: Vec<DdJet> = (1..=4u32).map(|p| r_jet.pow(p).mul(l_jet.pow(5 - p))).collect();
    let mut c = [DdComplex::ZERO; 4];
    for r in 1..=4usize {
        let mut rhs = l5.c[r].neg();
        for p in 1..r {
            rhs = rhs.sub(c[p - 1].mul(a_jets[p - 1].c[r]));
        }
        let diag = a_jets[r - 1].c[r];
        if diag.to_c64().norm() == 0.0 {
            return Err(Error::DegenerateSystem { i: k, j: k });
        }
        c[r - 1] = rhs.div(diag);
    }
    let mut rp_pow = DdComplex::ONE;
    let mut gamma = [Complex64::new(0.0, 0.0); 4];
    let mut out = [Complex64::new(0.0, 0.0); 4];
    for p in 0..4 {
        rp_pow = rp_pow.mul(rp);
        gamma[p] = c[p].mul(rp_pow).to_c64();
        out[p] = c[p].to_c64();
    }
    Ok((HermiteCoefficients { node_index: k, c: out }, gamma))
}

/// A nodal system together with everything needed to evaluate the A_0k.
#[derive(Clone, Debug)]
pub struct HermiteBasis {
    pub sys: NodalSystem,
    pub node_data: Vec<NodeBasisData>,
    /// Oracle-determined coefficients, one entry per node.
    pub coeffs: Vec<HermiteCoefficients>,
    /// gamma_pk = c_pk [R'(z_k)]^p: A_0k(z) = [L_k(z)]^5 (1 + sum_p gamma_pk (z - z_k)^p).
    pub gamma: Vec<[Complex64; 4]>,
}

impl HermiteBasis {
    pub fn build(sys: NodalSystem) -> Result<Self> {
        let node_data = basis::build_basis_data(&sys)?;
        let mut coeffs = Vec::with_capacity(sys.num_nodes());
        let mut gamma = Vec::with_capacity(sys.num_nodes());
        for k in 0..sys.num_nodes() {
            let (c, g) = oracle_with_gamma(&sys, k)?;
            coeffs.push(c);
            gamma.push(g);
        }
        Ok(HermiteBasis { sys, node_data, coeffs, gamma })
    }

    fn lagrange_with_cached_denominator(&self, k: usize, z: Complex64) -> Complex64 {
        let num = self
            .sys
            .nodes
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .fold(Complex64::new(1.0, 0.0), |acc, (_, &zj)| acc * (z - zj));
        num / self.node_data[k].r_derivs[0]
    }

    fn a0k_from_parts(&self, k: usize, l: Complex64, r: Complex64) -> Complex64 {
        // L^5 + sum_p c_pk R^p L^(5-p)
        let c = &self.coeffs[k].c;
        let l2 = l * l;
        let l4 = l2 * l2;
        let r2 = r * r;
        l4 * l + c[0] * r * l4 + c[1] * r2 * l2 * l + c[2] * r2 * r * l2 + c[3] * r2 * r2 * l
    }

    /// A_0k(z).
    pub fn a0k(&self, k: usize, z: Complex64) -> Complex64 {
        self.a0k_with_r(k, z, self.sys.eval_r(z))
    }

    /// A_0k(z) with R(z) supplied by the caller, so one evaluation of R
    /// serves every node.
    ///
    /// Rewriting through R(z) = R'(z_k)(z - z_k) L_k(z) gives
    /// A_0k = [L_k]^5 (1 + sum_p gamma_pk (z - z_k)^p), and the rounding
    /// error of the shared R becomes a common relative factor that cancels
    /// in alternating sums such as the partition of unity. Within a tiny
    /// neighbourhood of z_k the factor-cancelled product form takes over
    /// (at z_k itself the quotient is 0/0).
    pub fn a0k_with_r(&self, k: usize, z: Complex64, r: Complex64) -> Complex64 {
        let t = z - self.sys.nodes[k];
        if t.norm() < 1e-12 {
            let l = self.lagrange_with_cached_denominator(k, z);
            return self.a0k_from_parts(k, l, r);
        }
        let rp = self.node_data[k].r_derivs[0];
        let l = r / (t * rp);
        let g = &self.gamma[k];
        let bracket =
            (((g[3] * t + g[2]) * t + g[1]) * t + g[0]) * t + Complex64::new(1.0, 0.0);
        let l2 = l * l;
        l2 * l2 * l * bracket
    }

    /// Degree-5 jet of A_0k at a.
    pub fn a0k_jet(&self, k: usize, a: Complex64) -> ComplexJet {
        let l = basis::lagrange_jet(&self.sys, k, a);
        let r = ComplexJet::from_roots(&self.sys.nodes, a);
        let c = &self.coeffs[k].c;
        let mut out = l.pow(5);
        for p in 1..=4u32 {
            out = out + (r.pow(p) * l.pow(5 - p)).scale(c[p as usize - 1]);
        }
        out
    }

    /// Jets of every A_0k at one expansion point, sharing the linear-factor
    /// products through prefix/suffix tables (O(n) jet multiplies per point
    /// instead of O(n^2)).
    pub fn a0k_jets_all(&self, a: Complex64) -> Vec<ComplexJet> {
        let m = self.sys.num_nodes();
        let one = ComplexJet::constant(Complex64::new(1.0, 0.0));
        let lin: Vec<ComplexJet> = self
            .sys
            .nodes
            .iter()
            .map(|&zj| {
                let mut j = ComplexJet::variable(a);
                j.c[0] -= zj;
                j
            })
            .collect();
        let mut prefix = vec![one; m + 1];
        for i in 0..m {
            prefix[i + 1] = prefix[i] * lin[i];
        }
        let mut suffix = vec![one; m + 1];
        for i in (0..m).rev() {
            suffix[i] = lin[i] * suffix[i + 1];
        }
        let r = prefix[m];
        (0..m)
            .map(|k| {
                let inv = Complex64::new(1.0, 0.0) / self.node_data[k].r_derivs[0];
                let l = (prefix[k] * suffix[k + 1]).scale(inv);
                let c = &self.coeffs[k].c;
                let mut out = l.pow(5);
                for p in 1..=4u32 {
                    out = out + (r.pow(p) * l.pow(5 - p)).scale(c[p as usize - 1]);
                }
                out
            })
            .collect()
    }

    /// Attaches sampled node values, producing the operator Q_n.
    pub fn interpolate(&self, values: Vec<Complex64>) -> Result<Interpolant<'_>> {
        if values.len() != self.sys.num_nodes() {
            return Err(Error::ValueCount { expected: self.sys.num_nodes(), got: values.len() });
        }
        Ok(Interpolant { basis: self, values })
    }
}

/// Q_n(z) = sum_k f(z_k) A_0k(z).
#[derive(Clone, Debug)]
pub struct Interpolant<'a> {
    pub basis: &'a HermiteBasis,
    pub values: Vec<Complex64>,
}

fn neumaier_add(sum: &mut f64, comp: &mut f64, v: f64) {
    let t = *sum + v;
    if sum.abs() >= v.abs() {
        *comp += (*sum - t) + v;
    } else {
        *comp += (v - t) + *sum;
    }
    *sum = t;
}

impl Interpolant<'_> {
    /// The terms can exceed the result by many orders of magnitude (the
    /// fundamental polynomials are large between nodes and cancel), so the
    /// sum is Neumaier-compensated.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let r = self.basis.sys.eval_r(z);
        let (mut sre, mut cre) = (0.0f64, 0.0f64);
        let (mut sim, mut cim) = (0.0f64, 0.0f64);
        for (k, &fk) in self.values.iter().enumerate() {
            let term = fk * self.basis.a0k_with_r(k, z, r);
            neumaier_add(&mut sre, &mut cre, term.re);
            neumaier_add(&mut sim, &mut cim, term.im);
        }
        Complex64::new(sre + cre, sim + cim)
    }

    pub fn eval_jet(&self, z: Complex64) -> ComplexJet {
        let jets = self.basis.a0k_jets_all(z);
        self.values
            .iter()
            .zip(jets)
            .fold(ComplexJet::zero(), |acc, (&fk, jet)| acc + jet.scale(fk))
    }

    /// Residuals of the interpolation conditions at every node.
    pub fn verify_conditions(&self) -> ConditionReport {
        let n = self.basis.sys.n() as f64;
        let mut per_node = Vec::with_capacity(self.basis.sys.num_nodes());
        let mut max_value = 0.0f64;
        let mut max_deriv = 0.0f64;
        for (k, &zk) in self.basis.sys.nodes.iter().enumerate() {
            let jet = self.eval_jet(zk);
            let value_residual = (jet.c[0] - self.values[k]).norm();
            let mut scaled = [0.0f64; 4];
            for (r, slot) in scaled.iter_mut().enumerate() {
                *slot = jet.derivative(r + 1).norm() / n.powi(r as i32 + 1);
            }
            max_value = max_value.max(value_residual);
            max_deriv = max_deriv.max(scaled.iter().cloned().fold(0.0, f64::max));
            per_node.push(NodeResiduals { node_index: k, value_residual, scaled_derivs: scaled });
        }
        ConditionReport { per_node, max_value_residual: max_value, max_scaled_deriv_residual: max_deriv }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct NodeResiduals {
    pub node_index: usize,
    pub value_residual: f64,
    /// |Q^(r)(z_k)| / n^r for r = 1..4
    pub scaled_derivs: [f64; 4],
}

#[derive(Clone, Debug)]
pub struct ConditionReport {
    pub per_node: Vec<NodeResiduals>,
    pub max_value_residual: f64,
    pub max_scaled_deriv_residual: f64,
}

/// One row of the closed-form vs oracle comparison.
#[derive(Clone, Copy, Debug)]
pub struct CoeffComparison {
    pub node_index: usize,
    /// p in 1..=4
    pub p: usize,
    pub closed_form: Complex64,
    pub oracle: Complex64,
    pub rel_diff: f64,
}

/// Full per-(p,k) comparison table between the printed closed forms and
/// the condition-derived oracle values.
pub fn compare_coefficients(hb: &HermiteBasis) -> Vec<CoeffComparison> {
    let mut rows = Vec::with_capacity(4 * hb.sys.num_nodes());
    for k in 0..hb.sys.num_nodes() {
        let cf = coeffs_closed_form(&hb.node_data[k]);
        let or = hb.coeffs[k];
        for p in 1..=4usize {
            let (a, b) = (cf.c[p - 1], or.c[p - 1]);
            let scale = a.norm().max(b.norm());
            let rel_diff = if scale < 1e-14 { 0.0 } else { (a - b).norm() / scale };
            rows.push(CoeffComparison {
                node_index: k,
                p,
                closed_form: a,
                oracle: b,
                rel_diff,
            });
        }
    }
    rows
}
