//! Lagrange fundamental polynomials on the zeros of R, plus the per-node
//! derivative data the Hermite construction consumes: R'(z_k)..R^(5)(z_k)
//! and L_k'(z_k)..L_k''''(z_k).
//!
//! Everything is evaluated in the factor-cancelled form: L_k(z) is the
//! product of (z - z_j) over the other 2n+1 roots of R divided by R'(z_k),
//! so values at the nodes are exact with no 0/0 branch.

use crate::error::{Error, Result};
use crate::extended::DdJet;
use crate::jets::ComplexJet;
use crate::nodal::NodalSystem;
use num_complex::Complex64;

const DUPLICATE_TOL: f64 = 1e-14;

/// Per-node precomputation for one node of the system.
#[derive(Clone, Debug)]
pub struct NodeBasisData {
    pub node_index: usize,
    /// R'(z_k), R''(z_k), ..., R^(5)(z_k)
    pub r_derivs: [Complex64; 5],
    /// L_k'(z_k), ..., L_k''''(z_k)
    pub l_self_derivs: [Complex64; 4],
}

fn check_distinct(sys: &NodalSystem, k: usize) -> Result<()> {
    let zk = sys.nodes[k];
    for (j, &zj) in sys.nodes.iter().enumerate() {
        if j != k && (zk - zj).norm() < DUPLICATE_TOL {
            return Err(Error::DegenerateSystem { i: k.min(j), j: k.max(j) });
        }
    }
    Ok(())
}

/// Derivatives R'(z_k)..R^(5)(z_k) from the jet of the full linear-factor
/// product over all 2n+2 roots of R.
///
/// The product is accumulated in double-double so the stored values are
/// correctly rounded for the node set in use; downstream identities (the
/// partition of unity in particular) are verified against these to within
/// a few ulps.
pub fn r_derivs_at_node(sys: &NodalSystem, k: usize) -> Result<[Complex64; 5]> {
    check_distinct(sys, k)?;
    let jet = DdJet::from_roots(&sys.nodes, sys.nodes[k], None);
    let derivs = [
        jet.derivative(1).to_c64(),
        jet.derivative(2).to_c64(),
        jet.derivative(3).to_c64(),
        jet.derivative(4).to_c64(),
        jet.derivative(5).to_c64(),
    ];
    debug_assert!(jet.c[0].to_c64().norm() <= 1e-10 * derivs[0].norm());
    Ok(derivs)
}

/// R'(z_k) alone: the product of (z_k - z_j) over the other roots.
pub fn r_prime_at_node(sys: &NodalSystem, k: usize) -> Complex64 {
    let zk = sys.nodes[k];
    sys.nodes
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != k)
        .fold(Complex64::new(1.0, 0.0), |acc, (_, &zj)| acc * (zk - zj))
}

/// L_k(z) in factor-cancelled form; L_k(z_j) = delta_kj at the nodes.
pub fn lagrange_eval(sys: &NodalSystem, k: usize, z: Complex64) -> Complex64 {
    let num = sys
        .nodes
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != k)
        .fold(Complex64::new(1.0, 0.0), |acc, (_, &zj)| acc * (z - zj));
    num / r_prime_at_node(sys, k)
}

/// Jet of the factor-cancelled L_k at an arbitrary expansion point.
pub fn lagrange_jet(sys: &NodalSystem, k: usize, a: Complex64) -> ComplexJet {
    let others: Vec<Complex64> = sys
        .nodes
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != k)
        .map(|(_, &zj)| zj)
        .collect();
    let inv = Complex64::new(1.0, 0.0) / r_prime_at_node(sys, k);
    ComplexJet::from_roots(&others, a).scale(inv)
}

/// L_k'(z_k)..L_k''''(z_k) from the Taylor expansion of R at z_k:
/// L_k^(s)(z_k) = R^(s+1)(z_k) / ((s+1) R'(z_k)).
pub fn lagrange_self_derivs(sys: &NodalSystem, k: usize) -> Result<[Complex64; 4]> {
    let r = r_derivs_at_node(sys, k)?;
    Ok(self_derivs_from_r(&r))
}

pub(crate) fn self_derivs_from_r(r: &[Complex64; 5]) -> [Complex64; 4] {
    let mut out = [Complex64::new(0.0, 0.0); 4];
    for s in 1..=4usize {
        out[s - 1] = r[s] / ((s as f64 + 1.0) * r[0]);
    }
    out
}

/// Precomputation pass over all 2n+2 nodes.
pub fn build_basis_data(sys: &NodalSystem) -> Result<Vec<NodeBasisData>> {
    (0..sys.num_nodes())
        .map(|k| {
            let r_derivs = r_derivs_at_node(sys, k)?;
            Ok(NodeBasisData {
                node_index: k,
                r_derivs,
                l_self_derivs: self_derivs_from_r(&r_derivs),
            })
        })
        .collect()
}
