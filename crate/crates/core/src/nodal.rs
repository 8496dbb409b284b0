//! Nodal system on the unit circle: the Gauss-Jacobi zeros projected
//! vertically onto the circle, their conjugates, and the endpoints +-1,
//! together with the node polynomials W and R.

use crate::error::{Error, Result};
use crate::jacobi::{self, JacobiParams};
use num_complex::Complex64;

/// The 2n+2 interpolation nodes.
///
/// Index layout: node 0 is +1, node 2n+1 is -1, nodes 1..=n are the
/// projections x_k + i sqrt(1-x_k^2) (increasing x_k, upper half-plane),
/// and node n+k is the conjugate of node k.
#[derive(Clone, Debug)]
pub struct NodalSystem {
    pub params: JacobiParams,
    pub x_zeros: Vec<f64>,
    pub nodes: Vec<Complex64>,
}

/// The Szego transform x = (1+z^2)/(2z); on the unit circle it returns Re z.
pub fn szego_x(z: Complex64) -> Result<Complex64> {
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::SzegoAtOrigin);
    }
    Ok((1.0 + z * z) / (2.0 * z))
}

impl NodalSystem {
    /// Projects the Gauss-Jacobi point system onto the unit circle.
    pub fn build(params: JacobiParams) -> Result<Self> {
        let x_zeros = jacobi::jacobi_zeros(&params)?;
        let n = params.n;
        let mut nodes = vec![Complex64::new(0.0, 0.0); 2 * n + 2];
        nodes[0] = Complex64::new(1.0, 0.0);
        nodes[2 * n + 1] = Complex64::new(-1.0, 0.0);
        for (k, &x) in x_zeros.iter().enumerate() {
            let y = (1.0 - x * x).sqrt();
            nodes[k + 1] = Complex64::new(x, y);
            nodes[n + k + 1] = Complex64::new(x, -y);
        }
        Ok(NodalSystem { params, x_zeros, nodes })
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    pub fn num_nodes(&self) -> usize {
        2 * self.params.n + 2
    }

    /// The 2n interior nodes (everything except +-1).
    pub fn interior(&self) -> &[Complex64] {
        &self.nodes[1..=2 * self.params.n]
    }

    /// W(z): the monic product over the 2n interior nodes.
    pub fn eval_w(&self, z: Complex64) -> Complex64 {
        self.interior().iter().fold(Complex64::new(1.0, 0.0), |acc, &zk| acc * (z - zk))
    }

    /// R(z) = (z^2 - 1) W(z); vanishes at all 2n+2 nodes.
    pub fn eval_r(&self, z: Complex64) -> Complex64 {
        (z * z - 1.0) * self.eval_w(z)
    }
}
