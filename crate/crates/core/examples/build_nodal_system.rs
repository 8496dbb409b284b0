//! Build a nodal system and inspect it: the Gauss-Jacobi zeros, their
//! vertical projections onto the unit circle, and the node polynomial W.

use hermite_fejer::jacobi::{jacobi_eval_complex, leading_constant};
use hermite_fejer::nodal::szego_x;
use hermite_fejer::{JacobiParams, NodalSystem};
use num_complex::Complex64;

fn main() -> hermite_fejer::Result<()> {
    let params = JacobiParams::new(0.3, -0.2, 6)?;
    let sys = NodalSystem::build(params)?;

    println!("nodal system for alpha=0.3, beta=-0.2, n=6 ({} nodes):", sys.num_nodes());
    for (k, z) in sys.nodes.iter().enumerate() {
        println!("  z_{k:2} = {:+.15} {:+.15}i   |z| - 1 = {:+.2e}", z.re, z.im, z.norm() - 1.0);
    }

    // each projected node recovers its x through the inverse Szego map
    let worst = sys
        .interior()
        .iter()
        .map(|&z| (szego_x(z).unwrap().im).abs())
        .fold(0.0f64, f64::max);
    println!("\nmax |Im x(z_k)| over interior nodes: {worst:.2e}");

    // W(z) = K_n P_n((1+z^2)/2z) z^n away from the origin
    let z = Complex64::new(0.9, 0.8);
    let lhs = sys.eval_w(z);
    let k_n = leading_constant(&sys.params).value();
    let rhs = k_n * jacobi_eval_complex(&sys.params, szego_x(z)?) * z.powu(sys.n() as u32);
    println!("W({z})            = {lhs}");
    println!("K_n P_n(x(z)) z^n = {rhs}");
    println!("relative gap      = {:.2e}", (lhs - rhs).norm() / lhs.norm());
    Ok(())
}
