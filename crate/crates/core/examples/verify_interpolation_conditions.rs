//! Interpolate random node values and check the defining conditions:
//! Q(z_k) = f_k and Q', Q'', Q''', Q'''' all vanish at every node.

use hermite_fejer::{HermiteBasis, JacobiParams, NodalSystem};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> hermite_fejer::Result<()> {
    let sys = NodalSystem::build(JacobiParams::new(0.0, 0.0, 8)?)?;
    let hb = HermiteBasis::build(sys)?;

    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let values: Vec<Complex64> = (0..hb.sys.num_nodes())
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let q = hb.interpolate(values)?;

    let report = q.verify_conditions();
    println!("node   |Q(z_k) - f_k|   |Q'|/n      |Q''|/n^2   |Q'''|/n^3  |Q''''|/n^4");
    for row in &report.per_node {
        println!(
            "{:4}   {:.3e}       {:.3e}   {:.3e}   {:.3e}   {:.3e}",
            row.node_index,
            row.value_residual,
            row.scaled_derivs[0],
            row.scaled_derivs[1],
            row.scaled_derivs[2],
            row.scaled_derivs[3],
        );
    }
    println!("\nworst value residual:            {:.3e}", report.max_value_residual);
    println!("worst scaled derivative residual: {:.3e}", report.max_scaled_deriv_residual);
    Ok(())
}
