//! Size of the building blocks across the node index k: the suprema of
//! the Lagrange fundamental polynomials |L_k| on the circle and the
//! scaled correction coefficients |c_pk|.
//!
//! Note that max_|z|=1 |L_k(z)| >= |L_k(z_k)| = 1 for every k, since the
//! nodes themselves lie on the circle; the measured suprema sit close to
//! that floor for all k, so any scaling by a positive power of k grows
//! without bound.

use hermite_fejer::experiments::{check_cpk_growth, check_lk_growth};
use hermite_fejer::{HermiteBasis, JacobiParams, NodalSystem};

fn main() -> hermite_fejer::Result<()> {
    let sys = NodalSystem::build(JacobiParams::new(0.0, 0.0, 16)?)?;

    println!("   k   max|L_k|    max|L_k| * k^(3/2)");
    for row in check_lk_growth(&sys, 256) {
        println!("{:4}   {:.5}     {:10.4}", row.k, row.max_abs, row.scaled);
    }

    let hb = HermiteBasis::build(sys)?;
    println!("\n   p    max_k |c_pk|   max_k scaled |c_pk|");
    for p in 1..=4usize {
        let rows: Vec<_> = check_cpk_growth(&hb).into_iter().filter(|r| r.p == p).collect();
        let max_abs = rows.iter().map(|r| r.abs_cpk).fold(0.0f64, f64::max);
        let max_scaled = rows.iter().map(|r| r.scaled).fold(0.0f64, f64::max);
        println!("{p:4}    {max_abs:11.4e}    {max_scaled:11.4e}");
    }
    Ok(())
}
