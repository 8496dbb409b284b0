//! The correction coefficients c_1k..c_4k are computed twice: once from
//! the closed-form expressions in terms of L-derivatives, and once by
//! imposing the vanishing-derivative conditions directly (the oracle).
//! This prints the full comparison table; p = 1 always agrees, while the
//! higher orders expose a stable, reproducible discrepancy in the closed
//! forms that the condition checks attribute to the oracle's side.

use hermite_fejer::hermite::compare_coefficients;
use hermite_fejer::{HermiteBasis, JacobiParams, NodalSystem};

fn main() -> hermite_fejer::Result<()> {
    let sys = NodalSystem::build(JacobiParams::new(0.0, 0.0, 4)?)?;
    let hb = HermiteBasis::build(sys)?;

    let rows = compare_coefficients(&hb);
    println!("  k  p   closed form                      oracle                           rel diff");
    for r in &rows {
        println!(
            "{:3}  {}   {:+.8e}{:+.8e}i   {:+.8e}{:+.8e}i   {:.2e}",
            r.node_index, r.p, r.closed_form.re, r.closed_form.im, r.oracle.re, r.oracle.im,
            r.rel_diff
        );
    }

    let agreeing = rows.iter().filter(|r| r.rel_diff <= 1e-8).count();
    println!("\n{agreeing} of {} cells agree to 1e-8", rows.len());
    Ok(())
}
