//! Growth of the Lebesgue constants Lambda_n = max_|z|=1 sum_k |A_0k(z)|,
//! with an SVG chart written next to the working directory.
//!
//! The measured growth is polynomial, roughly n^(3/2), not logarithmic.
//! The peak sits near z = +-i, and the largest single term there is always
//! one of the two fundamental polynomials attached to the endpoint nodes
//! +-1: those come with correction coefficients of size ~n^p against an
//! O(1) denominator R'(+-1), so their tails across the circle dominate.

use hermite_fejer::experiments::lebesgue_constant;
use hermite_fejer::plot::line_chart_svg;
use hermite_fejer::{HermiteBasis, JacobiParams, NodalSystem};
use num_complex::Complex64;

fn main() -> hermite_fejer::Result<()> {
    let ns = [4usize, 8, 16, 32, 64];
    let mut points = Vec::new();

    println!("   n   Lambda_n      ratio   largest |A_0k(i)| (node)");
    let mut prev: Option<f64> = None;
    for &n in &ns {
        let sys = NodalSystem::build(JacobiParams::new(0.0, 0.0, n)?)?;
        let hb = HermiteBasis::build(sys)?;
        let lam = lebesgue_constant(&hb, 512);

        // the biggest single term at the peak point z = i
        let zi = Complex64::new(0.0, 1.0);
        let (k_max, biggest) = (0..hb.sys.num_nodes())
            .map(|k| (k, hb.a0k(k, zi).norm()))
            .fold((0, 0.0f64), |acc, it| if it.1 > acc.1 { it } else { acc });

        let ratio = prev.map(|p| lam / p).unwrap_or(f64::NAN);
        println!("{n:4}   {lam:10.2}   {ratio:5.2}   {biggest:10.2}  (k = {k_max})");
        prev = Some(lam);
        points.push((n as f64, lam));
    }

    let svg = line_chart_svg("Lebesgue constants", "n", "Lambda_n", &points);
    std::fs::write("lebesgue_growth.svg", svg).expect("write svg");
    println!("\nwrote lebesgue_growth.svg");
    Ok(())
}
