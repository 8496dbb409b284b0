//! The degree-5 jet ring: every derivative the construction needs comes
//! out of truncated Taylor arithmetic, never finite differences.

use hermite_fejer::jets::ComplexJet;
use num_complex::Complex64;

fn main() {
    // jet of p(z) = (z^2 - 1)(z - 2i) at the point 1 + i
    let a = Complex64::new(1.0, 1.0);
    let z = ComplexJet::variable(a);
    let one = ComplexJet::constant(Complex64::new(1.0, 0.0));
    let two_i = ComplexJet::constant(Complex64::new(0.0, 2.0));
    let p = (z * z - one) * (z - two_i);

    println!("p(z) = (z^2 - 1)(z - 2i) expanded at {a}:");
    for k in 0..=5 {
        println!("  p^({k})({a}) = {}", p.derivative(k));
    }

    // the same polynomial through its root list
    let roots = [
        Complex64::new(1.0, 0.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.0, 2.0),
    ];
    let q = ComplexJet::from_roots(&roots, a);
    let gap = (0..6).map(|k| (p.c[k] - q.c[k]).norm()).fold(0.0f64, f64::max);
    println!("\nmax coefficient gap vs the root-product route: {gap:.2e}");

    // third derivative of p^5 for free
    let p5 = p.pow(5);
    println!("(p^5)'''({a}) = {}", p5.derivative(3));
}
