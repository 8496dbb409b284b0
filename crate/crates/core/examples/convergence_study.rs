//! Sup-norm error of Q_n against the study functions over an n-ladder,
//! with the modulus of continuity omega(f, 1/n) alongside, emitted as CSV.

use hermite_fejer::experiments::{
    convergence_records, convergence_study, write_csv, TestFunction,
};

fn main() -> hermite_fejer::Result<()> {
    let ns = [4usize, 8, 16, 32];
    for tf in [TestFunction::Exp, TestFunction::Pole, TestFunction::Rough] {
        println!("# function: {}", tf.name());
        println!("#    n    sup_error      omega(1/n)     sup/(omega log n)");
        let rows = convergence_study(|z| tf.eval(z), 0.0, 0.0, &ns, 256)?;
        for r in &rows {
            println!("# {:4}    {:11.5e}    {:11.5e}    {:11.3e}", r.n, r.sup_error, r.omega, r.ratio);
        }
        let records = convergence_records(0.0, 0.0, &rows, false);
        let mut buf = Vec::new();
        write_csv(&records, &mut buf).expect("csv");
        print!("{}", String::from_utf8(buf).unwrap());
        println!();
    }
    Ok(())
}
