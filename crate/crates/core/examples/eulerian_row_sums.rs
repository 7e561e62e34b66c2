//! L_n(q) by direct summation of b-polynomials and by its three-term
//! recurrence, with the Binet form and the generating series.
//!
//! ```bash
//! cargo run --release --example eulerian_row_sums
//! ```

use stern_lab::stern::{binet_check, lpoly_def_upto, phi_series_check, LSequence};

fn main() -> stern_lab::Result<()> {
    let direct = lpoly_def_upto(16)?;
    let rec = LSequence::new(16);
    for (i, d) in direct.iter().enumerate() {
        let n = i + 1;
        let same = d == rec.get(n);
        if n <= 6 {
            println!("L_{n}(q) = {d}");
        }
        assert!(same, "definition and recurrence disagree at n = {n}");
    }
    println!("definition == recurrence for n <= 16");

    println!("Binet form holds for n <= 60: {}", (1..=60).all(|n| binet_check(n).unwrap()));
    println!("x(2(q-1)x + 3)/(1 - 3x - 2(q-1)x^2) matches through x^15: {}", phi_series_check(15)?);

    let l200 = LSequence::new(200);
    let top = l200.get(200);
    println!("L_200: degree {:?}, largest coefficient has {} bits", top.degree(), top.max_coeff_bits());
    Ok(())
}
