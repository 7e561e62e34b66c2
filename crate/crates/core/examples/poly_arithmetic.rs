//! Exact polynomial arithmetic over Z[q]: division, gcd, remainder sequences.
//!
//! ```bash
//! cargo run --example poly_arithmetic
//! ```

use stern_lab::poly::{primitive_gcd, sturm_prs, PrsReduction};
use stern_lab::IntPoly;

fn main() -> stern_lab::Result<()> {
    let l4: IntPoly = "[31, 46, 4]".parse()?;
    let l2 = IntPoly::from_i64s(&[7, 2]);
    println!("L_4 = {l4}");
    println!("L_4 * L_2 = {}", &l4 * &l2);
    println!("L_4' = {}", l4.derivative());

    let d = l4.divrem(&l2)?;
    let show = |cs: &[stern_lab::Rational]| cs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ");
    println!("L_4 / L_2: quotient [{}], remainder [{}]", show(d.quotient.coeffs()), show(d.remainder.coeffs()));

    let a = &IntPoly::from_i64s(&[1, 1]).pow(2) * &IntPoly::from_i64s(&[-3, 1]);
    let b = &IntPoly::from_i64s(&[1, 1]) * &IntPoly::from_i64s(&[5, 0, 1]);
    println!("gcd({a}, {b}) = {}", primitive_gcd(&a, &b)?);

    for reduction in [PrsReduction::Primitive, PrsReduction::Subresultant] {
        let chain = sturm_prs(&l4, &l4.derivative(), reduction);
        let shown: Vec<String> = chain.iter().map(|p| p.to_list_string()).collect();
        println!("{reduction:?} chain: {}", shown.join("  "));
    }
    Ok(())
}
