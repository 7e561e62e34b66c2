//! Rows of Stern's triangle, the diatomic sequence and row generating functions.
//!
//! ```bash
//! cargo run --example stern_triangle
//! ```

use stern_lab::stern::{diatomic, gf_row_check, triangle_row};

fn main() -> stern_lab::Result<()> {
    for r in 0..=4 {
        let row = triangle_row(r)?;
        let cells: Vec<String> = row.values.iter().map(|v| v.to_string()).collect();
        println!("row {r} (sum {}): {}", row.sum(), cells.join(" "));
    }

    let b: Vec<u64> = (1..=20).map(diatomic).collect();
    println!("b_1..b_20 = {b:?}");

    for r in 1..=12 {
        assert!(gf_row_check(r)?);
    }
    println!("row r equals the coefficients of prod_(i<r) (1 + x^(2^i) + x^(2^(i+1))) for r = 1..12");
    Ok(())
}
