//! Hankel determinants of the L-sequence, computed two ways.
//!
//! ```bash
//! cargo run --example hankel
//! ```

use stern_lab::hankel::{det_cofactor, det_fraction_free, h2_step_check, hankel_matrix, verify_hankel_corollary};

fn main() -> stern_lab::Result<()> {
    let h = hankel_matrix(0, 2)?;
    for row in &h {
        let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
        println!("[ {} ]", cells.join(", "));
    }
    println!("det = {}", det_fraction_free(&h));

    let h4 = hankel_matrix(3, 4)?;
    println!("H_4^(3): Bareiss {}, cofactor {}", det_fraction_free(&h4), det_cofactor(&h4));

    for r in verify_hankel_corollary(5, 3)? {
        println!("k = {} m = {}: {} [{}]", r.k, r.m, r.determinant, r.closed_form_match);
    }
    println!("step relation for k <= 20: {}", (1..=20).all(|k| h2_step_check(k).unwrap()));
    Ok(())
}
