//! The polynomials b_n(q) and the four-term identity they satisfy.
//!
//! ```bash
//! cargo run --release --example b_polynomials
//! ```

use stern_lab::stern::{bpoly, diatomic, key_identity_check};
use stern_lab::IntPoly;

fn main() -> stern_lab::Result<()> {
    for n in 1..=16 {
        let b = bpoly(n)?;
        println!("b_{n:<2}(q) = {:<16} b_{n}(1) = {}", b.to_string(), diatomic(n));
    }

    // Indices past the precomputed table go through the memoised recursion.
    let far = bpoly(1_000_000_007)?;
    println!("b_1000000007(q) has degree {:?} and value {} at q = 1", far.degree(), far.eval_int(&1.into()));

    let m_max = 10_000;
    let all = (1..=m_max).all(|m| key_identity_check(m).unwrap());
    println!("b_4m + b_4m+1 + b_4m+2 + b_4m+3 == (1+q) b_2m + 3 b_2m+1 + q b_2m+2 for m <= {m_max}: {all}");

    let sum4: IntPoly = (4..8).map(|k| bpoly(k).unwrap()).fold(IntPoly::zero(), |a, b| a + b);
    println!("at m = 1 both sides are {sum4}");
    Ok(())
}
