//! Sturm-chain certificates that L_n(q) has only real zeros.
//!
//! ```bash
//! cargo run --release --example real_roots
//! ```

use stern_lab::roots::{certify_real_rooted, certify_with_id, squarefree_part, sturm_chain};
use stern_lab::stern::LSequence;
use stern_lab::IntPoly;

fn main() -> stern_lab::Result<()> {
    let l5 = IntPoly::from_i64s(&[63, 144, 36]);
    let chain = sturm_chain(&l5)?;
    for p in &chain.polys {
        println!("  {p}");
    }
    println!(
        "L_5: V(-inf) = {}, V(+inf) = {}, distinct real roots {}",
        chain.variations_at_neg_inf(),
        chain.variations_at_pos_inf(),
        chain.distinct_real_roots()
    );
    println!("squarefree part of L_5: {}", squarefree_part(&l5)?);

    let ls = LSequence::new(200);
    let mut failures = Vec::new();
    for n in 1..=200u64 {
        let r = certify_with_id(ls.get(n as usize), Some(n))?;
        if !r.real_rooted {
            failures.push(n);
        }
        if n % 50 == 0 {
            println!("L_{n}: degree {}, {} real roots", r.degree, r.distinct_real_roots);
        }
    }
    println!("non-real-rooted L_n for n <= 200: {failures:?}");

    let q2_plus_1 = IntPoly::from_i64s(&[1, 0, 1]);
    println!("q^2 + 1 real-rooted: {}", certify_real_rooted(&q2_plus_1)?.real_rooted);
    Ok(())
}
