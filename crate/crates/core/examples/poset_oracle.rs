//! Intervals P_n of the Stern poset, their linear extensions and
//! descent generating functions, compared with b_n(q).
//!
//! ```bash
//! cargo run --example poset_oracle
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stern_lab::poset::{
    build_pn, distinct_random_labelings, enumerate_extensions, eulerian_polynomial, natural_labeling,
};
use stern_lab::stern::{bpoly, diatomic};

fn main() -> stern_lab::Result<()> {
    let p3 = build_pn(3)?;
    print!("P_3 covers:\n{}", p3.to_edge_list());
    let l = natural_labeling(&p3)?;
    for e in enumerate_extensions(&p3)? {
        let labels: Vec<u32> = e.iter().map(|&x| l.label(x)).collect();
        println!("  extension {labels:?}");
    }

    println!("{:>3} {:>5} {:>5} {:>4}  {:<20} b_n(q)", "n", "|P|", "e(P)", "b_n", "Eulerian");
    for n in 1..=12 {
        let p = build_pn(n)?;
        let eul = eulerian_polynomial(&p, &natural_labeling(&p)?)?;
        let e = enumerate_extensions(&p)?.len();
        println!("{n:>3} {:>5} {e:>5} {:>4}  {:<20} {}", p.len(), diatomic(n), eul.to_string(), bpoly(n)?);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let p = build_pn(13)?;
    let reference = eulerian_polynomial(&p, &natural_labeling(&p)?)?;
    for lab in distinct_random_labelings(&p, 3, 100, &mut rng) {
        assert_eq!(eulerian_polynomial(&p, &lab)?, reference);
    }
    println!("P_13: three random natural labelings give {reference}");
    Ok(())
}
