//! L_{2n} divides L_{4n+1}: the cofactor M_n, the recurrences of the even,
//! odd and 4n+1 subsequences, and the T_2 value behind them.
//!
//! ```bash
//! cargo run --release --example divisibility
//! ```

use stern_lab::stern::{eoj_recurrence_check, quotient_m, t2_check, t2_is_2l7, t2_poly, verify_divisibility};

fn main() -> stern_lab::Result<()> {
    for n in 1..=3 {
        println!("M_{n}(q) = {}", quotient_m(n)?);
    }

    let ok = (1..=50).filter(|&n| verify_divisibility(n).unwrap().verdict).count();
    println!("L_(4n+1) = L_(2n) M_n with zero remainder for {ok}/50 indices");

    println!("T_2 = {}", t2_poly()?);
    println!("T_2 == 2 L_5: {}", t2_check()?);
    println!("T_2 == 2 L_7: {}", t2_is_2l7()?);

    for n in [2, 3, 10, 25] {
        let c = eoj_recurrence_check(n)?;
        println!(
            "n = {n:>2}: E {} O {} J(h = 2L_5) {} J(h = 2L_7) {}",
            c.even, c.odd, c.quarter, c.quarter_h_2l7
        );
    }
    Ok(())
}
