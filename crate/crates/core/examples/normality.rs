//! Exact moments of the coefficient law of L_n(q) and its distance to the
//! normal law, printed as CSV.
//!
//! ```bash
//! cargo run --release --example normality > normality.csv
//! ```

use stern_lab::normality::{closed_form_check, derived_sigma2, exact_moments, normality_report, printed_sigma2};

fn main() -> stern_lab::Result<()> {
    for n in [2, 4, 10] {
        let m = exact_moments(n)?;
        println!(
            "# n = {n}: L(1) = {}, L'(1) = {}, L''(1) = {}, mu = {}, sigma^2 = {} (2(3n+1)/81 = {}, 2(n-1)(2n+7)/81 = {})",
            m.value_at_1,
            m.d1_at_1,
            m.d2_at_1,
            m.mu,
            m.sigma2,
            derived_sigma2(n),
            printed_sigma2(n)
        );
    }
    println!("# closed forms at n = 1: {:?}", closed_form_check(1)?);

    println!("n,mu,sigma2,clt_sup,llt_sup");
    let ns: Vec<u64> = [5, 10, 25, 50, 100, 200].to_vec();
    for (m, d) in normality_report(&ns)? {
        println!("{},{},{},{:.6e},{:.6e}", m.n, m.mu, m.sigma2, d.clt_sup, d.llt_sup);
    }
    Ok(())
}
