//! Runs the whole verification matrix and prints one line per check.
//!
//! ```bash
//! cargo run --release --example verification_suite
//! ```

use stern_lab::suite::CRITERIA;

fn main() -> stern_lab::Result<()> {
    let mut failed = 0;
    for check in CRITERIA {
        let r = check()?;
        failed += usize::from(!r.pass);
        println!("{}", r.line());
    }
    println!("{failed} of {} checks failed", CRITERIA.len());
    Ok(())
}
