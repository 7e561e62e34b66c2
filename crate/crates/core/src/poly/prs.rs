//! Signed polynomial remainder sequences.
//!
//! Both reductions here keep every scale factor strictly positive, so the
//! sequences are Sturm sequences: `p_{i+1}` is a positive multiple of
//! `-rem(p_{i-1}, p_i)`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::IntPoly;
use crate::error::{Error, Result};

/// How each new remainder is shrunk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrsReduction {
    /// Divide out the integer content.
    Primitive,
    /// Divide by the magnitude of the subresultant factor `beta`; no gcds.
    Subresultant,
}

/// Signed remainder sequence starting `a, b`, ending with the last nonzero
/// term. Requires `deg a >= deg b` and `b != 0`.
pub fn sturm_prs(a: &IntPoly, b: &IntPoly, reduction: PrsReduction) -> Vec<IntPoly> {
    assert!(!b.is_zero(), "remainder sequence needs a nonzero divisor");
    assert!(a.degree() >= b.degree(), "remainder sequence needs deg a >= deg b");
    let mut seq = vec![a.clone(), b.clone()];
    // Magnitude of psi in the subresultant recurrence.
    let mut psi = BigInt::one();
    let mut beta = BigInt::one();
    let mut delta = a.degree().unwrap() - b.degree().unwrap();
    loop {
        let n = seq.len();
        let (prev, cur) = (&seq[n - 2], &seq[n - 1]);
        let prem = prev.abs_pseudo_rem(cur);
        if prem.is_zero() {
            break;
        }
        let next = match reduction {
            PrsReduction::Primitive => -prem.sign_preserving_primitive(),
            PrsReduction::Subresultant => {
                let q = -prem.div_scalar_exact(&beta);
                debug_assert!(q.scale(&beta) == -prem.clone());
                q
            }
        };
        if reduction == PrsReduction::Subresultant {
            let lc = cur.leading_coeff().unwrap().abs();
            // psi <- lc^delta / psi^(delta - 1)
            if delta > 0 {
                psi = num_traits::pow(lc.clone(), delta) / num_traits::pow(psi, delta - 1);
            }
            let next_delta = cur.degree().unwrap() - next.degree().unwrap();
            beta = lc * num_traits::pow(psi.clone(), next_delta);
            delta = next_delta;
        }
        let done = next.is_constant();
        seq.push(next);
        if done {
            break;
        }
    }
    seq
}

/// Greatest common divisor, primitive with positive leading coefficient.
pub fn primitive_gcd(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return Err(Error::GcdOfZeros),
        (false, true) => return Ok(a.primitive_part()),
        (true, false) => return Ok(b.primitive_part()),
        _ => {}
    }
    let (hi, lo) = if a.degree() >= b.degree() { (a, b) } else { (b, a) };
    let seq = sturm_prs(hi, lo, PrsReduction::Subresultant);
    let last = seq.last().unwrap();
    if last.is_constant() {
        return Ok(IntPoly::one());
    }
    Ok(last.primitive_part())
}
