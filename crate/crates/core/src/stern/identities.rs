//! Polynomial identities satisfied by b_n(q) and L_n(q), each checked
//! exactly and returned as a verdict.

use serde::Serialize;

use super::bpoly::bpoly;
use super::lpoly::{two_q_minus_two, LSequence};
use crate::error::Result;
use crate::guards::check_min;
use crate::poly::IntPoly;

/// `5 + 4q`
pub fn coeff_a() -> IntPoly {
    IntPoly::from_i64s(&[5, 4])
}

/// `-4(q - 1)^2`
pub fn coeff_b() -> IntPoly {
    IntPoly::from_i64s(&[-4, 8, -4])
}

/// b_4m + b_4m+1 + b_4m+2 + b_4m+3 == (1+q) b_2m + 3 b_2m+1 + q b_2m+2
pub fn key_identity_check(m: u64) -> Result<bool> {
    check_min("m", m, 1)?;
    let mut lhs = IntPoly::zero();
    for i in 0..4 {
        lhs += &bpoly(4 * m + i)?;
    }
    let rhs = &(&(&IntPoly::from_i64s(&[1, 1]) * &bpoly(2 * m)?)
        + &bpoly(2 * m + 1)?.scale(&3.into()))
        + &bpoly(2 * m + 2)?.shift(1);
    Ok(lhs == rhs)
}

/// First `terms` coefficients of `num / den` as power series in x, with
/// polynomial-in-q coefficients. `den[0]` must be 1 or -1.
pub fn series_quotient(num: &[IntPoly], den: &[IntPoly], terms: usize) -> Vec<IntPoly> {
    let d0 = den.first().expect("empty denominator series");
    let sign = if *d0 == IntPoly::one() {
        false
    } else if *d0 == IntPoly::constant(-1) {
        true
    } else {
        panic!("denominator series must start with a unit");
    };
    let mut out: Vec<IntPoly> = Vec::with_capacity(terms);
    for n in 0..terms {
        let mut c = num.get(n).cloned().unwrap_or_default();
        for i in 1..=n.min(den.len().saturating_sub(1)) {
            c -= &(&den[i] * &out[n - i]);
        }
        out.push(if sign { -c } else { c });
    }
    out
}

/// Expands x(2(q-1)x + 3) / (1 - 3x - 2(q-1)x^2) and compares the
/// coefficients of x^1 .. x^N with L_1 .. L_N.
pub fn phi_series_check(terms: u64) -> Result<bool> {
    check_min("N", terms, 1)?;
    let c = two_q_minus_two();
    let num = [IntPoly::zero(), IntPoly::constant(3), c.clone()];
    let den = [IntPoly::one(), IntPoly::constant(-3), -c];
    let series = series_quotient(&num, &den, terms as usize + 1);
    let ls = LSequence::new(terms as usize);
    Ok(series[0].is_zero() && (1..=terms as usize).all(|n| &series[n] == ls.get(n)))
}

/// F_0 .. F_len with F_0 = 0, F_1 = 1, F_{m+1} = 3 F_m + 2(q-1) F_{m-1}:
/// the polynomial form of (r^m - s^m)/(r - s) where r + s = 3, rs = -2(q-1).
pub fn f_sequence(len: usize) -> Vec<IntPoly> {
    let c = two_q_minus_two();
    let mut f = vec![IntPoly::zero(), IntPoly::one()];
    while f.len() <= len {
        let m = f.len();
        let next = &f[m - 1].scale(&3.into()) + &(&c * &f[m - 2]);
        f.push(next);
    }
    f.truncate(len + 1);
    f
}

/// L_n == 3 F_n + 2(q-1) F_{n-1}
pub fn binet_check(n: u64) -> Result<bool> {
    check_min("n", n, 1)?;
    let n = n as usize;
    let f = f_sequence(n);
    let rhs = &f[n].scale(&3.into()) + &(&two_q_minus_two() * &f[n - 1]);
    Ok(&rhs == LSequence::new(n).get(n))
}

/// Verdicts for the three recurrences of the subsequences
/// E_n = L_2n, O_n = L_2n-1 and J_n = L_4n+1 at one index.
///
/// The J recurrence is evaluated twice: with h = 2 O_3 = 2 L_5 (`quarter`)
/// and with h = 2 O_4 = 2 L_7 (`quarter_h_2l7`). Only the second is an
/// identity; expanding L_{4n+5} = O_{2n+3} through the O recurrence
/// telescopes down to O_4, not O_3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EojCheck {
    pub n: u64,
    pub even: bool,
    pub odd: bool,
    pub quarter: bool,
    pub quarter_h_2l7: bool,
}

impl EojCheck {
    /// All three recurrences with h = 2 O_3.
    pub fn holds(&self) -> bool {
        self.even && self.odd && self.quarter
    }

    /// All three recurrences with h = 2 O_4.
    pub fn holds_with_2l7(&self) -> bool {
        self.even && self.odd && self.quarter_h_2l7
    }
}

/// Checks, at index `n >= 2`:
/// E_{n+1} = a E_n + b E_{n-1},
/// O_{n+1} = a O_n + b O_{n-1},
/// J_{n+1} = a b^{n-1} h + a^2 J_n + b^2 J_{n-1} + sum_{k=2}^{n-1} 2 a^2 b^{n-k} J_k,
/// with a = 5 + 4q, b = -4(q-1)^2 and h = 2 O_3 (see [`EojCheck`]).
pub fn eoj_recurrence_check(n: u64) -> Result<EojCheck> {
    check_min("n", n, 2)?;
    let n = n as usize;
    let ls = LSequence::new(4 * n + 5);
    let even = |k: usize| ls.get(2 * k);
    let odd = |k: usize| ls.get(2 * k - 1);
    let quarter = |k: usize| ls.get(4 * k + 1);
    let (a, b) = (coeff_a(), coeff_b());
    let two = 2.into();
    let h_l5 = odd(3).scale(&two);
    let h_l7 = odd(4).scale(&two);

    let two_term = |cur: &IntPoly, prev: &IntPoly| &(&a * cur) + &(&b * prev);
    let even_ok = two_term(even(n), even(n - 1)) == *even(n + 1);
    let odd_ok = two_term(odd(n), odd(n - 1)) == *odd(n + 1);

    let a2 = &a * &a;
    let b_pow = |e: usize| b.pow(e as u32);
    let mut tail = &(&a2 * quarter(n)) + &(&b_pow(2) * quarter(n - 1));
    for k in 2..n {
        tail += &(&(&a2 * &b_pow(n - k)) * quarter(k)).scale(&two);
    }
    let lead = &a * &b_pow(n - 1);
    let target = quarter(n + 1);
    let quarter_ok = &(&lead * &h_l5) + &tail == *target;
    let quarter_h_2l7 = &(&lead * &h_l7) + &tail == *target;

    Ok(EojCheck {
        n: n as u64,
        even: even_ok,
        odd: odd_ok,
        quarter: quarter_ok,
        quarter_h_2l7,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_identity_small_and_large() {
        for m in [1, 2, 3, 17, 1000] {
            assert!(key_identity_check(m).unwrap(), "m = {m}");
        }
        assert!(key_identity_check(0).is_err());
    }

    #[test]
    fn key_identity_by_hand_at_one() {
        // b_4..b_7 = 1, 1+2q, 1+q, 1+2q, summing to 4 + 5q;
        // (1+q) b_2 + 3 b_3 + q b_4 = (1+q) + (3+3q) + q = 4 + 5q.
        let lhs: IntPoly = (4..8).map(|k| bpoly(k).unwrap()).fold(IntPoly::zero(), |a, b| a + b);
        assert_eq!(lhs, IntPoly::from_i64s(&[4, 5]));
    }

    #[test]
    fn phi_series_examples() {
        for n in [1, 2, 15] {
            assert!(phi_series_check(n).unwrap(), "N = {n}");
        }
    }

    #[test]
    fn series_quotient_geometric() {
        // 1 / (1 - x) = 1 + x + x^2 + ...
        let s = series_quotient(&[IntPoly::one()], &[IntPoly::one(), IntPoly::constant(-1)], 5);
        assert!(s.iter().all(|c| *c == IntPoly::one()));
    }

    #[test]
    fn binet_examples() {
        let f = f_sequence(3);
        assert_eq!(f[2], IntPoly::constant(3));
        for n in [1, 2, 3, 50] {
            assert!(binet_check(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn eoj_examples() {
        for n in [2, 3, 12] {
            let c = eoj_recurrence_check(n).unwrap();
            assert!(c.even && c.odd, "{c:?}");
            assert!(c.holds_with_2l7(), "{c:?}");
            // h = 2 L_5 leaves a nonzero residual at every index.
            assert!(!c.quarter, "{c:?}");
        }
        assert!(eoj_recurrence_check(1).is_err());
    }

    #[test]
    fn quarter_recurrence_residual_at_two() {
        // With h = 2 L_5, rhs - J_3 = 2ab(L_5 - L_7); sympy expands it to
        // 3072q^6 + 21888q^5 + 6048q^4 - 47904q^3 - 17568q^2 + 26784q + 7680.
        let ls = LSequence::new(13);
        let (a, b) = (coeff_a(), coeff_b());
        let diff = ls.get(5) - ls.get(7);
        let residual = (&(&a * &b) * &diff).scale(&2.into());
        assert_eq!(
            residual,
            IntPoly::from_i64s(&[7680, 26784, -17568, -47904, 6048, 21888, 3072])
        );
    }
}
