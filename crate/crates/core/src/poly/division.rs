use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntPoly, Rational};
use crate::error::{Error, Result};

/// Polynomial with rational coefficients, ascending, trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// `Some` when every coefficient is an integer.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        self.is_integral()
            .then(|| IntPoly::from_coeffs(self.coeffs.iter().map(|c| c.to_integer()).collect()))
    }
}

impl From<&IntPoly> for RatPoly {
    fn from(p: &IntPoly) -> Self {
        RatPoly {
            coeffs: p.coeffs().iter().map(|c| Rational::from_integer(c.clone())).collect(),
        }
    }
}

/// Result of dividing over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivRem {
    pub quotient: RatPoly,
    pub remainder: RatPoly,
    /// True when quotient and remainder both have integer coefficients.
    pub integral: bool,
}

impl DivRem {
    pub fn exact(&self) -> bool {
        self.remainder.is_zero()
    }

    /// Integer quotient and remainder, if `integral`.
    pub fn to_int(&self) -> Option<(IntPoly, IntPoly)> {
        Some((self.quotient.to_int_poly()?, self.remainder.to_int_poly()?))
    }
}

impl IntPoly {
    /// Long division over the rationals: `self = quotient * den + remainder`
    /// with `deg remainder < deg den`.
    pub fn divrem(&self, den: &IntPoly) -> Result<DivRem> {
        let dd = den.degree().ok_or(Error::DivisionByZero)?;
        let lead = Rational::from_integer(den.leading_coeff().unwrap().clone());
        let den_q: Vec<Rational> = den
            .coeffs()
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let mut rem: Vec<Rational> = RatPoly::from(self).coeffs;
        let mut quot = vec![Rational::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let shift = top - dd;
            let t = rem.pop().unwrap() / &lead;
            for (i, c) in den_q[..dd].iter().enumerate() {
                rem[shift + i] -= &t * c;
            }
            quot[shift] = t;
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        let quotient = RatPoly::from_coeffs(quot);
        let remainder = RatPoly::from_coeffs(rem);
        let integral = quotient.is_integral() && remainder.is_integral();
        Ok(DivRem {
            quotient,
            remainder,
            integral,
        })
    }

    /// Exact division in `Z[q]`; `None` unless `den` divides `self` there.
    pub fn div_exact(&self, den: &IntPoly) -> Option<IntPoly> {
        let dd = den.degree()?;
        let lead = den.leading_coeff().unwrap();
        let mut rem = self.coeffs().to_vec();
        if rem.is_empty() {
            return Some(IntPoly::zero());
        }
        if rem.len() <= dd {
            return None;
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        while rem.len() > dd {
            let top = rem.pop().unwrap();
            let shift = rem.len() - dd;
            if top.is_zero() {
                continue;
            }
            let (t, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in den.coeffs()[..dd].iter().enumerate() {
                rem[shift + i] -= &t * c;
            }
            quot[shift] = t;
        }
        rem.iter().all(|c| c.is_zero()).then(|| IntPoly::from_coeffs(quot))
    }

    /// Remainder of `|lc(den)|^(deg self - deg den + 1) * self` divided by
    /// `den`. The multiplier is positive, so the result is a positive
    /// multiple of the true remainder.
    pub(crate) fn abs_pseudo_rem(&self, den: &IntPoly) -> IntPoly {
        let dd = den.degree().expect("pseudo-remainder by zero");
        let Some(ds) = self.degree() else {
            return IntPoly::zero();
        };
        if ds < dd {
            return self.clone();
        }
        let lead = den.leading_coeff().unwrap();
        let lead_abs = lead.abs();
        let lead_sign = if lead.is_negative() { -BigInt::one() } else { BigInt::one() };
        let mut rem = self.coeffs().to_vec();
        let mut steps_left = (ds - dd + 1) as u32;
        while rem.len() > dd {
            let top = rem.pop().unwrap();
            let shift = rem.len() - dd;
            steps_left -= 1;
            for c in rem.iter_mut() {
                *c *= &lead_abs;
            }
            if top.is_zero() {
                continue;
            }
            let t = &top * &lead_sign;
            for (i, c) in den.coeffs()[..dd].iter().enumerate() {
                rem[shift + i] -= &t * c;
            }
        }
        if steps_left > 0 {
            let m = num_traits::pow(lead_abs, steps_left as usize);
            for c in rem.iter_mut() {
                *c *= &m;
            }
        }
        IntPoly::from_coeffs(rem)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn divrem_examples() {
        let d = p(&[63, 144, 36]).divrem(&p(&[7, 2])).unwrap();
        assert_eq!(d.to_int(), Some((p(&[9, 18]), IntPoly::zero())));
        assert!(d.exact() && d.integral);

        let x = p(&[4, -2, 7, 1]);
        let d = x.divrem(&IntPoly::one()).unwrap();
        assert_eq!(d.to_int(), Some((x, IntPoly::zero())));

        let d = p(&[1, 0, 1]).divrem(&p(&[-1, 1])).unwrap();
        assert_eq!(d.to_int(), Some((p(&[1, 1]), p(&[2]))));
    }

    #[test]
    fn divrem_rational_quotient() {
        // (q + 1) / (2q) = 1/2 rem 1
        let d = p(&[1, 1]).divrem(&p(&[0, 2])).unwrap();
        assert!(!d.integral);
        assert_eq!(d.quotient.coeffs(), &[Rational::new(1.into(), 2.into())]);
        assert_eq!(d.remainder.to_int_poly(), Some(p(&[1])));
    }

    #[test]
    fn divrem_by_zero_fails() {
        assert_eq!(p(&[1]).divrem(&IntPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn div_exact_detects_remainder() {
        assert_eq!(p(&[63, 144, 36]).div_exact(&p(&[7, 2])), Some(p(&[9, 18])));
        assert_eq!(p(&[1, 0, 1]).div_exact(&p(&[-1, 1])), None);
        assert_eq!(p(&[1, 1]).div_exact(&p(&[0, 2])), None);
        assert_eq!(IntPoly::zero().div_exact(&p(&[3])), Some(IntPoly::zero()));
    }

    #[test]
    fn abs_pseudo_rem_is_positive_multiple() {
        // q^2 + 1 by -2q: |lc|^2 * (q^2 + 1) = 4q^2 + 4, remainder 4
        assert_eq!(p(&[1, 0, 1]).abs_pseudo_rem(&p(&[0, -2])), p(&[4]));
        // q^3 by (2q + 1): 8 q^3 = (..)(2q+1) - 1
        assert_eq!(p(&[0, 0, 0, 1]).abs_pseudo_rem(&p(&[1, 2])), p(&[-1]));
    }
}
