//! Dense univariate polynomials over the integers.
//!
//! [`IntPoly`] stores coefficients in ascending order of exponent and is kept
//! in canonical form: no trailing zero coefficients, so the zero polynomial is
//! the empty coefficient vector.

mod division;
mod prs;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use division::{DivRem, RatPoly};
pub use prs::{primitive_gcd, sturm_prs, PrsReduction};

/// Exact rationals. Always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * q^k`
    pub fn monomial<T: Into<BigInt>>(c: T, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading_coeff().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        self.div_scalar_exact(&g)
    }

    /// Divides out the content but keeps the sign of every coefficient.
    pub fn sign_preserving_primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        self.div_scalar_exact(&self.content())
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Divides every coefficient by `c`; the caller guarantees exactness.
    pub(crate) fn div_scalar_exact(&self, c: &BigInt) -> IntPoly {
        if c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn derivative(&self) -> IntPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        // Homogenised Horner: sum c_i a^i b^(d-i), then divide by b^d once.
        let (a, b) = (x.numer(), x.denom());
        if self.is_zero() {
            return Rational::zero();
        }
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c * &bpow;
            bpow *= b;
        }
        // bpow = b^(d+1); one factor too many.
        Rational::new(acc, bpow / b)
    }

    /// Canonical interchange form, e.g. `[31, 46, 4]` for `4q^2 + 46q + 31`.
    pub fn to_list_string(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }

    /// Coefficients as decimal strings, ascending.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn max_coeff_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }
}

/// Serializes as the list of decimal coefficient strings, ascending.
impl serde::Serialize for IntPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

/// Decimal string, for use with `#[serde(serialize_with)]`.
pub fn serialize_bigint<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// `{"num": "...", "den": "..."}` for use with `#[serde(serialize_with)]`.
pub fn serialize_rational<S: serde::Serializer>(
    x: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = s.serialize_struct("Rational", 2)?;
    st.serialize_field("num", &x.numer().to_string())?;
    st.serialize_field("den", &x.denom().to_string())?;
    st.end()
}

fn trim(coeffs: &mut Vec<BigInt>) {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
}

impl fmt::Display for IntPoly {
    /// Human form, highest degree first: `4*q^2 + 46*q + 31`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    /// Parses the list form `[c0, c1, ...]`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [c0, c1, ...], got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(IntPoly::zero());
        }
        let coeffs = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPoly::from_coeffs(coeffs))
    }
}

impl<'a> Add<&'a IntPoly> for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &'a IntPoly) -> IntPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for IntPoly {
    type Output = IntPoly;

    fn add(mut self, rhs: IntPoly) -> IntPoly {
        self += &rhs;
        self
    }
}

impl<'a> AddAssign<&'a IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &'a IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        trim(&mut self.coeffs);
    }
}

impl<'a> Sub<&'a IntPoly> for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &'a IntPoly) -> IntPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;

    fn sub(mut self, rhs: IntPoly) -> IntPoly {
        self -= &rhs;
        self
    }
}

impl<'a> SubAssign<&'a IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &'a IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        trim(&mut self.coeffs);
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        -(self.clone())
    }
}

impl<'a> Mul<&'a IntPoly> for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &'a IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl From<i64> for IntPoly {
    fn from(c: i64) -> Self {
        IntPoly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn rat(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn canonical_zero_is_empty() {
        assert!(p(&[0, 0, 0]).coeffs().is_empty());
        assert_eq!(p(&[0]).degree(), None);
        assert_eq!((&p(&[1, 2]) - &p(&[1, 2])), IntPoly::zero());
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p(&[1, 1]) + &p(&[1]), p(&[2, 1]));
        let x = p(&[3, -4, 5]);
        assert_eq!(&x + &IntPoly::zero(), x);
        assert_eq!(&p(&[15, 12]) + &(&p(&[7, 2]) * &IntPoly::zero()), p(&[15, 12]));
    }

    #[test]
    fn mul_examples() {
        // L_2 * (18q + 9) = L_5
        assert_eq!(&p(&[7, 2]) * &p(&[9, 18]), p(&[63, 144, 36]));
        let x = p(&[3, -4, 5]);
        assert_eq!(&x * &IntPoly::one(), x);
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[7, 2]).derivative(), p(&[2]));
        assert_eq!(p(&[31, 46, 4]).derivative(), p(&[46, 8]));
        assert!(p(&[5]).derivative().is_zero());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[31, 46, 4]).eval_rational(&rat(1, 1)), rat(81, 1));
        assert_eq!(p(&[-6, 2, 9]).eval_rational(&rat(0, 1)), rat(-6, 1));
        assert_eq!(p(&[7, 2]).eval_rational(&rat(-7, 2)), rat(0, 1));
        assert_eq!(p(&[1, 1, 1]).eval_rational(&rat(1, 2)), rat(7, 4));
        assert_eq!(IntPoly::zero().eval_rational(&rat(3, 2)), rat(0, 1));
    }

    #[test]
    fn display_and_parse() {
        let l4 = p(&[31, 46, 4]);
        assert_eq!(l4.to_string(), "4*q^2 + 46*q + 31");
        assert_eq!(l4.to_list_string(), "[31, 46, 4]");
        assert_eq!("[31, 46, 4]".parse::<IntPoly>().unwrap(), l4);
        assert_eq!(p(&[-4, 8, -4]).to_string(), "-4*q^2 + 8*q - 4");
        assert_eq!(p(&[0, -1]).to_string(), "-q");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!("[]".parse::<IntPoly>().unwrap(), IntPoly::zero());
        assert!("31, 46".parse::<IntPoly>().is_err());
        assert!("[1, x]".parse::<IntPoly>().is_err());
    }

    #[test]
    fn content_and_primitive_part() {
        let x = p(&[-6, 0, -4]);
        assert_eq!(x.content(), BigInt::from(2));
        assert_eq!(x.primitive_part(), p(&[3, 0, 2]));
        assert_eq!(x.sign_preserving_primitive(), p(&[-3, 0, -2]));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let x = p(&[-1, 1]);
        assert_eq!(x.pow(3), p(&[-1, 3, -3, 1]));
        assert_eq!(x.pow(0), IntPoly::one());
    }
}
