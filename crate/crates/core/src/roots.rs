//! Exact real-rootedness certificates via Sturm chains.
//!
//! A nonzero integer polynomial has only real zeros iff its squarefree part
//! has as many distinct real roots as its degree. The distinct real roots are
//! counted as V(-inf) - V(+inf) on a Sturm chain, reading signs straight off
//! leading coefficients and degree parities.

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{primitive_gcd, sturm_prs, IntPoly, PrsReduction};

/// p, p', then negated remainders, each divided by its (positive) content.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    pub polys: Vec<IntPoly>,
}

impl SturmChain {
    /// Last element; a constant iff the input was squarefree.
    pub fn last(&self) -> &IntPoly {
        self.polys.last().unwrap()
    }

    /// Sign variations at +infinity.
    pub fn variations_at_pos_inf(&self) -> usize {
        variations(self.polys.iter().map(|p| p.leading_coeff().unwrap().is_positive()))
    }

    /// Sign variations at -infinity.
    pub fn variations_at_neg_inf(&self) -> usize {
        variations(self.polys.iter().map(|p| {
            let odd = p.degree().unwrap() % 2 == 1;
            p.leading_coeff().unwrap().is_positive() != odd
        }))
    }

    /// Number of distinct real roots of the chain's first polynomial.
    pub fn distinct_real_roots(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }
}

fn variations(signs: impl Iterator<Item = bool>) -> usize {
    let mut count = 0;
    let mut prev: Option<bool> = None;
    for s in signs {
        if prev.is_some_and(|p| p != s) {
            count += 1;
        }
        prev = Some(s);
    }
    count
}

pub fn sturm_chain(p: &IntPoly) -> Result<SturmChain> {
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    Ok(SturmChain {
        polys: sturm_prs(p, &p.derivative(), PrsReduction::Primitive),
    })
}

/// p / gcd(p, p'), primitive with positive leading coefficient.
pub fn squarefree_part(p: &IntPoly) -> Result<IntPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = primitive_gcd(p, &p.derivative())?;
    Ok(p.primitive_part()
        .div_exact(&g)
        .expect("gcd divides its argument")
        .primitive_part())
}

/// Distinct real roots of a squarefree polynomial.
pub fn count_real_roots(p: &IntPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(0);
    }
    let chain = sturm_chain(p)?;
    let last = chain.last();
    if !last.is_constant() {
        return Err(Error::NotSquarefree {
            gcd_degree: last.degree().unwrap(),
        });
    }
    Ok(chain.distinct_real_roots())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    /// Index of the certified polynomial, when it belongs to a family.
    pub n: Option<u64>,
    pub degree: usize,
    pub distinct_real_roots: usize,
    pub real_rooted: bool,
}

/// Certifies that every complex zero of `p` is real.
pub fn certify_real_rooted(p: &IntPoly) -> Result<CertificateReport> {
    certify_with_id(p, None)
}

pub fn certify_with_id(p: &IntPoly, n: Option<u64>) -> Result<CertificateReport> {
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    if degree <= 1 {
        return Ok(CertificateReport {
            n,
            degree,
            distinct_real_roots: degree,
            real_rooted: true,
        });
    }
    let chain = sturm_chain(p)?;
    let (sqfree_degree, distinct) = if chain.last().is_constant() {
        (degree, chain.distinct_real_roots())
    } else {
        // Repeated roots: recount on the squarefree part.
        let sf = squarefree_part(p)?;
        (sf.degree().unwrap(), count_real_roots(&sf)?)
    };
    Ok(CertificateReport {
        n,
        degree,
        distinct_real_roots: distinct,
        real_rooted: distinct == sqfree_degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&p(&[1, -2, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(squarefree_part(&p(&[63, 144, 36])).unwrap(), p(&[7, 16, 4]));
        assert_eq!(squarefree_part(&p(&[-2, 0, -4])).unwrap(), p(&[1, 0, 2]));
        assert_eq!(squarefree_part(&IntPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn chain_examples() {
        let c = sturm_chain(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(c.polys, vec![p(&[-1, 0, 1]), p(&[0, 2]), p(&[1])]);
        let c = sturm_chain(&p(&[1, 0, 1])).unwrap();
        assert_eq!(c.polys, vec![p(&[1, 0, 1]), p(&[0, 2]), p(&[-1])]);
        let c = sturm_chain(&p(&[31, 46, 4])).unwrap();
        assert_eq!(c.polys.len(), 3);
        assert!(c.last().is_constant() && c.last().leading_coeff().unwrap().is_positive());
        assert_eq!(sturm_chain(&p(&[5])), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_real_roots(&p(&[1, 0, 1])).unwrap(), 0);
        assert_eq!(count_real_roots(&p(&[-1, 0, 1])).unwrap(), 2);
        assert_eq!(count_real_roots(&p(&[7, 16, 4])).unwrap(), 2);
        assert_eq!(
            count_real_roots(&p(&[1, -2, 1])),
            Err(Error::NotSquarefree { gcd_degree: 1 })
        );
    }

    #[test]
    fn certify_examples() {
        let r = certify_real_rooted(&p(&[3])).unwrap();
        assert!(r.real_rooted);
        assert_eq!(r.degree, 0);
        assert!(certify_real_rooted(&p(&[63, 144, 36])).unwrap().real_rooted);
        assert!(!certify_real_rooted(&p(&[1, 0, 1])).unwrap().real_rooted);
        assert_eq!(certify_real_rooted(&IntPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn certify_with_multiplicities() {
        // (q + 2)^3 (q - 1)^2 (q^2 + 1): squarefree part has a complex pair
        let bad = &(&p(&[2, 1]).pow(3) * &p(&[-1, 1]).pow(2)) * &p(&[1, 0, 1]);
        let r = certify_real_rooted(&bad).unwrap();
        assert_eq!((r.distinct_real_roots, r.real_rooted), (2, false));
        let good = &p(&[2, 1]).pow(3) * &p(&[-1, 1]).pow(2);
        let r = certify_real_rooted(&good).unwrap();
        assert_eq!((r.degree, r.distinct_real_roots, r.real_rooted), (5, 2, true));
    }
}
