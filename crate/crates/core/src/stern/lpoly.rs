//! The Eulerian row sums L_n(q) via the three-term recurrence
//! L_{n+1} = 3 L_n + 2(q - 1) L_{n-1}, with L_1 = 3 and L_2 = 2q + 7.

use crate::error::Result;
use crate::guards::check_min;
use crate::poly::IntPoly;

/// `2(q - 1)`, the second recurrence coefficient.
pub fn two_q_minus_two() -> IntPoly {
    IntPoly::from_i64s(&[-2, 2])
}

/// L_1 .. L_len, indexed from 1.
#[derive(Clone, Debug)]
pub struct LSequence {
    polys: Vec<IntPoly>,
}

impl LSequence {
    pub fn new(len: usize) -> Self {
        let c = two_q_minus_two();
        let mut polys: Vec<IntPoly> = Vec::with_capacity(len);
        for n in 1..=len {
            let next = match n {
                1 => IntPoly::constant(3),
                2 => IntPoly::from_i64s(&[7, 2]),
                _ => {
                    let (l1, l2) = (&polys[n - 2], &polys[n - 3]);
                    &l1.scale(&3.into()) + &(&c * l2)
                }
            };
            polys.push(next);
        }
        LSequence { polys }
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// L_n; panics outside `1..=len`.
    pub fn get(&self, n: usize) -> &IntPoly {
        assert!(n >= 1, "L_n is indexed from 1");
        &self.polys[n - 1]
    }

    pub fn iter(&self) -> impl Iterator<Item = &IntPoly> {
        self.polys.iter()
    }
}

/// L_n(q) by the recurrence.
pub fn lpoly_rec(n: u64) -> Result<IntPoly> {
    check_min("n", n, 1)?;
    Ok(LSequence::new(n as usize).get(n as usize).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stern::bpoly::lpoly_def_upto;
    use num_traits::Signed;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(lpoly_rec(3).unwrap(), p(&[15, 12]));
        assert_eq!(lpoly_rec(4).unwrap(), p(&[31, 46, 4]));
        assert_eq!(lpoly_rec(5).unwrap(), p(&[63, 144, 36]));
        assert!(lpoly_rec(0).is_err());
    }

    #[test]
    fn matches_direct_summation_up_to_twelve() {
        let direct = lpoly_def_upto(12).unwrap();
        let seq = LSequence::new(12);
        for (n, d) in direct.iter().enumerate() {
            assert_eq!(seq.get(n + 1), d, "n = {}", n + 1);
        }
    }

    #[test]
    fn degree_is_half_index_and_coefficients_nonnegative() {
        let seq = LSequence::new(100);
        for n in 2..=100 {
            let l = seq.get(n);
            assert_eq!(l.degree(), Some(n / 2), "n = {n}");
            assert!(l.coeffs().iter().all(|c| !c.is_negative()));
        }
    }
}
