//! The polynomials b_n(q).
//!
//! b_1 = 1, b_2n = b_n, b_4n+1 = q b_2n + b_2n+1, b_4n+3 = b_2n+1 + q b_2n+2.
//!
//! Small indices live in a shared, growable table with compact `u32`
//! coefficients (each coefficient of b_k is at most the diatomic number b_k,
//! far below `u32::MAX` for every index the guards admit). Larger single
//! indices go through a memoised recursion over `IntPoly`.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;

use crate::error::Result;
use crate::guards::{check_max, check_min, Guards};
use crate::poly::IntPoly;

/// Indices below this are always tabulated.
const BASE_TABLE_LEN: usize = 1 << 16;

static TABLE: LazyLock<RwLock<BPolyTable>> = LazyLock::new(|| {
    let mut t = BPolyTable::new();
    t.extend_to(BASE_TABLE_LEN);
    RwLock::new(t)
});

/// Flat storage for b_0 .. b_{len-1}; b_0 is the zero polynomial.
#[derive(Debug)]
pub struct BPolyTable {
    offsets: Vec<u32>,
    coeffs: Vec<u32>,
}

impl BPolyTable {
    fn new() -> Self {
        // b_0 = 0, b_1 = 1
        BPolyTable {
            offsets: vec![0, 0, 1],
            coeffs: vec![1],
        }
    }

    pub fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, k: usize) -> &[u32] {
        &self.coeffs[self.offsets[k] as usize..self.offsets[k + 1] as usize]
    }

    /// Grows the table to cover indices `< len`.
    fn extend_to(&mut self, len: usize) {
        let mut buf: Vec<u32> = Vec::new();
        for k in self.len()..len {
            buf.clear();
            if k % 2 == 0 {
                buf.extend_from_slice(self.get(k / 2));
            } else {
                // k = 4n+1: q b_n + b_{2n+1};  k = 4n+3: b_{2n+1} + q b_{n+1}
                let n = k / 4;
                let (shifted, plain) = if k % 4 == 1 {
                    (n, 2 * n + 1)
                } else {
                    (n + 1, 2 * n + 1)
                };
                let s = self.get(shifted);
                let p = self.get(plain);
                buf.resize(p.len().max(s.len() + 1), 0);
                for (i, &c) in p.iter().enumerate() {
                    buf[i] += c;
                }
                for (i, &c) in s.iter().enumerate() {
                    buf[i + 1] += c;
                }
            }
            self.coeffs.extend_from_slice(&buf);
            self.offsets.push(self.coeffs.len() as u32);
        }
    }

    fn to_poly(&self, k: usize) -> IntPoly {
        IntPoly::from_coeffs(self.get(k).iter().map(|&c| BigInt::from(c)).collect())
    }
}

/// Runs `f` with the shared table grown to cover indices `< len`.
pub fn with_table<R>(len: usize, f: impl FnOnce(&BPolyTable) -> R) -> R {
    {
        let t = TABLE.read().expect("b-polynomial table poisoned");
        if t.len() >= len {
            return f(&t);
        }
    }
    let mut t = TABLE.write().expect("b-polynomial table poisoned");
    if t.len() < len {
        t.extend_to(len);
    }
    f(&t)
}

/// b_n(q) for n >= 1.
pub fn bpoly(n: u64) -> Result<IntPoly> {
    check_min("n", n, 1)?;
    with_table(BASE_TABLE_LEN, |t| {
        if (n as usize) < t.len() {
            return Ok(t.to_poly(n as usize));
        }
        let mut memo = HashMap::new();
        Ok(bpoly_rec(n, t, &mut memo))
    })
}

fn bpoly_rec(n: u64, table: &BPolyTable, memo: &mut HashMap<u64, IntPoly>) -> IntPoly {
    if (n as usize) < table.len() {
        return table.to_poly(n as usize);
    }
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let out = if n.is_multiple_of(2) {
        bpoly_rec(n / 2, table, memo)
    } else {
        let m = n / 4;
        let (shifted, plain) = if n % 4 == 1 { (m, 2 * m + 1) } else { (m + 1, 2 * m + 1) };
        let s = bpoly_rec(shifted, table, memo).shift(1);
        &bpoly_rec(plain, table, memo) + &s
    };
    memo.insert(n, out.clone());
    out
}

/// L_n(q) = 2 (b_1 + ... + b_{2^n - 1}) + b_{2^n}, summed directly.
pub fn lpoly_def(n: u32) -> Result<IntPoly> {
    lpoly_def_with(n, &Guards::default())
}

pub fn lpoly_def_with(n: u32, guards: &Guards) -> Result<IntPoly> {
    Ok(lpoly_def_upto_with(n, guards)?.pop().unwrap())
}

/// L_1 .. L_{n_max} by direct summation in one pass over the table.
pub fn lpoly_def_upto(n_max: u32) -> Result<Vec<IntPoly>> {
    lpoly_def_upto_with(n_max, &Guards::default())
}

pub fn lpoly_def_upto_with(n_max: u32, guards: &Guards) -> Result<Vec<IntPoly>> {
    check_min("n", n_max as u64, 1)?;
    check_max("n", n_max as u64, "MAX_LPOLY_DEF_N", guards.max_lpoly_def_n as u64)?;
    let top = 1usize << n_max;
    with_table(top + 1, |t| {
        let mut sum: Vec<u64> = Vec::new();
        let mut out = Vec::with_capacity(n_max as usize);
        let mut next_power = 2usize;
        for k in 1..=top {
            if k == next_power {
                // sum currently holds b_1 + ... + b_{k-1}
                let b = t.get(k);
                let mut l: Vec<u64> = sum.iter().map(|&c| 2 * c).collect();
                if l.len() < b.len() {
                    l.resize(b.len(), 0);
                }
                for (i, &c) in b.iter().enumerate() {
                    l[i] += c as u64;
                }
                out.push(IntPoly::from_coeffs(l.into_iter().map(BigInt::from).collect()));
                next_power <<= 1;
            }
            let b = t.get(k);
            if sum.len() < b.len() {
                sum.resize(b.len(), 0);
            }
            for (i, &c) in b.iter().enumerate() {
                sum[i] += c as u64;
            }
        }
        Ok(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stern::triangle::diatomic;
    use num_rational::BigRational;
    use num_traits::One;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn small_bpolys() {
        assert_eq!(bpoly(1).unwrap(), p(&[1]));
        assert_eq!(bpoly(2).unwrap(), p(&[1]));
        assert_eq!(bpoly(3).unwrap(), p(&[1, 1]));
        assert_eq!(bpoly(5).unwrap(), p(&[1, 2]));
        assert!(bpoly(0).is_err());
    }

    #[test]
    fn bpoly_at_one_is_diatomic() {
        let one = BigRational::one();
        for n in 1..=(1u64 << 16) {
            let v = bpoly(n).unwrap().eval_rational(&one);
            assert_eq!(v, BigRational::from_integer(diatomic(n).into()), "n = {n}");
        }
    }

    #[test]
    fn powers_of_two_give_one() {
        for k in 0..=20 {
            assert_eq!(bpoly(1 << k).unwrap(), IntPoly::one());
        }
        assert_eq!(bpoly(1 << 40).unwrap(), IntPoly::one());
    }

    #[test]
    fn recursion_matches_table_beyond_base() {
        // Indices just past the base table go through the recursion; the
        // defining relations must still hold there.
        let q = IntPoly::q();
        for n in (BASE_TABLE_LEN as u64)..(BASE_TABLE_LEN as u64 + 200) {
            assert_eq!(bpoly(2 * n).unwrap(), bpoly(n).unwrap());
            let lhs = bpoly(4 * n + 1).unwrap();
            assert_eq!(lhs, &(&q * &bpoly(2 * n).unwrap()) + &bpoly(2 * n + 1).unwrap());
            let lhs = bpoly(4 * n + 3).unwrap();
            assert_eq!(lhs, &bpoly(2 * n + 1).unwrap() + &(&q * &bpoly(2 * n + 2).unwrap()));
        }
    }

    #[test]
    fn large_indices_still_specialise_to_diatomic() {
        let one = BigRational::one();
        for n in [70_001u64, 123_456_789, 987_654_321_987, (1 << 50) + 12345] {
            let v = bpoly(n).unwrap().eval_rational(&one);
            assert_eq!(v, BigRational::from_integer(diatomic(n).into()), "n = {n}");
        }
    }

    #[test]
    fn lpoly_def_first_values() {
        assert_eq!(lpoly_def(1).unwrap(), p(&[3]));
        assert_eq!(lpoly_def(2).unwrap(), p(&[7, 2]));
        assert_eq!(lpoly_def(3).unwrap(), p(&[15, 12]));
        assert_eq!(lpoly_def(4).unwrap(), p(&[31, 46, 4]));
        assert!(lpoly_def(0).is_err());
        assert!(lpoly_def(23).is_err());
    }

    #[test]
    fn lpoly_def_obeys_env_style_guard() {
        let g = Guards::with_max_n("3").unwrap();
        assert!(lpoly_def_with(3, &g).is_ok());
        assert!(lpoly_def_with(4, &g).is_err());
    }

    proptest::proptest! {
        #[test]
        fn relations_at_random_indices(n in 1u64..(1 << 40)) {
            let q = IntPoly::q();
            let (bn, bn1) = (bpoly(n).unwrap(), bpoly(n + 1).unwrap());
            let b2n1 = bpoly(2 * n + 1).unwrap();
            proptest::prop_assert_eq!(bpoly(2 * n).unwrap(), bn.clone());
            proptest::prop_assert_eq!(bpoly(4 * n + 1).unwrap(), &(&q * &bn) + &b2n1);
            proptest::prop_assert_eq!(bpoly(4 * n + 3).unwrap(), &b2n1 + &(&q * &bn1));
            proptest::prop_assert_eq!(bn.eval_int(&1.into()), diatomic(n).into());
        }
    }
}
