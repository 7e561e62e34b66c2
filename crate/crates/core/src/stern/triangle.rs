//! Stern's triangle and the diatomic sequence.

use serde::Serialize;

use crate::error::Result;
use crate::guards::{check_max, check_min, MAX_GF_ROW, MAX_TRIANGLE_ROW};

/// One row of Stern's triangle.
///
/// Entries are bounded by Fibonacci numbers (row 30 peaks near 2.2 million),
/// so `u64` holds every row the guard admits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SternRow {
    pub r: u32,
    #[serde(serialize_with = "decimal_strings")]
    pub values: Vec<u64>,
}

fn decimal_strings<S: serde::Serializer>(v: &[u64], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl SternRow {
    pub fn sum(&self) -> u128 {
        self.values.iter().map(|&v| v as u128).sum()
    }

    /// Checks the insertion recurrence against the previous row.
    pub fn follows(&self, prev: &SternRow) -> bool {
        if self.r != prev.r + 1 || self.values.len() != 2 * prev.values.len() + 1 {
            return false;
        }
        let at = |n: i64| -> u64 {
            if n < 0 {
                0
            } else {
                prev.values.get(n as usize).copied().unwrap_or(0)
            }
        };
        self.values.iter().enumerate().all(|(i, &v)| {
            let n = (i / 2) as i64;
            if i % 2 == 1 {
                v == at(n)
            } else {
                v == at(n - 1) + at(n)
            }
        })
    }
}

/// Row `r` of Stern's triangle, built by repeated insertion of sums.
pub fn triangle_row(r: u32) -> Result<SternRow> {
    check_max("row", r as u64, "MAX_TRIANGLE_ROW", MAX_TRIANGLE_ROW as u64)?;
    let mut values = vec![1u64];
    for _ in 0..r {
        values = next_row(&values);
    }
    Ok(SternRow { r, values })
}

fn next_row(prev: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(2 * prev.len() + 1);
    out.push(1);
    for (i, &v) in prev.iter().enumerate() {
        out.push(v);
        out.push(v + prev.get(i + 1).copied().unwrap_or(1));
    }
    // The loop closes with `last + 1`; the row ends in a bare 1.
    *out.last_mut().unwrap() = 1;
    out
}

/// Stern's diatomic sequence: b_0 = 0, b_1 = 1, b_2n = b_n, b_2n+1 = b_n + b_n+1.
pub fn diatomic(n: u64) -> u64 {
    // Track (b_m, b_{m+1}) while reading n's bits from the top.
    let (mut lo, mut hi) = (0u64, 1u64);
    for bit in (0..64 - n.leading_zeros()).rev() {
        if (n >> bit) & 1 == 0 {
            hi += lo;
        } else {
            lo += hi;
        }
    }
    lo
}

/// Compares `prod_{i<r} (1 + x^(2^i) + x^(2*2^i))` with row `r`.
pub fn gf_row_check(r: u32) -> Result<bool> {
    check_min("row", r as u64, 1)?;
    check_max("row", r as u64, "MAX_GF_ROW", MAX_GF_ROW as u64)?;
    let mut product = vec![1u64];
    for i in 0..r {
        let step = 1usize << i;
        let mut next = vec![0u64; product.len() + 2 * step];
        for (k, &c) in product.iter().enumerate() {
            next[k] += c;
            next[k + step] += c;
            next[k + 2 * step] += c;
        }
        product = next;
    }
    Ok(product == triangle_row(r)?.values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_rows() {
        assert_eq!(triangle_row(0).unwrap().values, vec![1]);
        assert_eq!(triangle_row(1).unwrap().values, vec![1, 1, 1]);
        assert_eq!(triangle_row(2).unwrap().values, vec![1, 1, 2, 1, 2, 1, 1]);
        assert_eq!(
            triangle_row(3).unwrap().values,
            vec![1, 1, 2, 1, 3, 2, 3, 1, 3, 2, 3, 1, 2, 1, 1]
        );
    }

    #[test]
    fn row_guard() {
        assert!(triangle_row(31).is_err());
    }

    #[test]
    fn rows_follow_recurrence_and_sum_to_powers_of_three() {
        let mut prev = triangle_row(0).unwrap();
        for r in 1..=12 {
            let row = triangle_row(r).unwrap();
            assert_eq!(row.values.len(), (1usize << (r + 1)) - 1);
            assert_eq!((row.values[0], *row.values.last().unwrap()), (1, 1));
            assert!(row.follows(&prev), "row {r}");
            assert_eq!(row.sum(), 3u128.pow(r));
            prev = row;
        }
    }

    #[test]
    fn diatomic_values() {
        assert_eq!(diatomic(0), 0);
        let first: Vec<u64> = (1..=8).map(diatomic).collect();
        assert_eq!(first, vec![1, 1, 2, 1, 3, 2, 3, 1]);
        for k in 0..=20 {
            assert_eq!(diatomic(1 << k), 1);
        }
        for n in 1..5000u64 {
            assert_eq!(diatomic(2 * n), diatomic(n));
            assert_eq!(diatomic(2 * n + 1), diatomic(n) + diatomic(n + 1));
        }
    }

    #[test]
    fn generating_function_rows() {
        for r in [1, 2, 10] {
            assert!(gf_row_check(r).unwrap());
        }
        assert!(gf_row_check(0).is_err());
        assert!(gf_row_check(15).is_err());
    }
}
