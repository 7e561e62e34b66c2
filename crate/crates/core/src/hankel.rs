//! Shifted Hankel matrices of the L-sequence and exact determinants over Z[q].

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Result;
use crate::guards::{check_max, check_min, MAX_HANKEL_SIZE};
use crate::poly::IntPoly;
use crate::stern::LSequence;

/// Square matrix over Z[q], row-major.
pub type PolyMatrix = Vec<Vec<IntPoly>>;

/// H_m^(k): entry (i, j) is L_{i+j+k-1}, 1-based.
pub fn hankel_matrix(k: u32, m: u32) -> Result<PolyMatrix> {
    check_min("m", m as u64, 1)?;
    check_max("m", m as u64, "MAX_HANKEL_SIZE", MAX_HANKEL_SIZE)?;
    let (k, m) = (k as usize, m as usize);
    let ls = LSequence::new(2 * m + k - 1);
    Ok((1..=m)
        .map(|i| (1..=m).map(|j| ls.get(i + j + k - 1).clone()).collect())
        .collect())
}

/// Bareiss elimination with row swaps; every division is exact in Z[q].
pub fn det_fraction_free(matrix: &[Vec<IntPoly>]) -> IntPoly {
    let n = matrix.len();
    assert!(matrix.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return IntPoly::one();
    }
    let mut a: PolyMatrix = matrix.to_vec();
    let mut prev = IntPoly::one();
    let mut negate = false;
    for p in 0..n - 1 {
        if a[p][p].is_zero() {
            match (p + 1..n).find(|&r| !a[r][p].is_zero()) {
                Some(r) => {
                    a.swap(p, r);
                    negate = !negate;
                }
                None => return IntPoly::zero(),
            }
        }
        for i in p + 1..n {
            for j in p + 1..n {
                let num = &(&a[i][j] * &a[p][p]) - &(&a[i][p] * &a[p][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            a[i][p] = IntPoly::zero();
        }
        prev = a[p][p].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Laplace expansion along the first row. Exponential; meant for small m.
pub fn det_cofactor(matrix: &[Vec<IntPoly>]) -> IntPoly {
    let n = matrix.len();
    match n {
        0 => IntPoly::one(),
        1 => matrix[0][0].clone(),
        _ => {
            let mut det = IntPoly::zero();
            for c in 0..n {
                if matrix[0][c].is_zero() {
                    continue;
                }
                let minor: PolyMatrix = matrix[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != c)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &matrix[0][c] * &det_cofactor(&minor);
                if c % 2 == 0 {
                    det += &term;
                } else {
                    det -= &term;
                }
            }
            det
        }
    }
}

/// (-1)^(k+1) 2^(k+2) (q-1)^(k+2)
pub fn h2_closed_form(k: u32) -> IntPoly {
    let sign = if k.is_multiple_of(2) { -1 } else { 1 };
    let c = BigInt::from(sign) * (BigInt::from(1) << (k + 2));
    IntPoly::from_i64s(&[-1, 1]).pow(k + 2).scale(&c)
}

/// Predicted H_m^(k): L_{k+1}, the `h2_closed_form`, or zero.
pub fn hankel_closed_form(k: u32, m: u32) -> IntPoly {
    match m {
        1 => LSequence::new(k as usize + 1).get(k as usize + 1).clone(),
        2 => h2_closed_form(k),
        _ => IntPoly::zero(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HankelReport {
    pub k: u32,
    pub m: u32,
    #[serde(rename = "det")]
    pub determinant: IntPoly,
    #[serde(rename = "match")]
    pub closed_form_match: bool,
}

pub fn hankel_report(k: u32, m: u32) -> Result<HankelReport> {
    let determinant = det_fraction_free(&hankel_matrix(k, m)?);
    Ok(HankelReport {
        k,
        m,
        closed_form_match: determinant == hankel_closed_form(k, m),
        determinant,
    })
}

/// Reports for every k in 0..=k_max and m in 1..=m_max, ordered by (k, m).
pub fn verify_hankel_corollary(k_max: u32, m_max: u32) -> Result<Vec<HankelReport>> {
    check_min("m_max", m_max as u64, 1)?;
    let mut out = Vec::new();
    for k in 0..=k_max {
        for m in 1..=m_max {
            out.push(hankel_report(k, m)?);
        }
    }
    Ok(out)
}

/// H_2^(k) == -2(q-1) H_2^(k-1), computed from the matrices.
pub fn h2_step_check(k: u32) -> Result<bool> {
    check_min("k", k as u64, 1)?;
    let cur = det_fraction_free(&hankel_matrix(k, 2)?);
    let prev = det_fraction_free(&hankel_matrix(k - 1, 2)?);
    Ok(cur == &IntPoly::from_i64s(&[2, -2]) * &prev)
}
