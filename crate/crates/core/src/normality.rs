//! Coefficient moments of L_n(q) and their distance from the normal law.
//!
//! Moments are exact rationals. Floating point appears only in the distance
//! computations, where Phi and phi are evaluated through `libm`.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::guards::check_min;
use crate::poly::{serialize_bigint, serialize_rational, IntPoly, Rational};
use crate::stern::{lpoly_rec, LSequence};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MomentReport {
    pub n: u64,
    #[serde(rename = "L1", serialize_with = "serialize_bigint")]
    pub value_at_1: BigInt,
    #[serde(rename = "dL1", serialize_with = "serialize_bigint")]
    pub d1_at_1: BigInt,
    #[serde(rename = "d2L1", serialize_with = "serialize_bigint")]
    pub d2_at_1: BigInt,
    #[serde(serialize_with = "serialize_rational")]
    pub mu: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub sigma2: Rational,
}

fn moments_of(n: u64, l: &IntPoly) -> MomentReport {
    let one = BigInt::one();
    let d1 = l.derivative();
    let value_at_1 = l.eval_int(&one);
    let d1_at_1 = d1.eval_int(&one);
    let d2_at_1 = d1.derivative().eval_int(&one);
    let v = Rational::from_integer(value_at_1.clone());
    let mu = Rational::from_integer(d1_at_1.clone()) / &v;
    let sigma2 = Rational::from_integer(d2_at_1.clone()) / &v + &mu - &mu * &mu;
    MomentReport {
        n,
        value_at_1,
        d1_at_1,
        d2_at_1,
        mu,
        sigma2,
    }
}

/// L_n(1), L_n'(1), L_n''(1), mean and variance of the coefficient law.
pub fn exact_moments(n: u64) -> Result<MomentReport> {
    check_min("n", n, 1)?;
    Ok(moments_of(n, &lpoly_rec(n)?))
}

/// Moments for n = 1..=n_max from one pass of the recurrence.
pub fn exact_moments_upto(n_max: u64) -> Vec<MomentReport> {
    LSequence::new(n_max as usize)
        .iter()
        .enumerate()
        .map(|(i, l)| moments_of(i as u64 + 1, l))
        .collect()
}

/// 3^e for any integer e, as a rational.
fn pow3(e: i64) -> Rational {
    let p = Rational::from_integer(BigInt::from(3).pow(e.unsigned_abs() as u32));
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

fn int(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

/// Per-item comparison with the closed forms
/// L_n(1) = 3^n, L_n'(1) = 2(n-1) 3^(n-2), L_n''(1) = 4(n-2)(n-3) 3^(n-4),
/// mu_n = 2(n-1)/9 and sigma_n^2 = 2(3n+1)/81. Powers of 3 with negative
/// exponents are taken literally as rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormCheck {
    pub n: u64,
    pub value: bool,
    pub d1: bool,
    pub d2: bool,
    pub mu: bool,
    /// Not evaluated at n = 1, where the law is a point mass.
    pub sigma2: Option<bool>,
}

impl ClosedFormCheck {
    pub fn holds(&self) -> bool {
        self.value && self.d1 && self.d2 && self.mu && self.sigma2.unwrap_or(true)
    }
}

/// The closed-form value of sigma_n^2 as printed alongside the evaluations,
/// 2(n-1)(2n+7)/81. It disagrees with the exact variance for n >= 2.
pub fn printed_sigma2(n: u64) -> Rational {
    let n = n as i64;
    int(2 * (n - 1) * (2 * n + 7)) / int(81)
}

pub fn derived_sigma2(n: u64) -> Rational {
    int(2 * (3 * n as i64 + 1)) / int(81)
}

pub fn closed_form_check_report(m: &MomentReport) -> ClosedFormCheck {
    let n = m.n as i64;
    let as_rat = |x: &BigInt| Rational::from_integer(x.clone());
    ClosedFormCheck {
        n: m.n,
        value: as_rat(&m.value_at_1) == pow3(n),
        d1: as_rat(&m.d1_at_1) == int(2 * (n - 1)) * pow3(n - 2),
        d2: as_rat(&m.d2_at_1) == int(4 * (n - 2) * (n - 3)) * pow3(n - 4),
        mu: m.mu == int(2 * (n - 1)) / int(9),
        sigma2: (n >= 2).then(|| m.sigma2 == derived_sigma2(m.n)),
    }
}

pub fn closed_form_check(n: u64) -> Result<ClosedFormCheck> {
    Ok(closed_form_check_report(&exact_moments(n)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DistanceReport {
    pub n: u64,
    pub clt_sup: f64,
    pub llt_sup: f64,
}

/// Standard normal CDF; `libm::erfc` keeps the absolute error near 1e-16.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x * FRAC_1_SQRT_2)
}

pub fn normal_pdf(x: f64) -> f64 {
    (-0.5 * x * x).exp() / (2.0 * PI).sqrt()
}

fn to_f64(x: &Rational) -> f64 {
    x.to_f64().expect("finite rational")
}

/// Kolmogorov distance to Phi and lattice density distance to phi for the
/// standardized coefficient law of L_n.
pub fn distances_of(n: u64, l: &IntPoly, m: &MomentReport) -> Result<DistanceReport> {
    if !m.sigma2.is_positive() {
        return Err(Error::OutOfRange {
            what: "n (zero variance)",
            value: n,
            min: 2,
        });
    }
    let total = Rational::from_integer(m.value_at_1.clone());
    let probs: Vec<Rational> = l
        .coeffs()
        .iter()
        .map(|c| Rational::from_integer(c.clone()) / &total)
        .collect();
    let sum: Rational = probs.iter().fold(Rational::zero(), |a, b| a + b);
    assert!(sum.is_one(), "coefficient law must sum to one");

    let mu = to_f64(&m.mu);
    let sigma = to_f64(&m.sigma2).sqrt();
    let mut clt_sup: f64 = 0.0;
    let mut llt_sup: f64 = 0.0;
    let mut cdf = Rational::zero();
    for (k, p) in probs.iter().enumerate() {
        let x = (k as f64 - mu) / sigma;
        let phi = normal_cdf(x);
        let left = to_f64(&cdf);
        cdf += p;
        let right = to_f64(&cdf);
        clt_sup = clt_sup.max((left - phi).abs()).max((right - phi).abs());
        llt_sup = llt_sup.max((sigma * to_f64(p) - normal_pdf(x)).abs());
    }
    Ok(DistanceReport { n, clt_sup, llt_sup })
}

pub fn distribution_distances(n: u64) -> Result<DistanceReport> {
    check_min("n", n, 2)?;
    let l = lpoly_rec(n)?;
    distances_of(n, &l, &moments_of(n, &l))
}

/// One row of a normality run: moments and distances at the same n.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormalityRow {
    pub n: u64,
    #[serde(rename = "L1", serialize_with = "serialize_bigint")]
    pub value_at_1: BigInt,
    #[serde(serialize_with = "serialize_rational")]
    pub mu: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub sigma2: Rational,
    pub clt_sup: f64,
    pub llt_sup: f64,
}

impl NormalityRow {
    pub fn new(m: &MomentReport, d: &DistanceReport) -> Self {
        NormalityRow {
            n: m.n,
            value_at_1: m.value_at_1.clone(),
            mu: m.mu.clone(),
            sigma2: m.sigma2.clone(),
            clt_sup: d.clt_sup,
            llt_sup: d.llt_sup,
        }
    }
}

/// Paired reports, sorted by n.
pub fn normality_report(ns: &[u64]) -> Result<Vec<(MomentReport, DistanceReport)>> {
    let mut ns = ns.to_vec();
    ns.sort_unstable();
    ns.iter()
        .map(|&n| {
            check_min("n", n, 2)?;
            let l = lpoly_rec(n)?;
            let m = moments_of(n, &l);
            let d = distances_of(n, &l, &m)?;
            Ok((m, d))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(a: i64, b: i64) -> Rational {
        int(a) / int(b)
    }

    #[test]
    fn moment_examples() {
        let m = exact_moments(2).unwrap();
        assert_eq!(m.value_at_1, 9.into());
        assert_eq!(m.d1_at_1, 2.into());
        assert_eq!(m.d2_at_1, 0.into());
        assert_eq!((m.mu.clone(), m.sigma2.clone()), (rat(2, 9), rat(14, 81)));
        let m = exact_moments(4).unwrap();
        assert_eq!((m.value_at_1.clone(), m.d1_at_1.clone(), m.d2_at_1.clone()), (81.into(), 54.into(), 8.into()));
        assert_eq!((m.mu, m.sigma2), (rat(2, 3), rat(26, 81)));
        assert_eq!(exact_moments(10).unwrap().mu, int(2));
    }

    #[test]
    fn closed_forms() {
        assert!(closed_form_check(2).unwrap().holds());
        assert!(closed_form_check(4).unwrap().holds());
        for m in exact_moments_upto(200).iter().skip(1) {
            assert!(closed_form_check_report(m).holds(), "n = {}", m.n);
        }
    }

    #[test]
    fn degenerate_first_index() {
        // L_1 = 3: the second-derivative formula gives 4(-1)(-2)/27 = 8/27, not 0.
        let c = closed_form_check(1).unwrap();
        assert!(c.value && c.d1 && c.mu);
        assert!(!c.d2);
        assert_eq!(c.sigma2, None);
        assert_eq!(exact_moments(1).unwrap().sigma2, int(0));
        assert!(distribution_distances(1).is_err());
    }

    #[test]
    fn printed_variance_disagrees() {
        assert_eq!(printed_sigma2(2), rat(22, 81));
        assert_eq!(exact_moments(2).unwrap().sigma2, derived_sigma2(2));
        assert_ne!(printed_sigma2(4), derived_sigma2(4));
    }

    #[test]
    fn two_point_law() {
        // Mass 7/9 at 0 and 2/9 at 1.
        let d = distribution_distances(2).unwrap();
        let sigma = (14.0f64 / 81.0).sqrt();
        let x0 = (0.0 - 2.0 / 9.0) / sigma;
        let x1 = (1.0 - 2.0 / 9.0) / sigma;
        let want = [
            normal_cdf(x0),
            (7.0 / 9.0 - normal_cdf(x0)).abs(),
            (7.0 / 9.0 - normal_cdf(x1)).abs(),
            (1.0 - normal_cdf(x1)).abs(),
        ]
        .into_iter()
        .fold(0.0, f64::max);
        assert!((d.clt_sup - want).abs() < 1e-12);
    }

    #[test]
    fn normal_cdf_reference_values() {
        assert!((normal_cdf(0.0) - 0.5).abs() < 1e-15);
        assert!((normal_cdf(1.0) - 0.841_344_746_068_542_9).abs() < 1e-13);
        assert!((normal_cdf(-3.0) - 0.001_349_898_031_630_094_6).abs() < 1e-15);
    }

    #[test]
    fn distances_shrink() {
        let r = normality_report(&[200, 25, 100, 50]).unwrap();
        let ns: Vec<u64> = r.iter().map(|(m, _)| m.n).collect();
        assert_eq!(ns, vec![25, 50, 100, 200]);
        for w in r.windows(2) {
            assert!(w[1].1.clt_sup <= w[0].1.clt_sup);
            assert!(w[1].1.llt_sup <= w[0].1.llt_sup);
        }
        assert!(r.iter().all(|(_, d)| (0.0..=1.1).contains(&d.clt_sup) && (0.0..=1.1).contains(&d.llt_sup)));
        assert!(normality_report(&[]).unwrap().is_empty());
    }

    #[test]
    fn row_json_shape() {
        let r = normality_report(&[2]).unwrap();
        let row = NormalityRow::new(&r[0].0, &r[0].1);
        let s = serde_json::to_string(&row).unwrap();
        assert!(s.starts_with(r#"{"n":2,"L1":"9","mu":{"num":"2","den":"9"},"sigma2":{"num":"14","den":"81"},"clt_sup":"#));
    }
}
