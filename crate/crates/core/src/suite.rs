//! The verification matrix: one deterministic check per claim family.
//!
//! Each check returns a [`CriterionResult`] whose `detail` is built only
//! from exact results, so repeated runs serialize to identical bytes.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::hankel::{det_fraction_free, h2_step_check, hankel_closed_form, hankel_matrix};
use crate::normality::{closed_form_check_report, exact_moments_upto, normality_report};
use crate::poset::{
    build_pn, distinct_random_labelings, enumerate_extensions, eulerian_polynomial, natural_labeling,
};
use crate::roots::certify_with_id;
use crate::stern::{
    binet_check, bpoly, diatomic, eoj_recurrence_check, gf_row_check, key_identity_check,
    lpoly_def_upto, phi_series_check, t2_is_2l7, verify_divisibility, LSequence,
};

/// Seed for the random natural labelings of the poset check.
pub const LABELING_SEED: u64 = 0x5732_4e5f;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub criterion: u32,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl CriterionResult {
    fn new(criterion: u32, name: &'static str, pass: bool, detail: String) -> Self {
        CriterionResult {
            criterion,
            name,
            pass,
            detail,
        }
    }

    /// `PASS 3 real-rootedness: ...`
    pub fn line(&self) -> String {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        format!("{tag} {} {}: {}", self.criterion, self.name, self.detail)
    }
}

/// Indices in `range` where `ok` is false.
fn failures<I: IntoIterator<Item = u64>>(range: I, mut ok: impl FnMut(u64) -> Result<bool>) -> Result<Vec<u64>> {
    let mut bad = Vec::new();
    for n in range {
        if !ok(n)? {
            bad.push(n);
        }
    }
    Ok(bad)
}

fn summarize(label: &str, total: usize, bad: &[u64]) -> String {
    if bad.is_empty() {
        format!("{label}: {total}/{total} hold")
    } else {
        let shown: Vec<String> = bad.iter().take(12).map(|n| n.to_string()).collect();
        let more = if bad.len() > 12 { ", ..." } else { "" };
        format!(
            "{label}: {}/{total} hold, failing at [{}{more}]",
            total - bad.len(),
            shown.join(", ")
        )
    }
}

/// Direct summation against the recurrence, 1 <= n <= 20.
pub fn criterion_1() -> Result<CriterionResult> {
    let direct = lpoly_def_upto(20)?;
    let rec = LSequence::new(20);
    let bad = failures(1..=20, |n| Ok(direct[n as usize - 1] == *rec.get(n as usize)))?;
    Ok(CriterionResult::new(
        1,
        "recurrence equivalence",
        bad.is_empty(),
        summarize("L_n by definition == L_n by recurrence, 1..=20", 20, &bad),
    ))
}

/// Four-term b-polynomial identity, 1 <= m <= 10^4.
pub fn criterion_2() -> Result<CriterionResult> {
    let bad = failures(1..=10_000, key_identity_check)?;
    Ok(CriterionResult::new(
        2,
        "key identity",
        bad.is_empty(),
        summarize("key identity, m in 1..=10000", 10_000, &bad),
    ))
}

/// Sturm certificates for L_1 .. L_200.
pub fn criterion_3() -> Result<CriterionResult> {
    let ls = LSequence::new(200);
    let bad = failures(1..=200, |n| Ok(certify_with_id(ls.get(n as usize), Some(n))?.real_rooted))?;
    Ok(CriterionResult::new(
        3,
        "real-rootedness",
        bad.is_empty(),
        summarize("L_n real-rooted, 1..=200", 200, &bad),
    ))
}

/// L_{2n} | L_{4n+1} for 1 <= n <= 50, with E_n M_n = J_n and T_2 = 2 O_3.
pub fn criterion_4() -> Result<CriterionResult> {
    let mut verdict_bad = Vec::new();
    let mut h_bad = Vec::new();
    for n in 1..=50 {
        let r = verify_divisibility(n)?;
        if !r.verdict {
            verdict_bad.push(n);
        }
        if !r.h_check {
            h_bad.push(n);
        }
    }
    let pass = verdict_bad.is_empty() && h_bad.is_empty();
    let detail = format!(
        "{}; T_2 == 2*O_3: {}; T_2 == 2*O_4: {}",
        summarize("zero remainder and E_n*M_n == J_n, 1..=50", 50, &verdict_bad),
        h_bad.is_empty(),
        t2_is_2l7()?
    );
    Ok(CriterionResult::new(4, "divisibility", pass, detail))
}

/// E, O and J recurrences for 2 <= n <= 25.
pub fn criterion_5() -> Result<CriterionResult> {
    let mut eo_bad = Vec::new();
    let mut j_bad = Vec::new();
    let mut j7_bad = Vec::new();
    for n in 2..=25 {
        let c = eoj_recurrence_check(n)?;
        if !(c.even && c.odd) {
            eo_bad.push(n);
        }
        if !c.quarter {
            j_bad.push(n);
        }
        if !c.quarter_h_2l7 {
            j7_bad.push(n);
        }
    }
    let pass = eo_bad.is_empty() && j_bad.is_empty();
    let detail = format!(
        "{}; {}; {}",
        summarize("E and O recurrences", 24, &eo_bad),
        summarize("J recurrence with h = 2*O_3", 24, &j_bad),
        summarize("J recurrence with h = 2*O_4", 24, &j7_bad),
    );
    Ok(CriterionResult::new(5, "subsequence recurrences", pass, detail))
}

/// Hankel determinants against their closed forms, plus the step relation.
pub fn criterion_6() -> Result<CriterionResult> {
    let mut bad = Vec::new();
    let mut total = 0;
    for k in 0..=20u32 {
        for m in 1..=2u32 {
            total += 1;
            if det_fraction_free(&hankel_matrix(k, m)?) != hankel_closed_form(k, m) {
                bad.push(format!("H_{m}^({k})"));
            }
        }
    }
    for k in 0..=10u32 {
        for m in 3..=5u32 {
            total += 1;
            if !det_fraction_free(&hankel_matrix(k, m)?).is_zero() {
                bad.push(format!("H_{m}^({k})"));
            }
        }
    }
    let step_bad = failures(1..=20, |k| h2_step_check(k as u32))?;
    let pass = bad.is_empty() && step_bad.is_empty();
    let detail = format!(
        "{}/{total} determinants match; {}",
        total - bad.len(),
        summarize("H_2 step relation, k in 1..=20", 20, &step_bad)
    );
    Ok(CriterionResult::new(6, "hankel determinants", pass, detail))
}

/// P_n-Eulerian polynomial against b_n(q), extension counts against the
/// diatomic sequence, and labeling independence.
pub fn criterion_7() -> Result<CriterionResult> {
    let mut eul_bad = Vec::new();
    let mut count_bad = Vec::new();
    let mut indep_bad = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(LABELING_SEED);
    for n in 1..=64u64 {
        let p = build_pn(n)?;
        let canonical = natural_labeling(&p)?;
        let eul = eulerian_polynomial(&p, &canonical)?;
        if eul != bpoly(n)? {
            eul_bad.push(n);
        }
        if enumerate_extensions(&p)?.len() as u64 != diatomic(n) {
            count_bad.push(n);
        }
        if n <= 16 {
            for l in distinct_random_labelings(&p, 3, 200, &mut rng) {
                if eulerian_polynomial(&p, &l)? != eul {
                    indep_bad.push(n);
                    break;
                }
            }
        }
    }
    let pass = eul_bad.is_empty() && count_bad.is_empty() && indep_bad.is_empty();
    let detail = format!(
        "{}; {}; {}",
        summarize("Eulerian(P_n) == b_n(q), 1..=64", 64, &eul_bad),
        summarize("e(P_n) == diatomic(n), 1..=64", 64, &count_bad),
        summarize("labeling independence, 1..=16", 16, &indep_bad),
    );
    Ok(CriterionResult::new(7, "poset oracle", pass, detail))
}

/// Row generating functions and the series for sum L_n x^n.
pub fn criterion_8() -> Result<CriterionResult> {
    let bad = failures(1..=12, |r| gf_row_check(r as u32))?;
    let phi = phi_series_check(15)?;
    let detail = format!("{}; series through x^15: {phi}", summarize("row product, r in 1..=12", 12, &bad));
    Ok(CriterionResult::new(8, "generating functions", bad.is_empty() && phi, detail))
}

/// Polynomial Binet form, 1 <= n <= 100.
pub fn criterion_9() -> Result<CriterionResult> {
    let bad = failures(1..=100, binet_check)?;
    Ok(CriterionResult::new(
        9,
        "binet identity",
        bad.is_empty(),
        summarize("L_n == 3F_n + 2(q-1)F_(n-1), 1..=100", 100, &bad),
    ))
}

/// Exact moments against their closed forms.
pub fn criterion_10() -> Result<CriterionResult> {
    let moments = exact_moments_upto(200);
    let mut bad = Vec::new();
    let mut sigma_bad = Vec::new();
    let mut items = Vec::new();
    for m in &moments {
        let c = closed_form_check_report(m);
        if !(c.value && c.d1 && c.d2 && c.mu) {
            bad.push(m.n);
            if items.is_empty() {
                let names = [("L(1)", c.value), ("L'(1)", c.d1), ("L''(1)", c.d2), ("mu", c.mu)];
                items = names.iter().filter(|(_, ok)| !ok).map(|(s, _)| *s).collect();
            }
        }
        if c.sigma2 == Some(false) {
            sigma_bad.push(m.n);
        }
    }
    let mut detail = summarize("L(1), L'(1), L''(1), mu, 1..=200", 200, &bad);
    if !items.is_empty() {
        detail.push_str(&format!(" (first failure on {})", items.join(", ")));
    }
    detail.push_str(&format!(
        "; {}",
        summarize("sigma^2 == 2(3n+1)/81, 2..=200", 199, &sigma_bad)
    ));
    Ok(CriterionResult::new(
        10,
        "moments",
        bad.is_empty() && sigma_bad.is_empty(),
        detail,
    ))
}

/// Variance growth and shrinking distances to the normal law.
pub fn criterion_11() -> Result<CriterionResult> {
    let moments = exact_moments_upto(200);
    let increasing = moments[1..].windows(2).all(|w| w[1].sigma2 > w[0].sigma2);
    let reports = normality_report(&[25, 50, 100, 200])?;
    let clt: Vec<f64> = reports.iter().map(|(_, d)| d.clt_sup).collect();
    let llt: Vec<f64> = reports.iter().map(|(_, d)| d.llt_sup).collect();
    let clt_ok = clt.windows(2).all(|w| w[1] <= w[0]);
    let llt_ok = llt.windows(2).all(|w| w[1] <= w[0]);
    let fmt = |v: &[f64]| v.iter().map(|x| format!("{x:.6e}")).collect::<Vec<_>>().join(", ");
    let detail = format!(
        "sigma^2 strictly increasing on 2..=200: {increasing}; clt_sup at n = 25, 50, 100, 200: [{}] non-increasing: {clt_ok}; llt_sup: [{}] non-increasing: {llt_ok}",
        fmt(&clt),
        fmt(&llt)
    );
    Ok(CriterionResult::new(
        11,
        "normality trend",
        increasing && clt_ok && llt_ok,
        detail,
    ))
}

pub type CriterionFn = fn() -> Result<CriterionResult>;

/// Criteria 1 through 11, in order.
pub const CRITERIA: [CriterionFn; 11] = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
    criterion_11,
];

pub fn run_suite() -> Result<Vec<CriterionResult>> {
    CRITERIA.iter().map(|f| f()).collect()
}
