//! Command-line front end: `stern-lab <verb> [args] [--format human|json|csv] [--out PATH]`.
//!
//! Exit status is 0 when every verdict in the run is true, 2 when at least
//! one is false, and 1 on usage or guard errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::guards::{
    check_max, check_min, Guards, MAX_GF_ROW, MAX_HANKEL_SIZE, MAX_INDEX, MAX_TRIANGLE_ROW,
};
use crate::hankel::{hankel_report, HankelReport};
use crate::normality::{closed_form_check_report, exact_moments, normality_report, NormalityRow};
use crate::poly::{serialize_bigint, serialize_rational, IntPoly, Rational};
use crate::poset::{build_pn, enumerate_extensions, eulerian_polynomial, natural_labeling};
use crate::roots::{certify_with_id, CertificateReport};
use crate::stern::{
    binet_check, bpoly, eoj_recurrence_check, gf_row_check, key_identity_check, lpoly_def_upto_with,
    phi_series_check, triangle_row, verify_divisibility, EojCheck, LSequence, SternRow,
};
use crate::suite::{run_suite, CriterionResult};

const MAX_LPOLY_DEF_GUARD: &str = "MAX_LPOLY_DEF_N (set STERN_LAB_MAX_N to change)";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FALSE_VERDICT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "stern-lab",
    version,
    about = "Exact checks on Stern's triangle polynomials b_n(q) and their Eulerian row sums L_n(q)",
    after_help = "Exit status: 0 all verdicts true, 1 usage or guard error, 2 some verdict false.\n\
                  STERN_LAB_MAX_N overrides the direct-summation cap for `lpoly --method def`."
)]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

/// A single index, or an inclusive range with `--from` and `--to`.
#[derive(Args, Debug, Clone)]
pub struct Indices {
    pub n: Option<u64>,
    #[arg(long)]
    pub from: Option<u64>,
    #[arg(long)]
    pub to: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Def,
    Rec,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Row r of Stern's triangle.
    Row(Indices),
    /// b_n(q).
    Bpoly(Indices),
    /// L_n(q), by direct summation or by the three-term recurrence.
    Lpoly {
        #[command(flatten)]
        idx: Indices,
        #[arg(long, value_enum, default_value_t = Method::Rec)]
        method: Method,
    },
    /// Sturm certificate that L_n(q) (or --poly) has only real zeros.
    Certify {
        #[command(flatten)]
        idx: Indices,
        /// Certify this polynomial instead, written as "[c0, c1, ...]".
        #[arg(long, conflicts_with_all = ["n", "from", "to"])]
        poly: Option<IntPoly>,
    },
    /// L_{2n} divides L_{4n+1}, with cofactor M_n.
    Divide(Indices),
    /// Hankel determinant H_m^(k) of the L-sequence, or a sweep.
    Hankel {
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long, default_value_t = 2)]
        m: u32,
        /// Sweep k = 0..=K (with m = 1..=M from --m-max, default 3).
        #[arg(long, value_name = "K")]
        k_max: Option<u32>,
        #[arg(long, value_name = "M")]
        m_max: Option<u32>,
    },
    /// P_n-Eulerian polynomial from linear extensions, against b_n(q).
    Oracle(Indices),
    /// Exact mean and variance plus distances to the normal law.
    Normality {
        ns: Vec<u64>,
        #[arg(long)]
        from: Option<u64>,
        #[arg(long)]
        to: Option<u64>,
    },
    /// Exact moments at q = 1 against their closed forms.
    Moments(Indices),
    /// Row generating function check, or the L-series check with --phi.
    Gf {
        #[command(flatten)]
        idx: Indices,
        /// Compare the series for sum L_n x^n through x^N.
        #[arg(long, value_name = "N", conflicts_with_all = ["n", "from", "to"])]
        phi: Option<u64>,
    },
    /// Four-term identity for b_{4m}, ..., b_{4m+3}.
    Identity(Indices),
    /// L_n == 3 F_n + 2(q-1) F_{n-1}.
    Binet(Indices),
    /// Recurrences of L_{2n}, L_{2n-1} and L_{4n+1}.
    Eoj(Indices),
    /// Every acceptance check, in order.
    Suite,
}

impl Indices {
    /// The requested indices and whether a single one was named.
    fn resolve(&self, min: u64) -> Result<(Vec<u64>, bool)> {
        let list = match (self.n, self.from, self.to) {
            (Some(n), None, None) => return check_min("n", n, min).map(|_| (vec![n], true)),
            (None, Some(a), Some(b)) => range(a, b)?,
            (None, None, None) => return Err(usage("give an index or --from A --to B")),
            (Some(_), _, _) => return Err(usage("give either an index or a range, not both")),
            _ => return Err(usage("a range needs both --from and --to")),
        };
        check_min("--from", list[0], min)?;
        Ok((list, false))
    }
}

fn range(a: u64, b: u64) -> Result<Vec<u64>> {
    if a > b {
        return Err(usage(&format!("empty range --from {a} --to {b}")));
    }
    Ok((a..=b).collect())
}

fn usage(msg: &str) -> Error {
    Error::Parse(msg.to_string())
}

fn check_all(list: &[u64], what: &'static str, guard: &'static str, limit: u64) -> Result<()> {
    match list.iter().max() {
        Some(&m) => check_max(what, m, guard, limit),
        None => Ok(()),
    }
}

/// One row of output in every format.
pub trait Record: Serialize {
    fn csv_header() -> &'static [&'static str];
    fn csv_fields(&self) -> Vec<String>;
    fn human(&self) -> String;
    /// The mathematical verdict carried by this record, if any.
    fn verdict(&self) -> Option<bool> {
        None
    }
}

/// Records plus whether the run named a single index (object vs array).
pub struct Output<T> {
    pub records: Vec<T>,
    pub single: bool,
}

impl<T: Record> Output<T> {
    pub fn many(records: Vec<T>) -> Self {
        Output { records, single: false }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => {
                let text = if self.single && self.records.len() == 1 {
                    serde_json::to_string(&self.records[0])
                } else {
                    serde_json::to_string(&self.records)
                };
                Ok(text.map_err(|e| Error::Parse(e.to_string()))? + "\n")
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                let io = |e: csv::Error| Error::Parse(e.to_string());
                w.write_record(T::csv_header()).map_err(io)?;
                for r in &self.records {
                    w.write_record(r.csv_fields()).map_err(io)?;
                }
                let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
                Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
            }
            Format::Human => Ok(self.records.iter().map(|r| r.human() + "\n").collect()),
        }
    }

    pub fn all_true(&self) -> bool {
        self.records.iter().all(|r| r.verdict().unwrap_or(true))
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

impl Record for SternRow {
    fn csv_header() -> &'static [&'static str] {
        &["r", "values"]
    }
    fn csv_fields(&self) -> Vec<String> {
        let v: Vec<String> = self.values.iter().map(|x| x.to_string()).collect();
        vec![self.r.to_string(), v.join(" ")]
    }
    fn human(&self) -> String {
        let v: Vec<String> = self.values.iter().map(|x| x.to_string()).collect();
        format!("row {}: {}", self.r, v.join(" "))
    }
}

/// A polynomial of a family at one index.
#[derive(Serialize)]
pub struct PolyRecord {
    #[serde(skip)]
    pub symbol: &'static str,
    pub n: u64,
    pub coeffs: IntPoly,
}

impl Record for PolyRecord {
    fn csv_header() -> &'static [&'static str] {
        &["n", "coeffs"]
    }
    fn csv_fields(&self) -> Vec<String> {
        vec![self.n.to_string(), self.coeffs.to_list_string()]
    }
    fn human(&self) -> String {
        format!("{}_{}(q) = {}", self.symbol, self.n, self.coeffs)
    }
}

impl Record for CertificateReport {
    fn csv_header() -> &'static [&'static str] {
        &["n", "degree", "distinct_real_roots", "real_rooted"]
    }
    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.n.map(|n| n.to_string()).unwrap_or_default(),
            self.degree.to_string(),
            self.distinct_real_roots.to_string(),
            yes_no(self.real_rooted).to_string(),
        ]
    }
    fn human(&self) -> String {
        let name = self.n.map(|n| format!("L_{n}")).unwrap_or_else(|| "p".to_string());
        format!(
            "{name}: degree {}, {} distinct real roots, {}",
            self.degree,
            self.distinct_real_roots,
            if self.real_rooted { "real-rooted" } else { "NOT real-rooted" }
        )
    }
    fn verdict(&self) -> Option<bool> {
        Some(self.real_rooted)
    }
}

#[derive(Serialize)]
pub struct DivisionRecord {
    pub n: u64,
    pub quotient: IntPoly,
    pub remainder: Vec<String>,
    pub h_check: bool,
    pub t2_is_2l7: bool,
    pub verdict: bool,
}

impl Record for DivisionRecord {
    fn csv_header() -> &'static [&'static str] {
        &["n", "quotient", "remainder", "h_check", "t2_is_2l7", "verdict"]
    }
    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.quotient.to_list_string(),
            format!("[{}]", self.remainder.join(", ")),
            yes_no(self.h_check).into(),
            yes_no(self.t2_is_2l7).into(),
            yes_no(self.verdict).into(),
        ]
    }
    fn human(&self) -> String {
        let n = self.n;
        let rem = if self.remainder.is_empty() { "0".to_string() } else { format!("[{}]", self.remainder.join(", ")) };
        format!(
            "L_{} / L_{}: M_{n} = {}, remainder {rem}, verdict {} (T_2 == 2*O_3: {}, T_2 == 2*O_4: {})",
            4 * n + 1,
            2 * n,
            self.quotient,
            self.verdict,
            self.h_check,
            self.t2_is_2l7
        )
    }
    fn verdict(&self) -> Option<bool> {
        Some(self.verdict)
    }
}

impl Record for HankelReport {
    fn csv_header() -> &'static [&'static str] {
        &["k", "m", "det", "match"]
    }
    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.k.to_string(),
            self.m.to_string(),
            self.determinant.to_list_string(),
            yes_no(self.closed_form_match).into(),
        ]
    }
    fn human(&self) -> String {
        format!(
            "H_{}^({}) = {}, closed form {}",
            self.m,
            self.k,
            self.determinant,
            if self.closed_form_match { "matches" } else { "DIFFERS" }
        )
    }
    fn verdict(&self) -> Option<bool> {
        Some(self.closed_form_match)
    }
}

#[derive(Serialize)]
pub struct OracleRecord {
    pub n: u64,
    pub size: usize,
    pub extensions: usize,
    pub eulerian: IntPoly,
    pub bpoly: IntPoly,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl Record for OracleRecord {
    fn csv_header() -> &'static [&'static str] {
        &["n", "size", "extensions", "eulerian", "bpoly", "match"]
    }
    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.size.to_string(),
            self.extensions.to_string(),
            self.eulerian.to_list_string(),
            self.bpoly.to_list_string(),
            yes_no(self.matches).into(),
        ]
    }
    fn human(&self) -> String {
        format!(
            "P_{}: {} elements, {} linear extensions, Eulerian {} vs b_{}(q) = {}: {}",
            self.n,
            self.size,
            self.extensions,
            self.eulerian,
            self.n,
            self.bpoly,
            if self.matches { "equal" } else { "DIFFERENT" }
        )
    }
    fn verdict(&self) -> Option<bool> {
        Some(self.matches)
    }
}

impl Record for NormalityRow {
    fn csv_header() -> &'static [&'static str] {
        &["n", "L1", "mu", "sigma2", "clt_sup", "llt_sup"]
    }
    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.value_at_1.to_string(),
            self.mu.to_string(),
            self.sigma2.to_string(),
            self.clt_sup.to_string(),
            self.llt_sup.to_string(),
        ]
    }
    fn human(&self) -> String {
        format!(
            "n = {}: mu = {}, sigma^2 = {}, clt_sup = {:.6e}, llt_sup = {:.6e}",
            self.n, self.mu, self.sigma2, self.clt_sup, self.llt_sup
        )
    }
}

#[derive(Serialize)]
pub struct MomentRecord {
    pub n: u64,
    #[serde(rename = "L1", serialize_with = "serialize_bigint")]
    pub value_at_1: num_bigint::BigInt,
    #[serde(rename = "dL1", serialize_with = "serialize_bigint")]
    pub d1_at_1: num_bigint::BigInt,
    #[serde(rename = "d2L1", serialize_with = "serialize_bigint")]
    pub d2_at_1: num_bigint::BigInt,
    #[serde(serialize_with = "serialize_rational")]
    pub mu: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub sigma2: Rational,
    pub value_ok: bool,
    pub d1_ok: bool,
    pub d2_ok: bool,
    pub mu_ok: bool,
    pub sigma2_ok: Option<bool>,
}

impl Record for MomentRecord {
    fn csv_header() -> &'static [&'static str] {
        &["n", "L1", "dL1", "d2L1", "mu", "sigma2", "value_ok", "d1_ok", "d2_ok", "mu_ok", "sigma2_ok"]
    }
    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.value_at_1.to_string(),
            self.d1_at_1.to_string(),
            self.d2_at_1.to_string(),
            self.mu.to_string(),
            self.sigma2.to_string(),
            yes_no(self.value_ok).into(),
            yes_no(self.d1_ok).into(),
            yes_no(self.d2_ok).into(),
            yes_no(self.mu_ok).into(),
            self.sigma2_ok.map(|b| yes_no(b).to_string()).unwrap_or_default(),
        ]
    }
    fn human(&self) -> String {
        let flag = |b: bool| if b { "ok" } else { "MISMATCH" };
        format!(
            "n = {}: L(1) = {} [{}], L'(1) = {} [{}], L''(1) = {} [{}], mu = {} [{}], sigma^2 = {} [{}]",
            self.n,
            self.value_at_1,
            flag(self.value_ok),
            self.d1_at_1,
            flag(self.d1_ok),
            self.d2_at_1,
            flag(self.d2_ok),
            self.mu,
            flag(self.mu_ok),
            self.sigma2,
            self.sigma2_ok.map(flag).unwrap_or("not checked")
        )
    }
    fn verdict(&self) -> Option<bool> {
        Some(self.value_ok && self.d1_ok && self.d2_ok && self.mu_ok && self.sigma2_ok.unwrap_or(true))
    }
}

/// A boolean check at one index, serialized as `{"<key>": index, "holds": ...}`.
pub struct IndexCheck {
    pub key: &'static str,
    pub label: &'static str,
    pub index: u64,
    pub holds: bool,
}

impl Serialize for IndexCheck {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry(self.key, &self.index)?;
        m.serialize_entry("holds", &self.holds)?;
        m.end()
    }
}

impl Record for IndexCheck {
    fn csv_header() -> &'static [&'static str] {
        &["index", "holds"]
    }
    fn csv_fields(&self) -> Vec<String> {
        vec![self.index.to_string(), yes_no(self.holds).into()]
    }
    fn human(&self) -> String {
        format!("{} at {} = {}: {}", self.label, self.key, self.index, if self.holds { "holds" } else { "FAILS" })
    }
    fn verdict(&self) -> Option<bool> {
        Some(self.holds)
    }
}

impl Record for EojCheck {
    fn csv_header() -> &'static [&'static str] {
        &["n", "even", "odd", "quarter", "quarter_h_2l7"]
    }
    fn csv_fields(&self) -> Vec<String> {
        [self.even, self.odd, self.quarter, self.quarter_h_2l7]
            .iter()
            .fold(vec![self.n.to_string()], |mut v, &b| {
                v.push(yes_no(b).into());
                v
            })
    }
    fn human(&self) -> String {
        format!(
            "n = {}: E recurrence {}, O recurrence {}, J recurrence (h = 2*O_3) {}, J recurrence (h = 2*O_4) {}",
            self.n, self.even, self.odd, self.quarter, self.quarter_h_2l7
        )
    }
    fn verdict(&self) -> Option<bool> {
        Some(self.holds())
    }
}

impl Record for CriterionResult {
    fn csv_header() -> &'static [&'static str] {
        &["criterion", "name", "pass", "detail"]
    }
    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.criterion.to_string(),
            self.name.to_string(),
            yes_no(self.pass).into(),
            self.detail.clone(),
        ]
    }
    fn human(&self) -> String {
        self.line()
    }
    fn verdict(&self) -> Option<bool> {
        Some(self.pass)
    }
}

/// Rendered report text and the verdict of the whole run.
pub struct Rendered {
    pub text: String,
    pub all_true: bool,
}

fn finish<T: Record>(out: Output<T>, format: Format) -> Result<Rendered> {
    Ok(Rendered {
        text: out.render(format)?,
        all_true: out.all_true(),
    })
}

fn checks(
    list: Vec<u64>,
    single: bool,
    key: &'static str,
    label: &'static str,
    f: impl Fn(u64) -> Result<bool>,
) -> Result<Output<IndexCheck>> {
    let records = list
        .into_iter()
        .map(|index| Ok(IndexCheck { key, label, index, holds: f(index)? }))
        .collect::<Result<Vec<_>>>()?;
    Ok(Output { records, single })
}

/// Validates guards, runs the verb and renders the report.
pub fn execute(cli: &Cli) -> Result<Rendered> {
    let f = cli.format;
    match &cli.verb {
        Verb::Row(idx) => {
            let (list, single) = idx.resolve(0)?;
            check_all(&list, "r", "MAX_TRIANGLE_ROW", MAX_TRIANGLE_ROW as u64)?;
            let records = list.iter().map(|&r| triangle_row(r as u32)).collect::<Result<Vec<_>>>()?;
            finish(Output { records, single }, f)
        }
        Verb::Bpoly(idx) => {
            let (list, single) = idx.resolve(1)?;
            let records = list
                .iter()
                .map(|&n| Ok(PolyRecord { symbol: "b", n, coeffs: bpoly(n)? }))
                .collect::<Result<Vec<_>>>()?;
            finish(Output { records, single }, f)
        }
        Verb::Lpoly { idx, method } => {
            let (list, single) = idx.resolve(1)?;
            let top = *list.last().unwrap();
            let polys: Vec<IntPoly> = match method {
                Method::Def => {
                    let guards = Guards::from_env()?;
                    check_max("n", top, MAX_LPOLY_DEF_GUARD, guards.max_lpoly_def_n as u64)?;
                    lpoly_def_upto_with(top as u32, &guards)?
                }
                Method::Rec => {
                    check_max("n", top, "MAX_INDEX", MAX_INDEX)?;
                    LSequence::new(top as usize).iter().cloned().collect()
                }
            };
            let records = list
                .iter()
                .map(|&n| PolyRecord { symbol: "L", n, coeffs: polys[n as usize - 1].clone() })
                .collect();
            finish(Output { records, single }, f)
        }
        Verb::Certify { idx, poly } => {
            if let Some(p) = poly {
                return finish(Output { records: vec![certify_with_id(p, None)?], single: true }, f);
            }
            let (list, single) = idx.resolve(1)?;
            check_all(&list, "n", "MAX_INDEX", MAX_INDEX)?;
            let ls = LSequence::new(*list.last().unwrap() as usize);
            let records = list
                .iter()
                .map(|&n| certify_with_id(ls.get(n as usize), Some(n)))
                .collect::<Result<Vec<_>>>()?;
            finish(Output { records, single }, f)
        }
        Verb::Divide(idx) => {
            let (list, single) = idx.resolve(1)?;
            check_all(&list, "n", "MAX_INDEX", MAX_INDEX)?;
            let records = list
                .iter()
                .map(|&n| {
                    let r = verify_divisibility(n)?;
                    Ok(DivisionRecord {
                        n,
                        quotient: r.quotient,
                        remainder: r.remainder.coeffs().iter().map(|c| c.to_string()).collect(),
                        h_check: r.h_check,
                        t2_is_2l7: r.t2_is_2l7,
                        verdict: r.verdict,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            finish(Output { records, single }, f)
        }
        Verb::Hankel { k, m, k_max, m_max } => {
            if k_max.is_none() && m_max.is_none() {
                check_max("k", *k as u64, "MAX_INDEX", MAX_INDEX)?;
                return finish(Output { records: vec![hankel_report(*k, *m)?], single: true }, f);
            }
            let (k_max, m_max) = (k_max.unwrap_or(*k), m_max.unwrap_or(3));
            check_max("k", k_max as u64, "MAX_INDEX", MAX_INDEX)?;
            check_max("m", m_max as u64, "MAX_HANKEL_SIZE", MAX_HANKEL_SIZE)?;
            finish(Output::many(crate::hankel::verify_hankel_corollary(k_max, m_max)?), f)
        }
        Verb::Oracle(idx) => {
            let (list, single) = idx.resolve(1)?;
            check_all(&list, "n", "MAX_INDEX", MAX_INDEX)?;
            let records = list
                .iter()
                .map(|&n| {
                    let p = build_pn(n)?;
                    let eulerian = eulerian_polynomial(&p, &natural_labeling(&p)?)?;
                    let b = bpoly(n)?;
                    Ok(OracleRecord {
                        n,
                        size: p.len(),
                        extensions: enumerate_extensions(&p)?.len(),
                        matches: eulerian == b,
                        eulerian,
                        bpoly: b,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            finish(Output { records, single }, f)
        }
        Verb::Normality { ns, from, to } => {
            let (list, single) = match (from, to) {
                (None, None) => (ns.clone(), ns.len() == 1),
                (Some(a), Some(b)) if ns.is_empty() => (range(*a, *b)?, false),
                _ => return Err(usage("give indices or --from A --to B")),
            };
            for &n in &list {
                check_min("n", n, 2)?;
            }
            check_all(&list, "n", "MAX_INDEX", MAX_INDEX)?;
            let records = normality_report(&list)?.iter().map(|(m, d)| NormalityRow::new(m, d)).collect();
            finish(Output { records, single }, f)
        }
        Verb::Moments(idx) => {
            let (list, single) = idx.resolve(1)?;
            check_all(&list, "n", "MAX_INDEX", MAX_INDEX)?;
            let records = list
                .iter()
                .map(|&n| {
                    let m = exact_moments(n)?;
                    let c = closed_form_check_report(&m);
                    Ok(MomentRecord {
                        n,
                        value_at_1: m.value_at_1,
                        d1_at_1: m.d1_at_1,
                        d2_at_1: m.d2_at_1,
                        mu: m.mu,
                        sigma2: m.sigma2,
                        value_ok: c.value,
                        d1_ok: c.d1,
                        d2_ok: c.d2,
                        mu_ok: c.mu,
                        sigma2_ok: c.sigma2,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            finish(Output { records, single }, f)
        }
        Verb::Gf { idx, phi } => {
            if let Some(terms) = phi {
                check_max("N", *terms, "MAX_INDEX", MAX_INDEX)?;
                let out = checks(vec![*terms], true, "terms", "series for sum L_n x^n", phi_series_check)?;
                return finish(out, f);
            }
            let (list, single) = idx.resolve(1)?;
            check_all(&list, "r", "MAX_GF_ROW", MAX_GF_ROW as u64)?;
            finish(checks(list, single, "r", "row generating function", |r| gf_row_check(r as u32))?, f)
        }
        Verb::Identity(idx) => {
            let (list, single) = idx.resolve(1)?;
            finish(checks(list, single, "m", "key identity", key_identity_check)?, f)
        }
        Verb::Binet(idx) => {
            let (list, single) = idx.resolve(1)?;
            check_all(&list, "n", "MAX_INDEX", MAX_INDEX)?;
            finish(checks(list, single, "n", "binet identity", binet_check)?, f)
        }
        Verb::Eoj(idx) => {
            let (list, single) = idx.resolve(2)?;
            check_all(&list, "n", "MAX_INDEX", MAX_INDEX)?;
            let records = list.iter().map(|&n| eoj_recurrence_check(n)).collect::<Result<Vec<_>>>()?;
            finish(Output { records, single }, f)
        }
        Verb::Suite => finish(Output::many(run_suite()?), f),
    }
}

/// Parses `args` (program name first), runs, writes the report, and
/// returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let rendered = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("stern-lab: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &rendered.text),
        None => std::io::stdout().lock().write_all(rendered.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("stern-lab: cannot write report: {e}");
        return EXIT_USAGE;
    }
    if rendered.all_true {
        EXIT_OK
    } else {
        EXIT_FALSE_VERDICT
    }
}
