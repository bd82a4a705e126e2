//! Flat, serializable report rows and the four output formats.

use std::fmt::Write as _;

use fibprod::catalog::{self, IdentityId, Params};
use fibprod::engine::GridJob;
use fibprod::{Error, GoldenExt, Mode, VerificationReport};
use serde::Serialize;

use crate::config::Format;

/// Significant digits used when printing bounds.
const BOUND_DIGITS: u32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactParts {
    pub a_num: String,
    pub a_den: String,
    pub b_num: String,
    pub b_den: String,
}

impl From<&GoldenExt> for ExactParts {
    fn from(x: &GoldenExt) -> Self {
        let (a, b) = (x.rational_part(), x.sqrt5_part());
        Self {
            a_num: a.numerator().to_string(),
            a_den: a.denominator().to_string(),
            b_num: b.numerator().to_string(),
            b_den: b.denominator().to_string(),
        }
    }
}

/// One line of output. Field order is the column order of every format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub id: IdentityId,
    pub theorem: u8,
    pub n: u32,
    pub q: u32,
    #[serde(rename = "N")]
    pub n_terms: u64,
    pub mode: &'static str,
    pub lhs_decimal: Option<String>,
    pub rhs_decimal: Option<String>,
    pub rhs_exact: Option<ExactParts>,
    pub deviation_bound: Option<String>,
    pub tail_bound: Option<String>,
    pub passed: bool,
    pub elapsed_ms: Option<u128>,
    #[serde(skip)]
    pub reason: Option<String>,
}

impl ReportRow {
    pub fn from_report(report: &VerificationReport, digits: u32, timing: bool) -> Self {
        let deviation = match report.mode {
            Mode::Exact => report.passed.then(|| "0".to_string()),
            Mode::Limit => report.deviation.as_ref().map(|d| d.to_sci_upper(BOUND_DIGITS)),
        };
        let reason = (!report.passed).then(|| match report.mode {
            Mode::Exact => "partial product differs from RHS times the boundary factor".to_string(),
            Mode::Limit => "deviation exceeds the certified tail bound".to_string(),
        });
        Self {
            id: report.id,
            theorem: report.id.theorem(),
            n: report.params.n,
            q: report.params.q,
            n_terms: report.n_terms,
            mode: report.mode.as_str(),
            lhs_decimal: Some(report.partial_product.to_decimal(digits)),
            rhs_decimal: Some(report.rhs.to_decimal(digits)),
            rhs_exact: Some(ExactParts::from(&report.rhs)),
            deviation_bound: deviation,
            tail_bound: report.tail_bound.as_ref().map(|t| t.to_sci_upper(BOUND_DIGITS)),
            passed: report.passed,
            elapsed_ms: timing.then(|| report.elapsed_ms()),
            reason,
        }
    }

    /// A failed row for a check the engine could not carry out.
    pub fn from_error(job: GridJob, error: &Error, digits: u32) -> Self {
        let rhs = catalog::rhs_closed_form(job.id, job.params).ok();
        Self {
            id: job.id,
            theorem: job.id.theorem(),
            n: job.params.n,
            q: job.params.q,
            n_terms: job.n_terms,
            mode: job.mode.as_str(),
            lhs_decimal: None,
            rhs_decimal: rhs.as_ref().map(|r| r.to_decimal(digits)),
            rhs_exact: rhs.as_ref().map(ExactParts::from),
            deviation_bound: None,
            tail_bound: None,
            passed: false,
            elapsed_ms: None,
            reason: Some(error.to_string()),
        }
    }

    pub fn params(&self) -> Params {
        Params { n: self.n, q: self.q }
    }
}

fn opt(s: &Option<String>) -> &str {
    s.as_deref().unwrap_or("-")
}

pub fn emit_report(rows: &[ReportRow], format: Format) -> String {
    match format {
        Format::Text => emit_text(rows),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows).expect("report rows serialize");
            s.push('\n');
            s
        }
        Format::Csv => emit_csv(rows),
        Format::Markdown => emit_markdown(rows),
    }
}

fn emit_text(rows: &[ReportRow]) -> String {
    let mut out = String::new();
    for r in rows {
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        let _ = write!(out, "{verdict} {} {} N={} {}", r.id, r.params(), r.n_terms, r.mode);
        let _ = write!(out, "\n  lhs = {}\n  rhs = {}", opt(&r.lhs_decimal), opt(&r.rhs_decimal));
        if let Some(d) = &r.deviation_bound {
            let _ = write!(out, "\n  deviation <= {d}");
        }
        if let Some(t) = &r.tail_bound {
            let _ = write!(out, "\n  tail bound <= {t}");
        }
        if let Some(ms) = r.elapsed_ms {
            let _ = write!(out, "\n  elapsed {ms} ms");
        }
        if let Some(reason) = &r.reason {
            let _ = write!(out, "\n  reason: {reason}");
        }
        out.push('\n');
    }
    let passed = rows.iter().filter(|r| r.passed).count();
    let _ = writeln!(out, "{} checks: {passed} passed, {} failed", rows.len(), rows.len() - passed);
    out
}

const COLUMNS: [&str; 16] = [
    "id",
    "theorem",
    "n",
    "q",
    "N",
    "mode",
    "lhs_decimal",
    "rhs_decimal",
    "a_num",
    "a_den",
    "b_num",
    "b_den",
    "deviation_bound",
    "tail_bound",
    "passed",
    "elapsed_ms",
];

fn cells(r: &ReportRow) -> Vec<String> {
    let exact = |f: fn(&ExactParts) -> &String| r.rhs_exact.as_ref().map(f).cloned().unwrap_or_default();
    vec![
        r.id.to_string(),
        r.theorem.to_string(),
        r.n.to_string(),
        r.q.to_string(),
        r.n_terms.to_string(),
        r.mode.to_string(),
        r.lhs_decimal.clone().unwrap_or_default(),
        r.rhs_decimal.clone().unwrap_or_default(),
        exact(|e| &e.a_num),
        exact(|e| &e.a_den),
        exact(|e| &e.b_num),
        exact(|e| &e.b_den),
        r.deviation_bound.clone().unwrap_or_default(),
        r.tail_bound.clone().unwrap_or_default(),
        r.passed.to_string(),
        r.elapsed_ms.map(|m| m.to_string()).unwrap_or_default(),
    ]
}

fn emit_csv(rows: &[ReportRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(COLUMNS).expect("in-memory write");
    for r in rows {
        w.write_record(cells(r)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is UTF-8")
}

fn emit_markdown(rows: &[ReportRow]) -> String {
    let mut out = String::new();
    let mut theorems: Vec<u8> = rows.iter().map(|r| r.theorem).collect();
    theorems.dedup();
    for t in theorems {
        if !out.is_empty() {
            out.push('\n');
        }
        let _ = writeln!(out, "## Theorem {t}\n");
        let _ = writeln!(out, "| {} | reason |", COLUMNS.join(" | "));
        let _ = writeln!(out, "|{}", "---|".repeat(COLUMNS.len() + 1));
        for r in rows.iter().filter(|r| r.theorem == t) {
            let mut c = cells(r);
            c.push(r.reason.clone().unwrap_or_default());
            let _ = writeln!(out, "| {} |", c.join(" | "));
        }
    }
    out
}

#[derive(Serialize)]
struct CatalogRow {
    id: IdentityId,
    theorem: u8,
    family: String,
    p: &'static str,
    m: &'static str,
    alternating: bool,
    lhs: String,
    rhs: &'static str,
}

pub fn emit_catalog(format: Format) -> String {
    if format == Format::Json {
        let mut s = catalog::catalog_json();
        s.push('\n');
        return s;
    }
    let rows: Vec<CatalogRow> = catalog::list_identities()
        .iter()
        .map(|d| CatalogRow {
            id: d.id,
            theorem: d.theorem(),
            family: d.family_label(),
            p: d.p_text,
            m: d.m_text,
            alternating: d.alternating,
            lhs: d.lhs_text(),
            rhs: d.rhs_text,
        })
        .collect();
    let mut out = String::new();
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &rows {
                w.serialize(r).expect("in-memory write");
            }
            out = String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is UTF-8");
        }
        Format::Markdown => {
            out.push_str("| id | family | p | m | product | closed form |\n|---|---|---|---|---|---|\n");
            for r in &rows {
                let _ = writeln!(out, "| {} | {} | {} | {} | {} | {} |", r.id, r.family, r.p, r.m, r.lhs, r.rhs);
            }
        }
        _ => {
            for r in &rows {
                let _ = writeln!(out, "{}  {}  (p = {}, m = {})", r.id, r.family, r.p, r.m);
                let _ = writeln!(out, "    {} = {}", r.lhs, r.rhs);
            }
        }
    }
    out
}
