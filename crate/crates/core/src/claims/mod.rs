//! Published index values and their verification.
//!
//! A claim is data: the value as printed, where it was printed, and which
//! index of which Γ_k it describes. Evaluation recomputes that index from its
//! definition (BFS distances, edge and pair sums; never a closed form) and
//! compares exactly.

pub mod expr;
mod registry;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exact::IndexValue;
use crate::graph::build_gamma;
use crate::indices::{self, IndexContext, IndexId};

pub use registry::builtin_claims;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub k: u32,
    pub index: IndexId,
    /// Printed value in the expression language of [`expr`].
    pub printed: String,
    /// Constants the printed form refers to, in dependency order.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bindings: Vec<(String, String)>,
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Claim {
    pub fn claimed_value(&self) -> Result<IndexValue, expr::ExprError> {
        expr::evaluate(&self.printed, &self.bindings)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch,
    Unevaluable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::Unevaluable => "unevaluable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    #[serde(flatten)]
    pub claim: Claim,
    pub claimed: Option<IndexValue>,
    pub oracle: IndexValue,
    pub verdict: Verdict,
}

fn compare(claim: &Claim, oracle: IndexValue) -> ClaimReport {
    let (claimed, verdict) = match claim.claimed_value() {
        Ok(v) => {
            let verdict = if v == oracle {
                Verdict::Match
            } else {
                Verdict::Mismatch
            };
            (Some(v), verdict)
        }
        Err(_) => (None, Verdict::Unevaluable),
    };
    ClaimReport {
        claim: claim.clone(),
        claimed,
        oracle,
        verdict,
    }
}

fn gamma_context(k: u32) -> IndexContext {
    let g = build_gamma(k as usize, None).expect("registry k within range");
    IndexContext::new(&g).expect("divisor graphs are connected")
}

pub fn evaluate_claim(claim: &Claim) -> ClaimReport {
    let ctx = gamma_context(claim.k);
    compare(claim, indices::compute(&ctx, claim.index))
}

/// Evaluates `claims` (optionally only those for one `k`), preserving order.
pub fn run_claims(claims: &[Claim], k: Option<u32>) -> Vec<ClaimReport> {
    let selected: Vec<&Claim> = claims
        .iter()
        .filter(|c| k.is_none_or(|k| c.k == k))
        .collect();
    let mut ks: Vec<u32> = selected.iter().map(|c| c.k).collect();
    ks.sort_unstable();
    ks.dedup();
    let contexts: BTreeMap<u32, IndexContext> = ks
        .into_par_iter()
        .map(|k| (k, gamma_context(k)))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    selected
        .into_par_iter()
        .map(|c| compare(c, indices::compute(&contexts[&c.k], c.index)))
        .collect()
}

pub fn run_all(k: Option<u32>) -> Vec<ClaimReport> {
    run_claims(&builtin_claims(), k)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    #[serde(rename = "match")]
    pub matched: usize,
    pub mismatch: usize,
    pub unevaluable: usize,
}

impl Summary {
    pub fn of(reports: &[ClaimReport]) -> Self {
        let count = |v| reports.iter().filter(|r| r.verdict == v).count();
        Self {
            total: reports.len(),
            matched: count(Verdict::Match),
            mismatch: count(Verdict::Mismatch),
            unevaluable: count(Verdict::Unevaluable),
        }
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} claims: {} match, {} mismatch, {} unevaluable",
            self.total, self.matched, self.mismatch, self.unevaluable
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimsDocument {
    pub summary: Summary,
    pub reports: Vec<ClaimReport>,
}

impl ClaimsDocument {
    pub fn new(reports: Vec<ClaimReport>) -> Self {
        Self {
            summary: Summary::of(&reports),
            reports,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Markdown,
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', " ")
}

fn value_cell(v: &IndexValue) -> String {
    match v {
        IndexValue::Integer(_) => v.to_string(),
        _ => format!("{} ≈ {}", v, v.to_decimal(6)),
    }
}

pub fn render_markdown(doc: &ClaimsDocument) -> String {
    let mut out = String::from("# Claims report\n\n");
    out.push_str("| id | printed | claimed | oracle | verdict | source | note |\n");
    out.push_str("|---|---|---|---|---|---|---|\n");
    for r in &doc.reports {
        let claimed = r
            .claimed
            .as_ref()
            .map_or_else(|| "-".to_string(), value_cell);
        out.push_str(&format!(
            "| {} | `{}` | {} | {} | {} | {} | {} |\n",
            cell(&r.claim.id),
            cell(&r.claim.printed),
            cell(&claimed),
            cell(&value_cell(&r.oracle)),
            r.verdict,
            cell(&r.claim.source),
            cell(r.claim.note.as_deref().unwrap_or("")),
        ));
    }
    out.push_str(&format!("\n**Summary:** {}\n", doc.summary));
    out
}

pub fn render_report(reports: &[ClaimReport], format: ReportFormat) -> String {
    let doc = ClaimsDocument::new(reports.to_vec());
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Markdown => render_markdown(&doc),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(id: &str) -> ClaimReport {
        let claims = builtin_claims();
        let c = claims.iter().find(|c| c.id == id).unwrap();
        evaluate_claim(c)
    }

    #[test]
    fn registry_size_and_ids() {
        let claims = builtin_claims();
        assert_eq!(claims.len(), 33);
        assert_eq!(claims.iter().filter(|c| c.k == 3).count(), 13);
        assert_eq!(claims.iter().filter(|c| c.k == 4).count(), 10);
        assert_eq!(claims.iter().filter(|c| c.k == 5).count(), 10);
        let mut ids: Vec<&str> = claims.iter().map(|c| c.id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 33);
        for c in &claims {
            assert!(!c.source.is_empty());
            assert!(c.claimed_value().is_ok(), "{}", c.id);
        }
    }

    #[test]
    fn registry_examples() {
        let claims = builtin_claims();
        let get = |id: &str| {
            claims
                .iter()
                .find(|c| c.id == id)
                .unwrap()
                .claimed_value()
                .unwrap()
        };
        assert_eq!(get("gamma3.zagreb2"), IndexValue::from(481u64));
        assert_eq!(get("gamma4.harmonic").to_string(), "36367/4830");
        assert_eq!(get("gamma5.mostar"), IndexValue::from(1720u64));
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(report("gamma3.mostar").verdict, Verdict::Match);
        assert_eq!(report("gamma3.harary").verdict, Verdict::Match);
        let dd = report("gamma4.degree_distance");
        assert_eq!(dd.verdict, Verdict::Mismatch);
        assert_eq!(dd.oracle, IndexValue::from(2722u64));
    }

    #[test]
    fn unparseable_claim_is_unevaluable() {
        let mut c = builtin_claims().remove(0);
        c.printed = "37 +".into();
        let r = evaluate_claim(&c);
        assert_eq!(r.verdict, Verdict::Unevaluable);
        assert!(r.claimed.is_none());
    }

    #[test]
    fn filter_by_k() {
        assert_eq!(run_all(Some(3)).len(), 13);
        assert_eq!(run_all(Some(7)).len(), 0);
        assert_eq!(run_all(None).len(), 33);
    }

    #[test]
    fn json_roundtrip() {
        let reports = run_all(Some(3));
        let json = render_report(&reports, ReportFormat::Json);
        let doc: ClaimsDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(doc.reports, reports);
        assert_eq!(doc.summary.total, 13);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert!(v["summary"]["match"].is_u64());
        assert_eq!(v["reports"][0]["id"], "gamma3.wiener");
        assert_eq!(v["reports"][0]["verdict"], "match");
    }

    #[test]
    fn markdown_has_one_row_per_claim() {
        let md = render_report(&run_all(Some(3)), ReportFormat::Markdown);
        let rows = md.lines().filter(|l| l.starts_with("| gamma")).count();
        assert_eq!(rows, 13);
        assert!(md.contains("**Summary:** 13 claims"));
    }
}
