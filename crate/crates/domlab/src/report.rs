//! Claim report records and deterministic JSON / CSV emission.

use serde::Serialize;
use serde_json::Value;
use std::fmt;
use std::io::Write;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("failed to write report: {0}")]
    Io(#[from] std::io::Error),
    #[error("failed to serialize report: {0}")]
    Serialize(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "fail",
            ClaimStatus::Inconclusive => "inconclusive",
        };
        f.write_str(s)
    }
}

/// One verified claim. `expected` and `computed` hold integers and "p/q"
/// rational strings only — never floats — so a `pass` status is exact
/// structural equality.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub citation: String,
    pub quote: String,
    pub expected: Value,
    pub computed: Value,
    pub status: ClaimStatus,
    pub runtime_s: f64,
    pub notes: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

pub fn emit_json(reports: &[ClaimReport]) -> Result<String, ReportError> {
    Ok(serde_json::to_string_pretty(reports)?)
}

fn csv_field(raw: &str) -> String {
    if raw.contains([',', '"', '\n']) {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}

pub fn emit_csv(reports: &[ClaimReport]) -> Result<String, ReportError> {
    let mut out = String::from("claim_id,citation,quote,expected,computed,status,runtime_s,notes\n");
    for r in reports {
        let row = [
            csv_field(&r.claim_id),
            csv_field(&r.citation),
            csv_field(&r.quote),
            csv_field(&serde_json::to_string(&r.expected)?),
            csv_field(&serde_json::to_string(&r.computed)?),
            r.status.to_string(),
            format!("{:.3}", r.runtime_s),
            csv_field(&r.notes),
        ];
        out.push_str(&row.join(","));
        out.push('\n');
    }
    Ok(out)
}

pub fn write_report(reports: &[ClaimReport], format: ReportFormat, path: &Path) -> Result<(), ReportError> {
    let body = match format {
        ReportFormat::Json => emit_json(reports)?,
        ReportFormat::Csv => emit_csv(reports)?,
    };
    let mut f = std::fs::File::create(path)?;
    f.write_all(body.as_bytes())?;
    Ok(())
}

/// Exit code for a batch of reports: 0 all pass, 1 any fail,
/// 2 any inconclusive (and none failed).
pub fn exit_code(reports: &[ClaimReport]) -> i32 {
    if reports.iter().any(|r| r.status == ClaimStatus::Fail) {
        1
    } else if reports.iter().any(|r| r.status == ClaimStatus::Inconclusive) {
        2
    } else {
        0
    }
}
