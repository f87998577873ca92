//! Audit report, audit cache, expected errata and the errata ledger.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use gobench_core::registry;
use gobench_core::verify::{self, AuditRecord, AuditReport, ErrataEntry};
use serde::{Deserialize, Serialize};

use crate::text::{self, finite};

/// Default location of the audit cache.
pub const CACHE_FILE: &str = "bench-audit.json";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditRow {
    #[serde(rename = "fn")]
    pub function: String,
    pub index: usize,
    pub dimension: usize,
    pub point: Vec<f64>,
    pub representative: bool,
    pub claimed: Option<f64>,
    pub evaluated: Option<f64>,
    pub residual: Option<f64>,
    pub tolerance: Option<f64>,
    pub refined: Option<f64>,
    pub refined_point: Vec<f64>,
    pub stationarity: Option<f64>,
    pub status: String,
    pub note: String,
}

impl From<&AuditRecord> for AuditRow {
    fn from(r: &AuditRecord) -> Self {
        Self {
            function: r.function.slug.into(),
            index: r.function.index as usize,
            dimension: r.dimension,
            point: r.point.clone(),
            representative: r.representative,
            claimed: finite(r.claimed),
            evaluated: finite(r.evaluated),
            residual: finite(r.residual),
            tolerance: finite(r.tolerance),
            refined: finite(r.refined_value),
            refined_point: r.refined_point.clone(),
            stationarity: finite(r.stationarity),
            status: r.status.as_str().into(),
            note: r.note.clone(),
        }
    }
}

pub fn rows(report: &AuditReport) -> Vec<AuditRow> {
    report.records.iter().map(AuditRow::from).collect()
}

pub fn write_json(mut w: impl Write, rows: &[AuditRow]) -> Result<()> {
    serde_json::to_writer_pretty(&mut w, rows)?;
    writeln!(w)?;
    Ok(())
}

pub fn write_csv(w: impl Write, rows: &[AuditRow]) -> Result<()> {
    let opt = |v: Option<f64>| text::num(v.unwrap_or(f64::NAN));
    let mut out = csv::Writer::from_writer(w);
    out.write_record([
        "fn",
        "point",
        "claimed",
        "evaluated",
        "residual",
        "refined",
        "stationarity",
        "status",
        "note",
    ])?;
    for r in rows {
        out.write_record([
            r.function.clone(),
            text::point(&r.point),
            opt(r.claimed),
            opt(r.evaluated),
            opt(r.residual),
            opt(r.refined),
            opt(r.stationarity),
            r.status.clone(),
            r.note.clone(),
        ])?;
    }
    out.flush()?;
    Ok(())
}

/// One summary line per status.
pub fn summary_text(report: &AuditReport) -> String {
    let s = &report.summary;
    let mut t = format!("functions {}, records {}", s.functions, s.records);
    for st in verify::AuditStatus::ALL {
        t += &format!(", {} {}", st.as_str(), s.count(st));
    }
    t
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub status: String,
    pub records: Vec<AuditRow>,
}

/// Last audit outcome per function slug.
pub type Cache = BTreeMap<String, CacheEntry>;

pub fn load_cache(path: &Path) -> Result<Cache> {
    if !path.exists() {
        return Ok(Cache::new());
    }
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Merges `report` into the cache at `path`.
pub fn update_cache(path: &Path, report: &AuditReport) -> Result<()> {
    let mut cache = load_cache(path).unwrap_or_default();
    for (id, recs) in report.by_function() {
        cache.insert(
            id.slug.into(),
            CacheEntry {
                status: verify::function_status(recs).as_str().into(),
                records: recs.iter().map(AuditRow::from).collect(),
            },
        );
    }
    let mut text = serde_json::to_string_pretty(&cache)?;
    text.push('\n');
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedErratum {
    #[serde(rename = "fn")]
    pub function: String,
    pub reason: String,
}

/// Catalog indices named in an expected-errata file.
pub fn load_expected(path: &Path) -> Result<BTreeSet<usize>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let items: Vec<ExpectedErratum> =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    items
        .iter()
        .map(|e| Ok(registry::lookup(e.function.as_str())?.index()))
        .collect()
}

/// Unexpected and missing Discrepant functions among those audited.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ErrataDiff {
    pub unexpected: Vec<usize>,
    pub missing: Vec<usize>,
}

impl ErrataDiff {
    pub fn is_clean(&self) -> bool {
        self.unexpected.is_empty() && self.missing.is_empty()
    }
}

pub fn compare(report: &AuditReport, expected: &BTreeSet<usize>) -> ErrataDiff {
    let audited: BTreeSet<usize> = report
        .by_function()
        .iter()
        .map(|(id, _)| id.index as usize)
        .collect();
    let found: BTreeSet<usize> = report
        .discrepant()
        .iter()
        .map(|id| id.index as usize)
        .collect();
    ErrataDiff {
        unexpected: found.difference(expected).copied().collect(),
        missing: expected
            .intersection(&audited)
            .filter(|i| !found.contains(i))
            .copied()
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LedgerRow {
    #[serde(rename = "fn")]
    pub function: String,
    pub index: usize,
    pub kind: String,
    pub status: Option<String>,
    pub printed: String,
    pub finding: String,
    pub policy: String,
}

impl From<&ErrataEntry> for LedgerRow {
    fn from(e: &ErrataEntry) -> Self {
        Self {
            function: e.function.slug.into(),
            index: e.function.index as usize,
            kind: e.kind.as_str().into(),
            status: e.status.map(|s| s.as_str().into()),
            printed: e.printed.clone(),
            finding: e.finding.clone(),
            policy: e.policy.as_str().into(),
        }
    }
}

pub fn ledger(report: &AuditReport) -> Vec<LedgerRow> {
    verify::errata_ledger(report)
        .iter()
        .map(LedgerRow::from)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use gobench_core::verify::check_minimum;

    #[test]
    fn rows_round_trip() {
        let rep = AuditReport::from_records(check_minimum("egg-holder", 1e-8).unwrap());
        let rs = rows(&rep);
        let mut buf = Vec::new();
        write_json(&mut buf, &rs).unwrap();
        let back: Vec<AuditRow> = serde_json::from_slice(&buf).unwrap();
        assert_eq!(back, rs);
    }

    #[test]
    fn diff_is_limited_to_audited_functions() {
        let rep = AuditReport::from_records(check_minimum("egg-holder", 1e-8).unwrap());
        let expected = BTreeSet::from([53, 7]);
        assert!(compare(&rep, &expected).is_clean());
        let d = compare(&rep, &BTreeSet::new());
        assert_eq!(d.unexpected, [53]);
    }
}
