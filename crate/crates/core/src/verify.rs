//! The optimum audit.
//!
//! Each claimed optimum is evaluated, refined with a short box-clamped
//! simplex search and classified. The audit can only confirm or downgrade a
//! claim: a point that refinement improves on is never reported as verified.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::calculus;
use crate::error::{Error, Result};
use crate::functions::{eval_raw, EvalContext};
use crate::optimize::{simplex, NelderMeadParams};
use crate::registry::{self, FunctionId, FunctionSpec, Key, OptimumValue, Policy};

/// Default tolerance for values printed exactly.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;
/// Simplex iterations spent refining each claimed point.
pub const REFINE_ITERATIONS: usize = 200;
/// Initial simplex edge as a fraction of the box width.
pub const REFINE_SCALE: f64 = 1e-2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AuditStatus {
    Verified,
    Corrected,
    Discrepant,
    Unverifiable,
}

impl AuditStatus {
    pub const ALL: [AuditStatus; 4] = [
        AuditStatus::Verified,
        AuditStatus::Corrected,
        AuditStatus::Discrepant,
        AuditStatus::Unverifiable,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AuditStatus::Verified => "Verified",
            AuditStatus::Corrected => "Corrected",
            AuditStatus::Discrepant => "Discrepant",
            AuditStatus::Unverifiable => "Unverifiable",
        }
    }

    /// Rank used to fold record statuses into one per function.
    fn severity(self) -> u8 {
        match self {
            AuditStatus::Verified => 0,
            AuditStatus::Corrected => 1,
            AuditStatus::Unverifiable => 2,
            AuditStatus::Discrepant => 3,
        }
    }
}

impl core::fmt::Display for AuditStatus {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The audit of one claimed optimum. Missing numbers are NaN.
#[derive(Debug, Clone, PartialEq)]
pub struct AuditRecord {
    pub function: FunctionId,
    pub dimension: usize,
    /// Claimed location; empty when none was printed.
    pub point: Vec<f64>,
    /// The point is one representative of a larger family.
    pub representative: bool,
    pub claimed: f64,
    pub evaluated: f64,
    /// `|evaluated - claimed|`.
    pub residual: f64,
    pub tolerance: f64,
    pub refined_point: Vec<f64>,
    pub refined_value: f64,
    /// Projected finite-difference gradient norm at the claimed point.
    pub stationarity: f64,
    pub status: AuditStatus,
    pub note: String,
}

fn join(parts: &[&str]) -> String {
    parts
        .iter()
        .filter(|s| !s.is_empty())
        .copied()
        .collect::<Vec<_>>()
        .join("; ")
}

/// Best point the refinement finds from `x`. Failing evaluations count as `+inf`.
fn refine(spec: &FunctionSpec, x: &[f64], fx: f64) -> (Vec<f64>, f64) {
    let boxes = spec.bounds.intervals(x.len());
    let steps: Vec<f64> = boxes
        .iter()
        .map(|(lo, hi)| REFINE_SCALE * (hi - lo))
        .collect();
    let ctx = EvalContext::suppressed();
    let mut f = |p: &[f64]| -> core::result::Result<f64, core::convert::Infallible> {
        Ok(eval_raw(spec, p, &ctx).unwrap_or(f64::INFINITY))
    };
    let (p, v) = match simplex(
        &mut f,
        x,
        &steps,
        &boxes,
        &NelderMeadParams::default(),
        REFINE_ITERATIONS,
    ) {
        Ok(r) => r,
        Err(never) => match never {},
    };
    // the simplex clamps, so a claimed point outside the box can look worse
    if v < fx {
        (p, v)
    } else {
        (x.to_vec(), fx)
    }
}

fn audit_point(
    spec: &FunctionSpec,
    n: usize,
    x: Vec<f64>,
    representative: bool,
    claimed: Option<f64>,
    tolerance: f64,
    corrected: bool,
    note: &str,
) -> AuditRecord {
    let mut rec = AuditRecord {
        function: spec.id,
        dimension: n,
        point: x,
        representative,
        claimed: claimed.unwrap_or(f64::NAN),
        evaluated: f64::NAN,
        residual: f64::NAN,
        tolerance,
        refined_point: Vec::new(),
        refined_value: f64::NAN,
        stationarity: f64::NAN,
        status: AuditStatus::Unverifiable,
        note: String::from(note),
    };
    if let Err(e) = spec.check_dimension(rec.point.len()) {
        rec.note = join(&[note, &format!("{e}")]);
        return rec;
    }
    let fx = match eval_raw(spec, &rec.point, &EvalContext::suppressed()) {
        Ok(v) => v,
        Err(e) => {
            rec.note = join(&[note, &format!("{e}")]);
            return rec;
        }
    };
    rec.evaluated = fx;
    rec.stationarity = calculus::stationarity(spec, &rec.point).unwrap_or(f64::NAN);
    let (rp, rv) = refine(spec, &rec.point, fx);
    rec.refined_point = rp;
    rec.refined_value = rv;
    let outside = if spec.bounds.contains(&rec.point) {
        ""
    } else {
        "claimed point lies outside the box"
    };

    let Some(c) = claimed else {
        rec.note = join(&[note, outside, "no value printed"]);
        return rec;
    };
    rec.residual = (fx - c).abs();
    let gain = fx - rv;
    let finding = if rec.residual > tolerance {
        rec.status = AuditStatus::Discrepant;
        format!("evaluates to {fx}, claimed {c}")
    } else if gain > 10.0 * tolerance {
        rec.status = AuditStatus::Discrepant;
        format!("refinement reaches {rv}, below the claim by {gain}")
    } else if gain > tolerance {
        format!("refinement improves by {gain}, within ten times the tolerance")
    } else {
        rec.status = if corrected {
            AuditStatus::Corrected
        } else {
            AuditStatus::Verified
        };
        String::new()
    };
    rec.note = join(&[note, outside, &finding]);
    rec
}

fn tier_tolerance(value: &OptimumValue, tol: f64) -> f64 {
    match value {
        OptimumValue::Exact(_) | OptimumValue::PerDim(_) => tol,
        v => v.tolerance().max(tol),
    }
}

fn audit_spec(spec: &FunctionSpec, n: usize, tol: f64) -> Vec<AuditRecord> {
    let mut out = Vec::new();
    for opt in spec.optima {
        let claimed = opt.value.at(n);
        let tolerance = tier_tolerance(&opt.value, tol);
        let corrected = opt.corrected_from.is_some() || spec.policy == Policy::Canonical;
        let printed = opt
            .corrected_from
            .map(|p| format!("printed location {p}"))
            .unwrap_or_default();
        let note = join(&[opt.note, &printed]);
        let pts = opt.locations.points(n);
        if pts.is_empty() {
            let mut r = audit_point(
                spec,
                n,
                Vec::new(),
                false,
                claimed,
                tolerance,
                corrected,
                &note,
            );
            r.note = join(&[&note, "no location printed"]);
            out.push(r);
        }
        for p in pts {
            out.push(audit_point(
                spec,
                n,
                p,
                opt.locations.is_family(),
                claimed,
                tolerance,
                corrected,
                &note,
            ));
        }
    }
    out
}

/// Audits every claimed optimum of one function at its default dimension.
pub fn check_minimum<'a>(key: impl Into<Key<'a>>, tol: f64) -> Result<Vec<AuditRecord>> {
    let spec = registry::lookup(key)?;
    check_minimum_at(spec, spec.default_dimension(), tol)
}

/// As [`check_minimum`] at dimension `n`.
pub fn check_minimum_at<'a>(
    key: impl Into<Key<'a>>,
    n: usize,
    tol: f64,
) -> Result<Vec<AuditRecord>> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    let spec = registry::lookup(key)?;
    spec.check_dimension(n)?;
    Ok(audit_spec(spec, n, tol))
}

/// Whether the entry prints at least one location.
pub fn has_concrete_optimum(spec: &FunctionSpec) -> bool {
    spec.optima.iter().any(|o| o.locations.is_stated())
}

/// Worst status among a function's records.
pub fn function_status(records: &[AuditRecord]) -> AuditStatus {
    records
        .iter()
        .map(|r| r.status)
        .max_by_key(|s| s.severity())
        .unwrap_or(AuditStatus::Unverifiable)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AuditSummary {
    /// Functions audited.
    pub functions: usize,
    pub records: usize,
    pub verified: usize,
    pub corrected: usize,
    pub discrepant: usize,
    pub unverifiable: usize,
}

impl AuditSummary {
    pub fn count(&self, s: AuditStatus) -> usize {
        match s {
            AuditStatus::Verified => self.verified,
            AuditStatus::Corrected => self.corrected,
            AuditStatus::Discrepant => self.discrepant,
            AuditStatus::Unverifiable => self.unverifiable,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditReport {
    pub records: Vec<AuditRecord>,
    pub summary: AuditSummary,
}

impl AuditReport {
    pub fn from_records(records: Vec<AuditRecord>) -> Self {
        let mut summary = AuditSummary {
            records: records.len(),
            ..AuditSummary::default()
        };
        let mut last = None;
        for r in &records {
            if last != Some(r.function.index) {
                summary.functions += 1;
                last = Some(r.function.index);
            }
            match r.status {
                AuditStatus::Verified => summary.verified += 1,
                AuditStatus::Corrected => summary.corrected += 1,
                AuditStatus::Discrepant => summary.discrepant += 1,
                AuditStatus::Unverifiable => summary.unverifiable += 1,
            }
        }
        Self { records, summary }
    }

    /// Records grouped by function, in index order.
    pub fn by_function(&self) -> Vec<(FunctionId, &[AuditRecord])> {
        let mut out = Vec::new();
        let mut start = 0;
        for i in 1..=self.records.len() {
            if i == self.records.len() || self.records[i].function != self.records[start].function {
                out.push((self.records[start].function, &self.records[start..i]));
                start = i;
            }
        }
        out
    }

    /// Functions with at least one Discrepant record.
    pub fn discrepant(&self) -> Vec<FunctionId> {
        self.by_function()
            .into_iter()
            .filter(|(_, rs)| function_status(rs) == AuditStatus::Discrepant)
            .map(|(id, _)| id)
            .collect()
    }
}

/// Audits every entry that prints a location, in index order.
pub fn audit_all(tol: f64) -> Result<AuditReport> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    let records = registry::catalog()
        .iter()
        .filter(|s| has_concrete_optimum(s))
        .flat_map(|s| audit_spec(s, s.default_dimension(), tol))
        .collect();
    Ok(AuditReport::from_records(records))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrataKind {
    /// The audit contradicts or amends the printed optimum.
    Finding,
    /// How an ambiguous or broken printed formula was read.
    Interpretation,
}

impl ErrataKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrataKind::Finding => "finding",
            ErrataKind::Interpretation => "interpretation",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrataEntry {
    pub function: FunctionId,
    pub kind: ErrataKind,
    pub status: Option<AuditStatus>,
    pub printed: String,
    pub finding: String,
    pub policy: Policy,
}

/// Reading notes that do not live on a single catalog field.
const NOTES: &[(usize, &str, &str)] = &[
    (14, "titled Biggs EXP5", "f14 and f15 share the title; f15 has six variables and is Biggs EXP6"),
    (15, "titled Biggs EXP5", "f14 and f15 share the title; f15 has six variables and is Biggs EXP6"),
    (
        11,
        "y_i = e^{-t_i} - 5e^{10 t_i}",
        "Biggs EXP family uses y_i = e^{-t_i} - 5e^{-10 t_i} so the printed optima are zeros",
    ),
    (31, "brackets printed as floor symbols", "read as plain parentheses; a literal floor makes the denominators degenerate"),
    (32, "brackets printed as floor symbols", "read as plain parentheses; a literal floor makes the denominators degenerate"),
    (
        35,
        "x0 = y0, x1 = u0, xi = u_{2(i-2)}",
        "17 free variables: point 0 fixed at the origin, point 1 on the x-axis; no optimum location printed",
    ),
    (37, "sgn(z_i)^2 term", "read as (z_i - 0.05 sgn z_i)^2 as in the usual Corana definition"),
    (54, "f(x*) = 1", "the formula -exp(-0.5 sum x_i^2) equals -1 at the origin"),
    (64, "theta = tan^-1(x1/x2) with +0.5 placement", "theta uses the atan2 branch definition"),
    (83, "operator between x1 and x2", "read as the product x1 x2, which makes (0, 0) and (2, 2) exact minima"),
    (96, "minima at (+-5, +-5) as for Price 1", "the Price 3 formula does not vanish at those points"),
    (
        105,
        "df/dx1 = 400(x1^2 - x2)x1 - 2x1 - 2",
        "the implemented sum 100(x2 - x1^2)^2 + (x1 - 1)^2 has df/dx1 = 400(x1^2 - x2)x1 + 2x1 - 2",
    ),
    (116, "f(x*) = 3 at (0.78547, 0.78547, 0.78547)", "the formula does not attain 3 there"),
    (126, "Schwefel 2.23, same formula as f125", "duplicate of f125"),
    (137, "header flag Multimodal", "the sphere is unimodal; the flag is kept as printed"),
    (141, "f(x*) = 0 at the origin", "25 + sum floor(x_i) equals 25 at the origin and is lower for negative x_i"),
    (145, "exponent |1 - (x1^2 + x2^2)/pi|", "the exponent uses the Euclidean norm (x1^2 + x2^2)^0.5"),
    (146, "exponent |1 - (x1^2 + x2^2)/pi|", "the exponent uses the Euclidean norm (x1^2 + x2^2)^0.5"),
];

/// Corrected and Discrepant findings plus the reading notes, by index.
pub fn errata_ledger(report: &AuditReport) -> Vec<ErrataEntry> {
    let mut out = Vec::new();
    let statuses = report.by_function();
    for spec in registry::catalog() {
        let i = spec.index();
        if let Some((_, rs)) = statuses.iter().find(|(id, _)| id.index as usize == i) {
            let status = function_status(rs);
            if matches!(status, AuditStatus::Corrected | AuditStatus::Discrepant) {
                let printed = spec
                    .optima
                    .iter()
                    .map(|o| {
                        let v = o
                            .value
                            .at(rs[0].dimension)
                            .map(|v| format!("{v}"))
                            .unwrap_or_else(|| "unstated".into());
                        let loc = o
                            .corrected_from
                            .map(String::from)
                            .unwrap_or_else(|| o.locations.describe());
                        format!("f = {v} at {loc}")
                    })
                    .collect::<Vec<_>>()
                    .join("; ");
                let finding = rs
                    .iter()
                    .filter(|r| r.status != AuditStatus::Verified)
                    .map(|r| {
                        let base = format!(
                            "{}: {:?} evaluates to {}, refined {}",
                            r.status, r.point, r.evaluated, r.refined_value
                        );
                        if r.note.is_empty() {
                            base
                        } else {
                            format!("{base} ({})", r.note)
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("; ");
                out.push(ErrataEntry {
                    function: spec.id,
                    kind: ErrataKind::Finding,
                    status: Some(status),
                    printed,
                    finding,
                    policy: spec.policy,
                });
            }
        }
        if !spec.note.is_empty() {
            out.push(ErrataEntry {
                function: spec.id,
                kind: ErrataKind::Interpretation,
                status: None,
                printed: String::new(),
                finding: String::from(spec.note),
                policy: spec.policy,
            });
        }
        for &(_, printed, finding) in NOTES.iter().filter(|n| n.0 == i) {
            out.push(ErrataEntry {
                function: spec.id,
                kind: ErrataKind::Interpretation,
                status: None,
                printed: String::from(printed),
                finding: String::from(finding),
                policy: spec.policy,
            });
        }
    }
    out
}

/// Convenience for callers that only need one point.
pub fn audit_point_at<'a>(
    key: impl Into<Key<'a>>,
    x: &[f64],
    claimed: f64,
    tolerance: f64,
) -> Result<AuditRecord> {
    let spec = registry::lookup(key)?;
    spec.check_dimension(x.len())?;
    Ok(audit_point(
        spec,
        x.len(),
        x.to_vec(),
        false,
        Some(claimed),
        tolerance,
        false,
        "",
    ))
}
