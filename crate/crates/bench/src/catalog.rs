//! Catalog export.

use std::io::Write;

use anyhow::Result;
use gobench_core::registry::{
    self, Bounds, DimensionRule, FunctionSpec, Locations, OptimumValue, PropertyFlags,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Flags {
    pub continuity: String,
    pub differentiability: String,
    pub separability: String,
    pub scalability: String,
    pub modality: String,
}

impl From<&PropertyFlags> for Flags {
    fn from(f: &PropertyFlags) -> Self {
        Self {
            continuity: f.continuity.as_str().into(),
            differentiability: f.differentiability.as_str().into(),
            separability: f.separability.as_str().into(),
            scalability: f.scalability.as_str().into(),
            modality: f.modality.as_str().into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Dimension {
    Fixed {
        n: usize,
    },
    Scalable {
        default: usize,
        min: usize,
        max: Option<usize>,
        step: usize,
    },
}

impl From<DimensionRule> for Dimension {
    fn from(d: DimensionRule) -> Self {
        match d {
            DimensionRule::Fixed(n) => Dimension::Fixed { n },
            DimensionRule::Scalable {
                default_n,
                min_n,
                max_n,
                step,
            } => Dimension::Scalable {
                default: default_n,
                min: min_n,
                max: max_n,
                step,
            },
        }
    }
}

/// Either one interval for every coordinate or one per coordinate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoxSpec {
    Uniform([f64; 2]),
    PerCoordinate(Vec<[f64; 2]>),
}

impl From<Bounds> for BoxSpec {
    fn from(b: Bounds) -> Self {
        match b {
            Bounds::Uniform(lo, hi) => BoxSpec::Uniform([lo, hi]),
            Bounds::PerCoord(v) => {
                BoxSpec::PerCoordinate(v.iter().map(|&(lo, hi)| [lo, hi]).collect())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Optimum {
    /// Locations at the default dimension.
    pub points: Vec<Vec<f64>>,
    pub locations: String,
    pub family: bool,
    pub value: Option<f64>,
    /// exact, rounded, approx, per-dimension, power-of-dimension or unstated.
    pub value_kind: String,
    pub tolerance: Option<f64>,
    pub status: String,
    pub note: String,
    pub printed_location: Option<String>,
}

fn value_kind(v: &OptimumValue) -> &'static str {
    match v {
        OptimumValue::Exact(_) => "exact",
        OptimumValue::Rounded { .. } => "rounded",
        OptimumValue::Approx(_) => "approx",
        OptimumValue::PerDim(_) => "per-dimension",
        OptimumValue::PowerOfDim { .. } => "power-of-dimension",
        OptimumValue::Unstated => "unstated",
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub index: usize,
    pub slug: String,
    pub name: String,
    pub citation: Option<String>,
    pub dimension: Dimension,
    pub bounds: BoxSpec,
    pub flags: Flags,
    pub optima: Vec<Optimum>,
    pub stochastic: bool,
    pub policy: String,
    pub note: String,
}

impl From<&FunctionSpec> for Entry {
    fn from(s: &FunctionSpec) -> Self {
        let n = s.default_dimension();
        Self {
            index: s.index(),
            slug: s.slug().into(),
            name: s.name.into(),
            citation: s.citation.map(Into::into),
            dimension: s.dimension.into(),
            bounds: s.bounds.into(),
            flags: (&s.flags).into(),
            optima: s
                .optima
                .iter()
                .map(|o| Optimum {
                    points: o.locations.points(n),
                    locations: o.locations.describe(),
                    family: o.locations.is_family(),
                    value: o.value.at(n),
                    value_kind: value_kind(&o.value).into(),
                    tolerance: o.value.is_stated().then(|| o.value_tolerance()),
                    status: o.status.as_str().into(),
                    note: o.note.into(),
                    printed_location: o.corrected_from.map(Into::into),
                })
                .collect(),
            stochastic: s.stochastic(),
            policy: s.policy.as_str().into(),
            note: s.note.into(),
        }
    }
}

pub fn entries<'a>(specs: impl IntoIterator<Item = &'a FunctionSpec>) -> Vec<Entry> {
    specs.into_iter().map(Entry::from).collect()
}

pub fn full() -> Vec<Entry> {
    entries(registry::catalog())
}

pub fn write_json(w: impl Write, entries: &[Entry]) -> Result<()> {
    let mut w = w;
    serde_json::to_writer_pretty(&mut w, entries)?;
    writeln!(w)?;
    Ok(())
}

fn bounds_text(b: &BoxSpec) -> String {
    let pair = |p: &[f64; 2]| format!("{}:{}", crate::text::num(p[0]), crate::text::num(p[1]));
    match b {
        BoxSpec::Uniform(p) => pair(p),
        BoxSpec::PerCoordinate(v) => v.iter().map(pair).collect::<Vec<_>>().join(" "),
    }
}

/// One row per entry; per-coordinate boxes are space-separated `lo:hi` pairs.
pub fn write_csv(w: impl Write, entries: &[Entry]) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record([
        "index",
        "slug",
        "name",
        "dimension",
        "bounds",
        "continuity",
        "differentiability",
        "separability",
        "scalability",
        "modality",
        "stochastic",
        "policy",
    ])?;
    for e in entries {
        let spec = registry::get(e.index).expect("entry from the catalog");
        out.write_record([
            e.index.to_string(),
            e.slug.clone(),
            e.name.clone(),
            spec.dimension.to_string(),
            bounds_text(&e.bounds),
            e.flags.continuity.clone(),
            e.flags.differentiability.clone(),
            e.flags.separability.clone(),
            e.flags.scalability.clone(),
            e.flags.modality.clone(),
            e.stochastic.to_string(),
            e.policy.clone(),
        ])?;
    }
    out.flush()?;
    Ok(())
}

/// Aligned columns for people; no stability promise.
pub fn write_table(mut w: impl Write, entries: &[Entry]) -> Result<()> {
    for e in entries {
        let spec = registry::get(e.index).expect("entry from the catalog");
        writeln!(
            w,
            "{:>4}  {:<34} {:<24} {:<19} {:<12} {}",
            e.index,
            e.slug,
            spec.dimension.to_string(),
            e.flags.separability,
            e.flags.modality,
            bounds_text(&e.bounds)
        )?;
    }
    Ok(())
}

/// Multi-line description used by `bench info`.
pub fn describe(spec: &FunctionSpec) -> String {
    let mut s = String::new();
    let f = &spec.flags;
    s += &format!("f{} {} ({})\n", spec.index(), spec.name, spec.slug());
    if let Some(c) = spec.citation {
        s += &format!("citation: {c}\n");
    }
    s += &format!(
        "dimension: {} (default {})\n",
        spec.dimension,
        spec.default_dimension()
    );
    s += &format!("bounds: {}\n", bounds_text(&spec.bounds.into()));
    s += &format!(
        "flags: {}, {}, {}, {}, {}\n",
        f.continuity, f.differentiability, f.separability, f.scalability, f.modality
    );
    s += &format!("policy: {}\n", spec.policy.as_str());
    if spec.stochastic() {
        s += "stochastic: yes\n";
    }
    for o in spec.optima {
        let v = o
            .value
            .at(spec.default_dimension())
            .map_or("unstated".into(), crate::text::num);
        let loc = match o.locations {
            Locations::Unstated => "unstated".to_owned(),
            l => l.describe(),
        };
        s += &format!("optimum: f = {v} at {loc} [{}]\n", o.status.as_str());
        if let Some(p) = o.corrected_from {
            s += &format!("  printed location: {p}\n");
        }
        if !o.note.is_empty() {
            s += &format!("  note: {}\n", o.note);
        }
    }
    if !spec.note.is_empty() {
        s += &format!("note: {}\n", spec.note);
    }
    s
}
