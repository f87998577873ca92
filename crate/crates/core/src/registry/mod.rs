//! The immutable catalog of test functions and its metadata.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::functions::Formula;

mod catalog;

pub use catalog::CATALOG;

/// Number of catalog entries.
pub const COUNT: usize = 175;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FunctionId {
    /// 1-based position in the catalog.
    pub index: u16,
    pub slug: &'static str,
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{} {}", self.index, self.slug)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DimensionRule {
    Fixed(usize),
    /// Any `n >= min_n` (up to `max_n`) that is a multiple of `step`.
    Scalable {
        default_n: usize,
        min_n: usize,
        max_n: Option<usize>,
        step: usize,
    },
}

impl DimensionRule {
    pub const fn scalable(default_n: usize, min_n: usize) -> Self {
        DimensionRule::Scalable {
            default_n,
            min_n,
            max_n: None,
            step: 1,
        }
    }

    pub fn accepts(&self, n: usize) -> bool {
        match *self {
            DimensionRule::Fixed(d) => n == d,
            DimensionRule::Scalable {
                min_n, max_n, step, ..
            } => n >= min_n && max_n.is_none_or(|m| n <= m) && n.is_multiple_of(step),
        }
    }

    /// Dimension used for auditing and when none is requested.
    pub fn default_n(&self) -> usize {
        match *self {
            DimensionRule::Fixed(d) => d,
            DimensionRule::Scalable { default_n, .. } => default_n,
        }
    }

    pub fn is_fixed(&self) -> bool {
        matches!(self, DimensionRule::Fixed(_))
    }
}

impl fmt::Display for DimensionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DimensionRule::Fixed(d) => write!(f, "D = {d}"),
            DimensionRule::Scalable {
                min_n, max_n, step, ..
            } => {
                write!(f, "D >= {min_n}")?;
                if let Some(m) = max_n {
                    write!(f, ", D <= {m}")?;
                }
                if step > 1 {
                    write!(f, ", D a multiple of {step}")?;
                }
                Ok(())
            }
        }
    }
}

/// The search box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bounds {
    Uniform(f64, f64),
    /// One interval per coordinate; only used with fixed dimensions.
    PerCoord(&'static [(f64, f64)]),
}

impl Bounds {
    /// Interval of coordinate `i`.
    pub fn get(&self, i: usize) -> (f64, f64) {
        match *self {
            Bounds::Uniform(lo, hi) => (lo, hi),
            Bounds::PerCoord(b) => b[i],
        }
    }

    pub fn width(&self, i: usize) -> f64 {
        let (lo, hi) = self.get(i);
        hi - lo
    }

    /// All intervals at dimension `n`.
    pub fn intervals(&self, n: usize) -> Vec<(f64, f64)> {
        (0..n).map(|i| self.get(i)).collect()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.iter().enumerate().all(|(i, &v)| {
            let (lo, hi) = self.get(i);
            v >= lo && v <= hi
        })
    }

    pub fn clamp(&self, x: &mut [f64]) {
        for (i, v) in x.iter_mut().enumerate() {
            let (lo, hi) = self.get(i);
            *v = v.clamp(lo, hi);
        }
    }
}

macro_rules! flag_enum {
    ($(#[$m:meta])* $name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        $(#[$m])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name { $($variant),+ }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self { $($name::$variant => $text),+ }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl core::str::FromStr for $name {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                let norm = s.trim().to_ascii_lowercase().replace('_', "-");
                $name::ALL
                    .iter()
                    .copied()
                    .find(|v| v.as_str() == norm || v.as_str().replace('-', "") == norm)
                    .ok_or_else(|| Error::InvalidArgument(format!(
                        "`{}` is not a {} value", s, stringify!($name).to_ascii_lowercase()
                    )))
            }
        }
    };
}

flag_enum!(Continuity { Continuous => "continuous", Discontinuous => "discontinuous", Unstated => "unstated" });
flag_enum!(Differentiability {
    Differentiable => "differentiable",
    NonDifferentiable => "non-differentiable",
    Unstated => "unstated",
});
flag_enum!(Separability {
    Separable => "separable",
    PartiallySeparable => "partially-separable",
    NonSeparable => "non-separable",
    Unstated => "unstated",
});
flag_enum!(Scalability { Scalable => "scalable", NonScalable => "non-scalable", Unstated => "unstated" });
flag_enum!(Modality { Unimodal => "unimodal", Multimodal => "multimodal", Unstated => "unstated" });

/// The header attributes of one entry, as printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PropertyFlags {
    pub continuity: Continuity,
    pub differentiability: Differentiability,
    pub separability: Separability,
    pub scalability: Scalability,
    pub modality: Modality,
}

/// Where a claimed optimum lies.
#[derive(Debug, Clone, Copy)]
pub enum Locations {
    Points(&'static [&'static [f64]]),
    /// Every coordinate equals the constant.
    Uniform(f64),
    /// The pattern repeated until the dimension is filled.
    Repeat(&'static [f64]),
    /// A rule for the location at dimension `n`. With `family` set the rule
    /// yields representatives of a larger (possibly infinite) set.
    Generated {
        text: &'static str,
        family: bool,
        points: fn(usize) -> Vec<Vec<f64>>,
    },
    Unstated,
}

impl Locations {
    /// Concrete points at dimension `n`.
    pub fn points(&self, n: usize) -> Vec<Vec<f64>> {
        match *self {
            Locations::Points(ps) => ps.iter().map(|p| p.to_vec()).collect(),
            Locations::Uniform(c) => vec![vec![c; n]],
            Locations::Repeat(pat) => vec![(0..n).map(|i| pat[i % pat.len()]).collect()],
            Locations::Generated { points, .. } => points(n),
            Locations::Unstated => Vec::new(),
        }
    }

    pub fn is_family(&self) -> bool {
        matches!(self, Locations::Generated { family: true, .. })
    }

    pub fn is_stated(&self) -> bool {
        !matches!(self, Locations::Unstated)
    }

    /// Short human description.
    pub fn describe(&self) -> alloc::string::String {
        match *self {
            Locations::Points(ps) => {
                let parts: Vec<_> = ps.iter().map(|p| format!("{p:?}")).collect();
                parts.join("; ")
            }
            Locations::Uniform(c) => format!("x_i = {c}"),
            Locations::Repeat(pat) => format!("{pat:?} repeated"),
            Locations::Generated { text, .. } => text.to_string(),
            Locations::Unstated => "unstated".to_string(),
        }
    }
}

/// A claimed optimal value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OptimumValue {
    /// Printed as an exact number.
    Exact(f64),
    /// Printed as a decimal rounded to `decimals` places.
    Rounded {
        value: f64,
        decimals: u8,
    },
    /// Printed with "≈".
    Approx(f64),
    /// `c · D`.
    PerDim(f64),
    /// `b^D`, with `b` rounded to `decimals` places.
    PowerOfDim {
        base: f64,
        decimals: u8,
    },
    Unstated,
}

impl OptimumValue {
    /// Claimed value at dimension `n`.
    pub fn at(&self, n: usize) -> Option<f64> {
        #[allow(unused_imports)] // shadowed by inherent methods when std is linked
        use num_traits::Float;
        match *self {
            OptimumValue::Exact(v) | OptimumValue::Approx(v) => Some(v),
            OptimumValue::Rounded { value, .. } => Some(value),
            OptimumValue::PerDim(c) => Some(c * n as f64),
            OptimumValue::PowerOfDim { base, .. } => Some(base.powi(n as i32)),
            OptimumValue::Unstated => None,
        }
    }

    /// Absolute tolerance for comparing an evaluation against the claim.
    pub fn tolerance(&self) -> f64 {
        #[allow(unused_imports)] // shadowed by inherent methods when std is linked
        use num_traits::Float;
        match *self {
            OptimumValue::Exact(_) | OptimumValue::PerDim(_) => 1e-8,
            OptimumValue::Rounded { decimals, .. } | OptimumValue::PowerOfDim { decimals, .. } => {
                (0.5 * 10f64.powi(-(decimals as i32))).max(5e-4)
            }
            OptimumValue::Approx(_) => 5e-2,
            OptimumValue::Unstated => f64::INFINITY,
        }
    }

    pub fn is_stated(&self) -> bool {
        !matches!(self, OptimumValue::Unstated)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OptimumStatus {
    Claimed,
    Verified,
    Corrected,
    Discrepant,
    Unstated,
}

impl OptimumStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            OptimumStatus::Claimed => "Claimed",
            OptimumStatus::Verified => "Verified",
            OptimumStatus::Corrected => "Corrected",
            OptimumStatus::Discrepant => "Discrepant",
            OptimumStatus::Unstated => "Unstated",
        }
    }
}

/// A claimed global optimum.
#[derive(Debug, Clone, Copy)]
pub struct KnownOptimum {
    pub locations: Locations,
    pub value: OptimumValue,
    pub status: OptimumStatus,
    pub note: &'static str,
    /// The printed claim, when the stored one is a correction of it.
    pub corrected_from: Option<&'static str>,
}

impl KnownOptimum {
    pub const fn new(locations: Locations, value: OptimumValue) -> Self {
        let status = match (&locations, &value) {
            (Locations::Unstated, OptimumValue::Unstated) => OptimumStatus::Unstated,
            _ => OptimumStatus::Claimed,
        };
        Self {
            locations,
            value,
            status,
            note: "",
            corrected_from: None,
        }
    }

    pub const fn note(mut self, note: &'static str) -> Self {
        self.note = note;
        self
    }

    pub const fn corrected_from(mut self, printed: &'static str) -> Self {
        self.corrected_from = Some(printed);
        self
    }

    pub fn value_tolerance(&self) -> f64 {
        self.value.tolerance()
    }
}

/// Whether the implemented formula is the printed one or a canonical repair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Policy {
    AsPrinted,
    Canonical,
}

impl Policy {
    pub fn as_str(self) -> &'static str {
        match self {
            Policy::AsPrinted => "as-printed",
            Policy::Canonical => "canonical",
        }
    }
}

/// One catalog entry.
#[derive(Debug, Clone, Copy)]
pub struct FunctionSpec {
    pub id: FunctionId,
    pub name: &'static str,
    pub citation: Option<&'static str>,
    pub dimension: DimensionRule,
    pub bounds: Bounds,
    pub flags: PropertyFlags,
    pub formula: Formula,
    pub optima: &'static [KnownOptimum],
    pub policy: Policy,
    pub note: &'static str,
}

impl FunctionSpec {
    pub fn index(&self) -> usize {
        self.id.index as usize
    }

    pub fn slug(&self) -> &'static str {
        self.id.slug
    }

    pub fn stochastic(&self) -> bool {
        self.formula.is_noisy()
    }

    pub fn default_dimension(&self) -> usize {
        self.dimension.default_n()
    }

    pub fn check_dimension(&self, n: usize) -> Result<()> {
        if self.dimension.accepts(n) {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                function: self.id.slug,
                rule: self.dimension,
                got: n,
            })
        }
    }
}

/// Ways to name a catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Key<'a> {
    Index(usize),
    /// A slug, a decimal index or `f<index>`.
    Name(&'a str),
}

impl From<usize> for Key<'_> {
    fn from(i: usize) -> Self {
        Key::Index(i)
    }
}

impl From<i32> for Key<'_> {
    fn from(i: i32) -> Self {
        Key::Index(usize::try_from(i).unwrap_or(0))
    }
}

impl<'a> From<&'a str> for Key<'a> {
    fn from(s: &'a str) -> Self {
        Key::Name(s)
    }
}

impl<'a> From<&'a alloc::string::String> for Key<'a> {
    fn from(s: &'a alloc::string::String) -> Self {
        Key::Name(s)
    }
}

impl From<FunctionId> for Key<'_> {
    fn from(id: FunctionId) -> Self {
        Key::Index(id.index as usize)
    }
}

impl From<&FunctionSpec> for Key<'_> {
    fn from(s: &FunctionSpec) -> Self {
        Key::Index(s.index())
    }
}

/// All entries, ordered by index.
pub fn catalog() -> &'static [FunctionSpec] {
    &CATALOG
}

/// Entry by 1-based index.
pub fn get(index: usize) -> Option<&'static FunctionSpec> {
    index.checked_sub(1).and_then(|i| CATALOG.get(i))
}

pub fn lookup<'a>(key: impl Into<Key<'a>>) -> Result<&'static FunctionSpec> {
    let key = key.into();
    let found = match key {
        Key::Index(i) => get(i),
        Key::Name(s) => {
            let s = s.trim();
            let digits = s.strip_prefix('f').unwrap_or(s);
            match digits.parse::<usize>() {
                Ok(i) => get(i),
                Err(_) => CATALOG.iter().find(|f| f.id.slug == s),
            }
        }
    };
    found.ok_or_else(|| {
        Error::UnknownFunction(match key {
            Key::Index(i) => i.to_string(),
            Key::Name(s) => s.to_string(),
        })
    })
}

/// Dimension predicate for [`filter`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimensionQuery {
    /// Exactly `DimensionRule::Fixed(n)`.
    Fixed(usize),
    /// Any scalable rule.
    Scalable,
    /// Rules that accept dimension `n`.
    Accepts(usize),
}

/// Conjunction of predicates; `None` fields match everything.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Criteria {
    pub continuity: Option<Continuity>,
    pub differentiability: Option<Differentiability>,
    pub separability: Option<Separability>,
    pub scalability: Option<Scalability>,
    pub modality: Option<Modality>,
    pub dimension: Option<DimensionQuery>,
}

impl Criteria {
    pub fn matches(&self, spec: &FunctionSpec) -> bool {
        let f = &spec.flags;
        self.continuity.is_none_or(|v| v == f.continuity)
            && self
                .differentiability
                .is_none_or(|v| v == f.differentiability)
            && self.separability.is_none_or(|v| v == f.separability)
            && self.scalability.is_none_or(|v| v == f.scalability)
            && self.modality.is_none_or(|v| v == f.modality)
            && self.dimension.is_none_or(|q| match q {
                DimensionQuery::Fixed(n) => spec.dimension == DimensionRule::Fixed(n),
                DimensionQuery::Scalable => !spec.dimension.is_fixed(),
                DimensionQuery::Accepts(n) => spec.dimension.accepts(n),
            })
    }
}

pub fn filter(criteria: &Criteria) -> Vec<&'static FunctionSpec> {
    CATALOG.iter().filter(|s| criteria.matches(s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indices_are_contiguous() {
        assert_eq!(CATALOG.len(), COUNT);
        for (i, s) in CATALOG.iter().enumerate() {
            assert_eq!(s.index(), i + 1, "{}", s.slug());
        }
    }

    #[test]
    fn slugs_are_unique_and_kebab() {
        let mut slugs: Vec<_> = CATALOG.iter().map(|s| s.slug()).collect();
        for s in &slugs {
            assert!(
                s.bytes()
                    .all(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'-'),
                "{s}"
            );
        }
        slugs.sort_unstable();
        slugs.dedup();
        assert_eq!(slugs.len(), COUNT);
    }

    #[test]
    fn bounds_are_ordered() {
        for s in CATALOG.iter() {
            if let Bounds::PerCoord(b) = s.bounds {
                assert_eq!(DimensionRule::Fixed(b.len()), s.dimension, "{}", s.slug());
            }
            for (lo, hi) in s.bounds.intervals(s.default_dimension()) {
                assert!(lo < hi, "{}", s.slug());
            }
        }
    }

    #[test]
    fn default_dimension_is_accepted() {
        for s in CATALOG.iter() {
            assert!(s.dimension.accepts(s.default_dimension()), "{}", s.slug());
        }
    }

    #[test]
    fn stochastic_exactly_two() {
        let idx: Vec<_> = CATALOG
            .iter()
            .filter(|s| s.stochastic())
            .map(|s| s.index())
            .collect();
        assert_eq!(idx, [100, 169]);
    }

    #[test]
    fn lookup_forms() {
        assert_eq!(lookup("sphere").unwrap().index(), 137);
        assert_eq!(lookup(1).unwrap().name, "Ackley 1");
        assert_eq!(lookup("f58").unwrap().slug(), "goldstein-price");
        assert_eq!(lookup("58").unwrap().slug(), "goldstein-price");
        assert!(matches!(
            lookup("no-such-fn"),
            Err(Error::UnknownFunction(_))
        ));
        assert!(lookup(0).is_err());
        assert!(lookup(176).is_err());
    }

    #[test]
    fn ackley_box() {
        assert_eq!(lookup(1).unwrap().bounds, Bounds::Uniform(-35.0, 35.0));
    }

    #[test]
    fn filter_step_family() {
        let c = Criteria {
            modality: Some(Modality::Unimodal),
            separability: Some(Separability::Separable),
            continuity: Some(Continuity::Discontinuous),
            ..Criteria::default()
        };
        let got: Vec<_> = filter(&c).iter().map(|s| s.index()).collect();
        for i in 138..=141 {
            assert!(got.contains(&i));
        }
    }

    #[test]
    fn filter_fixed_two_excludes_rosenbrock() {
        let c = Criteria {
            dimension: Some(DimensionQuery::Fixed(2)),
            ..Criteria::default()
        };
        assert!(filter(&c).iter().all(|s| s.index() != 105));
        assert_eq!(filter(&Criteria::default()).len(), COUNT);
    }

    #[test]
    fn flag_parsing() {
        assert_eq!(
            "non-separable".parse::<Separability>().unwrap(),
            Separability::NonSeparable
        );
        assert_eq!(
            "NonSeparable".parse::<Separability>().unwrap(),
            Separability::NonSeparable
        );
        assert_eq!("Unimodal".parse::<Modality>().unwrap(), Modality::Unimodal);
        assert!("sometimes".parse::<Modality>().is_err());
    }

    #[test]
    fn dimension_rule_display() {
        assert_eq!(DimensionRule::Fixed(2).to_string(), "D = 2");
        assert_eq!(DimensionRule::scalable(2, 1).to_string(), "D >= 1");
    }
}
