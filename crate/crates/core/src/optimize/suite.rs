use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{
    differential_evolution, nelder_mead, random_search, Budget, DeParams, NelderMeadParams,
    RunResult,
};
use crate::error::{Error, Result};
use crate::registry::{self, FunctionId, FunctionSpec};
use crate::rng;
use crate::verify::{self, AuditStatus};

/// Margin added to a verified optimum value to form the default target.
pub const DEFAULT_MARGIN: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OptimizerSpec {
    RandomSearch,
    /// Starts from a uniform in-box point drawn from the run seed.
    NelderMead(NelderMeadParams),
    DifferentialEvolution(DeParams),
}

impl OptimizerSpec {
    pub fn name(&self) -> &'static str {
        match self {
            OptimizerSpec::RandomSearch => "random-search",
            OptimizerSpec::NelderMead(_) => "nelder-mead",
            OptimizerSpec::DifferentialEvolution(_) => "differential-evolution",
        }
    }
}

/// The cross product to run. Fixed-dimension functions ignore `dimensions`;
/// scalable ones use each listed dimension, or their default when the list is empty.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Manifest {
    pub functions: Vec<String>,
    pub optimizers: Vec<OptimizerSpec>,
    pub dimensions: Vec<usize>,
    pub budget: usize,
    pub seeds: Vec<u64>,
    /// Success targets by function key; missing ones default from the audit.
    pub thresholds: Vec<(String, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteRun {
    pub result: RunResult,
    pub threshold: Option<f64>,
    pub success: Option<bool>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub function: FunctionId,
    pub optimizer: &'static str,
    pub dimension: usize,
    pub runs: usize,
    pub threshold: Option<f64>,
    pub successes: Option<usize>,
    pub median_score: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SuiteReport {
    pub runs: Vec<SuiteRun>,
    pub summary: Vec<SummaryRow>,
}

impl Manifest {
    /// Every validation problem; empty when the manifest can run.
    pub fn problems(&self) -> Vec<String> {
        validate(self).err().unwrap_or_default()
    }
}

struct Plan {
    spec: &'static FunctionSpec,
    dims: Vec<usize>,
    threshold: Option<f64>,
}

fn validate(m: &Manifest) -> core::result::Result<Vec<Plan>, Vec<String>> {
    let mut errs = Vec::new();
    let mut plans = Vec::new();
    let runs = !m.functions.is_empty() && !m.optimizers.is_empty() && !m.seeds.is_empty();
    if runs && m.budget == 0 {
        errs.push(String::from("budget must be positive"));
    }
    for (i, &d) in m.dimensions.iter().enumerate() {
        if m.dimensions[..i].contains(&d) {
            errs.push(format!("dimension {d} listed twice"));
        }
    }
    for name in &m.functions {
        let spec = match registry::lookup(name) {
            Ok(s) => s,
            Err(e) => {
                errs.push(format!("{e}"));
                continue;
            }
        };
        let dims = if spec.dimension.is_fixed() || m.dimensions.is_empty() {
            alloc::vec![spec.default_dimension()]
        } else {
            for &d in &m.dimensions {
                if let Err(e) = spec.check_dimension(d) {
                    errs.push(format!("{e}"));
                }
            }
            m.dimensions.clone()
        };
        for o in &m.optimizers {
            if let OptimizerSpec::DifferentialEvolution(p) = o {
                for &d in &dims {
                    let np = p.population.unwrap_or(10 * d);
                    if m.budget < np {
                        errs.push(format!(
                            "{}: budget {} is below the population {np} at D = {d}",
                            spec.slug(),
                            m.budget
                        ));
                    }
                }
            }
        }
        plans.push(Plan {
            spec,
            dims,
            threshold: None,
        });
    }
    for (name, t) in &m.thresholds {
        match registry::lookup(name) {
            Ok(s) => match plans.iter_mut().find(|p| p.spec.index() == s.index()) {
                Some(p) if t.is_finite() => p.threshold = Some(*t),
                Some(_) => errs.push(format!("threshold for {name} is not finite")),
                None => errs.push(format!(
                    "threshold given for {name}, which is not in the manifest"
                )),
            },
            Err(e) => errs.push(format!("{e}")),
        }
    }
    if errs.is_empty() {
        Ok(plans)
    } else {
        Err(errs)
    }
}

/// Lowest verified claimed value plus the margin.
fn default_threshold(spec: &FunctionSpec, n: usize) -> Option<f64> {
    let recs = verify::check_minimum_at(spec, n, verify::DEFAULT_TOLERANCE).ok()?;
    recs.iter()
        .filter(|r| matches!(r.status, AuditStatus::Verified | AuditStatus::Corrected))
        .map(|r| r.claimed)
        .min_by(f64::total_cmp)
        .map(|v| v + DEFAULT_MARGIN)
}

fn run_one(
    spec: &FunctionSpec,
    opt: &OptimizerSpec,
    n: usize,
    budget: Budget,
    seed: u64,
) -> Result<RunResult> {
    match opt {
        OptimizerSpec::RandomSearch => random_search(spec, n, budget, seed),
        OptimizerSpec::NelderMead(p) => {
            let mut s = rng::stream(rng::sub_seed(seed, 0));
            let start: Vec<f64> = spec
                .bounds
                .intervals(n)
                .into_iter()
                .map(|(lo, hi)| rng::uniform_in(&mut s, lo, hi))
                .collect();
            nelder_mead(spec, &start, budget, &NelderMeadParams { seed, ..*p })
        }
        OptimizerSpec::DifferentialEvolution(p) => differential_evolution(spec, n, budget, seed, p),
    }
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    match v.len() {
        0 => f64::NAN,
        n if n % 2 == 1 => v[n / 2],
        n => 0.5 * (v[n / 2 - 1] + v[n / 2]),
    }
}

/// Runs functions x dimensions x optimizers x seeds in that nesting order.
/// All validation problems are reported together before anything runs.
pub fn run_suite(m: &Manifest) -> Result<SuiteReport> {
    let plans = validate(m).map_err(Error::InvalidManifest)?;
    let mut report = SuiteReport::default();
    for plan in &plans {
        for &n in &plan.dims {
            let threshold = plan.threshold.or_else(|| default_threshold(plan.spec, n));
            for opt in &m.optimizers {
                let first = report.runs.len();
                for &seed in &m.seeds {
                    let result = run_one(plan.spec, opt, n, Budget::new(m.budget)?, seed)?;
                    let success = threshold.map(|t| result.score <= t);
                    report.runs.push(SuiteRun {
                        result,
                        threshold,
                        success,
                    });
                }
                let block = &report.runs[first..];
                if !block.is_empty() {
                    report.summary.push(SummaryRow {
                        function: plan.spec.id,
                        optimizer: opt.name(),
                        dimension: n,
                        runs: block.len(),
                        threshold,
                        successes: threshold
                            .map(|_| block.iter().filter(|r| r.success == Some(true)).count()),
                        median_score: median(block.iter().map(|r| r.result.score).collect()),
                    });
                }
            }
        }
    }
    Ok(report)
}
