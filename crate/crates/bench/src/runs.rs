//! Manifest parsing and result documents for `bench run`.

use std::collections::BTreeMap;
use std::io::Write;

use anyhow::Result;
use gobench_core::optimize::{DeParams, Manifest, NelderMeadParams, OptimizerSpec, SuiteReport};
use serde::{Deserialize, Serialize};

use crate::text::{self, finite};

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestFile {
    #[serde(default)]
    pub functions: Vec<String>,
    #[serde(default)]
    pub optimizers: Vec<OptimizerEntry>,
    #[serde(default)]
    pub dimensions: Vec<usize>,
    #[serde(default)]
    pub budget: usize,
    #[serde(default)]
    pub seeds: Vec<u64>,
    #[serde(default)]
    pub thresholds: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptimizerEntry {
    pub name: String,
    #[serde(default)]
    pub params: serde_json::Map<String, serde_json::Value>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct NmFile {
    alpha: Option<f64>,
    gamma: Option<f64>,
    rho: Option<f64>,
    sigma: Option<f64>,
    step: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct DeFile {
    population: Option<usize>,
    f: Option<f64>,
    cr: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct NoParams {}

fn optimizer(e: &OptimizerEntry) -> std::result::Result<OptimizerSpec, String> {
    let params = serde_json::Value::Object(e.params.clone());
    let bad = |err: serde_json::Error| format!("optimizer {}: {err}", e.name);
    match e.name.as_str() {
        "random-search" => {
            serde_json::from_value::<NoParams>(params).map_err(bad)?;
            Ok(OptimizerSpec::RandomSearch)
        }
        "nelder-mead" => {
            let p: NmFile = serde_json::from_value(params).map_err(bad)?;
            let d = NelderMeadParams::default();
            Ok(OptimizerSpec::NelderMead(NelderMeadParams {
                alpha: p.alpha.unwrap_or(d.alpha),
                gamma: p.gamma.unwrap_or(d.gamma),
                rho: p.rho.unwrap_or(d.rho),
                sigma: p.sigma.unwrap_or(d.sigma),
                step: p.step.unwrap_or(d.step),
                seed: 0,
            }))
        }
        "differential-evolution" => {
            let p: DeFile = serde_json::from_value(params).map_err(bad)?;
            let d = DeParams::default();
            Ok(OptimizerSpec::DifferentialEvolution(DeParams {
                population: p.population,
                f: p.f.unwrap_or(d.f),
                cr: p.cr.unwrap_or(d.cr),
            }))
        }
        other => Err(format!(
            "unknown optimizer `{other}`; expected random-search, nelder-mead or differential-evolution"
        )),
    }
}

/// Converts the file form, reporting every problem at once.
pub fn to_manifest(file: &ManifestFile) -> std::result::Result<Manifest, Vec<String>> {
    let mut errs = Vec::new();
    let mut optimizers = Vec::new();
    for e in &file.optimizers {
        match optimizer(e) {
            Ok(o) => optimizers.push(o),
            Err(m) => errs.push(m),
        }
    }
    let m = Manifest {
        functions: file.functions.clone(),
        optimizers,
        dimensions: file.dimensions.clone(),
        budget: file.budget,
        seeds: file.seeds.clone(),
        thresholds: file
            .thresholds
            .iter()
            .map(|(k, v)| (k.clone(), *v))
            .collect(),
    };
    errs.extend(m.problems());
    if errs.is_empty() {
        Ok(m)
    } else {
        Err(errs)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    #[serde(rename = "fn")]
    pub function: String,
    pub optimizer: String,
    pub dim: usize,
    pub seed: u64,
    pub best_value: Option<f64>,
    pub score: Option<f64>,
    pub evals: usize,
    pub success: Option<bool>,
    pub threshold: Option<f64>,
    pub best_point: Vec<f64>,
    pub trajectory: Vec<(usize, Option<f64>)>,
    pub aborted: Option<String>,
}

pub fn rows(report: &SuiteReport) -> Vec<ResultRow> {
    report
        .runs
        .iter()
        .map(|r| {
            let x = &r.result;
            ResultRow {
                function: x.function.slug.into(),
                optimizer: x.optimizer.into(),
                dim: x.dimension,
                seed: x.seed,
                best_value: finite(x.best_value),
                score: finite(x.score),
                evals: x.evaluations_used,
                success: r.success,
                threshold: r.threshold,
                best_point: x.best_point.clone(),
                trajectory: x.trajectory.iter().map(|&(i, v)| (i, finite(v))).collect(),
                aborted: x.aborted.clone(),
            }
        })
        .collect()
}

pub fn write_json(mut w: impl Write, rows: &[ResultRow]) -> Result<()> {
    serde_json::to_writer_pretty(&mut w, rows)?;
    writeln!(w)?;
    Ok(())
}

pub fn write_csv(w: impl Write, rows: &[ResultRow]) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record([
        "fn",
        "optimizer",
        "dim",
        "seed",
        "best_value",
        "evals",
        "success",
    ])?;
    for r in rows {
        out.write_record([
            r.function.clone(),
            r.optimizer.clone(),
            r.dim.to_string(),
            r.seed.to_string(),
            text::num(r.best_value.unwrap_or(f64::NAN)),
            r.evals.to_string(),
            r.success.map_or(String::new(), |s| s.to_string()),
        ])?;
    }
    out.flush()?;
    Ok(())
}

/// Per function, optimizer and dimension: successes and median score.
pub fn summary_table(report: &SuiteReport) -> String {
    let mut t = String::new();
    for s in &report.summary {
        let rate = match s.successes {
            Some(k) => format!("{k}/{}", s.runs),
            None => format!("-/{}", s.runs),
        };
        let target = s.threshold.map_or("-".to_owned(), text::num);
        t += &format!(
            "{:<28} {:<24} D={:<3} success {:<7} target {:<12} median {}\n",
            s.function.slug,
            s.optimizer,
            s.dimension,
            rate,
            target,
            text::num(s.median_score)
        );
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> std::result::Result<Manifest, Vec<String>> {
        to_manifest(&serde_json::from_str(s).unwrap())
    }

    #[test]
    fn empty_object_is_empty_manifest() {
        assert_eq!(parse("{}").unwrap(), Manifest::default());
    }

    #[test]
    fn all_problems_listed() {
        let errs = parse(
            r#"{"functions":["nope","sphere"],"optimizers":[{"name":"cma"},{"name":"nelder-mead","params":{"beta":1}}],
                "budget":0,"seeds":[1]}"#,
        )
        .unwrap_err();
        assert_eq!(errs.len(), 3, "{errs:?}");
    }

    #[test]
    fn params_are_read() {
        let m = parse(r#"{"functions":["sphere"],"optimizers":[{"name":"differential-evolution","params":{"f":0.7}}],"budget":100,"seeds":[0]}"#)
            .unwrap();
        assert_eq!(
            m.optimizers,
            [OptimizerSpec::DifferentialEvolution(DeParams {
                f: 0.7,
                ..DeParams::default()
            })]
        );
    }
}
