//! Acceptance criteria, one line per criterion.
//!
//! Runs as a plain binary. Failing criteria are reported and the process
//! still exits 0; pass `--strict` to turn any failure into exit code 1:
//!
//!     cargo test -p gobench --test acceptance -- --strict

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use gobench_core::calculus::{
    fd_gradient, separability_probe, FdScheme, Verdict, DEFAULT_PROBE_SAMPLES,
    DEFAULT_PROBE_TOLERANCE,
};
use gobench_core::optimize::{
    differential_evolution, nelder_mead, random_search, run_suite, Budget, DeParams, Manifest,
    NelderMeadParams, OptimizerSpec,
};
use gobench_core::registry::{self, Differentiability};
use gobench_core::verify::{errata_ledger, 
    audit_all, check_minimum_at, AuditRecord, AuditStatus, DEFAULT_TOLERANCE,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use serde_json::Value;

/// Exact-optimum residual.
const EXACT: f64 = 0.0;
/// Residual bound for values printed to a few decimals.
const APPROX: f64 = 5e-4;
/// Residual bound for values printed with "≈".
const ROUGH: f64 = 5e-2;
const STATIONARITY: f64 = 1e-3;
const SEPARABILITY_SEEDS: [u64; 5] = [0, 1, 2, 3, 4];
const FD_RATIO: (f64, f64) = (3.5, 4.5);
const FD_STEP: f64 = 1e-2;
const NM_TARGET: f64 = 1e-6;
const DE_TARGET: f64 = 1e-3;
const DE_RATE: f64 = 0.9;
const RS_MEDIAN: f64 = 0.05;
const OPTIMIZER_TIME: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;

fn bench(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bench"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("spawn bench")
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(name)
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn catalog_matches_golden() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let out = bench(&["catalog", "--format", "json"], dir.path());
    ensure(out.status.success(), "bench catalog failed")?;
    let cat: Vec<Value> = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let golden: Vec<Value> =
        serde_json::from_str(&std::fs::read_to_string(data("tests/golden/headers.json")).unwrap())
            .unwrap();
    ensure(cat.len() == 175, format!("{} entries", cat.len()))?;
    let mut diffs = Vec::new();
    for (i, (c, g)) in cat.iter().zip(&golden).enumerate() {
        if c["index"] != i + 1 {
            diffs.push(format!("position {} has index {}", i + 1, c["index"]));
        }
        if c["index"] != g["index"] || c["flags"] != g["flags"] || c["bounds"] != g["bounds"] {
            diffs.push(format!("f{}", g["index"]));
        }
    }
    ensure(
        diffs.is_empty(),
        format!("differs from golden: {}", diffs.join(", ")),
    )?;
    Ok("175 entries, flags and bounds equal the golden headers".into())
}

fn record_at(index: usize, n: usize, point: &[f64]) -> Result<AuditRecord, String> {
    let recs = check_minimum_at(index, n, DEFAULT_TOLERANCE).map_err(|e| e.to_string())?;
    recs.into_iter()
        .find(|r| r.point == point)
        .ok_or_else(|| format!("f{index}: no audit record at {point:?}"))
}

fn residual_check(cases: &[(usize, usize, Vec<f64>, f64)]) -> Outcome {
    let mut bad = Vec::new();
    for (index, n, point, bound) in cases {
        let r = record_at(*index, *n, point)?;
        if !(r.residual <= *bound) {
            bad.push(format!(
                "f{index} at {point:?}: residual {} > {bound}",
                r.residual
            ));
        }
    }
    ensure(bad.is_empty(), bad.join("; "))?;
    Ok(format!("{} points within bound", cases.len()))
}

fn golden_points() -> Outcome {
    let ones = |n| vec![1.0; n];
    let zeros = |n| vec![0.0; n];
    residual_check(&[
        (10, 2, vec![3.0, 0.5], EXACT),
        (20, 2, vec![1.0, 3.0], EXACT),
        (29, 2, vec![0.0, 0.0], EXACT),
        (58, 2, vec![0.0, -1.0], EXACT),
        (65, 2, vec![3.0, 2.0], EXACT),
        (70, 2, vec![1.0, 1.0], EXACT),
        (105, 2, ones(2), EXACT),
        (105, 5, ones(5), EXACT),
        (137, 2, zeros(2), EXACT),
        (137, 10, zeros(10), EXACT),
        (139, 2, vec![0.5, 0.5], EXACT),
        (149, 2, vec![0.0, 0.0], EXACT),
        (149, 2, vec![-2.0, 0.0], EXACT),
    ])
}

fn approximate_points() -> Outcome {
    let pi = std::f64::consts::PI;
    residual_check(&[
        (22, 2, vec![-pi, 12.275], APPROX),
        (22, 2, vec![pi, 2.275], APPROX),
        // Catalog location; the printed 2.425 is off the valley floor by 0.05.
        (22, 2, vec![3.0 * pi, 2.475], APPROX),
        (30, 2, vec![0.0898, -0.7126], APPROX),
        (30, 2, vec![-0.0898, 0.7126], APPROX),
        (39, 2, vec![1.349_406_685_353_34, 1.349406608602084], APPROX),
        (57, 2, vec![0.45834282, 0.45834282], APPROX),
        (144, 2, vec![-2.903534, -2.903534], APPROX),
        (175, 2, vec![-1.0465, 0.0], ROUGH),
    ])
}

fn errata_detection() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let expected = data("data/expected-errata.json");
    let with = bench(
        &[
            "check",
            "--all",
            "--expected-errata",
            expected.to_str().unwrap(),
        ],
        dir.path(),
    );
    let without = bench(&["check", "--all"], dir.path());
    let rows: Vec<Value> = serde_json::from_slice(&with.stdout).map_err(|e| e.to_string())?;
    let flagged: BTreeSet<u64> = rows
        .iter()
        .filter(|r| r["status"] == "Discrepant")
        .map(|r| r["index"].as_u64().unwrap())
        .collect();
    let required = [7, 53, 96, 116, 141, 54];
    let missing: Vec<_> = required.iter().filter(|i| !flagged.contains(i)).collect();
    ensure(missing.is_empty(), format!("not flagged: {missing:?}"))?;
    ensure(
        with.status.code() == Some(0),
        format!("exit {:?} with the expected file", with.status.code()),
    )?;
    ensure(
        without.status.code() == Some(1),
        format!("exit {:?} without the file", without.status.code()),
    )?;
    Ok(format!(
        "{} functions Discrepant, required six among them; exit 0 with file, 1 without",
        flagged.len()
    ))
}

fn stationarity() -> Outcome {
    let report = audit_all(DEFAULT_TOLERANCE).map_err(|e| e.to_string())?;
    let excluded: BTreeSet<u16> = errata_ledger(&report).iter().map(|e| e.function.index).collect();
    let mut checked = 0;
    let mut bad = Vec::new();
    for r in &report.records {
        let spec = registry::get(r.function.index as usize).unwrap();
        if r.status != AuditStatus::Verified
            || spec.flags.differentiability != Differentiability::Differentiable
            || excluded.contains(&r.function.index)
        {
            continue;
        }
        let interior = r.point.iter().enumerate().all(|(i, &x)| {
            let (lo, hi) = spec.bounds.get(i);
            lo < x && x < hi
        });
        if !interior {
            continue;
        }
        checked += 1;
        if !(r.stationarity <= STATIONARITY) {
            bad.push(format!(
                "f{} at {:?}: {}",
                r.function.index, r.point, r.stationarity
            ));
        }
    }
    ensure(bad.is_empty(), bad.join("; "))?;
    Ok(format!(
        "{checked} Verified interior optima outside the ledger ({} functions excluded), all residuals <= {STATIONARITY}",
        excluded.len()
    ))
}

fn separability() -> Outcome {
    let separable = [6, 17, 40, 93, 98, 137, 143];
    let coupled = [10, 59, 71, 105, 124];
    let mut bad = Vec::new();
    for (set, want) in [
        (&separable[..], Verdict::AdditivelySeparable),
        (&coupled[..], Verdict::NonSeparable),
    ] {
        for &i in set {
            let n = registry::get(i).unwrap().default_dimension().max(2);
            for seed in SEPARABILITY_SEEDS {
                let v =
                    separability_probe(i, n, DEFAULT_PROBE_SAMPLES, seed, DEFAULT_PROBE_TOLERANCE)
                        .map_err(|e| format!("f{i}: {e}"))?;
                if v.verdict != want {
                    bad.push(format!("f{i} seed {seed}: {}", v.verdict.as_str()));
                }
            }
        }
    }
    ensure(bad.is_empty(), bad.join("; "))?;
    Ok("12 functions x 5 seeds match their headers".into())
}

fn fd_order() -> Outcome {
    let x = [1.0, 2.0];
    let exact = [2.0, 4.0];
    let err = |h: f64| -> Result<f64, String> {
        let g = fd_gradient(137, &x, FdScheme::central(h)).map_err(|e| e.to_string())?;
        Ok(g.iter()
            .zip(exact)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    };
    let errs = (0..4)
        .map(|k| err(FD_STEP / f64::powi(2.0, k)))
        .collect::<Result<Vec<_>, _>>()?;
    let ratios: Vec<f64> = errs.windows(2).map(|w| w[0] / w[1]).collect();
    let shown = format!("errors {errs:?}, ratios {ratios:?}");
    ensure(
        ratios.iter().all(|r| (FD_RATIO.0..=FD_RATIO.1).contains(r)),
        shown.clone(),
    )?;
    Ok(shown)
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

fn optimizers() -> Outcome {
    let started = Instant::now();
    let seeds = 0..20u64;
    let budget = |n| Budget::new(n).unwrap();
    let mut bad = Vec::new();

    let mut nm_worst: f64 = 0.0;
    for seed in seeds.clone() {
        let p = NelderMeadParams {
            seed,
            ..NelderMeadParams::default()
        };
        let r = nelder_mead(10, &[2.0, 2.0], budget(2000), &p).map_err(|e| e.to_string())?;
        nm_worst = nm_worst.max(r.best_value);
    }
    if !(nm_worst <= NM_TARGET) {
        bad.push(format!("Nelder-Mead worst {nm_worst}"));
    }

    let mut hits = 0;
    for seed in seeds.clone() {
        let r = differential_evolution(1, 2, budget(20000), seed, &DeParams::default())
            .map_err(|e| e.to_string())?;
        hits += usize::from(r.best_value <= DE_TARGET);
    }
    let rate = hits as f64 / 20.0;
    if rate < DE_RATE {
        bad.push(format!("DE success rate {rate}"));
    }

    let rs: Vec<f64> = seeds
        .map(|seed| random_search(137, 2, budget(5000), seed).map(|r| r.best_value))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let med = median(rs);
    if !(med <= RS_MEDIAN) {
        bad.push(format!("random search median {med}"));
    }

    let took = started.elapsed();
    if took > OPTIMIZER_TIME {
        bad.push(format!("took {took:?}"));
    }
    ensure(bad.is_empty(), bad.join("; "))?;
    Ok(format!(
        "NM worst {nm_worst:e}, DE {hits}/20, RS median {med:e}, {:.1}s",
        took.as_secs_f64()
    ))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let d = dir.path();
    let manifest = d.join("m.json");
    std::fs::write(
        &manifest,
        r#"{"functions":["sphere","beale","ackley-1","rosenbrock"],
            "optimizers":[{"name":"random-search"},{"name":"nelder-mead"},{"name":"differential-evolution"}],
            "dimensions":[2,3],"budget":600,"seeds":[0,1,2]}"#,
    )
    .unwrap();
    let m = manifest.to_str().unwrap();
    let mut same = Vec::new();
    let check1 = bench(&["check", "--all"], d).stdout;
    let check2 = bench(&["check", "--all"], d).stdout;
    same.push(("check", !check1.is_empty() && check1 == check2));
    bench(
        &["grid", "sphere", "--resolution", "33", "--out", "g1.csv"],
        d,
    );
    bench(
        &["grid", "sphere", "--resolution", "33", "--out", "g2.csv"],
        d,
    );
    let (g1, g2) = (
        std::fs::read(d.join("g1.csv")).ok(),
        std::fs::read(d.join("g2.csv")).ok(),
    );
    same.push(("grid", g1.is_some() && g1 == g2));
    bench(&["run", "--manifest", m, "--out", "r1.json"], d);
    bench(&["run", "--manifest", m, "--out", "r2.json"], d);
    let (r1, r2) = (
        std::fs::read(d.join("r1.json")).ok(),
        std::fs::read(d.join("r2.json")).ok(),
    );
    same.push(("run", r1.is_some() && r1 == r2));
    let differ: Vec<_> = same.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    ensure(differ.is_empty(), format!("outputs differ: {differ:?}"))?;
    Ok("check, grid and run outputs are byte-identical across repeats".into())
}

fn manifests() -> impl Strategy<Value = Manifest> {
    let functions = prop::sample::subsequence(
        vec![
            "sphere",
            "beale",
            "ackley-1",
            "griewank",
            "rump",
            "xin-she-yang-1",
        ],
        1..3,
    );
    let optimizer = prop_oneof![
        Just(OptimizerSpec::RandomSearch),
        (0.01f64..0.3).prop_map(|step| OptimizerSpec::NelderMead(NelderMeadParams {
            step,
            ..Default::default()
        })),
        (4usize..12).prop_map(|np| OptimizerSpec::DifferentialEvolution(DeParams {
            population: Some(np),
            ..Default::default()
        })),
    ];
    (
        functions,
        prop::collection::vec(optimizer, 1..3),
        prop::sample::subsequence(vec![2usize, 3, 5], 1..3),
        12usize..400,
        prop::collection::vec(any::<u64>(), 1..3),
    )
        .prop_map(|(f, optimizers, dimensions, budget, seeds)| Manifest {
            functions: f.into_iter().map(String::from).collect(),
            optimizers,
            dimensions,
            budget,
            seeds,
            thresholds: Vec::new(),
        })
}

fn budget_cap() -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases: 64,
        failure_persistence: None,
        ..Config::default()
    });
    let runs = std::cell::Cell::new(0usize);
    let result = runner.run(&manifests(), |m| {
        let report = run_suite(&m).map_err(|e| TestCaseError::fail(e.to_string()))?;
        for r in &report.runs {
            let x = &r.result;
            prop_assert!(
                x.evaluations_used <= m.budget,
                "{} used {} of {}",
                x.optimizer,
                x.evaluations_used,
                m.budget
            );
            prop_assert!(
                x.trajectory
                    .windows(2)
                    .all(|w| w[1].1 <= w[0].1 || w[0].1.is_nan()),
                "{:?}",
                x.trajectory
            );
            prop_assert!(x.trajectory.iter().all(|t| t.0 <= m.budget));
        }
        runs.set(runs.get() + report.runs.len());
        Ok(())
    });
    result.map_err(|e| e.to_string())?;
    Ok(format!(
        "64 random manifests, {} runs within budget with monotone trajectories",
        runs.get()
    ))
}

fn main() {
    let strict = std::env::args().any(|a| a == "--strict");
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("catalog completeness", catalog_matches_golden),
        ("golden points", golden_points),
        ("approximate optima", approximate_points),
        ("errata detection", errata_detection),
        ("stationarity", stationarity),
        ("separability probe", separability),
        ("finite-difference order", fd_order),
        ("optimizer sanity", optimizers),
        ("determinism", determinism),
        ("budget cap", budget_cap),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(msg) => println!("criterion {:>2} PASS  {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if strict && failed > 0 {
        std::process::exit(1);
    }
}
