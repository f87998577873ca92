use gobench_core::calculus::{fd_gradient, separability_probe, stationarity_residual, FdScheme, Verdict};
use gobench_core::optimize::{
    differential_evolution, nelder_mead, random_search, run_suite, Budget, DeParams, Manifest, NelderMeadParams,
    OptimizerSpec,
};
use gobench_core::registry::{self, Bounds, Continuity, Criteria, DimensionQuery, Modality, Separability};
use gobench_core::verify::{audit_all, check_minimum, errata_ledger, AuditStatus};
use gobench_core::{evaluate, evaluate_batch, lookup, EvalContext, Error};

fn eval(key: &str, x: &[f64]) -> f64 {
    evaluate(key, x, &EvalContext::suppressed()).unwrap()
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|a| a * a).sum::<f64>().sqrt()
}

#[test]
fn lookups() {
    let s = lookup("sphere").unwrap();
    assert_eq!(s.index(), 137);
    assert_eq!(s.flags.separability, Separability::Separable);
    let a = lookup(1).unwrap();
    assert_eq!(a.name, "Ackley 1");
    assert_eq!(a.bounds, Bounds::Uniform(-35.0, 35.0));
    assert!(matches!(lookup("no-such-fn"), Err(Error::UnknownFunction(_))));
}

#[test]
fn filters() {
    let step = Criteria {
        modality: Some(Modality::Unimodal),
        separability: Some(Separability::Separable),
        continuity: Some(Continuity::Discontinuous),
        ..Criteria::default()
    };
    let found: Vec<usize> = registry::filter(&step).iter().map(|s| s.index()).collect();
    for i in 138..=141 {
        assert!(found.contains(&i), "f{i} missing from {found:?}");
    }
    let fixed2 = Criteria { dimension: Some(DimensionQuery::Fixed(2)), ..Criteria::default() };
    assert!(registry::filter(&fixed2).iter().all(|s| s.index() != 105));
    assert_eq!(registry::filter(&Criteria::default()).len(), 175);
}

#[test]
fn stochastic_entries() {
    let noisy: Vec<usize> = registry::catalog().iter().filter(|s| s.stochastic()).map(|s| s.index()).collect();
    assert_eq!(noisy, [100, 169]);
}

#[test]
fn point_values() {
    assert_eq!(eval("sphere", &[0.0, 0.0]), 0.0);
    assert_eq!(eval("f58", &[0.0, -1.0]), 3.0);
    assert_eq!(eval("ackley-1", &[0.0; 4]), 0.0);
    // 0.26 * 2 - 0.48
    assert!((eval("matyas", &[1.0, 1.0]) - 0.04).abs() < 1e-15);
    assert_eq!(eval("step-2", &[0.4, -0.4]), 0.0);
    assert_eq!(eval("step-2", &[0.6, 0.0]), 1.0);
}

#[test]
fn seeded_noise_repeats() {
    let x = [0.3, -0.2, 0.1];
    let a = evaluate(169, &x, &EvalContext::sampled(7)).unwrap();
    let b = evaluate(169, &x, &EvalContext::sampled(7)).unwrap();
    assert_eq!(a, b);
    assert_ne!(a, evaluate(169, &x, &EvalContext::suppressed()).unwrap());
}

#[test]
fn batches() {
    let ctx = EvalContext::suppressed();
    let ok = |v: Vec<gobench_core::Result<f64>>| v.into_iter().map(Result::unwrap).collect::<Vec<_>>();
    assert_eq!(ok(evaluate_batch(137, &[[0.0, 0.0]; 3], &ctx).unwrap()), [0.0; 3]);
    let corners = [[-4.5, -4.5], [-4.5, 4.5], [4.5, -4.5], [4.5, 4.5]];
    let singles: Vec<f64> = corners.iter().map(|c| eval("beale", c)).collect();
    assert_eq!(ok(evaluate_batch(10, &corners, &ctx).unwrap()), singles);
    assert!(evaluate_batch::<[f64; 2]>(10, &[], &ctx).unwrap().is_empty());
}

#[test]
fn gradients() {
    let g = fd_gradient(137, &[1.0, 2.0], FdScheme::default()).unwrap();
    assert!((g[0] - 2.0).abs() < 1e-5 && (g[1] - 4.0).abs() < 1e-5);
    assert!(norm(&fd_gradient(10, &[3.0, 0.5], FdScheme::default()).unwrap()) <= 1e-4);
    assert!(norm(&fd_gradient(105, &[1.0; 5], FdScheme::default()).unwrap()) <= 1e-4);
}

#[test]
fn stationarity_residuals() {
    assert!(stationarity_residual(137, &[0.0, 0.0]).unwrap() <= 1e-6);
    // x1 sits on its upper bound, where only an increasing-x1 slope would count.
    let boundary = stationarity_residual(53, &[512.0, 404.2319]).unwrap();
    let raw = norm(&fd_gradient(53, &[512.0, 404.2319], FdScheme::default()).unwrap());
    assert!(boundary < 1e-2 && boundary < raw, "{boundary} vs {raw}");
}

#[test]
fn alpine_kink_does_not_decide_status() {
    let recs = check_minimum("alpine-1", 1e-8).unwrap();
    assert_eq!(recs[0].status, AuditStatus::Verified);
    assert!(recs[0].stationarity.is_finite());
}

#[test]
fn probe_examples() {
    let v = |f: usize, n| separability_probe(f, n, 64, 3, 1e-9).unwrap().verdict;
    assert_eq!(v(137, 4), Verdict::AdditivelySeparable);
    assert_eq!(v(105, 2), Verdict::NonSeparable);
    assert_eq!(v(71, 2), Verdict::NonSeparable);
}

/// Independent transcription of the Egg Holder formula.
fn egg_holder(x1: f64, x2: f64) -> f64 {
    -(x2 + 47.0) * (x2 + x1 / 2.0 + 47.0).abs().sqrt().sin() - x1 * (x1 - (x2 + 47.0)).abs().sqrt().sin()
}

#[test]
fn audit_examples() {
    let beale = check_minimum(10, 1e-8).unwrap();
    assert_eq!(beale.len(), 1);
    assert_eq!((beale[0].residual, beale[0].status), (0.0, AuditStatus::Verified));

    let egg = check_minimum(53, 1e-8).unwrap();
    assert_eq!(egg[0].status, AuditStatus::Discrepant);
    assert!((egg[0].evaluated - egg_holder(512.0, 404.2319)).abs() < 1e-9);
    assert!(egg[0].evaluated < -900.0);

    let tray = check_minimum(39, 1e-8).unwrap();
    assert_eq!(tray.len(), 4);
    assert!(tray.iter().all(|r| (r.evaluated - -2.06261218).abs() <= 1e-6));

    let alpine = check_minimum(7, 1e-8).unwrap();
    assert!(alpine.iter().any(|r| r.status == AuditStatus::Discrepant));
}

#[test]
fn whole_audit() {
    let a = audit_all(1e-8).unwrap();
    let concrete = registry::catalog().iter().filter(|s| gobench_core::verify::has_concrete_optimum(s)).count();
    assert_eq!(a.summary.functions, concrete);
    let flagged: Vec<u16> = a.discrepant().iter().map(|id| id.index).collect();
    assert!(flagged.contains(&7) && flagged.contains(&53));
    assert_eq!(format!("{a:?}"), format!("{:?}", audit_all(1e-8).unwrap()));

    let ledger = errata_ledger(&a);
    let noted = |i: u16, word: &str| ledger.iter().any(|e| e.function.index == i && e.finding.contains(word));
    assert!(noted(125, "126") || noted(126, "125"));
    assert!(noted(14, "Biggs") && noted(15, "Biggs"));
}

#[test]
fn random_search_examples() {
    let budget = |n| Budget::new(n).unwrap();
    let mut best: Vec<f64> =
        (0..20).map(|s| random_search(137, 2, budget(5000), s).unwrap().best_value).collect();
    best.sort_by(f64::total_cmp);
    assert!(0.5 * (best[9] + best[10]) <= 0.05);
    assert_eq!(random_search(137, 2, budget(1), 0).unwrap().evaluations_used, 1);
    assert_eq!(random_search(137, 3, budget(50), 9).unwrap(), random_search(137, 3, budget(50), 9).unwrap());
}

#[test]
fn nelder_mead_examples() {
    let p = NelderMeadParams::default();
    assert!(nelder_mead(10, &[2.0, 2.0], Budget::new(2000).unwrap(), &p).unwrap().best_value <= 1e-6);
    assert!(nelder_mead(105, &[-1.2, 1.0], Budget::new(5000).unwrap(), &p).unwrap().best_value <= 1e-6);
    assert!(nelder_mead(10, &[20.0, 0.0], Budget::new(10).unwrap(), &p).is_err());
}

#[test]
fn evolution_examples() {
    let rate = |f: usize, target: f64| {
        (0..20)
            .filter(|&s| {
                differential_evolution(f, 2, Budget::new(20000).unwrap(), s, &DeParams::default())
                    .unwrap()
                    .best_value
                    <= target
            })
            .count()
    };
    assert!(rate(1, 1e-3) >= 18);
    assert!(rate(59, 1e-2) >= 16);
    let r = differential_evolution(5, 2, Budget::new(40).unwrap(), 1, &DeParams::default()).unwrap();
    assert!(lookup(5).unwrap().bounds.contains(&r.best_point));
}

#[test]
fn suite_examples() {
    let empty = run_suite(&Manifest::default()).unwrap();
    assert!(empty.runs.is_empty() && empty.summary.is_empty());

    let m = Manifest {
        functions: vec!["beale".into(), "sphere".into()],
        optimizers: vec![OptimizerSpec::RandomSearch],
        dimensions: vec![2],
        budget: 100,
        seeds: vec![0, 1, 2],
        thresholds: vec![],
    };
    let rep = run_suite(&m).unwrap();
    assert_eq!(rep.runs.len(), 6);
    let beale = rep.runs.iter().find(|r| r.result.function.index == 10).unwrap();
    assert_eq!(beale.threshold, Some(0.0 + 1e-3));
}
