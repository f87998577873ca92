use gobench_core::calculus::{fd_gradient, FdScheme};
use gobench_core::optimize::{differential_evolution, nelder_mead, next_checkpoint, random_search, Budget, DeParams, NelderMeadParams};
use gobench_core::registry::{self, DimensionRule};
use gobench_core::{evaluate, evaluate_batch, EvalContext, FunctionSpec};
use proptest::prelude::*;

fn suppressed(key: usize, x: &[f64]) -> f64 {
    evaluate(key, x, &EvalContext::suppressed()).unwrap()
}

fn spec_and_point() -> impl Strategy<Value = (&'static FunctionSpec, Vec<f64>)> {
    (1usize..=175).prop_flat_map(|i| {
        let spec = registry::get(i).unwrap();
        let n = spec.default_dimension();
        let coords: Vec<_> = (0..n)
            .map(|k| {
                let (lo, hi) = spec.bounds.get(k);
                lo..=hi
            })
            .collect();
        (Just(spec), coords)
    })
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0)
}

proptest! {
    #[test]
    fn suppressed_evaluation_is_pure((spec, x) in spec_and_point()) {
        let ctx = EvalContext::suppressed();
        let a = gobench_core::functions::evaluate_spec(spec, &x, &ctx);
        let b = gobench_core::functions::evaluate_spec(spec, &x, &ctx);
        prop_assert_eq!(format!("{a:?}"), format!("{b:?}"));
    }

    #[test]
    fn batch_matches_singles((spec, x) in spec_and_point(), seed in any::<u64>()) {
        let ctx = EvalContext::suppressed();
        let batch = evaluate_batch(spec, &[x.clone(), x.clone()], &EvalContext { seed, ..ctx }).unwrap();
        let single = evaluate(spec, &x, &ctx);
        prop_assert_eq!(format!("{:?}", batch[0]), format!("{single:?}"));
    }

    #[test]
    fn fixed_dimension_is_enforced(i in 1usize..=175, extra in 1usize..4) {
        let spec = registry::get(i).unwrap();
        if let DimensionRule::Fixed(n) = spec.dimension {
            prop_assert!(evaluate(i, &vec![0.5; n + extra], &EvalContext::suppressed()).is_err());
        }
    }

    #[test]
    fn sphere_matches_sum_of_squares(x in prop::collection::vec(-5.0f64..5.0, 1..12)) {
        let want: f64 = x.iter().map(|v| v * v).sum();
        prop_assert!(close(suppressed(137, &x), want));
        let g = fd_gradient(137, &x, FdScheme::default()).unwrap();
        for (gi, xi) in g.iter().zip(&x) {
            prop_assert!((gi - 2.0 * xi).abs() < 1e-5);
        }
    }

    #[test]
    fn two_dimensional_oracles(a in -4.5f64..4.5, b in -4.5f64..4.5) {
        let beale = (1.5 - a + a * b).powi(2) + (2.25 - a + a * b * b).powi(2) + (2.625 - a + a * b.powi(3)).powi(2);
        prop_assert!(close(suppressed(10, &[a, b]), beale));
        let booth = (a + 2.0 * b - 7.0).powi(2) + (2.0 * a + b - 5.0).powi(2);
        prop_assert!(close(suppressed(20, &[a, b]), booth));
        let matyas = 0.26 * (a * a + b * b) - 0.48 * a * b;
        prop_assert!(close(suppressed(71, &[a, b]), matyas));
        let camel = 4.0 * a * a - 2.1 * a.powi(4) + a.powi(6) / 3.0 + a * b - 4.0 * b * b + 4.0 * b.powi(4);
        prop_assert!(close(suppressed(30, &[a, b]), camel));
    }

    #[test]
    fn zakharov_oracle(x in prop::collection::vec(-5.0f64..10.0, 2..8)) {
        let s: f64 = x.iter().enumerate().map(|(i, v)| 0.5 * (i as f64 + 1.0) * v).sum();
        let want = x.iter().map(|v| v * v).sum::<f64>() + s * s + s.powi(4);
        prop_assert!(close(suppressed(173, &x), want));
    }

    #[test]
    fn checkpoints_increase(c in 1usize..1_000_000_000) {
        let n = next_checkpoint(c);
        prop_assert!(n > c && n <= 5 * c);
    }

    #[test]
    fn optimizers_respect_budgets(budget in 1usize..300, seed in any::<u64>(), i in prop::sample::select(vec![1usize, 10, 59, 105, 137, 169])) {
        let spec = registry::get(i).unwrap();
        let n = spec.default_dimension();
        let b = Budget::new(budget).unwrap();
        let mut runs = vec![random_search(i, n, b, seed).unwrap()];
        let start: Vec<f64> = (0..n).map(|k| { let (lo, hi) = spec.bounds.get(k); 0.5 * (lo + hi) }).collect();
        runs.push(nelder_mead(i, &start, b, &NelderMeadParams { seed, ..Default::default() }).unwrap());
        if budget >= 10 * n {
            runs.push(differential_evolution(i, n, b, seed, &DeParams::default()).unwrap());
        }
        for r in runs {
            prop_assert!(r.evaluations_used <= budget);
            prop_assert!(spec.bounds.contains(&r.best_point));
            prop_assert!(r.trajectory.windows(2).all(|w| w[0].0 < w[1].0 && w[1].1 <= w[0].1));
            prop_assert_eq!(r.trajectory.last().map(|t| t.1), Some(r.best_value));
        }
    }
}
