use alloc::vec::Vec;

use super::{settle, Budget, Halt, Objective, RunResult};
use crate::error::{Error, Result};
use crate::registry::{self, Key};
use crate::rng;

/// DE/rand/1/bin settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeParams {
    /// Population size; `None` means `10 * D`.
    pub population: Option<usize>,
    /// Differential weight.
    pub f: f64,
    /// Crossover rate.
    pub cr: f64,
}

impl Default for DeParams {
    fn default() -> Self {
        Self {
            population: None,
            f: 0.5,
            cr: 0.9,
        }
    }
}

/// Reflects once off the violated bound, then clamps.
fn reflect(v: f64, lo: f64, hi: f64) -> f64 {
    let r = if v < lo {
        lo + (lo - v)
    } else if v > hi {
        hi - (v - hi)
    } else {
        v
    };
    r.clamp(lo, hi)
}

pub fn differential_evolution<'a>(
    key: impl Into<Key<'a>>,
    dimension: usize,
    budget: Budget,
    seed: u64,
    params: &DeParams,
) -> Result<RunResult> {
    let spec = registry::lookup(key)?;
    spec.check_dimension(dimension)?;
    let np = params.population.unwrap_or(10 * dimension);
    if np < 4 {
        return Err(Error::InvalidArgument(
            "population needs at least 4 members".into(),
        ));
    }
    if budget.max_evaluations() < np {
        return Err(Error::InvalidArgument(
            "budget is smaller than the population".into(),
        ));
    }
    if !(0.0..=1.0).contains(&params.cr) || !(params.f > 0.0) {
        return Err(Error::InvalidArgument("need F > 0 and CR in [0, 1]".into()));
    }
    let boxes = spec.bounds.intervals(dimension);
    let mut s = rng::stream(seed);
    let mut obj = Objective::new(spec, budget, seed);

    let run = (|| {
        let mut pop: Vec<Vec<f64>> = (0..np)
            .map(|_| {
                boxes
                    .iter()
                    .map(|&(lo, hi)| rng::uniform_in(&mut s, lo, hi))
                    .collect()
            })
            .collect();
        let mut fit = Vec::with_capacity(np);
        for x in &pop {
            fit.push(obj.eval(x)?);
        }
        let mut trial = alloc::vec![0.0; dimension];
        loop {
            for i in 0..np {
                let pick = |s: &mut rng::Stream, taken: &[usize]| loop {
                    let r = rng::index(s, np);
                    if !taken.contains(&r) {
                        break r;
                    }
                };
                let r1 = pick(&mut s, &[i]);
                let r2 = pick(&mut s, &[i, r1]);
                let r3 = pick(&mut s, &[i, r1, r2]);
                let jrand = rng::index(&mut s, dimension);
                for (j, t) in trial.iter_mut().enumerate() {
                    *t = if j == jrand || rng::uniform(&mut s) < params.cr {
                        let (lo, hi) = boxes[j];
                        reflect(pop[r1][j] + params.f * (pop[r2][j] - pop[r3][j]), lo, hi)
                    } else {
                        pop[i][j]
                    };
                }
                let ft = obj.eval(&trial)?;
                if ft <= fit[i] {
                    pop[i].copy_from_slice(&trial);
                    fit[i] = ft;
                }
            }
        }
    })();
    let halt = match settle(run) {
        Some(Halt::Budget) | None => None,
        h => h,
    };
    Ok(obj.finish("differential-evolution", dimension, seed, halt))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflection_stays_inside() {
        assert_eq!(reflect(-1.5, -1.0, 2.0), -0.5);
        assert_eq!(reflect(2.5, -1.0, 2.0), 1.5);
        assert_eq!(reflect(-10.0, -1.0, 2.0), 2.0);
    }

    #[test]
    fn ackley_converges() {
        let r = differential_evolution(
            "ackley-1",
            2,
            Budget::new(20000).unwrap(),
            0,
            &DeParams::default(),
        )
        .unwrap();
        assert!(r.best_value <= 1e-3);
        assert_eq!(r.evaluations_used, 20000);
    }

    #[test]
    fn budget_below_population() {
        assert!(differential_evolution(
            "sphere",
            3,
            Budget::new(29).unwrap(),
            0,
            &DeParams::default()
        )
        .is_err());
    }

    #[test]
    fn adjiman_population_in_box() {
        let r = differential_evolution(
            "adjiman",
            2,
            Budget::new(20).unwrap(),
            5,
            &DeParams::default(),
        )
        .unwrap();
        let b = crate::lookup("adjiman").unwrap().bounds;
        assert!(b.contains(&r.best_point));
    }
}
