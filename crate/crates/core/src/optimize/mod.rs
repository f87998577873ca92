//! Baseline derivative-free optimizers and the run harness.
//!
//! Optimizers never see a formula. They call a counting [`Objective`] that
//! enforces the evaluation budget and records the best-so-far trajectory.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::functions::{eval_raw, EvalContext, NoisePolicy};
use crate::registry::{self, FunctionId, FunctionSpec, Key};
use crate::rng;

mod evolution;
mod simplex;
mod suite;

pub use evolution::{differential_evolution, DeParams};
pub(crate) use simplex::simplex;
pub use simplex::{nelder_mead, NelderMeadParams};
pub use suite::{
    run_suite, Manifest, OptimizerSpec, SuiteReport, SuiteRun, SummaryRow, DEFAULT_MARGIN,
};

/// Hard cap on objective evaluations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Budget {
    max_evaluations: usize,
}

impl Budget {
    pub fn new(max_evaluations: usize) -> Result<Self> {
        if max_evaluations == 0 {
            return Err(Error::InvalidArgument("budget must be positive".into()));
        }
        Ok(Self { max_evaluations })
    }

    pub fn max_evaluations(&self) -> usize {
        self.max_evaluations
    }
}

/// Outcome of one optimizer run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub function: FunctionId,
    pub optimizer: &'static str,
    pub dimension: usize,
    pub seed: u64,
    /// Empty when not a single evaluation succeeded.
    pub best_point: Vec<f64>,
    /// Best value seen, under the run's noise policy.
    pub best_value: f64,
    pub evaluations_used: usize,
    /// `(evaluation index, best so far)` at 1, 2, 5, 10, 20, 50, ... and at the end.
    pub trajectory: Vec<(usize, f64)>,
    /// Noise-free value at `best_point`, used for scoring.
    pub score: f64,
    /// Set when an evaluation error stopped the run early.
    pub aborted: Option<String>,
}

/// Checkpoint following `c` in the 1-2-5 sequence.
pub fn next_checkpoint(c: usize) -> usize {
    let mut p = 1;
    while p * 10 <= c {
        p *= 10;
    }
    match c / p {
        1 => 2 * p,
        2..=4 => 5 * p,
        _ => 10 * p,
    }
}

pub(crate) enum Halt {
    Budget,
    Failed(Error),
}

/// Counting evaluation wrapper, the only path from an optimizer to a formula.
pub(crate) struct Objective<'s> {
    spec: &'s FunctionSpec,
    noisy: bool,
    noise_seed: u64,
    max: usize,
    used: usize,
    best: Option<(Vec<f64>, f64)>,
    trajectory: Vec<(usize, f64)>,
    next: usize,
}

impl<'s> Objective<'s> {
    pub(crate) fn new(spec: &'s FunctionSpec, budget: Budget, seed: u64) -> Self {
        Self {
            spec,
            noisy: spec.stochastic(),
            noise_seed: rng::sub_seed(seed, u64::MAX),
            max: budget.max_evaluations,
            used: 0,
            best: None,
            trajectory: Vec::new(),
            next: 1,
        }
    }

    pub(crate) fn remaining(&self) -> usize {
        self.max - self.used
    }

    pub(crate) fn eval(&mut self, x: &[f64]) -> core::result::Result<f64, Halt> {
        if self.used >= self.max {
            return Err(Halt::Budget);
        }
        self.used += 1;
        let ctx = if self.noisy {
            EvalContext {
                seed: rng::sub_seed(self.noise_seed, self.used as u64),
                noise: NoisePolicy::Sample,
                ..EvalContext::default()
            }
        } else {
            EvalContext::suppressed()
        };
        let v = eval_raw(self.spec, x, &ctx).map_err(Halt::Failed)?;
        if self.best.as_ref().is_none_or(|(_, b)| v < *b) {
            self.best = Some((x.to_vec(), v));
        }
        if self.used == self.next {
            self.trajectory.push((self.used, self.best_value()));
            self.next = next_checkpoint(self.next);
        }
        Ok(v)
    }

    fn best_value(&self) -> f64 {
        self.best.as_ref().map_or(f64::NAN, |(_, v)| *v)
    }

    pub(crate) fn finish(
        mut self,
        optimizer: &'static str,
        dimension: usize,
        seed: u64,
        halt: Option<Halt>,
    ) -> RunResult {
        if self.used > 0 && self.trajectory.last().map(|t| t.0) != Some(self.used) {
            self.trajectory.push((self.used, self.best_value()));
        }
        let best_value = self.best_value();
        let (best_point, score) = match self.best.take() {
            Some((x, _)) if self.noisy => {
                let s = eval_raw(self.spec, &x, &EvalContext::suppressed()).unwrap_or(f64::NAN);
                (x, s)
            }
            Some((x, v)) => (x, v),
            None => (Vec::new(), f64::NAN),
        };
        RunResult {
            function: self.spec.id,
            optimizer,
            dimension,
            seed,
            best_point,
            best_value,
            evaluations_used: self.used,
            trajectory: self.trajectory,
            score,
            aborted: match halt {
                Some(Halt::Failed(e)) => Some(e.to_string()),
                _ => None,
            },
        }
    }
}

/// `Ok` for a clean stop, the halt otherwise.
pub(crate) fn settle(r: core::result::Result<(), Halt>) -> Option<Halt> {
    r.err()
}

/// Uniform sampling of the box, keeping the best point.
pub fn random_search<'a>(
    key: impl Into<Key<'a>>,
    dimension: usize,
    budget: Budget,
    seed: u64,
) -> Result<RunResult> {
    let spec = registry::lookup(key)?;
    spec.check_dimension(dimension)?;
    let boxes = spec.bounds.intervals(dimension);
    let mut obj = Objective::new(spec, budget, seed);
    let mut s = rng::stream(seed);
    let mut x = alloc::vec![0.0; dimension];
    let run = (|| {
        while obj.remaining() > 0 {
            for (v, &(lo, hi)) in x.iter_mut().zip(&boxes) {
                *v = rng::uniform_in(&mut s, lo, hi);
            }
            obj.eval(&x)?;
        }
        Ok(())
    })();
    let halt = settle(run);
    Ok(obj.finish("random-search", dimension, seed, halt))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checkpoints() {
        let mut c = 1;
        let mut seen = Vec::new();
        while c <= 1000 {
            seen.push(c);
            c = next_checkpoint(c);
        }
        assert_eq!(seen, [1, 2, 5, 10, 20, 50, 100, 200, 500, 1000]);
    }

    #[test]
    fn zero_budget_rejected() {
        assert!(Budget::new(0).is_err());
    }

    #[test]
    fn random_search_single_evaluation() {
        let r = random_search("sphere", 2, Budget::new(1).unwrap(), 4).unwrap();
        assert_eq!(r.evaluations_used, 1);
        assert_eq!(r.trajectory, [(1, r.best_value)]);
    }

    #[test]
    fn random_search_repeats() {
        let a = random_search("ackley-1", 3, Budget::new(300).unwrap(), 9).unwrap();
        let b = random_search("ackley-1", 3, Budget::new(300).unwrap(), 9).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.trajectory.last().unwrap().0, 300);
    }

    #[test]
    fn noisy_runs_score_without_noise() {
        let r = random_search(169, 2, Budget::new(50).unwrap(), 1).unwrap();
        let clean = crate::evaluate(169, &r.best_point, &EvalContext::suppressed()).unwrap();
        assert_eq!(r.score, clean);
    }
}
