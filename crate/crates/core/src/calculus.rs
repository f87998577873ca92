//! Finite differences, a projected stationarity measure and an empirical
//! test for additive separability.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)] // shadowed by inherent methods when std is linked
use num_traits::Float;

use crate::error::{Error, Result};
use crate::functions::{eval_raw, EvalContext};
use crate::registry::{self, FunctionSpec, Key};
use crate::rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FdKind {
    #[default]
    Central,
    Forward,
}

/// Difference scheme. Coordinate `i` uses the step `step * max(1, |x_i|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdScheme {
    pub kind: FdKind,
    pub step: f64,
}

impl Default for FdScheme {
    fn default() -> Self {
        Self {
            kind: FdKind::Central,
            step: 1e-6,
        }
    }
}

impl FdScheme {
    pub fn central(step: f64) -> Self {
        Self {
            kind: FdKind::Central,
            step,
        }
    }

    pub fn forward(step: f64) -> Self {
        Self {
            kind: FdKind::Forward,
            step,
        }
    }
}

fn probe(spec: &FunctionSpec, x: &[f64]) -> Result<f64> {
    eval_raw(spec, x, &EvalContext::suppressed()).map_err(|e| match e {
        Error::Domain {
            function,
            reason: "non-finite result",
        } => Error::NonFiniteResult {
            function,
            context: "finite-difference probe",
        },
        e => e,
    })
}

/// One partial derivative. Near a bound the difference is taken one-sided,
/// pointing into the box.
fn partial(spec: &FunctionSpec, x: &[f64], fx: f64, i: usize, scheme: FdScheme) -> Result<f64> {
    let h = scheme.step * x[i].abs().max(1.0);
    let (lo, hi) = spec.bounds.get(i);
    let mut y = x.to_vec();
    let at = |y: &mut Vec<f64>, v: f64| -> Result<f64> {
        y[i] = v;
        probe(spec, y)
    };
    let d = if x[i] + h > hi && x[i] - h >= lo {
        (fx - at(&mut y, x[i] - h)?) / h
    } else if x[i] - h < lo || scheme.kind == FdKind::Forward {
        (at(&mut y, x[i] + h)? - fx) / h
    } else {
        (at(&mut y, x[i] + h)? - at(&mut y, x[i] - h)?) / (2.0 * h)
    };
    if d.is_finite() {
        Ok(d)
    } else {
        Err(Error::NonFiniteResult {
            function: spec.id.slug,
            context: "finite-difference quotient",
        })
    }
}

fn gradient(spec: &FunctionSpec, x: &[f64], scheme: FdScheme) -> Result<Vec<f64>> {
    if !(scheme.step > 0.0) {
        return Err(Error::InvalidArgument(
            "finite-difference step must be positive".into(),
        ));
    }
    spec.check_dimension(x.len())?;
    let fx = probe(spec, x)?;
    (0..x.len())
        .map(|i| partial(spec, x, fx, i, scheme))
        .collect()
}

/// Finite-difference gradient with noise suppressed.
pub fn fd_gradient<'a>(key: impl Into<Key<'a>>, x: &[f64], scheme: FdScheme) -> Result<Vec<f64>> {
    gradient(registry::lookup(key)?, x, scheme)
}

pub(crate) fn stationarity(spec: &FunctionSpec, x: &[f64]) -> Result<f64> {
    let g = gradient(spec, x, FdScheme::default())?;
    let mut s = 0.0;
    for (i, gi) in g.into_iter().enumerate() {
        let (lo, hi) = spec.bounds.get(i);
        let c = if x[i] <= lo {
            gi.min(0.0)
        } else if x[i] >= hi {
            gi.max(0.0)
        } else {
            gi
        };
        s += c * c;
    }
    Ok(s.sqrt())
}

/// Norm of the gradient projected onto the feasible directions of the box.
pub fn stationarity_residual<'a>(key: impl Into<Key<'a>>, x: &[f64]) -> Result<f64> {
    stationarity(registry::lookup(key)?, x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    AdditivelySeparable,
    NonSeparable,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::AdditivelySeparable => "AdditivelySeparable",
            Verdict::NonSeparable => "NonSeparable",
            Verdict::Inconclusive => "Inconclusive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparabilityVerdict {
    pub verdict: Verdict,
    /// Largest scaled interaction residual seen.
    pub evidence: f64,
    pub samples: usize,
    /// Samples whose evaluation failed.
    pub failures: usize,
}

pub const DEFAULT_PROBE_SAMPLES: usize = 64;
pub const DEFAULT_PROBE_TOLERANCE: f64 = 1e-9;

/// Scaled mixed difference `|f(x+a+b) - f(x+a) - f(x+b) + f(x)| / max(1, |f(x)|)`.
fn interaction(
    spec: &FunctionSpec,
    x: &[f64],
    i: usize,
    j: usize,
    di: f64,
    dj: f64,
) -> Result<f64> {
    let f00 = probe(spec, x)?;
    let mut y = x.to_vec();
    y[i] += di;
    let f10 = probe(spec, &y)?;
    y[j] += dj;
    let f11 = probe(spec, &y)?;
    y[i] = x[i];
    let f01 = probe(spec, &y)?;
    Ok((f11 - f10 - f01 + f00).abs() / f00.abs().max(1.0))
}

/// Samples random in-box points and coordinate pairs and checks that the
/// mixed difference vanishes, as it does for a sum of one-variable terms.
pub fn separability_probe<'a>(
    key: impl Into<Key<'a>>,
    dimension: usize,
    samples: usize,
    seed: u64,
    tolerance: f64,
) -> Result<SeparabilityVerdict> {
    let spec = registry::lookup(key)?;
    spec.check_dimension(dimension)?;
    if samples < 16 {
        return Err(Error::InvalidArgument(
            "the probe needs at least 16 samples".into(),
        ));
    }
    if dimension < 2 {
        return Err(Error::InvalidArgument(
            "the probe needs at least two coordinates".into(),
        ));
    }
    if !(tolerance >= 0.0) {
        return Err(Error::InvalidArgument(
            "tolerance must be non-negative".into(),
        ));
    }
    let boxes = spec.bounds.intervals(dimension);
    let delta: Vec<f64> = boxes.iter().map(|&(lo, hi)| 1e-3 * (hi - lo)).collect();
    if boxes
        .iter()
        .any(|&(lo, hi)| !(lo < hi && (hi - lo).is_finite()))
    {
        return Err(Error::Domain {
            function: spec.id.slug,
            reason: "box cannot be sampled",
        });
    }

    let mut s = rng::stream(seed);
    let mut evidence: f64 = 0.0;
    let mut failures = 0;
    let mut robust = false;
    let mut fragile = false;
    let mut x = vec![0.0; dimension];
    for _ in 0..samples {
        for (k, &(lo, hi)) in boxes.iter().enumerate() {
            x[k] = rng::uniform_in(&mut s, lo, hi - delta[k]);
        }
        let i = rng::index(&mut s, dimension);
        let j = (i + 1 + rng::index(&mut s, dimension - 1)) % dimension;
        match interaction(spec, &x, i, j, delta[i], delta[j]) {
            Ok(r) => {
                evidence = evidence.max(r);
                if r > tolerance {
                    match interaction(spec, &x, i, j, 0.5 * delta[i], 0.5 * delta[j]) {
                        Ok(r2) if r2 > tolerance => robust = true,
                        Ok(_) => fragile = true,
                        Err(_) => failures += 1,
                    }
                }
            }
            Err(_) => failures += 1,
        }
    }
    let verdict = if robust {
        Verdict::NonSeparable
    } else if failures > 0 || fragile {
        Verdict::Inconclusive
    } else {
        Verdict::AdditivelySeparable
    };
    Ok(SeparabilityVerdict {
        verdict,
        evidence,
        samples,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_gradient() {
        let g = fd_gradient("sphere", &[1.0, 2.0], FdScheme::default()).unwrap();
        assert!((g[0] - 2.0).abs() < 1e-5 && (g[1] - 4.0).abs() < 1e-5);
    }

    #[test]
    fn beale_flat_at_minimum() {
        let g = fd_gradient("beale", &[3.0, 0.5], FdScheme::default()).unwrap();
        assert!(g.iter().map(|v| v * v).sum::<f64>().sqrt() <= 1e-4);
    }

    #[test]
    fn rosenbrock_flat_at_ones() {
        let g = fd_gradient("rosenbrock", &[1.0; 5], FdScheme::default()).unwrap();
        assert!(g.iter().map(|v| v * v).sum::<f64>().sqrt() <= 1e-4);
    }

    #[test]
    fn forward_scheme_is_first_order() {
        let g = fd_gradient("sphere", &[1.0, 2.0], FdScheme::forward(1e-3)).unwrap();
        assert!((g[0] - 2.001).abs() < 1e-9);
    }

    #[test]
    fn lower_bound_is_one_sided() {
        // sphere lives on [0, 10]; at 0 the forward difference is used
        let g = fd_gradient("sphere", &[0.0, 0.0], FdScheme::central(1e-3)).unwrap();
        assert!((g[0] - 1e-3).abs() < 1e-12);
        assert_eq!(stationarity_residual("sphere", &[0.0, 0.0]).unwrap(), 0.0);
    }

    #[test]
    fn egg_holder_boundary_only_counts_inward() {
        let r = stationarity_residual("egg-holder", &[512.0, 404.2319]).unwrap();
        let g = fd_gradient("egg-holder", &[512.0, 404.2319], FdScheme::default()).unwrap();
        assert!(r <= g[1].abs() + g[0].max(0.0) + 1e-12);
    }

    #[test]
    fn domain_error_propagates() {
        assert!(matches!(
            fd_gradient("rump", &[1.0, 0.0], FdScheme::default()),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn probe_verdicts() {
        let v = |k, d| separability_probe(k, d, 64, 3, 1e-9).unwrap().verdict;
        assert_eq!(v("sphere", 4), Verdict::AdditivelySeparable);
        assert_eq!(v("rosenbrock", 2), Verdict::NonSeparable);
        assert_eq!(v("matyas", 2), Verdict::NonSeparable);
    }

    #[test]
    fn probe_arguments() {
        assert!(separability_probe("sphere", 2, 8, 0, 1e-9).is_err());
        assert!(separability_probe("sphere", 1, 64, 0, 1e-9).is_err());
        assert!(separability_probe("beale", 3, 64, 0, 1e-9).is_err());
    }
}
