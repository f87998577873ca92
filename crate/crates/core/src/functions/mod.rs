//! Formula evaluators.
//!
//! Every catalog entry points at one [`Formula`]. Most are plain maps from
//! coordinates to a value; a few need a domain check, tunable constants or a
//! stream of uniform draws.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::registry::{self, FunctionSpec, Key};
use crate::rng;

pub mod a_to_g;
pub mod h_to_r;
pub mod s_to_z;
pub mod tables;

#[inline]
pub(crate) fn sq(v: f64) -> f64 {
    v * v
}

/// Sum in iteration order, starting from `0.0`.
#[inline]
pub(crate) fn sum<I: IntoIterator<Item = f64>>(it: I) -> f64 {
    it.into_iter().fold(0.0, |acc, v| acc + v)
}

/// Constants the printed formulas leave open.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    /// Exponent of the Schwefel sum.
    pub schwefel_alpha: f64,
    /// Frequency of the Wavy function.
    pub wavy_k: f64,
    /// Xin-She Yang 3 exponent `m` and scale `beta`.
    pub xsy3_m: f64,
    pub xsy3_beta: f64,
    pub weierstrass_a: f64,
    pub weierstrass_b: f64,
    pub weierstrass_kmax: u32,
}

impl Default for Params {
    fn default() -> Self {
        Self {
            schwefel_alpha: 0.5,
            wavy_k: 10.0,
            xsy3_m: 5.0,
            xsy3_beta: 15.0,
            weierstrass_a: 0.5,
            weierstrass_b: 3.0,
            weierstrass_kmax: 20,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum NoisePolicy {
    /// Draw uniforms from the seeded stream.
    Sample,
    /// Replace every random term by its neutral value.
    #[default]
    Suppress,
}

/// Everything an evaluation may depend on besides the point.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EvalContext {
    pub seed: u64,
    pub noise: NoisePolicy,
    pub params: Params,
}

impl EvalContext {
    pub fn suppressed() -> Self {
        Self::default()
    }

    pub fn sampled(seed: u64) -> Self {
        Self {
            seed,
            noise: NoisePolicy::Sample,
            ..Self::default()
        }
    }
}

/// How a catalog entry computes its value.
#[derive(Clone, Copy)]
pub enum Formula {
    Plain(fn(&[f64]) -> f64),
    /// Fails on points where the formula is singular.
    Checked(fn(&[f64]) -> core::result::Result<f64, &'static str>),
    Param(fn(&[f64], &Params) -> f64),
    /// Pulls one uniform per coordinate; `None` means use the neutral value.
    Noisy(fn(&[f64], &mut dyn FnMut() -> Option<f64>) -> f64),
}

impl core::fmt::Debug for Formula {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Formula::Plain(_) => "Plain",
            Formula::Checked(_) => "Checked",
            Formula::Param(_) => "Param",
            Formula::Noisy(_) => "Noisy",
        })
    }
}

impl Formula {
    pub fn is_noisy(&self) -> bool {
        matches!(self, Formula::Noisy(_))
    }
}

/// Evaluates `spec` at `x` without the dimension check.
pub(crate) fn eval_raw(spec: &FunctionSpec, x: &[f64], ctx: &EvalContext) -> Result<f64> {
    let name = spec.id.slug;
    let v = match spec.formula {
        Formula::Plain(f) => f(x),
        Formula::Checked(f) => f(x).map_err(|reason| Error::Domain {
            function: name,
            reason,
        })?,
        Formula::Param(f) => f(x, &ctx.params),
        Formula::Noisy(f) => match ctx.noise {
            NoisePolicy::Suppress => f(x, &mut || None),
            NoisePolicy::Sample => {
                let mut s = rng::stream(ctx.seed);
                f(x, &mut || Some(rng::uniform(&mut s)))
            }
        },
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain {
            function: name,
            reason: "non-finite result",
        })
    }
}

/// Evaluates `spec` after checking the dimension of `x`.
pub fn evaluate_spec(spec: &FunctionSpec, x: &[f64], ctx: &EvalContext) -> Result<f64> {
    spec.check_dimension(x.len())?;
    eval_raw(spec, x, ctx)
}

/// Evaluates the function named by `key` at `x`.
pub fn evaluate<'a>(key: impl Into<Key<'a>>, x: &[f64], ctx: &EvalContext) -> Result<f64> {
    evaluate_spec(registry::lookup(key)?, x, ctx)
}

/// Evaluates every point; noisy functions restart their stream per point
/// from `sub_seed(ctx.seed, index)`.
pub fn evaluate_batch<'a, P: AsRef<[f64]>>(
    key: impl Into<Key<'a>>,
    xs: &[P],
    ctx: &EvalContext,
) -> Result<Vec<Result<f64>>> {
    let spec = registry::lookup(key)?;
    Ok(xs
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let c = EvalContext {
                seed: rng::sub_seed(ctx.seed, i as u64),
                ..*ctx
            };
            evaluate_spec(spec, x.as_ref(), &c)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ev(key: &str, x: &[f64]) -> f64 {
        evaluate(key, x, &EvalContext::suppressed()).unwrap()
    }

    #[test]
    fn sphere_origin() {
        assert_eq!(ev("sphere", &[0.0, 0.0]), 0.0);
    }

    #[test]
    fn goldstein_price_value() {
        assert_eq!(ev("goldstein-price", &[0.0, -1.0]), 3.0);
    }

    #[test]
    fn ackley_origin_four_dims() {
        assert!(ev("ackley-1", &[0.0; 4]).abs() < 1e-15);
    }

    #[test]
    fn matyas_hand_value() {
        assert!((ev("matyas", &[1.0, 1.0]) - 0.04).abs() < 1e-15);
    }

    #[test]
    fn step_2_rounds() {
        assert_eq!(ev("step-2", &[0.4, -0.4]), 0.0);
        assert_eq!(ev("step-2", &[0.6, 0.0]), 1.0);
    }

    #[test]
    fn noisy_is_seeded() {
        let x = [0.3, -0.2, 0.1];
        let a = evaluate(169, &x, &EvalContext::sampled(7)).unwrap();
        let b = evaluate(169, &x, &EvalContext::sampled(7)).unwrap();
        let c = evaluate(169, &x, &EvalContext::sampled(8)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn wrong_dimension_rejected() {
        let e = evaluate("beale", &[1.0, 2.0, 3.0], &EvalContext::suppressed()).unwrap_err();
        assert!(matches!(e, Error::DimensionMismatch { got: 3, .. }));
    }

    #[test]
    fn domain_errors() {
        let c = EvalContext::suppressed();
        assert!(matches!(
            evaluate("rump", &[1.0, 0.0], &c),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            evaluate("paviani", &[1.0; 10], &c),
            Err(Error::Domain { .. })
        ));
        assert_eq!(evaluate("csendes", &[0.0, 0.0], &c).unwrap(), 0.0);
    }

    #[test]
    fn batch_matches_single() {
        let pts = vec![
            vec![-4.5, -4.5],
            vec![-4.5, 4.5],
            vec![4.5, -4.5],
            vec![4.5, 4.5],
        ];
        let c = EvalContext::suppressed();
        let got = evaluate_batch("beale", &pts, &c).unwrap();
        for (p, g) in pts.iter().zip(got) {
            assert_eq!(g.unwrap(), evaluate("beale", p, &c).unwrap());
        }
        assert!(evaluate_batch("beale", &Vec::<Vec<f64>>::new(), &c)
            .unwrap()
            .is_empty());
    }
}
