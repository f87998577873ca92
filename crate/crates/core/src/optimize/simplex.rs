use alloc::vec;
use alloc::vec::Vec;

use super::{settle, Budget, Halt, Objective, RunResult};
use crate::error::{Error, Result};
use crate::registry::{self, Key};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NelderMeadParams {
    /// Reflection.
    pub alpha: f64,
    /// Expansion.
    pub gamma: f64,
    /// Contraction.
    pub rho: f64,
    /// Shrink.
    pub sigma: f64,
    /// Initial edge length as a fraction of each box width.
    pub step: f64,
    /// Seeds the noise of stochastic functions.
    pub seed: u64,
}

impl Default for NelderMeadParams {
    fn default() -> Self {
        Self {
            alpha: 1.0,
            gamma: 2.0,
            rho: 0.5,
            sigma: 0.5,
            step: 0.05,
            seed: 0,
        }
    }
}

/// Simplex diameter below which iteration stops.
const MIN_DIAMETER: f64 = 1e-12;

fn clamp(p: &mut [f64], boxes: &[(f64, f64)]) {
    for (v, &(lo, hi)) in p.iter_mut().zip(boxes) {
        *v = v.clamp(lo, hi);
    }
}

/// `a + t (b - a)`, clamped to the box.
fn along(a: &[f64], b: &[f64], t: f64, boxes: &[(f64, f64)]) -> Vec<f64> {
    let mut p: Vec<f64> = a.iter().zip(b).map(|(a, b)| a + t * (b - a)).collect();
    clamp(&mut p, boxes);
    p
}

/// Box-clamped Nelder-Mead. Returns the best vertex after `max_iter`
/// iterations or once the simplex collapses.
pub(crate) fn simplex<E>(
    f: &mut dyn FnMut(&[f64]) -> core::result::Result<f64, E>,
    start: &[f64],
    steps: &[f64],
    boxes: &[(f64, f64)],
    c: &NelderMeadParams,
    max_iter: usize,
) -> core::result::Result<(Vec<f64>, f64), E> {
    let n = start.len();
    let mut pts = vec![start.to_vec()];
    for i in 0..n {
        let mut p = start.to_vec();
        p[i] = if start[i] + steps[i] <= boxes[i].1 {
            start[i] + steps[i]
        } else {
            start[i] - steps[i]
        };
        clamp(&mut p, boxes);
        pts.push(p);
    }
    let mut fs = Vec::with_capacity(n + 1);
    for p in &pts {
        fs.push(f(p)?);
    }

    for _ in 0..max_iter {
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&a, &b| fs[a].total_cmp(&fs[b]));
        pts = order
            .iter()
            .map(|&i| core::mem::take(&mut pts[i]))
            .collect();
        fs = order.iter().map(|&i| fs[i]).collect();

        let diameter = pts[1..]
            .iter()
            .flat_map(|p| p.iter().zip(&pts[0]).map(|(a, b)| (a - b).abs()))
            .fold(0.0, f64::max);
        if diameter < MIN_DIAMETER {
            break;
        }

        let mut centroid = vec![0.0; n];
        for p in &pts[..n] {
            for (s, v) in centroid.iter_mut().zip(p) {
                *s += v / n as f64;
            }
        }
        let worst = pts[n].clone();
        let xr = along(&centroid, &worst, -c.alpha, boxes);
        let fr = f(&xr)?;
        if fr < fs[0] {
            let xe = along(&centroid, &xr, c.gamma, boxes);
            let fe = f(&xe)?;
            if fe < fr {
                (pts[n], fs[n]) = (xe, fe);
            } else {
                (pts[n], fs[n]) = (xr, fr);
            }
        } else if fr < fs[n - 1] {
            (pts[n], fs[n]) = (xr, fr);
        } else {
            let outside = fr < fs[n];
            let xc = along(&centroid, if outside { &xr } else { &worst }, c.rho, boxes);
            let fc = f(&xc)?;
            if (outside && fc <= fr) || (!outside && fc < fs[n]) {
                (pts[n], fs[n]) = (xc, fc);
            } else {
                for i in 1..=n {
                    pts[i] = along(&pts[0], &pts[i], c.sigma, boxes);
                    fs[i] = f(&pts[i])?;
                }
            }
        }
    }

    let best = (0..=n)
        .min_by(|&a, &b| fs[a].total_cmp(&fs[b]))
        .unwrap_or(0);
    Ok((core::mem::take(&mut pts[best]), fs[best]))
}

/// Nelder-Mead from `start` until the budget runs out or the simplex collapses.
pub fn nelder_mead<'a>(
    key: impl Into<Key<'a>>,
    start: &[f64],
    budget: Budget,
    params: &NelderMeadParams,
) -> Result<RunResult> {
    let spec = registry::lookup(key)?;
    spec.check_dimension(start.len())?;
    if !spec.bounds.contains(start) {
        return Err(Error::InvalidArgument(
            "start point lies outside the box".into(),
        ));
    }
    if !(params.step > 0.0) {
        return Err(Error::InvalidArgument(
            "simplex step must be positive".into(),
        ));
    }
    let n = start.len();
    let boxes = spec.bounds.intervals(n);
    let steps: Vec<f64> = boxes
        .iter()
        .map(|(lo, hi)| params.step * (hi - lo))
        .collect();
    let mut obj = Objective::new(spec, budget, params.seed);
    let run = simplex(
        &mut |x| obj.eval(x),
        start,
        &steps,
        &boxes,
        params,
        usize::MAX,
    )
    .map(|_| ());
    let halt = match settle(run) {
        Some(Halt::Budget) | None => None,
        h => h,
    };
    Ok(obj.finish("nelder-mead", n, params.seed, halt))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beale_from_two_two() {
        let r = nelder_mead(
            "beale",
            &[2.0, 2.0],
            Budget::new(2000).unwrap(),
            &NelderMeadParams::default(),
        )
        .unwrap();
        assert!(r.best_value <= 1e-6, "{}", r.best_value);
        assert!(r.evaluations_used <= 2000);
    }

    #[test]
    fn rosenbrock_classic_start() {
        let r = nelder_mead(
            "rosenbrock",
            &[-1.2, 1.0],
            Budget::new(5000).unwrap(),
            &NelderMeadParams::default(),
        )
        .unwrap();
        assert!(r.best_value <= 1e-6, "{}", r.best_value);
    }

    #[test]
    fn start_outside_box() {
        assert!(nelder_mead(
            "beale",
            &[9.0, 0.0],
            Budget::new(10).unwrap(),
            &NelderMeadParams::default()
        )
        .is_err());
    }

    #[test]
    fn domain_error_aborts() {
        // Rump is singular on x2 = 0; the first expansion lands there.
        let p = NelderMeadParams {
            step: 0.0,
            ..NelderMeadParams::default()
        };
        assert!(nelder_mead("rump", &[1.0, 1.0], Budget::new(10).unwrap(), &p).is_err());
        let r = nelder_mead(
            "rump",
            &[1.0, 0.0],
            Budget::new(10).unwrap(),
            &NelderMeadParams::default(),
        )
        .unwrap();
        assert!(r.aborted.is_some());
        assert_eq!(r.evaluations_used, 1);
    }
}
