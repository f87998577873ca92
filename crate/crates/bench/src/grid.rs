//! Landscape grids over two coordinates.

use std::io::Write;

use anyhow::{bail, Result};
use gobench_core::registry::{self, Key};
use gobench_core::{functions, EvalContext};

#[derive(Debug, Clone, PartialEq)]
pub struct GridRequest {
    pub function: String,
    /// Defaults to the function's bounds.
    pub x1: Option<(f64, f64)>,
    pub x2: Option<(f64, f64)>,
    pub resolution: usize,
}

/// Node `i` of `resolution` evenly spaced nodes on `[a, b]`, endpoints exact.
fn node(a: f64, b: f64, i: usize, resolution: usize) -> f64 {
    if i + 1 == resolution {
        b
    } else {
        a + (b - a) * i as f64 / (resolution - 1) as f64
    }
}

/// Writes `x1,x2,f` rows, `x1` in the outer loop. Failed evaluations print `nan`.
pub fn export(req: &GridRequest, w: impl Write) -> Result<()> {
    let spec = registry::lookup(Key::Name(&req.function))?;
    if !spec.dimension.accepts(2) {
        bail!(
            "{} is not defined in two dimensions ({})",
            spec.slug(),
            spec.dimension
        );
    }
    if req.resolution < 2 {
        bail!("resolution must be at least 2");
    }
    let (a1, b1) = req.x1.unwrap_or(spec.bounds.get(0));
    let (a2, b2) = req.x2.unwrap_or(spec.bounds.get(1));
    let ctx = EvalContext::suppressed();
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["x1", "x2", "f"])?;
    for i in 0..req.resolution {
        let u = node(a1, b1, i, req.resolution);
        for j in 0..req.resolution {
            let v = node(a2, b2, j, req.resolution);
            let f = functions::evaluate_spec(spec, &[u, v], &ctx).unwrap_or(f64::NAN);
            out.write_record([
                crate::text::num(u),
                crate::text::num(v),
                crate::text::num(f),
            ])?;
        }
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(f: &str, r: usize, x: Option<(f64, f64)>) -> Result<String> {
        let mut buf = Vec::new();
        export(
            &GridRequest {
                function: f.into(),
                x1: x,
                x2: x,
                resolution: r,
            },
            &mut buf,
        )?;
        Ok(String::from_utf8(buf).unwrap())
    }

    #[test]
    fn sphere_three_by_three() {
        let g = grid("sphere", 3, Some((-1.0, 1.0))).unwrap();
        let f: Vec<&str> = g
            .lines()
            .skip(1)
            .map(|l| l.rsplit(',').next().unwrap())
            .collect();
        assert_eq!(f, ["2", "1", "2", "1", "0", "1", "2", "1", "2"]);
    }

    #[test]
    fn fixed_three_rejected() {
        assert!(grid("hartman-3", 3, None).is_err());
        assert!(grid("sphere", 1, None).is_err());
    }

    #[test]
    fn endpoints_exact() {
        assert_eq!(node(-5.0, 10.0, 32, 33), 10.0);
        assert_eq!(node(-5.0, 10.0, 0, 33), -5.0);
    }
}
