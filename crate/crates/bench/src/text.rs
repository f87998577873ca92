//! Number and point text formats.
//!
//! Numbers print as the shortest decimal that round-trips an `f64`, with
//! `nan`, `inf` and `-inf` for the non-finite values.

use anyhow::{anyhow, bail, Context, Result};

pub fn num(v: f64) -> String {
    if v.is_nan() {
        "nan".to_owned()
    } else if v.is_infinite() {
        if v > 0.0 { "inf" } else { "-inf" }.to_owned()
    } else {
        format!("{v}")
    }
}

pub fn point(x: &[f64]) -> String {
    x.iter().map(|&v| num(v)).collect::<Vec<_>>().join(",")
}

/// `Some(v)` for finite `v`; JSON carries the rest as `null`.
pub fn finite(v: f64) -> Option<f64> {
    v.is_finite().then_some(v)
}

fn parse_num(s: &str) -> Result<f64> {
    let t = s.trim();
    let v: f64 = t
        .parse()
        .with_context(|| format!("`{t}` is not a number"))?;
    if !v.is_finite() {
        bail!("`{t}` is not finite");
    }
    Ok(v)
}

/// Comma-separated coordinates, e.g. `1.5,-2,0`.
pub fn parse_point(s: &str) -> Result<Vec<f64>> {
    if s.trim().is_empty() {
        bail!("empty point");
    }
    s.split(',').map(parse_num).collect()
}

/// `a:b` with `a < b`.
pub fn parse_range(s: &str) -> Result<(f64, f64)> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| anyhow!("expected `min:max`, got `{s}`"))?;
    let (a, b) = (parse_num(a)?, parse_num(b)?);
    if a >= b {
        bail!("range `{s}` is empty");
    }
    Ok((a, b))
}
