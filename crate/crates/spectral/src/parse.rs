//! Parsers for list-valued command-line flags.
//!
//! Every parser is strict: a malformed value is reported before any
//! computation starts.

use std::collections::BTreeSet;
use std::str::FromStr;

// Aliases keep clap from treating list-valued flags as repeatable.
pub type IntList = Vec<i64>;
pub type FloatList = Vec<f64>;
pub type Cycle = Vec<(i64, i64)>;

/// Evenly spaced sample points `lo + i (hi - lo) / count` for `i < count`,
/// so `hi` itself is excluded.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

impl Grid {
    pub fn points(&self) -> Vec<f64> {
        let step = (self.hi - self.lo) / self.count as f64;
        (0..self.count).map(|i| self.lo + i as f64 * step).collect()
    }
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            lo: 0.0,
            hi: 1.0,
            count: 101,
        }
    }
}

fn entries(raw: &str) -> Result<Vec<&str>, String> {
    let trimmed = raw.trim();
    let inner = trimmed
        .strip_prefix('[')
        .and_then(|rest| rest.strip_suffix(']'))
        .unwrap_or(trimmed);
    if inner.trim().is_empty() {
        return Err("expected a comma-separated list, got nothing".into());
    }
    Ok(inner.split(',').map(str::trim).collect())
}

fn parse_entry<T: FromStr>(entry: &str) -> Result<T, String> {
    entry.parse().map_err(|_| format!("cannot parse {entry:?}"))
}

/// Comma-separated integers, optionally bracketed. Duplicates are rejected.
pub fn int_list(raw: &str) -> Result<Vec<i64>, String> {
    let values = entries(raw)?
        .into_iter()
        .map(parse_entry::<i64>)
        .collect::<Result<Vec<_>, _>>()?;
    let mut seen = BTreeSet::new();
    for &v in &values {
        if !seen.insert(v) {
            return Err(format!("duplicate entry {v}"));
        }
    }
    Ok(values)
}

/// Comma-separated finite reals.
pub fn float_list(raw: &str) -> Result<Vec<f64>, String> {
    entries(raw)?
        .into_iter()
        .map(|e| {
            let v: f64 = parse_entry(e)?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(format!("{e:?} is not a finite number"))
            }
        })
        .collect()
}

/// `lo,hi,count` with `lo < hi` and `count ≥ 1`.
pub fn grid(raw: &str) -> Result<Grid, String> {
    let parts = entries(raw)?;
    let [lo, hi, count] = parts.as_slice() else {
        return Err(format!("grid needs lo,hi,count; got {raw:?}"));
    };
    let lo: f64 = parse_entry(lo)?;
    let hi: f64 = parse_entry(hi)?;
    let count: usize = parse_entry(count)?;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(format!(
            "grid bounds must be finite with lo < hi; got {lo}, {hi}"
        ));
    }
    if count == 0 {
        return Err("grid needs at least one point".into());
    }
    Ok(Grid { lo, hi, count })
}

/// A witness cycle as a JSON array of `[eta, digit]` pairs.
pub fn cycle(raw: &str) -> Result<Vec<(i64, i64)>, String> {
    let pairs: Vec<[i64; 2]> =
        serde_json::from_str(raw).map_err(|e| format!("cycle must look like [[2,6]]: {e}"))?;
    Ok(pairs.into_iter().map(|[eta, digit]| (eta, digit)).collect())
}
