//! Validated inputs: the scale/digit pair, candidate sets and truncation policy.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// The pair `(N, D)` defining the equal-weight self-similar measure with maps
/// `x ↦ (x + d) / N`.
///
/// Digits are stored sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScaleDigitSystem {
    scale: i64,
    digits: Vec<i64>,
}

impl ScaleDigitSystem {
    pub fn new(scale: i64, digits: impl Into<Vec<i64>>) -> Result<Self> {
        if scale.unsigned_abs() < 2 {
            return Err(Error::InvalidScale(scale));
        }
        let digits = sorted_distinct(digits.into(), Error::EmptyDigits, Error::DuplicateDigit)?;
        Ok(Self { scale, digits })
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    /// `|N|`, the modulus for all residue arithmetic.
    pub fn modulus(&self) -> u64 {
        self.scale.unsigned_abs()
    }

    pub fn digits(&self) -> &[i64] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// A finite integer set `S`, candidate digit set for `Λ(N, S)`.
///
/// Elements are stored sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpectrumCandidate {
    elements: Vec<i64>,
}

impl SpectrumCandidate {
    pub fn new(elements: impl Into<Vec<i64>>) -> Result<Self> {
        let elements = sorted_distinct(
            elements.into(),
            Error::EmptyCandidate,
            Error::DuplicateCandidate,
        )?;
        Ok(Self { elements })
    }

    pub(crate) fn from_sorted_unchecked(elements: Vec<i64>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Self { elements }
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, s: i64) -> bool {
        self.elements.binary_search(&s).is_ok()
    }

    /// `S + offset`.
    pub fn translate(&self, offset: i64) -> Result<Self> {
        let elements = self
            .elements
            .iter()
            .map(|&s| s.checked_add(offset).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { elements })
    }

    /// `factor · S` for a nonzero factor.
    pub fn scale_by(&self, factor: i64) -> Result<Self> {
        assert!(factor != 0, "scaling a candidate by zero collapses it");
        let elements = self
            .elements
            .iter()
            .map(|&s| s.checked_mul(factor).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Self::new(elements)
    }
}

/// How far to approximate the infinite objects: the number of digit positions
/// of `Λ` and the tail tolerance for the infinite product defining `μ̂`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy {
    depth: usize,
    product_epsilon: f64,
}

impl TruncationPolicy {
    pub const DEFAULT_DEPTH: usize = 8;
    pub const DEFAULT_EPSILON: f64 = 1e-12;

    pub fn new(depth: usize, product_epsilon: f64) -> Result<Self> {
        if depth == 0 {
            return Err(Error::InvalidPolicy("depth must be at least 1"));
        }
        if !(product_epsilon > 0.0 && product_epsilon < 1.0) {
            return Err(Error::InvalidPolicy("product epsilon must lie in (0, 1)"));
        }
        Ok(Self {
            depth,
            product_epsilon,
        })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn product_epsilon(&self) -> f64 {
        self.product_epsilon
    }

    pub fn with_depth(self, depth: usize) -> Result<Self> {
        Self::new(depth, self.product_epsilon)
    }

    pub fn with_epsilon(self, product_epsilon: f64) -> Result<Self> {
        Self::new(self.depth, product_epsilon)
    }
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self {
            depth: Self::DEFAULT_DEPTH,
            product_epsilon: Self::DEFAULT_EPSILON,
        }
    }
}

fn sorted_distinct(mut v: Vec<i64>, empty: Error, dup: fn(i64) -> Error) -> Result<Vec<i64>> {
    if v.is_empty() {
        return Err(empty);
    }
    v.sort_unstable();
    if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
        return Err(dup(w[0]));
    }
    Ok(v)
}
