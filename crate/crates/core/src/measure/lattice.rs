use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::arith::rational::{Rational, RationalInterval};
use crate::error::{Error, Result};
use crate::system::SpectrumCandidate;

/// Default cap on `|S|^depth` for slices of `Λ(N, S)`.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Rational interval enclosing the attractor `T(N, S) = {Σ_{j≥1} a_j N^{-j}}`.
///
/// With `a = min S`, `b = max S`: `[a/(N-1), b/(N-1)]` for `N > 0`, and
/// `[(a+Nb)/(N²-1), (b+Na)/(N²-1)]` for `N < 0`. The interval is invariant
/// under every map `x ↦ (x + s)/N`, `s ∈ [a, b]`.
pub fn attractor_bounds(scale: i64, elements: &[i64]) -> Result<RationalInterval> {
    if scale.unsigned_abs() < 2 {
        return Err(Error::InvalidScale(scale));
    }
    let (Some(&a), Some(&b)) = (elements.iter().min(), elements.iter().max()) else {
        return Err(Error::EmptyCandidate);
    };
    let (n, a, b) = (BigInt::from(scale), BigInt::from(a), BigInt::from(b));
    let one = BigInt::from(1);
    let (lo, hi) = if scale > 0 {
        let den = &n - &one;
        (Rational::new(a, den.clone()), Rational::new(b, den))
    } else {
        let den = &n * &n - &one;
        (
            Rational::new(&a + &n * &b, den.clone()),
            Rational::new(&b + &n * &a, den),
        )
    };
    Ok(RationalInterval::new(lo, hi))
}

/// The depth slice `{Σ_{j<depth} a_j N^j : a_j ∈ S}` of `Λ(N, S)`, sorted.
///
/// Slices use exactly `depth` digit positions, so when `0 ∈ S` they are
/// nested and exhaust `Λ(N, S)`.
pub fn lambda_enumerate(
    scale: i64,
    candidate: &SpectrumCandidate,
    depth: usize,
) -> Result<Vec<i64>> {
    lambda_enumerate_within(scale, candidate, depth, DEFAULT_BUDGET)
}

/// [`lambda_enumerate`] with an explicit budget on `|S|^depth`.
pub fn lambda_enumerate_within(
    scale: i64,
    candidate: &SpectrumCandidate,
    depth: usize,
    budget: usize,
) -> Result<Vec<i64>> {
    if depth == 0 {
        return Err(Error::InvalidPolicy("depth must be at least 1"));
    }
    let requested = (candidate.len() as u128)
        .checked_pow(u32::try_from(depth).unwrap_or(u32::MAX))
        .unwrap_or(u128::MAX);
    if requested > budget as u128 {
        return Err(Error::BudgetExceeded { requested, budget });
    }
    let mut slice: Vec<i64> = candidate.elements().to_vec();
    for _ in 1..depth {
        let mut next = Vec::with_capacity(slice.len() * candidate.len());
        for &lambda in &slice {
            let shifted = lambda.checked_mul(scale).ok_or(Error::Overflow)?;
            for &s in candidate.elements() {
                next.push(shifted.checked_add(s).ok_or(Error::Overflow)?);
            }
        }
        next.sort_unstable();
        next.dedup();
        slice = next;
    }
    Ok(slice)
}
