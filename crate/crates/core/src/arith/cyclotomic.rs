//! Cyclotomic polynomials and exact vanishing tests for sums of roots of unity.
//!
//! `Φ_n` is obtained by exact division of `x^n - 1` by every `Φ_d` with
//! `d | n`, `d < n`. Results up to a bound are memoized in a
//! [`CyclotomicCache`]; a process-wide cache with the default bound backs the
//! free functions.

use alloc::borrow::Cow;
use alloc::boxed::Box;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use super::numtheory::divisors;
use super::poly::IntegerPolynomial;
use crate::error::{Error, Result};

/// Memo table for `Φ_1 ..= Φ_bound`.
///
/// Slots fill lazily and race-free: concurrent callers may compute the same
/// polynomial, but exactly one value is stored and every caller observes it.
pub struct CyclotomicCache {
    slots: Box<[OnceBox<IntegerPolynomial>]>,
}

impl CyclotomicCache {
    pub const DEFAULT_BOUND: usize = 10_000;

    pub fn new(bound: usize) -> Self {
        Self {
            slots: (0..bound).map(|_| OnceBox::new()).collect(),
        }
    }

    /// The shared cache used by [`cyclotomic`] and friends.
    pub fn global() -> &'static Self {
        static GLOBAL: OnceBox<CyclotomicCache> = OnceBox::new();
        GLOBAL.get_or_init(|| Box::new(CyclotomicCache::new(Self::DEFAULT_BOUND)))
    }

    pub fn bound(&self) -> usize {
        self.slots.len()
    }

    pub fn get(&self, n: usize) -> Result<Cow<'_, IntegerPolynomial>> {
        if n == 0 {
            return Err(Error::ZeroCyclotomicIndex);
        }
        match self.slots.get(n - 1) {
            Some(slot) => Ok(Cow::Borrowed(
                slot.get_or_init(|| Box::new(self.compute(n))),
            )),
            None => Ok(Cow::Owned(self.compute(n))),
        }
    }

    fn compute(&self, n: usize) -> IntegerPolynomial {
        let mut acc = IntegerPolynomial::x_pow_minus_one(n);
        for d in divisors(n as u64) {
            let d = d as usize;
            if d == n {
                break;
            }
            let phi = self.get(d).expect("divisors are positive");
            let (q, r) = acc.div_rem_monic(&phi);
            debug_assert!(r.is_zero(), "Φ_{d} must divide x^{n} - 1");
            acc = q;
        }
        acc
    }
}

/// The `n`-th cyclotomic polynomial.
pub fn cyclotomic(n: usize) -> Result<IntegerPolynomial> {
    CyclotomicCache::global().get(n).map(Cow::into_owned)
}

/// Whether `Φ_m` divides `p`, i.e. whether `p` vanishes at a (hence every)
/// primitive `m`-th root of unity.
///
/// Exponents are first folded modulo `m`, which preserves the remainder since
/// `Φ_m | x^m - 1`.
pub fn vanishes_at_primitive_root(p: &IntegerPolynomial, m: usize) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let phi = CyclotomicCache::global().get(m)?;
    let folded = p.reduce_exponents(m);
    if folded.is_zero() {
        return Ok(true);
    }
    Ok(folded.div_rem_monic(&phi).1.is_zero())
}

/// Orders `m` (restricted to divisors of `modulus`) at which the polynomial
/// vanishes.
pub(crate) fn vanishing_orders(p: &IntegerPolynomial, modulus: u64) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for m in divisors(modulus) {
        if vanishes_at_primitive_root(p, m as usize)? {
            out.push(m);
        }
    }
    Ok(out)
}
