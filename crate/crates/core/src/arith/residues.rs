//! Exact zero sets of digit symbols at rational arguments.
//!
//! For integer `k`, `m_{D/N}(k) = |D|⁻¹ Σ e(-dk/N)` depends only on
//! `k mod |N|` and vanishes exactly when `Φ_m` divides the digit polynomial,
//! where `m = |N| / gcd(k, |N|)` is the order of the root of unity involved.
//! The sign of `N` only conjugates the sum.

use alloc::vec::Vec;

use num_traits::{One, ToPrimitive};

use super::cyclotomic::{vanishes_at_primitive_root, vanishing_orders};
use super::numtheory::root_order;
use super::poly::IntegerPolynomial;
use super::rational::Rational;
use crate::error::{Error, Result};
use crate::system::ScaleDigitSystem;

/// Residues `r ∈ {1, …, |N|-1}` at which `m_{D/N}` vanishes on the whole
/// class `r + |N|ℤ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroResidues {
    modulus: u64,
    zero: Vec<bool>,
    orders: Vec<u64>,
}

impl ZeroResidues {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Whether `m_{D/N}` vanishes at the integer `k`.
    pub fn vanishes_at(&self, k: i64) -> bool {
        self.zero[super::numtheory::residue(k, self.modulus) as usize]
    }

    pub fn contains(&self, r: u64) -> bool {
        self.zero.get(r as usize).copied().unwrap_or(false)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.zero
            .iter()
            .enumerate()
            .filter(|(_, &z)| z)
            .map(|(r, _)| r as u64)
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.iter().collect()
    }

    pub fn is_empty(&self) -> bool {
        self.iter().next().is_none()
    }

    /// Divisors `m` of `|N|` with `Φ_m` dividing the digit polynomial.
    pub fn vanishing_orders(&self) -> &[u64] {
        &self.orders
    }

    /// Order of the root of unity `e(-k/N)`.
    pub fn order_of(&self, k: i64) -> u64 {
        root_order(super::numtheory::residue(k, self.modulus), self.modulus)
    }
}

/// All nonzero residues modulo `|N|` where the symbol of `D/N` vanishes,
/// decided by cyclotomic divisibility.
pub fn mask_zero_residues(system: &ScaleDigitSystem) -> Result<ZeroResidues> {
    let modulus = system.modulus();
    if modulus < 2 {
        return Err(Error::InvalidScale(system.scale()));
    }
    let m = usize::try_from(modulus).map_err(|_| Error::Overflow)?;
    let folded = IntegerPolynomial::from_digits(system.digits()).reduce_exponents(m);
    let mut zero = alloc::vec![false; m];
    // Folding can cancel nothing (coefficients are nonnegative counts), so the
    // folded polynomial is nonzero.
    let orders = vanishing_orders(&folded, modulus)?;
    for (r, slot) in zero.iter_mut().enumerate().skip(1) {
        let order = root_order(r as u64, modulus);
        *slot = orders.binary_search(&order).is_ok();
    }
    Ok(ZeroResidues {
        modulus,
        zero,
        orders,
    })
}

/// Exact test of `m_D(x) = 0` for rational `x`: true iff the reduced
/// denominator `q > 1` and `Φ_q` divides the digit polynomial.
pub fn symbol_vanishes_at_rational(digits: &[i64], x: &Rational) -> Result<bool> {
    if digits.is_empty() {
        return Err(Error::EmptyDigits);
    }
    if x.denom().is_one() {
        return Ok(false);
    }
    let q = x.denom().to_usize().ok_or(Error::Overflow)?;
    vanishes_at_primitive_root(&IntegerPolynomial::from_digits(digits), q)
}
