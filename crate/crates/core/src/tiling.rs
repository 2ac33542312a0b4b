//! Complementing sets and the construction of a compatible `S` from a digit
//! set that tiles the integers.
//!
//! If `D ⊕ E₀` is a complete residue system modulo some `L | N` whose primes
//! are those of `|D| = p^α q^β`, the prime powers `p^k ≤ L` with
//! `Φ_{p^k} | D(z)` number exactly `α` (likewise `β` for `q`). Writing them as
//! `p^{k_1} < … < p^{k_α}` and `q^{l_1} < … < q^{l_β}`, the set
//!
//! ```text
//! E = { Σ a_j p^{-k_j} + Σ b_j q^{-l_j} : 0 ≤ a_j < p, 0 ≤ b_j < q }
//! ```
//!
//! has `m_D(λ₁ - λ₂) = 0` for distinct elements, so `S = N·E` makes
//! `(D/N, S)` compatible.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::numtheory::{divisors, factorize, radical, residue};
use crate::arith::{vanishes_at_primitive_root, IntegerPolynomial, Rational};
use crate::compat::{is_compatible, CompatibilityCertificate};
use crate::error::{Error, Result};
use crate::system::{ScaleDigitSystem, SpectrumCandidate};

/// A set `E ⊆ [0, modulus)` such that every residue modulo `modulus` is hit
/// exactly once by `d + e`, `d ∈ D`, `e ∈ E`; `None` if there is none.
///
/// Backtracking always covers the smallest uncovered residue next, trying
/// shifts in increasing order.
pub fn is_complementing(digits: &[i64], modulus: u64) -> Result<Option<Vec<i64>>> {
    if modulus == 0 {
        return Err(Error::ZeroModulus);
    }
    if digits.is_empty() {
        return Err(Error::EmptyDigits);
    }
    if !modulus.is_multiple_of(digits.len() as u64) {
        return Ok(None);
    }
    let l = usize::try_from(modulus).map_err(|_| Error::Overflow)?;
    let mut rd: Vec<usize> = digits
        .iter()
        .map(|&d| residue(d, modulus) as usize)
        .collect();
    rd.sort_unstable();
    if rd.windows(2).any(|w| w[0] == w[1]) {
        return Ok(None);
    }
    let mut covered = vec![false; l];
    let mut chosen = Vec::with_capacity(l / rd.len());
    if cover_from(&rd, &mut covered, &mut chosen, 0) {
        chosen.sort_unstable();
        Ok(Some(chosen.into_iter().map(|e| e as i64).collect()))
    } else {
        Ok(None)
    }
}

fn cover_from(rd: &[usize], covered: &mut [bool], chosen: &mut Vec<usize>, from: usize) -> bool {
    let l = covered.len();
    let Some(r) = (from..l).find(|&r| !covered[r]) else {
        return true;
    };
    let mut shifts: Vec<usize> = rd.iter().map(|&d| (r + l - d) % l).collect();
    shifts.sort_unstable();
    shifts.dedup();
    for e in shifts {
        if rd.iter().any(|&d| covered[(d + e) % l]) {
            continue;
        }
        for &d in rd {
            covered[(d + e) % l] = true;
        }
        chosen.push(e);
        if cover_from(rd, covered, chosen, r + 1) {
            return true;
        }
        chosen.pop();
        for &d in rd {
            covered[(d + e) % l] = false;
        }
    }
    false
}

/// Smallest divisor `L` of `|N|` with the same prime factors as `|D|` modulo
/// which `D` is complementing.
pub fn find_modulus_l(system: &ScaleDigitSystem) -> Result<Option<u64>> {
    let target = radical(system.len() as u64);
    for l in divisors(system.modulus()) {
        if radical(l) == target && is_complementing(system.digits(), l)?.is_some() {
            return Ok(Some(l));
        }
    }
    Ok(None)
}

/// Exponents `k ≤ cap` with `Φ_{prime^k}` dividing the digit polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePowers {
    pub prime: u64,
    /// Exponent of `prime` in `L`.
    pub cap: u32,
    /// Increasing exponents `k_1 < k_2 < …`.
    pub exponents: Vec<u32>,
}

impl PrimePowers {
    pub fn powers(&self) -> Vec<u64> {
        self.exponents.iter().map(|&k| self.prime.pow(k)).collect()
    }
}

/// The prime-power sets for `p < q`; `q` is absent when `|D|` is a prime
/// power, and both are absent when `|D| = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PrimePowerSets {
    pub p: Option<PrimePowers>,
    pub q: Option<PrimePowers>,
}

pub fn prime_power_sets(digits: &[i64], l: u64) -> Result<PrimePowerSets> {
    if l == 0 {
        return Err(Error::ZeroModulus);
    }
    if digits.is_empty() {
        return Err(Error::EmptyDigits);
    }
    let card = factorize(digits.len() as u64);
    if card.len() > 2 {
        return Err(Error::TooManyPrimes(digits.len()));
    }
    let lf = factorize(l);
    if lf.len() != card.len() || lf.iter().zip(&card).any(|(a, b)| a.0 != b.0) {
        return Err(Error::ModulusPrimes {
            modulus: l,
            cardinality: digits.len(),
        });
    }
    let poly = IntegerPolynomial::from_digits(digits);
    let mut sets = card.iter().zip(&lf).map(|(&(prime, alpha), &(_, cap))| {
        let mut exponents = Vec::new();
        for k in 1..=cap {
            let order = usize::try_from(prime.pow(k)).map_err(|_| Error::Overflow)?;
            if vanishes_at_primitive_root(&poly, order)? {
                exponents.push(k);
            }
        }
        if exponents.len() != alpha as usize {
            return Err(Error::PrimePowerCount {
                prime,
                found: exponents.len(),
                expected: alpha as usize,
            });
        }
        Ok(PrimePowers {
            prime,
            cap,
            exponents,
        })
    });
    let p = sets.next().transpose()?;
    let q = sets.next().transpose()?;
    Ok(PrimePowerSets { p, q })
}

/// Full record of the construction of `S` from a complementing digit set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilingConstruction {
    pub modulus_l: u64,
    pub complement_e0: Vec<i64>,
    pub prime_power_sets: PrimePowerSets,
    /// `E`, sorted ascending.
    pub fractional_e: Vec<Rational>,
    /// `S = N·E`.
    pub result_s: SpectrumCandidate,
    pub certificate: CompatibilityCertificate,
}

/// Build a compatible `S` for a digit set that is complementing modulo `N`
/// and whose size has at most two distinct prime factors.
pub fn construct_spectrum_set(system: &ScaleDigitSystem) -> Result<TilingConstruction> {
    if is_complementing(system.digits(), system.modulus())?.is_none() {
        return Err(Error::NotComplementing(system.modulus()));
    }
    if factorize(system.len() as u64).len() > 2 {
        return Err(Error::TooManyPrimes(system.len()));
    }
    let modulus_l = find_modulus_l(system)?.ok_or(Error::NoModulus(system.modulus()))?;
    let complement_e0 = is_complementing(system.digits(), modulus_l)?
        .ok_or(Error::Internal("modulus was accepted without a complement"))?;
    let prime_power_sets = prime_power_sets(system.digits(), modulus_l)?;

    let mut fractional_e = vec![Rational::from_integer(BigInt::from(0))];
    for set in [&prime_power_sets.p, &prime_power_sets.q]
        .into_iter()
        .flatten()
    {
        for power in set.powers() {
            let step = Rational::new(BigInt::from(1), BigInt::from(power));
            fractional_e = fractional_e
                .iter()
                .flat_map(|e| {
                    let step = &step;
                    (0..set.prime).map(move |a| e + step * BigInt::from(a))
                })
                .collect();
        }
    }
    fractional_e.sort();

    let n = BigInt::from(system.scale());
    let result_s = fractional_e
        .iter()
        .map(|e| {
            let s = e * &n;
            if !s.is_integer() {
                return Err(Error::Internal("N·E must consist of integers"));
            }
            s.to_integer().to_i64().ok_or(Error::Overflow)
        })
        .collect::<Result<Vec<_>>>()?;
    let result_s = SpectrumCandidate::new(result_s)
        .map_err(|_| Error::Internal("N·E must not repeat elements"))?;
    let certificate = is_compatible(system, &result_s)?.ok_or(Error::Internal(
        "constructed set failed the compatibility check",
    ))?;
    Ok(TilingConstruction {
        modulus_l,
        complement_e0,
        prime_power_sets,
        fractional_e,
        result_s,
        certificate,
    })
}
