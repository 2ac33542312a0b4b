//! Compatible pairs `(D/N, S)`: exact decision, certificates, the search for
//! reduced candidates and the closure operations (residue reduction, powers).
//!
//! `(D/N, S)` is compatible iff `m_{D/N}(s₁ - s₂) = 0` for all distinct
//! `s₁, s₂ ∈ S` (with `|S| = |D|`); each zero is decided by cyclotomic
//! divisibility, never by a floating-point test.

use alloc::vec::Vec;

use crate::arith::numtheory::residue;
use crate::arith::{
    mask_zero_residues, vanishes_at_primitive_root, IntegerPolynomial, ZeroResidues,
};
use crate::error::{Error, Result};
use crate::measure::{lambda_enumerate_within, DEFAULT_BUDGET};
use crate::system::{ScaleDigitSystem, SpectrumCandidate};

/// One vanishing symbol value `m_{D/N}(first - second) = 0`, witnessed by the
/// order of the root of unity `e(-(first - second)/N)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZeroDifference {
    pub first: i64,
    pub second: i64,
    pub order: u64,
}

/// Proof that `(D/N, S)` is a compatible pair: one [`ZeroDifference`] per
/// unordered pair of distinct elements of `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibilityCertificate {
    pub system: ScaleDigitSystem,
    pub candidate: SpectrumCandidate,
    pub zero_differences: Vec<ZeroDifference>,
}

impl CompatibilityCertificate {
    /// Re-check the certificate from scratch: pair coverage, that each order
    /// is the true order and divides `|N|`, and that `Φ_order` divides the
    /// (unfolded) digit polynomial.
    pub fn verify(&self) -> bool {
        let n = self.system.modulus();
        let s = self.candidate.elements();
        if s.len() != self.system.len() {
            return false;
        }
        let expected = s.len() * (s.len() - 1) / 2;
        if self.zero_differences.len() != expected {
            return false;
        }
        let mut seen = Vec::with_capacity(expected);
        let poly = IntegerPolynomial::from_digits(self.system.digits());
        for z in &self.zero_differences {
            if !(self.candidate.contains(z.first) && self.candidate.contains(z.second))
                || z.first == z.second
            {
                return false;
            }
            let Some(diff) = z.first.checked_sub(z.second) else {
                return false;
            };
            let r = residue(diff, n);
            if r == 0
                || z.order == 0
                || !n.is_multiple_of(z.order)
                || n / num_integer::gcd(r, n) != z.order
            {
                return false;
            }
            if !vanishes_at_primitive_root(&poly, z.order as usize).unwrap_or(false) {
                return false;
            }
            seen.push((z.first.min(z.second), z.first.max(z.second)));
        }
        seen.sort_unstable();
        seen.dedup();
        seen.len() == expected
    }
}

/// Decide whether `(D/N, S)` is a compatible pair, returning a certificate
/// when it is.
pub fn is_compatible(
    system: &ScaleDigitSystem,
    candidate: &SpectrumCandidate,
) -> Result<Option<CompatibilityCertificate>> {
    check_cardinality(system, candidate)?;
    let zeros = mask_zero_residues(system)?;
    Ok(certify(system, candidate, &zeros))
}

fn certify(
    system: &ScaleDigitSystem,
    candidate: &SpectrumCandidate,
    zeros: &ZeroResidues,
) -> Option<CompatibilityCertificate> {
    let s = candidate.elements();
    let mut zero_differences = Vec::with_capacity(s.len() * s.len().saturating_sub(1) / 2);
    for (i, &first) in s.iter().enumerate() {
        for &second in &s[i + 1..] {
            let diff = second.checked_sub(first)?;
            if !zeros.vanishes_at(diff) {
                return None;
            }
            zero_differences.push(ZeroDifference {
                first: second,
                second: first,
                order: zeros.order_of(diff),
            });
        }
    }
    Some(CompatibilityCertificate {
        system: system.clone(),
        candidate: candidate.clone(),
        zero_differences,
    })
}

fn check_cardinality(system: &ScaleDigitSystem, candidate: &SpectrumCandidate) -> Result<()> {
    if system.len() != candidate.len() {
        return Err(Error::CardinalityMismatch {
            digits: system.len(),
            candidate: candidate.len(),
        });
    }
    Ok(())
}

/// Every `S ⊆ [2-|N|, |N|-2]` with `0 ∈ S`, `|S| = |D|` and `(D/N, S)`
/// compatible, in lexicographic order of the sorted elements.
///
/// These are the cliques through 0 in the graph on the window whose edges
/// join integers with a vanishing symbol at their difference.
pub fn search_candidate_s(system: &ScaleDigitSystem) -> Result<Vec<SpectrumCandidate>> {
    let n = system.modulus();
    if n < 3 {
        return Err(Error::DegenerateWindow);
    }
    let zeros = mask_zero_residues(system)?;
    let reach = n as i64 - 2;
    let size = system.len();
    // Residues of a clique are pairwise distinct, so |D| > |N| has no answer.
    if size as u64 > n {
        return Ok(Vec::new());
    }
    let neighbours: Vec<i64> = (-reach..=reach)
        .filter(|&v| v != 0 && zeros.vanishes_at(v))
        .collect();
    let adjacency: Vec<Vec<bool>> = neighbours
        .iter()
        .map(|&u| {
            neighbours
                .iter()
                .map(|&v| u != v && zeros.vanishes_at(u - v))
                .collect()
        })
        .collect();
    let need = size - 1;
    let alive: Vec<bool> = adjacency
        .iter()
        .map(|row| row.iter().filter(|&&e| e).count() + 1 >= need)
        .collect();

    let mut found = Vec::new();
    let mut current = Vec::with_capacity(need);
    extend_cliques(&adjacency, &alive, need, 0, &mut current, &mut |clique| {
        let mut set: Vec<i64> = clique.iter().map(|&i| neighbours[i]).collect();
        set.push(0);
        set.sort_unstable();
        found.push(SpectrumCandidate::from_sorted_unchecked(set));
    });
    found.sort();
    Ok(found)
}

fn extend_cliques(
    adjacency: &[Vec<bool>],
    alive: &[bool],
    need: usize,
    start: usize,
    current: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if current.len() == need {
        emit(current);
        return;
    }
    let remaining = need - current.len();
    for v in start..adjacency.len() {
        if adjacency.len() - v < remaining {
            break;
        }
        if !alive[v] || !current.iter().all(|&u| adjacency[u][v]) {
            continue;
        }
        current.push(v);
        extend_cliques(adjacency, alive, need, v + 1, current, emit);
        current.pop();
    }
}

/// Move each element of `S` to its representative in `[2-|N|, |N|-2]`:
/// the least nonnegative residue `r` if `r ≤ |N|-2`, else `r - |N|`.
///
/// Requires `0 ∈ S` (translate first with [`SpectrumCandidate::translate`]).
/// Compatibility with any `D` is preserved because the symbol of `D/N` is
/// `N`-periodic at integers.
pub fn reduce_s(scale: i64, candidate: &SpectrumCandidate) -> Result<SpectrumCandidate> {
    let n = scale.unsigned_abs();
    if n < 2 {
        return Err(Error::InvalidScale(scale));
    }
    if n < 3 {
        return Err(Error::DegenerateWindow);
    }
    if !candidate.contains(0) {
        return Err(Error::CandidateMissingZero);
    }
    check_distinct_residues(candidate.elements(), n)?;
    let reduced: Vec<i64> = candidate
        .elements()
        .iter()
        .map(|&s| {
            let r = residue(s, n);
            if r <= n - 2 {
                r as i64
            } else {
                r as i64 - n as i64
            }
        })
        .collect();
    SpectrumCandidate::new(reduced)
}

pub(crate) fn check_distinct_residues(elements: &[i64], modulus: u64) -> Result<()> {
    let mut keyed: Vec<(u64, i64)> = elements.iter().map(|&s| (residue(s, modulus), s)).collect();
    keyed.sort_unstable();
    for w in keyed.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(Error::RepeatedResidue {
                first: w[0].1,
                second: w[1].1,
                modulus,
            });
        }
    }
    Ok(())
}

/// `(D_k, S_k)` at scale `N^k`, where `D_k = D + ND + … + N^{k-1}D` and
/// likewise for `S_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerPair {
    pub system: ScaleDigitSystem,
    pub candidate: SpectrumCandidate,
}

/// The `k`-fold power of a compatible pair; the result is again compatible
/// at scale `N^k`.
pub fn pair_power(
    system: &ScaleDigitSystem,
    candidate: &SpectrumCandidate,
    k: u32,
) -> Result<PowerPair> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    if is_compatible(system, candidate)?.is_none() {
        return Err(Error::NotCompatible);
    }
    let scale = system.scale().checked_pow(k).ok_or(Error::Overflow)?;
    let digits_as_set = SpectrumCandidate::from_sorted_unchecked(system.digits().to_vec());
    let digits =
        lambda_enumerate_within(system.scale(), &digits_as_set, k as usize, DEFAULT_BUDGET)?;
    let elements = lambda_enumerate_within(system.scale(), candidate, k as usize, DEFAULT_BUDGET)?;
    if digits.len() != system.len().pow(k) || elements.len() != candidate.len().pow(k) {
        return Err(Error::Internal(
            "digit expansions of a compatible pair must be unique",
        ));
    }
    Ok(PowerPair {
        system: ScaleDigitSystem::new(scale, digits)?,
        candidate: SpectrumCandidate::from_sorted_unchecked(elements),
    })
}
