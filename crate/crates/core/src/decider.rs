//! Deciding whether `Λ(N, S)` is a spectrum of `μ_{N,D}`.
//!
//! For a compatible pair with `0 ∈ D`, `gcd(D) = 1` and `0 ∈ S`, the pair
//! `(μ_{N,D}, Λ(N, S))` fails to be spectral exactly when some nonzero
//! integers `η_0, …, η_{m-1}` and digits `s_j ∈ S` satisfy
//! `η_{j+1} = (η_j + s_j)/N` cyclically. Any such cycle lies in the attractor
//! of the maps `x ↦ (x + s)/N`, so it suffices to search the finitely many
//! integers of [`attractor_bounds`]. Because the elements of `S` are distinct
//! modulo `N`, each integer has at most one successor and the search is cycle
//! detection in a functional graph.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::numtheory::{gcd_all, residue};
use crate::arith::RationalInterval;
use crate::compat::{
    check_distinct_residues, is_compatible, search_candidate_s, CompatibilityCertificate,
};
use crate::error::{Error, Result};
use crate::measure::attractor_bounds;
use crate::system::{ScaleDigitSystem, SpectrumCandidate};

/// Digits written as `offset + scale_factor · reduced`, with `0 ∈ reduced`
/// and `gcd(reduced) = 1` (the singleton `{0}` has scale factor 1).
///
/// Translating `D` translates the measure and leaves its spectra unchanged;
/// scaling `D` by `a` scales every spectrum by `1/a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub reduced: ScaleDigitSystem,
    pub offset: i64,
    pub scale_factor: u64,
}

pub fn canonicalize_digits(system: &ScaleDigitSystem) -> Result<CanonicalForm> {
    let offset = system.digits()[0];
    let shifted: Vec<i64> = system
        .digits()
        .iter()
        .map(|&d| d.checked_sub(offset).ok_or(Error::Overflow))
        .collect::<Result<_>>()?;
    let scale_factor = gcd_all(&shifted).max(1);
    let reduced = shifted
        .iter()
        .map(|&d| d / scale_factor as i64)
        .collect::<Vec<_>>();
    Ok(CanonicalForm {
        reduced: ScaleDigitSystem::new(system.scale(), reduced)?,
        offset,
        scale_factor,
    })
}

/// One step `η → (η + digit)/N` of a witness cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CycleStep {
    pub eta: i64,
    pub digit: i64,
}

/// Integers examined by [`decide_spectrum`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchedRange {
    pub bounds: RationalInterval,
    /// Inclusive integer range inside `bounds`, if nonempty.
    pub integers: Option<(i64, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectrumVerdict {
    /// No nonzero integer cycle exists; `Λ(N, S)` is a spectrum.
    Spectral { searched: SearchedRange },
    /// `Λ(N, S)` is not a spectrum; the cycle is rotated so that its first
    /// element has the least absolute value (negative first on ties).
    NotSpectral { witness: Vec<CycleStep> },
}

impl SpectrumVerdict {
    pub fn is_spectral(&self) -> bool {
        matches!(self, SpectrumVerdict::Spectral { .. })
    }
}

/// Successor lookup indexed by the residue of `-η` modulo `|N|`.
struct SuccessorMap {
    scale: i64,
    by_residue: Vec<Option<i64>>,
}

impl SuccessorMap {
    fn new(scale: i64, candidate: &SpectrumCandidate) -> Result<Self> {
        let modulus = scale.unsigned_abs();
        check_distinct_residues(candidate.elements(), modulus)?;
        let len = usize::try_from(modulus).map_err(|_| Error::Overflow)?;
        let mut by_residue = vec![None; len];
        for &s in candidate.elements() {
            by_residue[residue(s, modulus) as usize] = Some(s);
        }
        Ok(Self { scale, by_residue })
    }

    fn next(&self, eta: i64) -> Result<Option<(i64, i64)>> {
        let modulus = self.scale.unsigned_abs();
        let want = residue(eta, modulus);
        let slot = if want == 0 { 0 } else { modulus - want };
        let Some(s) = self.by_residue[slot as usize] else {
            return Ok(None);
        };
        let sum = eta.checked_add(s).ok_or(Error::Overflow)?;
        debug_assert_eq!(sum % self.scale, 0);
        Ok(Some((sum / self.scale, s)))
    }
}

/// The unique `s ∈ S` with `N | η + s`, together with `(η + s)/N`.
pub fn successor(
    scale: i64,
    candidate: &SpectrumCandidate,
    eta: i64,
) -> Result<Option<(i64, i64)>> {
    if scale.unsigned_abs() < 2 {
        return Err(Error::InvalidScale(scale));
    }
    SuccessorMap::new(scale, candidate)?.next(eta)
}

fn check_hypotheses(system: &ScaleDigitSystem, candidate: &SpectrumCandidate) -> Result<()> {
    if system.len() != candidate.len() {
        return Err(Error::CardinalityMismatch {
            digits: system.len(),
            candidate: candidate.len(),
        });
    }
    if system.digits().binary_search(&0).is_err() {
        return Err(Error::DigitsMissingZero);
    }
    // The point mass {0} is the one admissible set with gcd 0.
    let g = gcd_all(system.digits());
    if g != 1 && system.len() > 1 {
        return Err(Error::DigitsNotPrimitive(g));
    }
    if !candidate.contains(0) {
        return Err(Error::CandidateMissingZero);
    }
    if is_compatible(system, candidate)?.is_none() {
        return Err(Error::NotCompatible);
    }
    Ok(())
}

/// Decide whether `Λ(N, S)` is a spectrum for `μ_{N,D}`.
///
/// Requires `0 ∈ D`, `gcd(D) = 1`, `0 ∈ S` and `(D/N, S)` compatible; each
/// missing hypothesis is reported as its own error.
pub fn decide_spectrum(
    system: &ScaleDigitSystem,
    candidate: &SpectrumCandidate,
) -> Result<SpectrumVerdict> {
    let bounds = attractor_bounds(system.scale(), candidate.elements())?;
    let integers = bounds.integer_hull();
    decide_spectrum_over(system, candidate, SearchedRange { bounds, integers })
}

/// [`decide_spectrum`] over a caller-chosen integer range instead of the
/// attractor enclosure. Ranges covering the enclosure give the same verdict.
pub fn decide_spectrum_in_range(
    system: &ScaleDigitSystem,
    candidate: &SpectrumCandidate,
    range: (i64, i64),
) -> Result<SpectrumVerdict> {
    let bounds = attractor_bounds(system.scale(), candidate.elements())?;
    let integers = (range.0 <= range.1).then_some(range);
    decide_spectrum_over(system, candidate, SearchedRange { bounds, integers })
}

fn decide_spectrum_over(
    system: &ScaleDigitSystem,
    candidate: &SpectrumCandidate,
    searched: SearchedRange,
) -> Result<SpectrumVerdict> {
    check_hypotheses(system, candidate)?;
    let Some((lo, hi)) = searched.integers else {
        return Ok(SpectrumVerdict::Spectral { searched });
    };
    let map = SuccessorMap::new(system.scale(), candidate)?;
    let width = usize::try_from(hi.abs_diff(lo)).map_err(|_| Error::Overflow)? + 1;
    let index =
        |eta: i64| -> Option<usize> { (lo..=hi).contains(&eta).then(|| eta.abs_diff(lo) as usize) };

    const FRESH: u8 = 0;
    const ON_PATH: u8 = 1;
    const DONE: u8 = 2;
    let mut state = vec![FRESH; width];
    let mut path: Vec<CycleStep> = Vec::new();

    for start in starts_by_magnitude(lo, hi) {
        if state[index(start).expect("start lies in range")] != FRESH {
            continue;
        }
        path.clear();
        let mut cur = start;
        while let Some(i) = index(cur).filter(|_| cur != 0) {
            match state[i] {
                DONE => break,
                ON_PATH => {
                    let at = path
                        .iter()
                        .position(|step| step.eta == cur)
                        .expect("on path");
                    return Ok(SpectrumVerdict::NotSpectral {
                        witness: normalize_cycle(path.split_off(at)),
                    });
                }
                _ => {}
            }
            state[i] = ON_PATH;
            match map.next(cur)? {
                Some((next, digit)) => {
                    path.push(CycleStep { eta: cur, digit });
                    cur = next;
                }
                None => {
                    path.push(CycleStep { eta: cur, digit: 0 });
                    break;
                }
            }
        }
        for step in &path {
            state[index(step.eta).expect("path lies in range")] = DONE;
        }
    }
    Ok(SpectrumVerdict::Spectral { searched })
}

/// Nonzero integers of `[lo, hi]` by increasing absolute value, negative first.
fn starts_by_magnitude(lo: i64, hi: i64) -> impl Iterator<Item = i64> {
    let reach = lo.unsigned_abs().max(hi.unsigned_abs());
    (1..=reach).flat_map(move |k| {
        let k = k as i64;
        [-k, k].into_iter().filter(move |v| (lo..=hi).contains(v))
    })
}

fn normalize_cycle(mut cycle: Vec<CycleStep>) -> Vec<CycleStep> {
    if let Some(pivot) =
        (0..cycle.len()).min_by_key(|&i| (cycle[i].eta.unsigned_abs(), cycle[i].eta > 0))
    {
        cycle.rotate_left(pivot);
    }
    cycle
}

/// Check a claimed cycle directly: every `η_j` nonzero, every digit in `S`,
/// and `(η_j + s_j)/N = η_{j+1}` exactly, indices taken cyclically.
pub fn verify_witness(
    system: &ScaleDigitSystem,
    candidate: &SpectrumCandidate,
    witness: &[CycleStep],
) -> bool {
    if witness.is_empty() {
        return false;
    }
    let n = system.scale();
    witness.iter().enumerate().all(|(j, step)| {
        let next = witness[(j + 1) % witness.len()].eta;
        step.eta != 0
            && candidate.contains(step.digit)
            && step
                .eta
                .checked_add(step.digit)
                .is_some_and(|sum| sum % n == 0 && sum / n == next)
    })
}

/// Outcome of [`report_measure_spectrality`].
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum MeasureSpectralityReport {
    /// `Λ(N, Ŝ)` is a spectrum of the canonical measure; the original
    /// measure has spectrum `Λ(N, Ŝ) / scale_factor`.
    SpectralWithCertificate {
        canonical: CanonicalForm,
        candidate: SpectrumCandidate,
        certificate: CompatibilityCertificate,
        verdict: SpectrumVerdict,
    },
    /// `|N| = 2` with canonical digits `{0, 1}`: Lebesgue measure on a unit
    /// interval, spectrum `ℤ / scale_factor`.
    UnitIntervalCase { canonical: CanonicalForm },
    /// No compatible `Ŝ` exists; spectrality is left undecided.
    NoCompatiblePairFound { canonical: CanonicalForm },
}

/// Canonicalize the digits, then look for a reduced compatible `Ŝ` whose
/// `Λ(N, Ŝ)` is certified to be a spectrum.
pub fn report_measure_spectrality(system: &ScaleDigitSystem) -> Result<MeasureSpectralityReport> {
    let canonical = canonicalize_digits(system)?;
    let reduced = canonical.reduced.clone();
    let candidates = if reduced.len() == 1 {
        vec![SpectrumCandidate::new([0])?]
    } else if reduced.modulus() == 2 {
        return Ok(if reduced.digits() == [0, 1] {
            MeasureSpectralityReport::UnitIntervalCase { canonical }
        } else {
            MeasureSpectralityReport::NoCompatiblePairFound { canonical }
        });
    } else {
        search_candidate_s(&reduced)?
    };
    if candidates.is_empty() {
        return Ok(MeasureSpectralityReport::NoCompatiblePairFound { canonical });
    }
    for candidate in candidates {
        let verdict = decide_spectrum(&reduced, &candidate)?;
        if verdict.is_spectral() {
            let certificate = is_compatible(&reduced, &candidate)?
                .ok_or(Error::Internal("search returned an incompatible candidate"))?;
            return Ok(MeasureSpectralityReport::SpectralWithCertificate {
                canonical,
                candidate,
                certificate,
                verdict,
            });
        }
    }
    Err(Error::Internal(
        "a reduced compatible candidate must yield a spectrum",
    ))
}
