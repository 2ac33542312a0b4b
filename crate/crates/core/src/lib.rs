//! Exact decision procedures for spectra of equal-weight self-similar
//! measures `μ_{N,D}` on the line.
//!
//! The crate answers three questions about a scale `N` (`|N| ≥ 2`) and a
//! finite digit set `D ⊂ ℤ`:
//!
//! * is `(D/N, S)` a compatible pair for a given `S`? ([`compat`])
//! * is `Λ(N, S) = {Σ s_j N^j}` a spectrum of `μ_{N,D}`? ([`decider`])
//! * if `D` tiles the integers, which `S` makes the pair compatible? ([`tiling`])
//!
//! All verdicts are exact: zeros of exponential sums are decided through
//! cyclotomic divisibility ([`arith`]). The floating-point machinery in
//! [`measure`] evaluates `μ̂` and the completeness function `Q` with explicit
//! truncation bounds, and is used to corroborate verdicts numerically.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod compat;
pub mod decider;
pub mod error;
pub mod measure;
pub mod system;
pub mod tiling;

pub use compat::{
    is_compatible, pair_power, reduce_s, search_candidate_s, CompatibilityCertificate, PowerPair,
    ZeroDifference,
};
pub use decider::{
    canonicalize_digits, decide_spectrum, decide_spectrum_in_range, report_measure_spectrality,
    successor, verify_witness, CanonicalForm, CycleStep, MeasureSpectralityReport, SearchedRange,
    SpectrumVerdict,
};
pub use error::{Error, Result};
pub use measure::{
    attractor_bounds, lambda_enumerate, mu_hat, q_eval, symbol_eval, transfer_residual, Estimate,
};
pub use system::{ScaleDigitSystem, SpectrumCandidate, TruncationPolicy};
pub use tiling::{
    construct_spectrum_set, find_modulus_l, is_complementing, prime_power_sets, PrimePowerSets,
    PrimePowers, TilingConstruction,
};
