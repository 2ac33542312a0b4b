//! The analytic side: digit symbols, the Fourier transform of `μ_{N,D}`,
//! finite slices of `Λ(N, S)`, the attractor enclosure and the completeness
//! function `Q`.
//!
//! Everything here is floating point except [`attractor_bounds`] and
//! [`lambda_enumerate`], which are exact. No verdict in this crate depends on
//! a floating-point zero test; these routines corroborate verdicts.

mod completeness;
mod lattice;

use core::f64::consts::TAU;

use num_complex::Complex64;

use crate::system::{ScaleDigitSystem, TruncationPolicy};

pub use completeness::{q_eval, transfer_residual};
pub use lattice::{attractor_bounds, lambda_enumerate, lambda_enumerate_within, DEFAULT_BUDGET};

/// A floating-point value together with a guaranteed bound on the error
/// introduced by truncating infinite objects (rounding is not included).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate<T> {
    pub value: T,
    pub error_bound: f64,
}

/// `m_D(ξ) = |D|⁻¹ Σ_{d∈D} exp(-2πi d ξ)`.
///
/// # Panics
///
/// If `digits` is empty.
pub fn symbol_eval(digits: &[i64], xi: f64) -> Complex64 {
    assert!(!digits.is_empty(), "symbol of an empty digit set");
    let mut acc = Complex64::new(0.0, 0.0);
    for &d in digits {
        // Reduce the phase to [-1/2, 1/2] before scaling by 2π.
        let t = d as f64 * xi;
        let t = t - libm::round(t);
        let (s, c) = libm::sincos(TAU * t);
        acc += Complex64::new(c, -s);
    }
    acc / digits.len() as f64
}

/// Lipschitz constant of `m_D` at the origin: `|m_D(η) - 1| ≤ L·|η|`.
fn symbol_lipschitz(digits: &[i64]) -> f64 {
    let total: f64 = digits.iter().map(|&d| libm::fabs(d as f64)).sum();
    TAU * total / digits.len() as f64
}

/// Number of factors `J ≥ 1` of `Π_{j≥1} m_D(N^{-j} ξ)` to keep, and the
/// resulting tail bound.
///
/// The tail beyond `J` differs from 1 by at most `exp(t) - 1` with
/// `t = L·a·|N|^{-J}/(|N|-1)`, where `a = max(|ξ|, 1)`; arguments inside the
/// unit interval therefore all share the depth needed at `|ξ| = 1`.
fn product_length(system: &ScaleDigitSystem, xi: f64, epsilon: f64) -> (usize, f64) {
    let lip = symbol_lipschitz(system.digits());
    let n = system.modulus() as f64;
    let a = libm::fmax(libm::fabs(xi), 1.0);
    let mut scale = lip * a / (n - 1.0);
    let mut factors = 0;
    loop {
        factors += 1;
        scale /= n;
        let bound = libm::expm1(scale);
        if bound <= epsilon {
            return (factors, bound);
        }
    }
}

/// `μ̂(ξ) = Π_{j≥1} m_D(N^{-j} ξ)`, truncated once the tail bound drops below
/// the policy's `product_epsilon`.
pub fn mu_hat(
    system: &ScaleDigitSystem,
    xi: f64,
    policy: &TruncationPolicy,
) -> Estimate<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    if xi == 0.0 || system.digits().iter().all(|&d| d == 0) {
        return Estimate {
            value: one,
            error_bound: 0.0,
        };
    }
    let (factors, error_bound) = product_length(system, xi, policy.product_epsilon());
    let n = system.scale() as f64;
    let mut value = one;
    let mut power = 1.0;
    for _ in 0..factors {
        power *= n;
        value *= symbol_eval(system.digits(), xi / power);
    }
    Estimate { value, error_bound }
}
