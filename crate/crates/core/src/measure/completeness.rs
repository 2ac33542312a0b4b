use super::{lambda_enumerate, mu_hat, symbol_eval, Estimate};
use crate::error::{Error, Result};
use crate::system::{ScaleDigitSystem, SpectrumCandidate, TruncationPolicy};

/// `Q_k(ξ) = Σ_{λ∈Λ_k} |μ̂(ξ + λ)|²` over the depth-`k` slice, `k = policy.depth()`.
///
/// For a compatible pair the value never exceeds 1 and increases towards
/// `Q(ξ)` as the depth grows (when `0 ∈ S`).
pub fn q_eval(
    system: &ScaleDigitSystem,
    candidate: &SpectrumCandidate,
    xi: f64,
    policy: &TruncationPolicy,
) -> Result<Estimate<f64>> {
    let slice = lambda_enumerate(system.scale(), candidate, policy.depth())?;
    let mut value = 0.0;
    let mut error_bound = 0.0;
    for lambda in slice {
        let term = mu_hat(system, xi + lambda as f64, policy);
        value += term.value.norm_sqr();
        // ||a|² - |b|²| ≤ (|a| + |b|)·|a - b| with |a| ≤ 1.
        error_bound += (2.0 + term.error_bound) * term.error_bound;
    }
    Ok(Estimate { value, error_bound })
}

/// Residual of the transfer identity
/// `Q_{k+1}(ξ) = Σ_{s∈S} |m_D((ξ+s)/N)|² Q_k((ξ+s)/N)` at depth `k`.
///
/// Both sides are the same finite sum once `μ̂(ξ) = m_D(ξ/N) μ̂(ξ/N)` and
/// 1-periodicity of `m_D` are used, so for an exact transform the residual
/// vanishes; what remains is the effect of truncating the product.
pub fn transfer_residual(
    system: &ScaleDigitSystem,
    candidate: &SpectrumCandidate,
    xi: f64,
    depth: usize,
    policy: &TruncationPolicy,
) -> Result<f64> {
    if candidate.len() != system.len() {
        return Err(Error::CardinalityMismatch {
            digits: system.len(),
            candidate: candidate.len(),
        });
    }
    let inner = policy.with_depth(depth)?;
    let outer = policy.with_depth(depth + 1)?;
    let lhs = q_eval(system, candidate, xi, &outer)?.value;
    let n = system.scale() as f64;
    let mut rhs = 0.0;
    for &s in candidate.elements() {
        let child = (xi + s as f64) / n;
        let weight = symbol_eval(system.digits(), child).norm_sqr();
        if weight == 0.0 {
            continue;
        }
        rhs += weight * q_eval(system, candidate, child, &inner)?.value;
    }
    Ok(libm::fabs(lhs - rhs))
}
