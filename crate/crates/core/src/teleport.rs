//! Teleportation corollary of the fidelity trade-off.
//!
//! A shared bipartite pure state with Schmidt coefficients `mu_k` limits the
//! teleportation fidelity to `(1 + (sum_k mu_k)^2) / (d+1)`, while the
//! measurement record allows estimating the teleported state with fidelity
//! at most `(1 + mu_0^2) / (d+1)`. Teleportation is itself a quantum
//! operation, so the pair obeys the general trade-off bound; the family with
//! a flat Schmidt tail saturates it.

use crate::error::{Error, Result};
use crate::frontier::{bound_check, BoundVerdict};

/// Descending nonnegative Schmidt coefficients with unit square sum.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtSpectrum {
    coefficients: Vec<f64>,
}

impl SchmidtSpectrum {
    /// Sorts the coefficients, checks positivity and renormalizes when the
    /// square sum is within 1e-9 of one; worse violations are rejected.
    pub fn new(mut coefficients: Vec<f64>) -> Result<Self> {
        if coefficients.len() < 2 {
            return Err(Error::InvalidSpectrum(format!(
                "need at least 2 coefficients, got {}",
                coefficients.len()
            )));
        }
        if coefficients.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidSpectrum("non-finite coefficient".into()));
        }
        for c in coefficients.iter_mut() {
            if *c < 0.0 {
                if *c < -1e-12 {
                    return Err(Error::InvalidSpectrum(format!(
                        "negative coefficient {c}"
                    )));
                }
                *c = 0.0;
            }
        }
        let square_sum: f64 = coefficients.iter().map(|c| c * c).sum();
        if (square_sum - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidSpectrum(format!(
                "square sum {square_sum} deviates from 1 by more than 1e-9"
            )));
        }
        coefficients.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
        let inv = 1.0 / square_sum.sqrt();
        for c in coefficients.iter_mut() {
            *c *= inv;
        }
        Ok(Self { coefficients })
    }

    pub fn dim(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// Largest coefficient `mu_0`.
    pub fn largest(&self) -> f64 {
        self.coefficients[0]
    }
}

/// Maximum teleportation fidelity attainable with the shared state,
/// `(1 + (sum_k mu_k)^2) / (d+1)`.
pub fn teleport_fidelity(spectrum: &SchmidtSpectrum) -> f64 {
    let d = spectrum.dim() as f64;
    let total: f64 = spectrum.coefficients().iter().sum();
    (1.0 + total * total) / (d + 1.0)
}

/// Maximum fidelity of estimating the teleported state from the protocol's
/// measurement record, `(1 + mu_0^2) / (d+1)`.
pub fn teleport_estimation_fidelity(spectrum: &SchmidtSpectrum) -> f64 {
    let d = spectrum.dim() as f64;
    let mu0 = spectrum.largest();
    (1.0 + mu0 * mu0) / (d + 1.0)
}

/// The Schmidt family optimal for the teleportation trade-off: largest
/// coefficient `mu0`, all remaining coefficients equal,
/// `sqrt((1 - mu0^2)/(d-1))`.
pub fn optimal_schmidt(mu0: f64, dim: usize) -> Result<SchmidtSpectrum> {
    if dim < 2 {
        return Err(Error::DomainError(format!(
            "dimension must be >= 2, got {dim}"
        )));
    }
    let d = dim as f64;
    let lo = 1.0 / d.sqrt();
    if !mu0.is_finite() || mu0 < lo - 1e-9 || mu0 > 1.0 + 1e-9 {
        return Err(Error::DomainError(format!(
            "mu0 = {mu0} outside [1/sqrt(d) = {lo}, 1]"
        )));
    }
    let mu0 = mu0.clamp(lo, 1.0);
    let tail = ((1.0 - mu0 * mu0).max(0.0) / (d - 1.0)).sqrt();
    let mut coefficients = vec![tail; dim];
    coefficients[0] = mu0;
    Ok(SchmidtSpectrum { coefficients })
}

/// Applies the fidelity trade-off bound to the pair
/// (`teleport_fidelity`, `teleport_estimation_fidelity`).
pub fn teleport_tradeoff_check(spectrum: &SchmidtSpectrum, tol: f64) -> Result<BoundVerdict> {
    bound_check(
        teleport_fidelity(spectrum),
        teleport_estimation_fidelity(spectrum),
        spectrum.dim(),
        tol,
    )
}
