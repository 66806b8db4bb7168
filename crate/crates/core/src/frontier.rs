//! The trade-off frontier between operation and estimation fidelity.
//!
//! For a d-level system the two mean fidelities obey
//!
//! ```text
//! sqrt(F - 1/(d+1)) <= sqrt(G - 1/(d+1)) + sqrt((d-1)(2/(d+1) - G))
//! ```
//!
//! and the inequality is tight: for every admissible G there is an operation
//! attaining the maximal F. This module checks the bound, evaluates the
//! frontier curve, constructs the saturating operations, and exposes the
//! ellipse form of the boundary.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::operation::QuantumOperation;

/// Slop accepted before a value is declared outside its domain; accepted
/// excursions are clamped back onto the domain edge.
const DOMAIN_SLOP: f64 = 1e-9;

/// Frontier parameter `g` in `[1, d]`, the affine image of the estimation
/// fidelity: `g = d(d+1) G - d`.
///
/// All conversions between G and g go through this type.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GParameter {
    value: f64,
    dim: usize,
}

impl GParameter {
    /// Wraps a raw `g` in `[1, d]`.
    pub fn from_value(value: f64, dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::DomainError(format!(
                "dimension must be >= 2, got {dim}"
            )));
        }
        let d = dim as f64;
        if !(value.is_finite() && (1.0 - DOMAIN_SLOP..=d + DOMAIN_SLOP).contains(&value)) {
            return Err(Error::DomainError(format!(
                "frontier parameter g = {value} outside [1, {d}]"
            )));
        }
        Ok(Self {
            value: value.clamp(1.0, d),
            dim,
        })
    }

    /// Converts an estimation fidelity `G` in `[1/d, 2/(d+1)]`.
    pub fn from_estimation_fidelity(estimation: f64, dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::DomainError(format!(
                "dimension must be >= 2, got {dim}"
            )));
        }
        let d = dim as f64;
        let lo = 1.0 / d;
        let hi = 2.0 / (d + 1.0);
        if !(estimation.is_finite()
            && (lo - DOMAIN_SLOP..=hi + DOMAIN_SLOP).contains(&estimation))
        {
            return Err(Error::DomainError(format!(
                "estimation fidelity {estimation} outside [{lo}, {hi}]"
            )));
        }
        let value = (d * (d + 1.0) * estimation - d).clamp(1.0, d);
        Ok(Self { value, dim })
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Maps back to the estimation fidelity `G = (d + g) / (d(d+1))`.
    pub fn estimation_fidelity(&self) -> f64 {
        let d = self.dim as f64;
        (d + self.value) / (d * (d + 1.0))
    }
}

/// Evaluation of the trade-off inequality at one (F, G) pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundVerdict {
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`; nonnegative inside the allowed region, zero on the
    /// boundary.
    pub slack: f64,
    pub satisfied: bool,
}

/// One point of the allowed-region boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrontierPoint {
    /// Estimation fidelity G.
    pub g: f64,
    /// Largest operation fidelity compatible with this G.
    pub f_max: f64,
}

/// Center and dimension of the ellipse bounding the allowed region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseParams {
    pub f0: f64,
    pub g0: f64,
    pub dim: usize,
}

/// Checks the trade-off inequality for a fidelity pair.
///
/// Inputs within `tol` of the domain edges are clamped onto the domain
/// before the square roots are taken; anything further out is rejected.
pub fn bound_check(
    operation_fidelity: f64,
    estimation_fidelity: f64,
    dim: usize,
    tol: f64,
) -> Result<BoundVerdict> {
    if dim < 2 {
        return Err(Error::DomainError(format!(
            "dimension must be >= 2, got {dim}"
        )));
    }
    let d = dim as f64;
    let floor = 1.0 / (d + 1.0);
    let ceiling = 2.0 / (d + 1.0);
    if !operation_fidelity.is_finite() || operation_fidelity < floor - tol {
        return Err(Error::DomainError(format!(
            "operation fidelity {operation_fidelity} below {floor}"
        )));
    }
    if !estimation_fidelity.is_finite()
        || estimation_fidelity < floor - tol
        || estimation_fidelity > ceiling + tol
    {
        return Err(Error::DomainError(format!(
            "estimation fidelity {estimation_fidelity} outside [{floor}, {ceiling}]"
        )));
    }

    let f = operation_fidelity.max(floor);
    let g = estimation_fidelity.clamp(floor, ceiling);
    let lhs = (f - floor).sqrt();
    let rhs = (g - floor).sqrt() + ((d - 1.0) * (ceiling - g)).sqrt();
    let slack = rhs - lhs;
    Ok(BoundVerdict {
        lhs,
        rhs,
        slack,
        satisfied: slack >= -tol,
    })
}

/// Largest operation fidelity compatible with an estimation fidelity `G`.
pub fn max_operation_fidelity(estimation_fidelity: f64, dim: usize) -> Result<f64> {
    let param = GParameter::from_estimation_fidelity(estimation_fidelity, dim)?;
    Ok(frontier_value(&param))
}

fn frontier_value(param: &GParameter) -> f64 {
    let d = param.dim() as f64;
    let g = param.value();
    // expanded square of sqrt(g) + sqrt((d-1)(d-g)): exact at both endpoints
    let f = g + (d - 1.0) * (d - g) + 2.0 * (g * (d - 1.0) * (d - g)).sqrt();
    (d + f) / (d * (d + 1.0))
}

/// Builds the operation saturating the bound at the given frontier
/// parameter.
///
/// The d Kraus operators are `a P_r + b (I - P_r)` with `P_r` the projector
/// on computational basis state r, `a = sqrt(g/d)` and
/// `b = sqrt((d-g)/(d(d-1)))`.
pub fn extremal_operation(param: &GParameter) -> QuantumOperation {
    let dim = param.dim();
    let d = dim as f64;
    let g = param.value();
    let a = (g / d).sqrt();
    let b = ((d - g) / (d * (d - 1.0))).sqrt();

    let kraus = (0..dim)
        .map(|r| {
            let mut m = ComplexMatrix::identity(dim).scale(Complex64::new(b, 0.0));
            m.set(r, r, Complex64::new(a, 0.0));
            m
        })
        .collect();
    QuantumOperation::new(kraus).expect("valid by construction")
}

/// Ellipse center `(F0, G0) = ((d+2)/(2d+2), 3/(2d+2))`.
pub fn ellipse_params(dim: usize) -> EllipseParams {
    assert!(dim >= 2, "dimension must be >= 2");
    let d = dim as f64;
    EllipseParams {
        f0: (d + 2.0) / (2.0 * d + 2.0),
        g0: 3.0 / (2.0 * d + 2.0),
        dim,
    }
}

/// Signed residual of the boundary ellipse
/// `(F-F0)^2 + d^2 (G-G0)^2 + 2(d-2)(F-F0)(G-G0) - (d-1)/(d+1)^2`;
/// zero exactly on the boundary curve.
pub fn ellipse_residual(operation_fidelity: f64, estimation_fidelity: f64, dim: usize) -> f64 {
    let d = dim as f64;
    let params = ellipse_params(dim);
    let x = operation_fidelity - params.f0;
    let y = estimation_fidelity - params.g0;
    x * x + d * d * y * y + 2.0 * (d - 2.0) * x * y - (d - 1.0) / ((d + 1.0) * (d + 1.0))
}

/// Samples the frontier on a uniform G grid of `points` values from `1/d`
/// to `2/(d+1)`, endpoints exact.
pub fn frontier_curve(dim: usize, points: usize) -> Result<Vec<FrontierPoint>> {
    if dim < 2 {
        return Err(Error::DomainError(format!(
            "dimension must be >= 2, got {dim}"
        )));
    }
    if points < 2 {
        return Err(Error::DomainError(format!(
            "need at least 2 points, got {points}"
        )));
    }
    let d = dim as f64;
    // uniform in G is uniform in g; stepping in g keeps the endpoints exact
    let curve = (0..points)
        .map(|k| {
            let g = if k == points - 1 {
                d
            } else {
                1.0 + (d - 1.0) * k as f64 / (points - 1) as f64
            };
            let param = GParameter::from_value(g, dim).expect("grid stays in domain");
            FrontierPoint {
                g: param.estimation_fidelity(),
                f_max: frontier_value(&param),
            }
        })
        .collect();
    Ok(curve)
}
