//! Fidelity trade-offs for trace-preserving quantum operations on d-level
//! systems.
//!
//! When a single copy of an unknown pure state passes through a quantum
//! operation, two figures of merit compete: the operation fidelity `F` (how
//! close the post-operation state stays to the input) and the estimation
//! fidelity `G` (how well the classical outcome lets us guess the input).
//! Quantum mechanics constrains the pair to
//!
//! ```text
//! sqrt(F - 1/(d+1)) <= sqrt(G - 1/(d+1)) + sqrt((d-1)(2/(d+1) - G))
//! ```
//!
//! and the bound is tight. This crate computes both fidelities in closed
//! form for arbitrary Kraus-form operations, cross-checks them against a
//! Haar-measure Monte Carlo oracle, constructs the operations saturating the
//! bound, exports the boundary curve (a fragment of an ellipse), and
//! evaluates the corollary for teleportation with nonmaximally entangled
//! states.
//!
//! # Quick start
//!
//! ```
//! use fidelity_frontier::{
//!     bound_check, fidelity_pair, random_operation,
//! };
//!
//! let op = random_operation(3, 4, 7);
//! let pair = fidelity_pair(&op).unwrap();
//! let verdict = bound_check(pair.operation, pair.estimation, 3, 1e-9).unwrap();
//! assert!(verdict.satisfied);
//! ```
//!
//! The `examples/` directory walks through each capability; the
//! `fidelity-frontier` binary exposes the same operations on the command
//! line.

pub mod cli;
pub mod error;
pub mod fidelity;
pub mod frontier;
pub mod linalg;
pub mod operation;
pub mod state;
pub mod teleport;

pub use error::{Error, Result};
pub use fidelity::{
    estimation_fidelity, estimation_fidelity_optimal, fidelity_pair, mc_estimation_fidelity,
    mc_moment_operator, mc_operation_fidelity, moment_operator, operation_fidelity,
    optimal_guesses, FidelityPair, GuessAssignment, McEstimate,
};
pub use frontier::{
    bound_check, ellipse_params, ellipse_residual, extremal_operation, frontier_curve,
    max_operation_fidelity, BoundVerdict, EllipseParams, FrontierPoint, GParameter,
};
pub use linalg::{
    hermitian_eigensystem, operator_norm, polar_decompose, ComplexMatrix, HermitianEigen,
    PolarFactors,
};
pub use operation::{
    random_operation, OutcomeResult, QuantumOperation, SingularSpectra, COMPLETENESS_TOL,
};
pub use state::{sample_haar_state, PureState};
pub use teleport::{
    optimal_schmidt, teleport_estimation_fidelity, teleport_fidelity, teleport_tradeoff_check,
    SchmidtSpectrum,
};
