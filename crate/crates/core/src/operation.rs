//! Trace-preserving quantum operations in Kraus form.
//!
//! An operation on a d-level system is a set of d x d Kraus operators
//! `{A_r}` resolving the identity, `sum_r A_r^dagger A_r = I`. This module
//! covers construction and validation, outcome probabilities and conditional
//! state updates, the positive-semidefinite canonical form, per-outcome
//! singular spectra, and a seeded generator of random valid operations.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use std::path::Path;

use crate::error::{Error, Result};
use crate::linalg::{polar_decompose, ComplexMatrix};
use crate::state::PureState;

/// Default tolerance on the completeness residual.
pub const COMPLETENESS_TOL: f64 = 1e-9;

/// Outcome probabilities below this threshold cannot be conditioned on.
pub const ZERO_PROBABILITY_THRESHOLD: f64 = 1e-14;

/// A trace-preserving quantum operation: dimension plus Kraus operators.
///
/// Construction checks structure only (shapes, finiteness); completeness is
/// checked by [`QuantumOperation::validate`] so that broken inputs can
/// still be loaded and diagnosed.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumOperation {
    dim: usize,
    kraus: Vec<ComplexMatrix>,
}

/// Probability of an outcome together with the post-operation state.
#[derive(Debug, Clone)]
pub struct OutcomeResult {
    pub probability: f64,
    pub post_state: PureState,
}

/// Per-outcome singular values, each sequence descending.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularSpectra {
    per_outcome: Vec<Vec<f64>>,
}

impl SingularSpectra {
    pub fn per_outcome(&self) -> &[Vec<f64>] {
        &self.per_outcome
    }

    /// `sum_r sum_i (lambda_i^r)^2`; equals the dimension for a
    /// trace-preserving operation.
    pub fn total_square_sum(&self) -> f64 {
        self.per_outcome
            .iter()
            .flat_map(|v| v.iter())
            .map(|&s| s * s)
            .sum()
    }
}

impl QuantumOperation {
    pub fn new(kraus: Vec<ComplexMatrix>) -> Result<Self> {
        let first = kraus
            .first()
            .ok_or_else(|| Error::ShapeMismatch("operation needs at least one Kraus operator".into()))?;
        let dim = first.rows();
        if dim < 2 {
            return Err(Error::DomainError(format!(
                "operation dimension must be >= 2, got {dim}"
            )));
        }
        for (r, a) in kraus.iter().enumerate() {
            if a.rows() != dim || a.cols() != dim {
                return Err(Error::ShapeMismatch(format!(
                    "Kraus operator {r} is {}x{}, expected {dim}x{dim}",
                    a.rows(),
                    a.cols()
                )));
            }
        }
        Ok(Self { dim, kraus })
    }

    /// The identity operation `{I_d}`.
    pub fn identity(dim: usize) -> Self {
        Self::new(vec![ComplexMatrix::identity(dim)]).expect("valid by construction")
    }

    /// Projective measurement in the computational basis, `{|k><k|}`.
    pub fn projective_measurement(dim: usize) -> Self {
        let kraus = (0..dim)
            .map(|k| {
                let mut p = ComplexMatrix::zeros(dim, dim);
                p.set(k, k, Complex64::ONE);
                p
            })
            .collect();
        Self::new(kraus).expect("valid by construction")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_outcomes(&self) -> usize {
        self.kraus.len()
    }

    pub fn kraus(&self) -> &[ComplexMatrix] {
        &self.kraus
    }

    /// `||sum_r A_r^dagger A_r - I||_F / sqrt(d)`.
    pub fn completeness_residual(&self) -> f64 {
        let mut sum = ComplexMatrix::zeros(self.dim, self.dim);
        for a in &self.kraus {
            sum = &sum + &(&a.adjoint() * a);
        }
        let defect = &sum - &ComplexMatrix::identity(self.dim);
        defect.frobenius_norm() / (self.dim as f64).sqrt()
    }

    /// Returns the completeness residual, failing if it exceeds `tol`.
    pub fn validate(&self, tol: f64) -> Result<f64> {
        let residual = self.completeness_residual();
        if residual > tol {
            return Err(Error::InvalidOperation { residual, tol });
        }
        Ok(residual)
    }

    /// `<psi| A_r^dagger A_r |psi>`, the probability of outcome `r`.
    pub fn outcome_probability(&self, outcome: usize, psi: &PureState) -> Result<f64> {
        let image = self.apply_kraus(outcome, psi)?;
        let p: f64 = image.iter().map(|z| z.norm_sqr()).sum();
        Ok(p.min(1.0))
    }

    /// Conditions on outcome `r`: probability plus normalized post state
    /// `A_r|psi> / sqrt(p)`.
    pub fn apply_outcome(&self, outcome: usize, psi: &PureState) -> Result<OutcomeResult> {
        let image = self.apply_kraus(outcome, psi)?;
        let p: f64 = image.iter().map(|z| z.norm_sqr()).sum();
        if p < ZERO_PROBABILITY_THRESHOLD {
            return Err(Error::ZeroProbabilityOutcome { probability: p });
        }
        Ok(OutcomeResult {
            probability: p.min(1.0),
            post_state: PureState::normalized(image),
        })
    }

    fn apply_kraus(&self, outcome: usize, psi: &PureState) -> Result<Vec<Complex64>> {
        if outcome >= self.kraus.len() {
            return Err(Error::IndexOutOfRange {
                index: outcome,
                limit: self.kraus.len(),
            });
        }
        if psi.dim() != self.dim {
            return Err(Error::DimMismatch {
                expected: self.dim,
                found: psi.dim(),
            });
        }
        Ok(self.kraus[outcome].mul_vec(psi.amplitudes()))
    }

    /// Rewrites every Kraus operator as a positive-semidefinite Hermitian
    /// matrix with the same singular values.
    ///
    /// Polar-decomposing `A_r = V D W` and dropping the unitary part leaves
    /// `W^dagger D W`, which preserves `A_r^dagger A_r` (hence completeness
    /// and the estimation fidelity) while raising `|Tr A_r|` to its maximum
    /// `sum_i lambda_i^r`.
    pub fn canonicalize(&self) -> Result<QuantumOperation> {
        let mut kraus = Vec::with_capacity(self.kraus.len());
        for a in &self.kraus {
            let factors = polar_decompose(a)?;
            let diag = ComplexMatrix::from_diagonal(&factors.diag);
            kraus.push(&(&factors.right.adjoint() * &diag) * &factors.right);
        }
        QuantumOperation::new(kraus)
    }

    /// Descending singular values of each Kraus operator.
    pub fn singular_spectra(&self) -> Result<SingularSpectra> {
        let per_outcome = self
            .kraus
            .iter()
            .map(|a| polar_decompose(a).map(|f| f.diag))
            .collect::<Result<Vec<_>>>()?;
        Ok(SingularSpectra { per_outcome })
    }

    /// Serializes to the operation JSON schema.
    pub fn to_json(&self) -> String {
        let doc = OperationJson {
            dim: self.dim,
            kraus: self
                .kraus
                .iter()
                .map(|a| {
                    (0..a.rows())
                        .map(|i| (0..a.cols()).map(|j| [a.get(i, j).re, a.get(i, j).im]).collect())
                        .collect()
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }

    /// Parses the operation JSON schema, rejecting shape mismatches and
    /// non-finite numbers.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: OperationJson = serde_json::from_str(text)?;
        let mut kraus = Vec::with_capacity(doc.kraus.len());
        for (r, rows) in doc.kraus.iter().enumerate() {
            if rows.len() != doc.dim || rows.iter().any(|row| row.len() != doc.dim) {
                return Err(Error::ShapeMismatch(format!(
                    "Kraus operator {r} does not match dim {}",
                    doc.dim
                )));
            }
            let entries = rows
                .iter()
                .flatten()
                .map(|&[re, im]| Complex64::new(re, im))
                .collect();
            kraus.push(ComplexMatrix::new(doc.dim, doc.dim, entries)?);
        }
        QuantumOperation::new(kraus)
    }

    pub fn write_json_file(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json() + "\n")?;
        Ok(())
    }

    pub fn read_json_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text)
    }
}

/// Wire format: `{"dim": d, "kraus": [[[[re, im], ...], ...], ...]}`.
#[derive(Serialize, Deserialize)]
struct OperationJson {
    dim: usize,
    kraus: Vec<Vec<Vec<[f64; 2]>>>,
}

/// Generates a random trace-preserving operation, deterministic per seed.
///
/// An (n*d) x d complex Gaussian matrix is orthonormalized column by column;
/// its d-row blocks are the Kraus operators, so completeness holds by
/// construction.
pub fn random_operation(dim: usize, n_outcomes: usize, seed: u64) -> QuantumOperation {
    assert!(dim >= 2, "dimension must be >= 2");
    assert!(n_outcomes >= 1, "need at least one outcome");
    let rows = dim * n_outcomes;
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    for attempt in 0..64u64 {
        rng.set_stream(attempt);
        let mut columns: Vec<Vec<Complex64>> = (0..dim)
            .map(|_| {
                (0..rows)
                    .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
                    .collect()
            })
            .collect();
        if let Some(kraus) = orthonormalize_into_blocks(&mut columns, dim, n_outcomes) {
            return QuantumOperation::new(kraus).expect("valid by construction");
        }
        // near-dependent Gaussian draw; retry on the next stream
    }
    unreachable!("Gaussian draws cannot stay degenerate");
}

fn orthonormalize_into_blocks(
    columns: &mut [Vec<Complex64>],
    dim: usize,
    n_outcomes: usize,
) -> Option<Vec<ComplexMatrix>> {
    for j in 0..columns.len() {
        // two Gram-Schmidt passes keep the residual well below 1e-10
        for _ in 0..2 {
            let (done, rest) = columns.split_at_mut(j);
            let current = &mut rest[0];
            for previous in done.iter() {
                let overlap: Complex64 = previous
                    .iter()
                    .zip(current.iter())
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                for (z, p) in current.iter_mut().zip(previous) {
                    *z -= overlap * p;
                }
            }
        }
        let norm = columns[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-6 {
            return None;
        }
        let inv = 1.0 / norm;
        for z in columns[j].iter_mut() {
            *z *= inv;
        }
    }
    let kraus = (0..n_outcomes)
        .map(|r| {
            let entries = (0..dim)
                .flat_map(|i| (0..dim).map(move |j| (i, j)))
                .map(|(i, j)| columns[j][r * dim + i])
                .collect();
            ComplexMatrix::new(dim, dim, entries).expect("block shape")
        })
        .collect();
    Some(kraus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::sample_haar_state;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn plus_state() -> PureState {
        let a = 1.0 / 2f64.sqrt();
        PureState::new(vec![c(a, 0.0), c(a, 0.0)]).unwrap()
    }

    /// d=2 extremal operation at g=1.5, written out explicitly.
    fn extremal_d2_g15() -> QuantumOperation {
        let a = 0.75f64.sqrt();
        let b = 0.25f64.sqrt();
        QuantumOperation::new(vec![
            ComplexMatrix::from_diagonal(&[a, b]),
            ComplexMatrix::from_diagonal(&[b, a]),
        ])
        .unwrap()
    }

    #[test]
    fn validate_identity_and_projective() {
        assert_eq!(QuantumOperation::identity(2).validate(1e-9).unwrap(), 0.0);
        assert_eq!(
            QuantumOperation::projective_measurement(2)
                .validate(1e-9)
                .unwrap(),
            0.0
        );
    }

    #[test]
    fn validate_reports_incomplete_operation() {
        let op = QuantumOperation::new(vec![
            ComplexMatrix::identity(2).scale(c(0.9, 0.0)),
        ])
        .unwrap();
        let residual = op.completeness_residual();
        assert!((residual - 0.19).abs() < 1e-12);
        assert!(matches!(
            op.validate(1e-9),
            Err(Error::InvalidOperation { .. })
        ));
    }

    #[test]
    fn new_rejects_structural_problems() {
        assert!(QuantumOperation::new(vec![]).is_err());
        assert!(QuantumOperation::new(vec![ComplexMatrix::identity(1)]).is_err());
        assert!(QuantumOperation::new(vec![
            ComplexMatrix::identity(2),
            ComplexMatrix::identity(3),
        ])
        .is_err());
        assert!(QuantumOperation::new(vec![ComplexMatrix::zeros(2, 3)]).is_err());
    }

    #[test]
    fn outcome_probability_examples() {
        let projective = QuantumOperation::projective_measurement(2);
        let p = projective.outcome_probability(0, &plus_state()).unwrap();
        assert!((p - 0.5).abs() < 1e-12);

        let identity = QuantumOperation::identity(3);
        let psi = PureState::basis_state(3, 1);
        assert!((identity.outcome_probability(0, &psi).unwrap() - 1.0).abs() < 1e-12);

        let p = extremal_d2_g15()
            .outcome_probability(0, &PureState::basis_state(2, 0))
            .unwrap();
        assert!((p - 0.75).abs() < 1e-12);
    }

    #[test]
    fn outcome_probability_errors() {
        let op = QuantumOperation::identity(2);
        assert!(matches!(
            op.outcome_probability(1, &PureState::basis_state(2, 0)),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            op.outcome_probability(0, &PureState::basis_state(3, 0)),
            Err(Error::DimMismatch { .. })
        ));
    }

    #[test]
    fn apply_outcome_projects_and_normalizes() {
        let projective = QuantumOperation::projective_measurement(2);
        let result = projective.apply_outcome(0, &plus_state()).unwrap();
        assert!((result.probability - 0.5).abs() < 1e-12);
        assert!(result
            .post_state
            .overlap_squared(&PureState::basis_state(2, 0))
            > 1.0 - 1e-12);

        let identity = QuantumOperation::identity(2);
        let result = identity.apply_outcome(0, &plus_state()).unwrap();
        assert!((result.probability - 1.0).abs() < 1e-12);
        assert_eq!(result.post_state, plus_state());
    }

    #[test]
    fn apply_outcome_rejects_zero_probability() {
        let projective = QuantumOperation::projective_measurement(2);
        assert!(matches!(
            projective.apply_outcome(1, &PureState::basis_state(2, 0)),
            Err(Error::ZeroProbabilityOutcome { .. })
        ));
    }

    #[test]
    fn canonicalize_examples() {
        let id = QuantumOperation::identity(2);
        assert!(id.canonicalize().unwrap().kraus()[0]
            .max_abs_diff(&ComplexMatrix::identity(2))
            < 1e-12);

        // single unitary collapses to the identity
        let phase = Complex64::from_polar(1.0, 0.7);
        let mut u = ComplexMatrix::zeros(2, 2);
        u.set(0, 1, phase);
        u.set(1, 0, -phase.conj());
        let op = QuantumOperation::new(vec![u]).unwrap();
        assert!(op.canonicalize().unwrap().kraus()[0]
            .max_abs_diff(&ComplexMatrix::identity(2))
            < 1e-12);
    }

    #[test]
    fn canonical_kraus_are_positive_hermitian() {
        for seed in 0..20 {
            let op = random_operation(3, 4, seed);
            let canon = op.canonicalize().unwrap();
            assert!(canon.validate(1e-9).is_ok());
            for b in canon.kraus() {
                assert!(b.hermiticity_deviation() < 1e-9);
                let eig = crate::linalg::hermitian_eigensystem(b).unwrap();
                assert!(eig.eigenvalues.iter().all(|&l| l >= -1e-9));
                // trace saturates the singular value sum
                let spectrum_sum: f64 =
                    polar_decompose(b).unwrap().diag.iter().sum();
                assert!((b.trace().unwrap().re - spectrum_sum).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn canonicalize_is_idempotent() {
        for seed in [1u64, 5, 9] {
            let op = random_operation(4, 3, seed);
            let once = op.canonicalize().unwrap();
            let twice = once.canonicalize().unwrap();
            for (a, b) in once.kraus().iter().zip(twice.kraus()) {
                assert!(a.max_abs_diff(b) < 1e-9);
            }
        }
    }

    #[test]
    fn singular_spectra_examples() {
        let projective = QuantumOperation::projective_measurement(2);
        let spectra = projective.singular_spectra().unwrap();
        assert_eq!(spectra.per_outcome(), &[vec![1.0, 0.0], vec![1.0, 0.0]]);

        let id = QuantumOperation::identity(2);
        assert_eq!(id.singular_spectra().unwrap().per_outcome(), &[vec![1.0, 1.0]]);

        let spectra = extremal_d2_g15().singular_spectra().unwrap();
        for lam in spectra.per_outcome() {
            assert!((lam[0] - 0.75f64.sqrt()).abs() < 1e-12);
            assert!((lam[1] - 0.25f64.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn spectra_square_sum_matches_dimension() {
        for seed in 0..10 {
            let op = random_operation(3, 5, seed);
            let spectra = op.singular_spectra().unwrap();
            assert!((spectra.total_square_sum() - 3.0).abs() < 1e-8);
        }
    }

    #[test]
    fn spectra_invariant_under_conditional_unitaries() {
        let op = random_operation(3, 4, 21);
        let before = op.singular_spectra().unwrap();
        let rotated: Vec<ComplexMatrix> = op
            .kraus()
            .iter()
            .enumerate()
            .map(|(r, a)| {
                let unitary_op = random_operation(3, 1, 100 + r as u64);
                &unitary_op.kraus()[0] * a
            })
            .collect();
        let after = QuantumOperation::new(rotated)
            .unwrap()
            .singular_spectra()
            .unwrap();
        for (x, y) in before.per_outcome().iter().zip(after.per_outcome()) {
            for (a, b) in x.iter().zip(y) {
                assert!((a - b).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn random_operation_single_outcome_is_unitary() {
        let op = random_operation(2, 1, 5);
        let u = &op.kraus()[0];
        let defect = (&(&u.adjoint() * u) - &ComplexMatrix::identity(2)).frobenius_norm();
        assert!(defect < 1e-10);
    }

    #[test]
    fn random_operation_is_deterministic() {
        let a = random_operation(3, 5, 7);
        let b = random_operation(3, 5, 7);
        assert_eq!(a, b);
        assert!(a.completeness_residual() < 1e-10);
    }

    #[test]
    fn random_operation_valid_across_sizes() {
        for dim in 2..=8 {
            for n in 1..=16 {
                for seed in 0..100 {
                    let op = random_operation(dim, n, seed);
                    assert!(
                        op.completeness_residual() < 1e-10,
                        "dim={dim} n={n} seed={seed}"
                    );
                }
            }
        }
    }

    #[test]
    fn json_round_trip_is_exact() {
        let op = random_operation(3, 2, 13);
        let parsed = QuantumOperation::from_json(&op.to_json()).unwrap();
        assert_eq!(op, parsed);
    }

    #[test]
    fn json_rejects_bad_input() {
        assert!(QuantumOperation::from_json("{").is_err());
        assert!(QuantumOperation::from_json(r#"{"dim": 2, "kraus": []}"#).is_err());
        // wrong row count
        assert!(QuantumOperation::from_json(
            r#"{"dim": 2, "kraus": [[[[1.0, 0.0], [0.0, 0.0]]]]}"#
        )
        .is_err());
        // non-finite float
        assert!(QuantumOperation::from_json(
            r#"{"dim": 2, "kraus": [[[[1e999, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]]}"#
        )
        .is_err());
    }

    proptest! {
        #[test]
        fn outcome_probabilities_sum_to_one(seed in 0u64..200) {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            let dim = 2 + (seed % 4) as usize;
            let n = 1 + (seed % 6) as usize;
            let op = random_operation(dim, n, seed);
            let psi = sample_haar_state(dim, &mut rng);
            let total: f64 = (0..n)
                .map(|r| op.outcome_probability(r, &psi).unwrap())
                .sum();
            prop_assert!((total - 1.0).abs() < 1e-10);
        }

        #[test]
        fn canonicalize_preserves_spectra(seed in 0u64..50) {
            let dim = 2 + (seed % 3) as usize;
            let op = random_operation(dim, 3, seed);
            let before = op.singular_spectra().unwrap();
            let after = op.canonicalize().unwrap().singular_spectra().unwrap();
            for (x, y) in before.per_outcome().iter().zip(after.per_outcome()) {
                for (a, b) in x.iter().zip(y) {
                    prop_assert!((a - b).abs() < 1e-9);
                }
            }
        }
    }
}
