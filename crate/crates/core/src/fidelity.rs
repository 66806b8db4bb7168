//! Mean operation fidelity F and mean estimation fidelity G.
//!
//! Both fidelities are Haar averages over input states. The closed forms
//! reduce them to traces and operator norms of the Kraus operators:
//!
//! * `F = (d + sum_r |Tr A_r|^2) / (d(d+1))`
//! * `G = (d + sum_r <psi_r| A_r^dagger A_r |psi_r>) / (d(d+1))`, maximized
//!   by taking each guess `psi_r` as the top eigenvector of
//!   `A_r^dagger A_r`, which gives `G = (d + sum_r ||A_r||^2) / (d(d+1))`.
//!
//! The Monte Carlo estimators evaluate the defining integrals directly over
//! Haar samples and serve as an independent cross-check of the closed forms.
//! Their sample stream is split into fixed-size chunks with one RNG stream
//! per chunk, so results are bit-identical for a given seed regardless of
//! how many worker threads rayon uses.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigensystem, operator_norm, ComplexMatrix};
use crate::operation::{QuantumOperation, COMPLETENESS_TOL};
use crate::state::{sample_haar_state, PureState};

/// Samples per deterministic Monte Carlo chunk.
const MC_CHUNK: usize = 4096;

/// Operation fidelity together with the optimal estimation fidelity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FidelityPair {
    /// Mean operation fidelity F.
    pub operation: f64,
    /// Mean estimation fidelity G under optimal guesses.
    pub estimation: f64,
}

/// One estimate state per operation outcome.
#[derive(Debug, Clone)]
pub struct GuessAssignment {
    guesses: Vec<PureState>,
}

impl GuessAssignment {
    pub fn new(guesses: Vec<PureState>) -> Self {
        Self { guesses }
    }

    pub fn guesses(&self) -> &[PureState] {
        &self.guesses
    }

    pub fn len(&self) -> usize {
        self.guesses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.guesses.is_empty()
    }
}

/// Monte Carlo mean with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub samples: usize,
}

/// Closed-form mean operation fidelity.
pub fn operation_fidelity(op: &QuantumOperation) -> Result<f64> {
    op.validate(COMPLETENESS_TOL)?;
    let d = op.dim() as f64;
    let trace_sum: f64 = op
        .kraus()
        .iter()
        .map(|a| a.trace().expect("square by construction").norm_sqr())
        .sum();
    Ok((d + trace_sum) / (d * (d + 1.0)))
}

/// Optimal guess per outcome: the top eigenvector of `A_r^dagger A_r`.
///
/// Degenerate top eigenvalues resolve to the eigensolver's deterministic
/// first column, which attains the same estimation fidelity as any other
/// choice in the eigenspace.
pub fn optimal_guesses(op: &QuantumOperation) -> Result<GuessAssignment> {
    let dim = op.dim();
    let mut guesses = Vec::with_capacity(op.n_outcomes());
    for a in op.kraus() {
        let gram = &a.adjoint() * a;
        let sym = (&gram + &gram.adjoint()).scale(Complex64::new(0.5, 0.0));
        let eigen = hermitian_eigensystem(&sym)?;
        let top: Vec<Complex64> = (0..dim).map(|i| eigen.eigenvectors.get(i, 0)).collect();
        guesses.push(PureState::normalized(top));
    }
    Ok(GuessAssignment::new(guesses))
}

/// Closed-form mean estimation fidelity for a specific guess assignment.
pub fn estimation_fidelity(op: &QuantumOperation, guesses: &GuessAssignment) -> Result<f64> {
    if guesses.len() != op.n_outcomes() {
        return Err(Error::DimMismatch {
            expected: op.n_outcomes(),
            found: guesses.len(),
        });
    }
    let d = op.dim() as f64;
    let mut overlap_sum = 0.0;
    for (a, guess) in op.kraus().iter().zip(guesses.guesses()) {
        if guess.dim() != op.dim() {
            return Err(Error::DimMismatch {
                expected: op.dim(),
                found: guess.dim(),
            });
        }
        overlap_sum += a
            .mul_vec(guess.amplitudes())
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>();
    }
    Ok((d + overlap_sum) / (d * (d + 1.0)))
}

/// Maximum mean estimation fidelity, `(d + sum_r ||A_r||^2) / (d(d+1))`.
pub fn estimation_fidelity_optimal(op: &QuantumOperation) -> Result<f64> {
    let d = op.dim() as f64;
    let mut norm_sum = 0.0;
    for a in op.kraus() {
        let norm = operator_norm(a)?;
        norm_sum += norm * norm;
    }
    Ok((d + norm_sum) / (d * (d + 1.0)))
}

/// Convenience bundle of `operation_fidelity` and
/// `estimation_fidelity_optimal`.
pub fn fidelity_pair(op: &QuantumOperation) -> Result<FidelityPair> {
    Ok(FidelityPair {
        operation: operation_fidelity(op)?,
        estimation: estimation_fidelity_optimal(op)?,
    })
}

/// Monte Carlo estimate of the operation fidelity integral
/// `int dpsi sum_r |<psi| A_r |psi>|^2`.
pub fn mc_operation_fidelity(op: &QuantumOperation, samples: usize, seed: u64) -> McEstimate {
    assert!(samples >= 1, "need at least one sample");
    let kraus = op.kraus();
    mc_mean(op.dim(), samples, seed, |psi| {
        kraus
            .iter()
            .map(|a| {
                let image = a.mul_vec(psi.amplitudes());
                let overlap: Complex64 = psi
                    .amplitudes()
                    .iter()
                    .zip(&image)
                    .map(|(p, q)| p.conj() * q)
                    .sum();
                overlap.norm_sqr()
            })
            .sum()
    })
}

/// Monte Carlo estimate of the estimation fidelity integral
/// `int dpsi sum_r <psi| A_r^dagger A_r |psi> |<psi_r|psi>|^2`.
pub fn mc_estimation_fidelity(
    op: &QuantumOperation,
    guesses: &GuessAssignment,
    samples: usize,
    seed: u64,
) -> Result<McEstimate> {
    assert!(samples >= 1, "need at least one sample");
    if guesses.len() != op.n_outcomes() {
        return Err(Error::DimMismatch {
            expected: op.n_outcomes(),
            found: guesses.len(),
        });
    }
    for guess in guesses.guesses() {
        if guess.dim() != op.dim() {
            return Err(Error::DimMismatch {
                expected: op.dim(),
                found: guess.dim(),
            });
        }
    }
    let kraus = op.kraus();
    Ok(mc_mean(op.dim(), samples, seed, |psi| {
        kraus
            .iter()
            .zip(guesses.guesses())
            .map(|(a, guess)| {
                let prob: f64 = a
                    .mul_vec(psi.amplitudes())
                    .iter()
                    .map(|z| z.norm_sqr())
                    .sum();
                prob * guess.overlap_squared(psi)
            })
            .sum()
    }))
}

/// Haar moment operator `(delta_ij I + |i><j|) / (d(d+1))` in closed form.
pub fn moment_operator(dim: usize, i: usize, j: usize) -> Result<ComplexMatrix> {
    check_basis_index(dim, i)?;
    check_basis_index(dim, j)?;
    let weight = Complex64::new(1.0 / (dim as f64 * (dim as f64 + 1.0)), 0.0);
    let mut m = ComplexMatrix::zeros(dim, dim);
    if i == j {
        for k in 0..dim {
            m.set(k, k, weight);
        }
    }
    m.set(i, j, m.get(i, j) + weight);
    Ok(m)
}

/// Monte Carlo estimate of the moment operator: the Haar average of
/// `<psi|i><j|psi> |psi><psi|`.
pub fn mc_moment_operator(
    dim: usize,
    i: usize,
    j: usize,
    samples: usize,
    seed: u64,
) -> Result<ComplexMatrix> {
    check_basis_index(dim, i)?;
    check_basis_index(dim, j)?;
    assert!(samples >= 1, "need at least one sample");

    let chunks = chunk_sizes(samples);
    let partials: Vec<ComplexMatrix> = chunks
        .par_iter()
        .enumerate()
        .map(|(c, &count)| {
            let mut rng = chunk_rng(seed, c);
            let mut acc = ComplexMatrix::zeros(dim, dim);
            for _ in 0..count {
                let psi = sample_haar_state(dim, &mut rng);
                let amp = psi.amplitudes();
                let scalar = amp[i].conj() * amp[j];
                for a in 0..dim {
                    for b in 0..dim {
                        let cur = acc.get(a, b);
                        acc.set(a, b, cur + scalar * amp[a] * amp[b].conj());
                    }
                }
            }
            acc
        })
        .collect();

    // combine in chunk order for bit-reproducibility
    let mut total = ComplexMatrix::zeros(dim, dim);
    for p in &partials {
        total = &total + p;
    }
    Ok(total.scale(Complex64::new(1.0 / samples as f64, 0.0)))
}

fn check_basis_index(dim: usize, index: usize) -> Result<()> {
    if index >= dim {
        return Err(Error::IndexOutOfRange { index, limit: dim });
    }
    Ok(())
}

fn chunk_sizes(samples: usize) -> Vec<usize> {
    let full = samples / MC_CHUNK;
    let tail = samples % MC_CHUNK;
    let mut sizes = vec![MC_CHUNK; full];
    if tail > 0 {
        sizes.push(tail);
    }
    sizes
}

fn chunk_rng(seed: u64, chunk: usize) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(chunk as u64);
    rng
}

/// Chunked, order-stable Monte Carlo mean of `f` over Haar samples.
fn mc_mean<F>(dim: usize, samples: usize, seed: u64, f: F) -> McEstimate
where
    F: Fn(&PureState) -> f64 + Sync,
{
    let chunks = chunk_sizes(samples);
    let partials: Vec<(f64, f64)> = chunks
        .par_iter()
        .enumerate()
        .map(|(c, &count)| {
            let mut rng = chunk_rng(seed, c);
            let mut sum = 0.0;
            let mut sum_sq = 0.0;
            for _ in 0..count {
                let x = f(&sample_haar_state(dim, &mut rng));
                sum += x;
                sum_sq += x * x;
            }
            (sum, sum_sq)
        })
        .collect();

    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for &(s, sq) in &partials {
        sum += s;
        sum_sq += sq;
    }

    let n = samples as f64;
    let mean = sum / n;
    let std_error = if samples > 1 {
        let variance = ((sum_sq - sum * sum / n) / (n - 1.0)).max(0.0);
        (variance / n).sqrt()
    } else {
        0.0
    };
    McEstimate {
        mean,
        std_error,
        samples,
    }
}
