//! Pure states of a d-level system and Haar-measure sampling.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

/// Unit-norm complex amplitude vector.
///
/// Constructors accept vectors whose squared norm deviates from one by at
/// most 1e-9 and renormalize them, so a stored state always satisfies the
/// unit-norm invariant to machine precision.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
}

impl PureState {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::ShapeMismatch("state must have dimension >= 1".into()));
        }
        if amplitudes
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        let norm_sq: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        let deviation = (norm_sq - 1.0).abs();
        if deviation > 1e-9 {
            return Err(Error::NotNormalized { deviation });
        }
        Ok(Self::normalized(amplitudes))
    }

    /// Normalizes and wraps without the tolerance check. The caller must
    /// guarantee a nonzero vector.
    pub(crate) fn normalized(mut amplitudes: Vec<Complex64>) -> Self {
        let norm = amplitudes
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt();
        debug_assert!(norm > 0.0);
        let inv = 1.0 / norm;
        for z in amplitudes.iter_mut() {
            *z *= inv;
        }
        Self { amplitudes }
    }

    /// Computational basis state `|index>`.
    pub fn basis_state(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index out of range");
        let mut amplitudes = vec![Complex64::ZERO; dim];
        amplitudes[index] = Complex64::ONE;
        Self { amplitudes }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Inner product `<self|other>`.
    pub fn inner(&self, other: &PureState) -> Complex64 {
        assert_eq!(self.dim(), other.dim(), "state dimension mismatch");
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Squared overlap `|<self|other>|^2`.
    pub fn overlap_squared(&self, other: &PureState) -> f64 {
        self.inner(other).norm_sqr()
    }
}

/// Draws a pure state from the unitarily invariant (Haar) measure.
///
/// The standard construction: 2d independent standard normals form d complex
/// amplitudes, which are then normalized.
pub fn sample_haar_state<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> PureState {
    assert!(dim >= 1, "dimension must be positive");
    loop {
        let amplitudes: Vec<Complex64> = (0..dim)
            .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        // a zero draw has probability zero but would break normalization
        if amplitudes.iter().any(|z| z.norm_sqr() > 0.0) {
            return PureState::normalized(amplitudes);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn new_rejects_unnormalized_and_normalizes_valid() {
        assert!(matches!(
            PureState::new(vec![c(0.5, 0.0), c(0.5, 0.0)]),
            Err(Error::NotNormalized { .. })
        ));
        let s = PureState::new(vec![c(1.0 / 2f64.sqrt(), 0.0), c(0.0, 1.0 / 2f64.sqrt())]).unwrap();
        let norm_sq: f64 = s.amplitudes().iter().map(|z| z.norm_sqr()).sum();
        assert!((norm_sq - 1.0).abs() < 1e-12);
    }

    #[test]
    fn basis_state_and_overlap() {
        let zero = PureState::basis_state(3, 0);
        let one = PureState::basis_state(3, 1);
        assert_eq!(zero.overlap_squared(&one), 0.0);
        assert_eq!(zero.overlap_squared(&zero), 1.0);
    }

    #[test]
    fn haar_samples_are_normalized() {
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        for _ in 0..100 {
            let s = sample_haar_state(5, &mut rng);
            let norm_sq: f64 = s.amplitudes().iter().map(|z| z.norm_sqr()).sum();
            assert!((norm_sq - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn haar_low_moments_match_invariant_measure() {
        // E|<0|psi>|^2 = 1/d and E|<0|psi>|^4 = 2/(d(d+1)); for d=2 the
        // overlap is uniform on [0,1], giving standard errors ~7e-4 at this
        // sample count.
        let d = 2;
        let samples = 200_000;
        let mut rng = ChaCha12Rng::seed_from_u64(12);
        let mut m2 = 0.0;
        let mut m4 = 0.0;
        for _ in 0..samples {
            let s = sample_haar_state(d, &mut rng);
            let p = s.amplitudes()[0].norm_sqr();
            m2 += p;
            m4 += p * p;
        }
        m2 /= samples as f64;
        m4 /= samples as f64;
        assert!((m2 - 0.5).abs() < 3e-3, "second moment {m2}");
        assert!((m4 - 1.0 / 3.0).abs() < 3e-3, "fourth moment {m4}");
    }

    #[test]
    fn haar_sampling_is_deterministic_per_seed() {
        let a = sample_haar_state(4, &mut ChaCha12Rng::seed_from_u64(9));
        let b = sample_haar_state(4, &mut ChaCha12Rng::seed_from_u64(9));
        assert_eq!(a, b);
    }
}
