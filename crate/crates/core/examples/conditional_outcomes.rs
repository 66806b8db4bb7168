//! Outcome probabilities and conditional state updates.
//!
//! Run with: cargo run --example conditional_outcomes

use fidelity_frontier::{sample_haar_state, PureState, QuantumOperation};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

fn main() {
    let projective = QuantumOperation::projective_measurement(2);
    let amp = 1.0 / 2f64.sqrt();
    let plus = PureState::new(vec![Complex64::new(amp, 0.0), Complex64::new(amp, 0.0)]).unwrap();

    // measuring |+> in the computational basis
    for outcome in 0..2 {
        let result = projective.apply_outcome(outcome, &plus).unwrap();
        println!(
            "outcome {outcome}: probability {:.3}, post state overlaps |{outcome}> with {:.3}",
            result.probability,
            result
                .post_state
                .overlap_squared(&PureState::basis_state(2, outcome))
        );
    }

    // conditioning on an impossible outcome is an error
    let zero = PureState::basis_state(2, 0);
    match projective.apply_outcome(1, &zero) {
        Err(e) => println!("outcome 1 on |0>: {e}"),
        Ok(_) => unreachable!(),
    }

    // outcome probabilities always resolve to one
    let mut rng = ChaCha12Rng::seed_from_u64(1);
    let op = fidelity_frontier::random_operation(4, 7, 5);
    let psi = sample_haar_state(4, &mut rng);
    let total: f64 = (0..op.n_outcomes())
        .map(|r| op.outcome_probability(r, &psi).unwrap())
        .sum();
    println!("random d=4, N=7 operation: outcome probabilities sum to {total:.12}");
}
