//! Closed-form operation and estimation fidelities.
//!
//! F measures how much an operation disturbs a Haar-random input state; G
//! measures how well the outcome index lets us guess that state. The two
//! classic endpoints: doing nothing (F = 1, G = 1/d) and the optimal
//! single-copy estimation, a projective measurement (F = G = 2/(d+1)).
//!
//! Run with: cargo run --example closed_form_fidelities

use fidelity_frontier::{
    estimation_fidelity, fidelity_pair, optimal_guesses, random_operation, GuessAssignment,
    PureState, QuantumOperation,
};

fn main() {
    for d in [2usize, 3, 8] {
        let identity = fidelity_pair(&QuantumOperation::identity(d)).unwrap();
        let projective = fidelity_pair(&QuantumOperation::projective_measurement(d)).unwrap();
        println!(
            "d={d}: identity (F, G) = ({:.6}, {:.6}); projective (F, G) = ({:.6}, {:.6})",
            identity.operation, identity.estimation, projective.operation, projective.estimation
        );
    }

    // A generic operation sits strictly between the endpoints.
    let op = random_operation(3, 4, 11);
    let pair = fidelity_pair(&op).unwrap();
    println!("\nrandom d=3, N=4: F = {:.6}, G_opt = {:.6}", pair.operation, pair.estimation);

    // G_opt comes from guessing the top eigenvector of each A_r^dagger A_r;
    // any other assignment does worse.
    let best = optimal_guesses(&op).unwrap();
    println!(
        "optimal guesses reproduce G_opt: {:.6}",
        estimation_fidelity(&op, &best).unwrap()
    );
    let naive = GuessAssignment::new(vec![PureState::basis_state(3, 0); 4]);
    println!(
        "always guessing |0> instead:     {:.6}",
        estimation_fidelity(&op, &naive).unwrap()
    );
}
