//! Cross-checking the closed forms against brute-force Haar integration.
//!
//! The Monte Carlo estimators evaluate the defining integrals of F and G
//! directly on random pure states. Chunked seeding makes every estimate
//! bit-reproducible regardless of the rayon thread count.
//!
//! Run with: cargo run --example monte_carlo_cross_check

use fidelity_frontier::{
    estimation_fidelity_optimal, mc_estimation_fidelity, mc_moment_operator,
    mc_operation_fidelity, moment_operator, operation_fidelity, optimal_guesses,
    random_operation,
};

fn main() {
    let op = random_operation(3, 5, 42);
    let samples = 200_000;

    let closed_f = operation_fidelity(&op).unwrap();
    let mc_f = mc_operation_fidelity(&op, samples, 7);
    println!(
        "F: closed {closed_f:.6}, MC {:.6} +/- {:.6} ({:+.2} sigma)",
        mc_f.mean,
        mc_f.std_error,
        (mc_f.mean - closed_f) / mc_f.std_error
    );

    let closed_g = estimation_fidelity_optimal(&op).unwrap();
    let guesses = optimal_guesses(&op).unwrap();
    let mc_g = mc_estimation_fidelity(&op, &guesses, samples, 7).unwrap();
    println!(
        "G: closed {closed_g:.6}, MC {:.6} +/- {:.6} ({:+.2} sigma)",
        mc_g.mean,
        mc_g.std_error,
        (mc_g.mean - closed_g) / mc_g.std_error
    );

    // Replaying the same seed reproduces the estimate bit for bit.
    let replay = mc_operation_fidelity(&op, samples, 7);
    println!("seed replay identical: {}", replay == mc_f);

    // The same sampler verifies the Haar moment operator
    // (delta_ij I + |i><j|) / (d(d+1)) behind the closed forms.
    let mc = mc_moment_operator(2, 0, 0, 500_000, 3).unwrap();
    let exact = moment_operator(2, 0, 0).unwrap();
    println!(
        "moment operator M_00 (d=2): MC diag ({:.4}, {:.4}), exact (1/3, 1/6), Frobenius diff {:.2e}",
        mc.get(0, 0).re,
        mc.get(1, 1).re,
        (&mc - &exact).frobenius_norm()
    );
}
