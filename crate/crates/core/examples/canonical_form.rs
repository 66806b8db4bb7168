//! The positive-semidefinite canonical form of an operation.
//!
//! Following each outcome with the unitary that undoes the polar factors of
//! its Kraus operator leaves a Hermitian PSD operator `W^dagger D W`. The
//! estimation fidelity and the singular spectra are untouched, while the
//! operation fidelity can only improve: `|Tr A_r|` rises to the full
//! singular value sum.
//!
//! Run with: cargo run --example canonical_form

use fidelity_frontier::{fidelity_pair, hermitian_eigensystem, random_operation};

fn main() {
    let op = random_operation(3, 4, 99);
    let canon = op.canonicalize().unwrap();

    let before = fidelity_pair(&op).unwrap();
    let after = fidelity_pair(&canon).unwrap();
    println!("before: F = {:.6}, G_opt = {:.6}", before.operation, before.estimation);
    println!("after:  F = {:.6}, G_opt = {:.6}", after.operation, after.estimation);
    println!("F gain: {:+.6}, G drift: {:+.2e}", after.operation - before.operation,
        after.estimation - before.estimation);

    // every canonical Kraus operator is Hermitian with nonnegative spectrum
    for (r, kraus) in canon.kraus().iter().enumerate() {
        let eigen = hermitian_eigensystem(kraus).unwrap();
        println!(
            "canonical A_{r}: hermiticity {:.2e}, eigenvalues {:?}",
            kraus.hermiticity_deviation(),
            eigen
                .eigenvalues
                .iter()
                .map(|l| (l * 1e6).round() / 1e6)
                .collect::<Vec<_>>()
        );
    }

    // applying it twice changes nothing
    let twice = canon.canonicalize().unwrap();
    let drift = canon
        .kraus()
        .iter()
        .zip(twice.kraus())
        .map(|(a, b)| a.max_abs_diff(b))
        .fold(0.0, f64::max);
    println!("idempotence drift: {drift:.2e}");
}
