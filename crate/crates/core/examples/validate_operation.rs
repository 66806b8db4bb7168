//! Building quantum operations and checking the completeness relation.
//!
//! Run with: cargo run --example validate_operation

use fidelity_frontier::{random_operation, ComplexMatrix, QuantumOperation};
use num_complex::Complex64;

fn main() {
    // The identity and a projective measurement resolve the identity exactly.
    let identity = QuantumOperation::identity(3);
    println!("identity:            residual {:.3e}", identity.completeness_residual());

    let projective = QuantumOperation::projective_measurement(3);
    println!("projective (d=3):    residual {:.3e}", projective.completeness_residual());

    // Seeded random operations are complete by construction.
    let random = random_operation(4, 6, 2024);
    println!("random (d=4, N=6):   residual {:.3e}", random.completeness_residual());

    // Scaling a Kraus operator breaks completeness; validate reports how far
    // the operation is from trace preservation.
    let broken = QuantumOperation::new(vec![
        ComplexMatrix::identity(2).scale(Complex64::new(0.9, 0.0)),
    ])
    .unwrap();
    println!("0.9 * identity:      residual {:.3e}", broken.completeness_residual());
    match broken.validate(1e-9) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("validate rejects it: {e}"),
    }

    // Operations round-trip exactly through the JSON wire format.
    let json = random.to_json();
    let parsed = QuantumOperation::from_json(&json).unwrap();
    println!("JSON round trip intact: {}", parsed == random);
}
