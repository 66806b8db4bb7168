//! The dense linear algebra underneath: Hermitian eigensystems and
//! polar/singular value decompositions.
//!
//! Run with: cargo run --example matrix_decompositions

use fidelity_frontier::{hermitian_eigensystem, operator_norm, polar_decompose, ComplexMatrix};
use num_complex::Complex64;

fn main() {
    // eigensystem of a 2x2 Hermitian matrix with a complex off-diagonal
    let h = ComplexMatrix::from_rows(&[
        vec![Complex64::new(1.0, 0.0), Complex64::new(0.5, 0.25)],
        vec![Complex64::new(0.5, -0.25), Complex64::new(-1.0, 0.0)],
    ])
    .unwrap();
    let eigen = hermitian_eigensystem(&h).unwrap();
    println!("eigenvalues: {:?}", eigen.eigenvalues);
    for k in 0..2 {
        let v: Vec<Complex64> = (0..2).map(|i| eigen.eigenvectors.get(i, k)).collect();
        let hv = h.mul_vec(&v);
        let residual: f64 = hv
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - b * eigen.eigenvalues[k]).norm())
            .sum();
        println!("  |H v_{k} - lambda_{k} v_{k}| = {residual:.2e}");
    }

    // polar decomposition of a non-normal matrix
    let a = ComplexMatrix::from_rows(&[
        vec![Complex64::new(0.0, 0.0), Complex64::new(2.0, 0.0)],
        vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
    ])
    .unwrap();
    let factors = polar_decompose(&a).unwrap();
    println!("\nsingular values of [[0,2],[1,0]]: {:?}", factors.diag);
    println!(
        "reconstruction error: {:.2e}",
        factors.reconstruct().max_abs_diff(&a)
    );
    println!("operator norm: {}", operator_norm(&a).unwrap());

    // rank-deficient input: the zero singular value's left column is filled
    // by orthonormal completion, keeping the factors unitary
    let projector = ComplexMatrix::from_diagonal(&[1.0, 0.0]);
    let factors = polar_decompose(&projector).unwrap();
    println!("\nprojector |0><0| singular values: {:?}", factors.diag);
    let defect = (&(&factors.left.adjoint() * &factors.left) - &ComplexMatrix::identity(2))
        .frobenius_norm();
    println!("left factor unitarity defect: {defect:.2e}");
}
