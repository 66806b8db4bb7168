//! The boundary of the quantum-mechanically allowed (G, F) region.
//!
//! For each estimation fidelity G in [1/d, 2/(d+1)] there is a largest
//! compatible operation fidelity F_max(G); the boundary is a fragment of an
//! ellipse. This prints a small table per dimension and verifies the
//! ellipse residual vanishes along it.
//!
//! Run with: cargo run --example frontier_curve

use fidelity_frontier::{ellipse_params, ellipse_residual, frontier_curve};

fn main() {
    for d in [2usize, 4, 8] {
        let params = ellipse_params(d);
        println!(
            "d={d}: ellipse center (F0, G0) = ({:.6}, {:.6})",
            params.f0, params.g0
        );
        println!("      G        F_max    |ellipse residual|");
        let curve = frontier_curve(d, 5).unwrap();
        for point in &curve {
            println!(
                "  {:.6}  {:.6}  {:.3e}",
                point.g,
                point.f_max,
                ellipse_residual(point.f_max, point.g, d).abs()
            );
        }
        println!();
    }
    println!("(the fidelity-frontier binary exports denser grids as CSV,");
    println!(" including the rescaled axes ((d+1)G - 1, (d+1)F - 1))");
}
