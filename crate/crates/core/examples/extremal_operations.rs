//! Operations that saturate the fidelity trade-off bound.
//!
//! For every g in [1, d] the d-outcome family
//! `A_r = sqrt(g/d) P_r + sqrt((d-g)/(d(d-1))) (I - P_r)` sits exactly on
//! the frontier: no operation with the same estimation fidelity preserves
//! the input any better.
//!
//! Run with: cargo run --example extremal_operations

use fidelity_frontier::{bound_check, extremal_operation, fidelity_pair, GParameter};

fn main() {
    let dim = 3;
    println!("extremal family for d={dim}:");
    println!("    g        G        F        slack");
    for k in 0..=8 {
        let g = 1.0 + (dim as f64 - 1.0) * k as f64 / 8.0;
        let param = GParameter::from_value(g, dim).unwrap();
        let op = extremal_operation(&param);
        let pair = fidelity_pair(&op).unwrap();
        let verdict = bound_check(pair.operation, pair.estimation, dim, 1e-10).unwrap();
        println!(
            "  {g:.3}  {:.6}  {:.6}  {:+.2e}",
            pair.estimation, pair.operation, verdict.slack
        );
    }

    // the two endpoints are familiar operations
    let identity_like = extremal_operation(&GParameter::from_value(1.0, dim).unwrap());
    println!(
        "\ng=1 Kraus operators are I/sqrt(d): first entry {:.6}",
        identity_like.kraus()[0].get(0, 0).re
    );
    let projective = extremal_operation(&GParameter::from_value(dim as f64, dim).unwrap());
    println!(
        "g=d Kraus operators are basis projectors: first row {:?}",
        (0..dim)
            .map(|j| projective.kraus()[0].get(0, j).re)
            .collect::<Vec<_>>()
    );
}
