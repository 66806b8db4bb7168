//! Teleportation with nonmaximally entangled states.
//!
//! A shared Schmidt spectrum {mu_k} caps the teleportation fidelity at
//! (1 + (sum mu_k)^2)/(d+1) and lets the sender estimate the teleported
//! state with fidelity up to (1 + mu_0^2)/(d+1). Teleportation is a quantum
//! operation, so the pair obeys the same trade-off bound; the flat-tail
//! family saturates it.
//!
//! Run with: cargo run --example teleportation_tradeoff

use fidelity_frontier::{
    optimal_schmidt, teleport_estimation_fidelity, teleport_fidelity, teleport_tradeoff_check,
    SchmidtSpectrum,
};

fn main() {
    let dim = 3;
    let lo = 1.0 / (dim as f64).sqrt();
    println!("optimal flat-tail family, d={dim}:");
    println!("   mu_0     F_tele   G_tele   slack");
    for k in 0..=6 {
        let mu0 = lo + (1.0 - lo) * k as f64 / 6.0;
        let spectrum = optimal_schmidt(mu0, dim).unwrap();
        let verdict = teleport_tradeoff_check(&spectrum, 1e-10).unwrap();
        println!(
            "  {mu0:.4}  {:.6}  {:.6}  {:+.2e}",
            teleport_fidelity(&spectrum),
            teleport_estimation_fidelity(&spectrum),
            verdict.slack
        );
    }
    println!("(mu_0 = 1/sqrt(d) is maximally entangled: perfect teleportation, no information;");
    println!(" mu_0 = 1 is a product state: everything measured, nothing teleported)");

    // an unequal tail with the same mu_0 falls strictly inside the region
    let uneven = SchmidtSpectrum::new(vec![0.8, 0.55, (1.0f64 - 0.64 - 0.3025).sqrt()]).unwrap();
    let flat = optimal_schmidt(0.8, dim).unwrap();
    println!(
        "\nmu_0 = 0.8: flat tail F_tele = {:.6}, uneven tail F_tele = {:.6}",
        teleport_fidelity(&flat),
        teleport_fidelity(&uneven)
    );
    let verdict = teleport_tradeoff_check(&uneven, 1e-10).unwrap();
    println!("uneven tail slack {:+.6} (inside the region)", verdict.slack);
}
