//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Every tolerance is pinned here; the criteria double as the regression
//! gate for the numerical core.

use std::process::Command;
use std::time::{Duration, Instant};

use fidelity_frontier::{
    bound_check, ellipse_params, ellipse_residual, fidelity_pair, frontier_curve,
    hermitian_eigensystem, mc_estimation_fidelity, mc_moment_operator, mc_operation_fidelity,
    moment_operator, optimal_guesses, optimal_schmidt, random_operation,
    teleport_estimation_fidelity, teleport_fidelity, teleport_tradeoff_check, GParameter,
    QuantumOperation, SchmidtSpectrum,
};

struct Criterion {
    number: u32,
    description: &'static str,
    budget: Duration,
    started: Instant,
}

impl Criterion {
    fn start(number: u32, description: &'static str, budget: Duration) -> Self {
        Self {
            number,
            description,
            budget,
            started: Instant::now(),
        }
    }

    fn finish(self) {
        let elapsed = self.started.elapsed();
        println!(
            "acceptance {:>2} PASS [{:>8.3?}]: {}",
            self.number, elapsed, self.description
        );
        assert!(
            elapsed <= self.budget,
            "criterion {} exceeded its {:?} runtime budget: {:?}",
            self.number,
            self.budget,
            elapsed
        );
    }
}

fn seeded_random_op(seed: u64, max_dim: usize, max_outcomes: usize) -> QuantumOperation {
    let dim = 2 + (seed % (max_dim as u64 - 1)) as usize;
    let n = 1 + (seed % max_outcomes as u64) as usize;
    random_operation(dim, n, seed)
}

#[test]
fn acceptance_1_endpoint_exactness() {
    let c = Criterion::start(
        1,
        "identity gives (F, G) = (1, 1/d), projective measurement (2/(d+1), 2/(d+1)), to 1e-12",
        Duration::from_secs(1),
    );
    for dim in [2usize, 3, 4, 8] {
        let d = dim as f64;

        let pair = fidelity_pair(&QuantumOperation::identity(dim)).unwrap();
        assert!((pair.operation - 1.0).abs() <= 1e-12, "d={dim}");
        assert!((pair.estimation - 1.0 / d).abs() <= 1e-12, "d={dim}");

        let pair = fidelity_pair(&QuantumOperation::projective_measurement(dim)).unwrap();
        let expected = 2.0 / (d + 1.0);
        assert!((pair.operation - expected).abs() <= 1e-12, "d={dim}");
        assert!((pair.estimation - expected).abs() <= 1e-12, "d={dim}");
    }
    c.finish();
}

#[test]
fn acceptance_2_frontier_saturation() {
    let c = Criterion::start(
        2,
        "extremal operations saturate the bound (|slack| <= 1e-10) on a 21-point g grid, d in {2,3,4,8}",
        Duration::from_secs(5),
    );
    for dim in [2usize, 3, 4, 8] {
        let d = dim as f64;
        for k in 0..=20 {
            let g = 1.0 + (d - 1.0) * k as f64 / 20.0;
            let param = GParameter::from_value(g, dim).unwrap();
            let op = fidelity_frontier::extremal_operation(&param);
            let pair = fidelity_pair(&op).unwrap();
            let verdict = bound_check(pair.operation, pair.estimation, dim, 1e-10).unwrap();
            assert!(
                verdict.slack.abs() <= 1e-10,
                "d={dim} g={g}: slack {}",
                verdict.slack
            );
        }
    }
    c.finish();
}

#[test]
fn acceptance_3_bound_soundness() {
    let c = Criterion::start(
        3,
        "10^4 seeded random operations (d <= 6, N <= 12) never violate the bound at tol 1e-9",
        Duration::from_secs(120),
    );
    for seed in 0..10_000u64 {
        let op = seeded_random_op(seed, 6, 12);
        let pair = fidelity_pair(&op).unwrap();
        let verdict = bound_check(pair.operation, pair.estimation, op.dim(), 1e-9).unwrap();
        assert!(
            verdict.satisfied,
            "seed {seed} (d={}, N={}): slack {}",
            op.dim(),
            op.n_outcomes(),
            verdict.slack
        );
    }
    c.finish();
}

#[test]
fn acceptance_4_oracle_agreement() {
    let c = Criterion::start(
        4,
        "closed-form F and G within 4 standard errors of the Haar Monte Carlo oracle in >= 95% of 50 operations",
        Duration::from_secs(300),
    );
    let samples = 100_000;
    let mut f_agree = 0;
    let mut g_agree = 0;
    for seed in 0..50u64 {
        let dim = 2 + (seed % 4) as usize; // d in {2,3,4,5}
        let n = 1 + (seed % 10) as usize;
        let op = random_operation(dim, n, seed);

        let closed_f = fidelity_frontier::operation_fidelity(&op).unwrap();
        let mc_f = mc_operation_fidelity(&op, samples, 1_000 + seed);
        if (closed_f - mc_f.mean).abs() <= 4.0 * mc_f.std_error + 1e-12 {
            f_agree += 1;
        }

        let closed_g = fidelity_frontier::estimation_fidelity_optimal(&op).unwrap();
        let guesses = optimal_guesses(&op).unwrap();
        let mc_g = mc_estimation_fidelity(&op, &guesses, samples, 2_000 + seed).unwrap();
        if (closed_g - mc_g.mean).abs() <= 4.0 * mc_g.std_error + 1e-12 {
            g_agree += 1;
        }
    }
    assert!(f_agree >= 48, "only {f_agree}/50 F agreements");
    assert!(g_agree >= 48, "only {g_agree}/50 G agreements");
    c.finish();
}

#[test]
fn acceptance_5_moment_operator() {
    let c = Criterion::start(
        5,
        "Monte Carlo moment operators M_00, M_01 match (delta_ij I + |i><j|)/(d(d+1)) within 5e-3 Frobenius at 10^6 samples",
        Duration::from_secs(60),
    );
    for dim in [2usize, 3] {
        for (i, j) in [(0usize, 0usize), (0, 1)] {
            let mc = mc_moment_operator(dim, i, j, 1_000_000, 42).unwrap();
            let closed = moment_operator(dim, i, j).unwrap();
            let diff = (&mc - &closed).frobenius_norm();
            assert!(diff <= 5e-3, "d={dim} M_{i}{j}: Frobenius diff {diff}");
        }
    }
    c.finish();
}

#[test]
fn acceptance_6_ellipse_boundary() {
    let c = Criterion::start(
        6,
        "frontier curves lie on the boundary ellipse (|residual| <= 1e-10) and (F0, G0) match exactly",
        Duration::from_secs(1),
    );
    for dim in [2usize, 4, 8] {
        for point in frontier_curve(dim, 101).unwrap() {
            let residual = ellipse_residual(point.f_max, point.g, dim);
            assert!(
                residual.abs() <= 1e-10,
                "d={dim} G={}: residual {residual}",
                point.g
            );
        }
        let params = ellipse_params(dim);
        let d = dim as f64;
        assert_eq!(params.f0, (d + 2.0) / (2.0 * d + 2.0));
        assert_eq!(params.g0, 3.0 / (2.0 * d + 2.0));
    }
    c.finish();
}

#[test]
fn acceptance_7_rescaled_figure_curve() {
    let c = Criterion::start(
        7,
        "rescaled CLI frontier curves for d in {2,4,8} start at (1/d, d) and end at (1, 1), to 1e-12",
        Duration::from_secs(1),
    );
    let dir = tempfile::tempdir().unwrap();
    for dim in [2usize, 4, 8] {
        let out = dir.path().join(format!("curve_{dim}.csv"));
        let status = Command::new(env!("CARGO_BIN_EXE_fidelity-frontier"))
            .args([
                "frontier",
                "--dim",
                &dim.to_string(),
                "--points",
                "101",
                "--out",
                out.to_str().unwrap(),
                "--rescale",
            ])
            .status()
            .unwrap();
        assert!(status.success());

        let text = std::fs::read_to_string(&out).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("G,F_max"));
        let rows: Vec<(f64, f64)> = lines
            .map(|line| {
                let (g, f) = line.split_once(',').unwrap();
                (g.parse().unwrap(), f.parse().unwrap())
            })
            .collect();
        assert_eq!(rows.len(), 101);

        let d = dim as f64;
        let (first_g, first_f) = rows[0];
        assert!((first_g - 1.0 / d).abs() <= 1e-12, "d={dim}: {first_g}");
        assert!((first_f - d).abs() <= 1e-12, "d={dim}: {first_f}");
        let (last_g, last_f) = rows[100];
        assert!((last_g - 1.0).abs() <= 1e-12, "d={dim}: {last_g}");
        assert!((last_f - 1.0).abs() <= 1e-12, "d={dim}: {last_f}");
    }
    c.finish();
}

#[test]
fn acceptance_8_teleportation_saturation() {
    let c = Criterion::start(
        8,
        "optimal Schmidt spectra saturate the bound over 50 mu_0 values per d, endpoints exact",
        Duration::from_secs(1),
    );
    for dim in [2usize, 3, 4, 8] {
        let d = dim as f64;
        let lo = 1.0 / d.sqrt();
        for k in 0..50 {
            let mu0 = lo + (1.0 - lo) * k as f64 / 49.0;
            let spectrum = optimal_schmidt(mu0, dim).unwrap();
            let verdict = teleport_tradeoff_check(&spectrum, 1e-10).unwrap();
            assert!(
                verdict.slack.abs() <= 1e-10,
                "d={dim} mu0={mu0}: slack {}",
                verdict.slack
            );
        }

        // product state: both fidelities equal 2/(d+1) exactly
        let mut product = vec![0.0; dim];
        product[0] = 1.0;
        let product = SchmidtSpectrum::new(product).unwrap();
        assert_eq!(teleport_fidelity(&product), 2.0 / (d + 1.0));
        assert_eq!(teleport_estimation_fidelity(&product), 2.0 / (d + 1.0));

        // maximally entangled state: (1, (1 + 1/d)/(d+1)); sqrt(d) round
        // trips through floating point, so exactness here means <= 2 ulp
        let entangled = SchmidtSpectrum::new(vec![lo; dim]).unwrap();
        assert!((teleport_fidelity(&entangled) - 1.0).abs() <= 1e-15);
        let expected = (1.0 + 1.0 / d) / (d + 1.0);
        assert!((teleport_estimation_fidelity(&entangled) - expected).abs() <= 1e-15);
    }
    c.finish();
}

#[test]
fn acceptance_9_canonicalization() {
    let c = Criterion::start(
        9,
        "over 100 random operations canonicalization never lowers F, preserves G and spectra, and yields PSD Hermitian Kraus operators",
        Duration::from_secs(60),
    );
    for seed in 0..100u64 {
        let op = seeded_random_op(seed, 6, 8);
        let canon = op.canonicalize().unwrap();

        let before = fidelity_pair(&op).unwrap();
        let after = fidelity_pair(&canon).unwrap();
        assert!(
            after.operation >= before.operation - 1e-12,
            "seed {seed}: F dropped {} -> {}",
            before.operation,
            after.operation
        );
        assert!(
            (after.estimation - before.estimation).abs() <= 1e-10,
            "seed {seed}: G changed"
        );

        let spectra_before = op.singular_spectra().unwrap();
        let spectra_after = canon.singular_spectra().unwrap();
        for (x, y) in spectra_before
            .per_outcome()
            .iter()
            .zip(spectra_after.per_outcome())
        {
            for (a, b) in x.iter().zip(y) {
                assert!((a - b).abs() <= 1e-10, "seed {seed}: spectrum changed");
            }
        }

        for kraus in canon.kraus() {
            assert!(kraus.hermiticity_deviation() <= 1e-9, "seed {seed}");
            let eigen = hermitian_eigensystem(kraus).unwrap();
            let min = eigen.eigenvalues.last().copied().unwrap();
            assert!(min >= -1e-9, "seed {seed}: min eigenvalue {min}");
        }
    }
    c.finish();
}
