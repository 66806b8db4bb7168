//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a requested check fails (completeness
//! residual above tolerance, Monte Carlo disagreement), 2 on usage or parse
//! errors.

use clap::{Parser, Subcommand};
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::fidelity::{
    estimation_fidelity_optimal, fidelity_pair, mc_estimation_fidelity, mc_operation_fidelity,
    operation_fidelity, optimal_guesses, McEstimate,
};
use crate::frontier::{
    bound_check, ellipse_residual, extremal_operation, frontier_curve, GParameter,
};
use crate::operation::{QuantumOperation, COMPLETENESS_TOL};
use crate::teleport::{
    optimal_schmidt, teleport_estimation_fidelity, teleport_fidelity, teleport_tradeoff_check,
    SchmidtSpectrum,
};

/// Tolerance used when printing bound verdicts.
const BOUND_TOL: f64 = 1e-9;

/// Floating-point floor added to the 4-sigma window so that zero-variance
/// estimators (e.g. the identity operation) compare equal.
const MC_ABS_SLOP: f64 = 1e-12;

#[derive(Parser)]
#[command(
    name = "fidelity-frontier",
    about = "Fidelity trade-offs of trace-preserving quantum operations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the completeness relation of an operation file
    Validate {
        /// Operation JSON file
        input: PathBuf,
        /// Largest acceptable completeness residual
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Compute operation and optimal estimation fidelity of an operation file
    Fidelity {
        /// Operation JSON file
        input: PathBuf,
        /// Also run Monte Carlo estimates with this many Haar samples
        #[arg(long)]
        mc_samples: Option<usize>,
        /// Monte Carlo seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write the allowed-region boundary as CSV
    Frontier {
        /// System dimension d
        #[arg(long)]
        dim: usize,
        /// Number of grid points
        #[arg(long)]
        points: usize,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
        /// Emit rescaled coordinates ((d+1)G - 1, (d+1)F - 1)
        #[arg(long)]
        rescale: bool,
    },
    /// Write a bound-saturating operation as JSON
    Extremal {
        /// System dimension d
        #[arg(long)]
        dim: usize,
        /// Frontier parameter g in [1, d]
        #[arg(long)]
        g: f64,
        /// Output JSON path
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate teleportation fidelities of a Schmidt spectrum
    Teleport {
        /// Schmidt rank / system dimension d
        #[arg(long)]
        dim: usize,
        /// Largest Schmidt coefficient; uses the optimal flat-tail family
        #[arg(long)]
        mu0: Option<f64>,
        /// Comma-separated Schmidt coefficients (normalized before use)
        #[arg(long)]
        schmidt: Option<String>,
    },
    /// Cross-check closed-form fidelities against the Monte Carlo oracle
    McCheck {
        /// Operation JSON file
        #[arg(long)]
        input: PathBuf,
        /// Number of Haar samples
        #[arg(long)]
        samples: usize,
        /// Monte Carlo seed
        #[arg(long)]
        seed: u64,
        /// Rayon worker threads (results do not depend on this)
        #[arg(long)]
        workers: Option<usize>,
    },
}

/// Parses arguments and dispatches; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Validate { input, tol } => cmd_validate(&input, tol),
        Command::Fidelity {
            input,
            mc_samples,
            seed,
        } => cmd_fidelity(&input, mc_samples, seed),
        Command::Frontier {
            dim,
            points,
            out,
            rescale,
        } => cmd_frontier(dim, points, &out, rescale),
        Command::Extremal { dim, g, out } => cmd_extremal(dim, g, &out),
        Command::Teleport { dim, mu0, schmidt } => cmd_teleport(dim, mu0, schmidt.as_deref()),
        Command::McCheck {
            input,
            samples,
            seed,
            workers,
        } => cmd_mc_check(&input, samples, seed, workers),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidOperation { .. } => 1,
                _ => 2,
            }
        }
    }
}

fn cmd_validate(input: &Path, tol: f64) -> Result<i32> {
    let op = QuantumOperation::read_json_file(input)?;
    let residual = op.completeness_residual();
    println!("residual {residual:.3e}");
    Ok(if residual <= tol { 0 } else { 1 })
}

fn cmd_fidelity(input: &Path, mc_samples: Option<usize>, seed: u64) -> Result<i32> {
    let op = QuantumOperation::read_json_file(input)?;
    op.validate(COMPLETENESS_TOL)?;
    let pair = fidelity_pair(&op)?;
    let verdict = bound_check(pair.operation, pair.estimation, op.dim(), BOUND_TOL)?;
    println!("d        {}", op.dim());
    println!("outcomes {}", op.n_outcomes());
    println!("F        {:.6}", pair.operation);
    println!("G_opt    {:.6}", pair.estimation);
    println!("slack    {:.3e}", verdict.slack);
    println!(
        "bound    {}",
        if verdict.satisfied { "satisfied" } else { "violated" }
    );
    if let Some(samples) = mc_samples {
        check_sample_count(samples)?;
        let f_mc = mc_operation_fidelity(&op, samples, seed);
        let guesses = optimal_guesses(&op)?;
        let g_mc = mc_estimation_fidelity(&op, &guesses, samples, seed)?;
        println!(
            "F_mc     {:.6} +/- {:.6}  ({samples} samples, seed {seed})",
            f_mc.mean, f_mc.std_error
        );
        println!(
            "G_mc     {:.6} +/- {:.6}  ({samples} samples, seed {seed})",
            g_mc.mean, g_mc.std_error
        );
    }
    Ok(0)
}

fn cmd_frontier(dim: usize, points: usize, out: &Path, rescale: bool) -> Result<i32> {
    let curve = frontier_curve(dim, points)?;
    let max_residual = curve
        .iter()
        .map(|p| ellipse_residual(p.f_max, p.g, dim).abs())
        .fold(0.0, f64::max);

    let mut text = String::from("G,F_max\n");
    let scale = dim as f64 + 1.0;
    for p in &curve {
        let (g, f) = if rescale {
            (scale * p.g - 1.0, scale * p.f_max - 1.0)
        } else {
            (p.g, p.f_max)
        };
        text.push_str(&format!("{},{}\n", format_sig12(g), format_sig12(f)));
    }
    std::fs::write(out, text)?;
    println!("wrote {} ({} points, d={})", out.display(), points, dim);
    println!("max |ellipse residual| {max_residual:.3e}");
    Ok(0)
}

fn cmd_extremal(dim: usize, g: f64, out: &Path) -> Result<i32> {
    let param = GParameter::from_value(g, dim)?;
    let op = extremal_operation(&param);
    op.write_json_file(out)?;
    let pair = fidelity_pair(&op)?;
    let verdict = bound_check(pair.operation, pair.estimation, dim, BOUND_TOL)?;
    println!(
        "wrote {} (d={dim}, g={g}, {} outcomes)",
        out.display(),
        op.n_outcomes()
    );
    println!("F        {:.6}", pair.operation);
    println!("G_opt    {:.6}", pair.estimation);
    println!("slack    {:.3e}", verdict.slack);
    Ok(0)
}

fn cmd_teleport(dim: usize, mu0: Option<f64>, schmidt: Option<&str>) -> Result<i32> {
    let spectrum = match (mu0, schmidt) {
        (Some(mu0), None) => optimal_schmidt(mu0, dim)?,
        (None, Some(list)) => parse_schmidt(list, dim)?,
        _ => {
            return Err(Error::DomainError(
                "exactly one of --mu0 and --schmidt is required".into(),
            ))
        }
    };
    let f_tele = teleport_fidelity(&spectrum);
    let g_tele = teleport_estimation_fidelity(&spectrum);
    let verdict = teleport_tradeoff_check(&spectrum, BOUND_TOL)?;
    let coefficients: Vec<String> = spectrum
        .coefficients()
        .iter()
        .map(|c| format_sig12(*c))
        .collect();
    println!("d        {dim}");
    println!("mu       {}", coefficients.join(", "));
    println!("F_tele   {f_tele:.6}");
    println!("G_tele   {g_tele:.6}");
    println!("slack    {:.3e}", verdict.slack);
    println!(
        "bound    {}",
        if verdict.satisfied { "satisfied" } else { "violated" }
    );
    Ok(0)
}

fn parse_schmidt(list: &str, dim: usize) -> Result<SchmidtSpectrum> {
    let mut coefficients = Vec::new();
    for token in list.split(',') {
        let value: f64 = token.trim().parse().map_err(|_| {
            Error::InvalidSpectrum(format!("could not parse coefficient '{}'", token.trim()))
        })?;
        coefficients.push(value);
    }
    if coefficients.len() != dim {
        return Err(Error::InvalidSpectrum(format!(
            "expected {dim} coefficients, got {}",
            coefficients.len()
        )));
    }
    // the CLI accepts unnormalized lists and scales them to unit square sum
    let square_sum: f64 = coefficients.iter().map(|c| c * c).sum();
    if !square_sum.is_finite() || square_sum <= 0.0 {
        return Err(Error::InvalidSpectrum(
            "coefficients must have a positive, finite norm".into(),
        ));
    }
    let inv = 1.0 / square_sum.sqrt();
    SchmidtSpectrum::new(coefficients.into_iter().map(|c| c * inv).collect())
}

fn check_sample_count(samples: usize) -> Result<()> {
    if samples == 0 {
        return Err(Error::DomainError("need at least one sample".into()));
    }
    Ok(())
}

fn cmd_mc_check(input: &Path, samples: usize, seed: u64, workers: Option<usize>) -> Result<i32> {
    check_sample_count(samples)?;
    let op = QuantumOperation::read_json_file(input)?;
    op.validate(COMPLETENESS_TOL)?;

    let evaluate = || -> Result<(f64, McEstimate, f64, McEstimate)> {
        let closed_f = operation_fidelity(&op)?;
        let mc_f = mc_operation_fidelity(&op, samples, seed);
        let closed_g = estimation_fidelity_optimal(&op)?;
        let guesses = optimal_guesses(&op)?;
        let mc_g = mc_estimation_fidelity(&op, &guesses, samples, seed)?;
        Ok((closed_f, mc_f, closed_g, mc_g))
    };
    let (closed_f, mc_f, closed_g, mc_g) = match workers {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::DomainError(format!("could not build thread pool: {e}")))?
            .install(evaluate)?,
        None => evaluate()?,
    };

    let f_ok = (closed_f - mc_f.mean).abs() <= 4.0 * mc_f.std_error + MC_ABS_SLOP;
    let g_ok = (closed_g - mc_g.mean).abs() <= 4.0 * mc_g.std_error + MC_ABS_SLOP;
    print_mc_line("F", closed_f, &mc_f, f_ok);
    print_mc_line("G", closed_g, &mc_g, g_ok);
    println!(
        "agreement {}",
        if f_ok && g_ok { "confirmed" } else { "FAILED" }
    );
    Ok(if f_ok && g_ok { 0 } else { 1 })
}

fn print_mc_line(label: &str, closed: f64, mc: &McEstimate, ok: bool) {
    println!(
        "{label} closed {closed:.6}  mc {:.6} +/- {:.6}  within 4 sigma: {}",
        mc.mean,
        mc.std_error,
        if ok { "yes" } else { "NO" }
    );
}

/// Plain decimal representation with 12 significant digits.
fn format_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (11 - exponent).max(0) as usize;
    format!("{x:.decimals$}")
}
