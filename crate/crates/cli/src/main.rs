//! Command-line front end: verification pipelines, spectrum dumps, the
//! contraction comparator, and curvature grid scans.
//!
//! Exit codes: 0 = verified / dominated, 2 = computation succeeded but the
//! inequality did not verify, 1 = execution error.

mod config;
mod report;

use std::path::PathBuf;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use warpspec::gauss::{verify_gaussian, GaussMode, GaussSettings, PotentialCache, TorpedoParams};
use warpspec::geometry::{
    bakry_emery_frame, interior_grid, RadialWeightedManifold,
};
use warpspec::numerics::{QuadratureRule, Rational};
use warpspec::spectral::{
    compare_spectra, compute_spectrum_with_count, reference_spectrum, Geometry, ReferenceKind,
    Spectrum, SpectrumEntry,
};
use warpspec::sphere::{
    choose_eps, choose_k, ricci_closed_form, verify_sphere, SphereMode, SphereParams,
    SphereSettings,
};

use config::RunConfig;
use report::{emit, fmt_f64, to_json, ReportEnvelope};

#[derive(Parser)]
#[command(name = "warpspec", version, about = "Curvature and spectral-gap verification for warped-product and weighted manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Human,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Certificate,
    FullSpectrum,
}

#[derive(Args)]
struct CommonOpts {
    /// Flat key=value config file; flags override its entries.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Write output here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Include wall-clock timing in the report (breaks byte-for-byte
    /// reproducibility of the output).
    #[arg(long)]
    timing: bool,
    /// Quadrature tolerance override.
    #[arg(long)]
    tolerance: Option<f64>,
    /// Seed for randomized witness sets.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the perturbed-sphere eigenvalue counterexample.
    Sphere {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long)]
        d: Option<u32>,
        /// Harmonic degree; picked by the exact moment scan when absent.
        #[arg(long)]
        k: Option<u32>,
        /// Perturbation size as a decimal (exact); ladder-selected when absent.
        #[arg(long)]
        eps: Option<String>,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        /// Sector grid for full-spectrum mode.
        #[arg(long)]
        grid_n: Option<usize>,
        /// Curvature certification grid.
        #[arg(long)]
        curvature_grid: Option<usize>,
    },
    /// Verify the weighted torpedo-cylinder counterexample.
    Gauss {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        eps: Option<String>,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        #[arg(long)]
        grid_n: Option<usize>,
        #[arg(long)]
        curvature_grid: Option<usize>,
        #[arg(long)]
        rmax: Option<f64>,
        /// Run the flat Gaussian model space instead (no counterexample).
        #[arg(long)]
        reference: Option<String>,
    },
    /// Emit an assembled or closed-form spectrum.
    Spectrum {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long)]
        geometry: String,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        eps: Option<String>,
        /// Einstein constant for the round-sphere reference.
        #[arg(long)]
        rho: Option<f64>,
        /// Number of indexed eigenvalues to emit.
        #[arg(long)]
        count: Option<u64>,
        #[arg(long)]
        grid_n: Option<usize>,
        #[arg(long)]
        rmax: Option<f64>,
        /// Cap the sector-enumeration threshold instead of growing it until
        /// the requested count is certified.
        #[arg(long)]
        lambda_max: Option<f64>,
    },
    /// Check the contraction-principle domination between two spectra.
    Compare {
        #[command(flatten)]
        common: CommonOpts,
        /// Spectrum of the model (source) space.
        #[arg(long)]
        source: PathBuf,
        /// Spectrum of the target space.
        #[arg(long)]
        target: PathBuf,
        /// Lipschitz constant of the hypothetical transport map.
        #[arg(long, default_value_t = 1.0)]
        lipschitz: f64,
    },
    /// Dump frame curvature values over a grid as CSV.
    Ricci {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long)]
        geometry: String,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        eps: Option<String>,
        #[arg(long)]
        grid_n: Option<usize>,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            1
        }
    };
    std::process::exit(code);
}

fn resolve_config(common: &CommonOpts) -> Result<RunConfig> {
    let mut cfg = RunConfig::default();
    cfg.apply_env()?;
    if let Some(path) = &common.config {
        cfg.apply_file(path)?;
    }
    if let Some(t) = common.tolerance {
        if !(t > 0.0) {
            bail!("tolerance must be positive");
        }
        cfg.tolerance = t;
    }
    if let Some(s) = common.seed {
        cfg.seed = s;
    }
    Ok(cfg)
}

fn parse_eps(text: &str) -> Result<Rational> {
    Rational::from_decimal_str(text).ok_or_else(|| anyhow!("eps is not a decimal literal: {text}"))
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Sphere { common, d, k, eps, mode, grid_n, curvature_grid } => {
            let started = Instant::now();
            let mut cfg = resolve_config(&common)?;
            if let Some(d) = d {
                cfg.d = d;
            }
            if let Some(k) = k {
                cfg.k = Some(k);
            }
            if let Some(e) = eps {
                cfg.eps = Some(e);
            }
            if let Some(n) = grid_n {
                cfg.grid_n = n;
            }
            if let Some(n) = curvature_grid {
                cfg.curvature_grid = n;
            }
            cfg.full_spectrum = matches!(mode, Some(Mode::FullSpectrum)) || cfg.full_spectrum;
            if cfg.d < 4 {
                bail!("the sphere construction needs d >= 4 (got {})", cfg.d);
            }
            let rule = QuadratureRule::with_tolerance(cfg.tolerance);
            let k = match cfg.k {
                Some(k) => k,
                None => choose_k(cfg.d)?,
            };
            let eps = match &cfg.eps {
                Some(text) => parse_eps(text)?,
                None => choose_eps(cfg.d, k, &rule)?.0,
            };
            if eps.is_negative() {
                bail!("eps must be nonnegative");
            }
            let params = SphereParams::with_eps(cfg.d, k, eps);
            let settings = SphereSettings {
                curvature_grid: cfg.curvature_grid,
                endpoint_margin: 1e-4,
                quadrature: rule,
                sector_grid: cfg.grid_n,
                seed: cfg.seed,
            };
            let mode = if cfg.full_spectrum {
                SphereMode::FullSpectrum
            } else {
                SphereMode::Certificate
            };
            let report = verify_sphere(&params, mode, &settings)?;
            let verdict = if report.passed {
                "counterexample-verified"
            } else {
                "not-verified"
            };
            let mut envelope = ReportEnvelope::new("sphere", cfg.echo(), verdict, &report);
            if common.timing {
                envelope.timing_ms = Some(started.elapsed().as_millis());
            }
            let format = common.format.unwrap_or(OutputFormat::Human);
            let text = match format {
                OutputFormat::Json => to_json(&envelope)?,
                _ => human_stages(
                    "sphere",
                    verdict,
                    &[
                        ("d", report.d.to_string()),
                        ("k", report.k.to_string()),
                        ("eps", format!("{} ({})", fmt_f64(report.eps), report.eps_exact)),
                        ("rho_eps", fmt_f64(report.rho_eps)),
                        ("index_K", report.index_k.to_string()),
                        ("lambda_K_can", fmt_f64(report.lambda_k_can)),
                        ("rayleigh_fk", fmt_f64(report.rayleigh_fk)),
                        ("ricci_min", fmt_f64(report.ricci_min)),
                        (
                            "lambda_K_computed",
                            report
                                .spectrum_lambda_k
                                .map(fmt_f64)
                                .unwrap_or_else(|| "not-computed".into()),
                        ),
                    ],
                    &report.stages,
                ),
            };
            emit(common.output.as_deref(), &text)?;
            Ok(if report.passed { 0 } else { 2 })
        }
        Command::Gauss { common, d, eps, mode, grid_n, curvature_grid, rmax, reference } => {
            let started = Instant::now();
            let mut cfg = resolve_config(&common)?;
            if let Some(d) = d {
                cfg.d = d;
            }
            if let Some(e) = eps {
                cfg.eps = Some(e);
            }
            if let Some(n) = grid_n {
                cfg.grid_n = n;
            }
            if let Some(n) = curvature_grid {
                cfg.curvature_grid = n;
            }
            if let Some(r) = rmax {
                cfg.rmax = Some(r);
            }
            cfg.full_spectrum = matches!(mode, Some(Mode::FullSpectrum)) || cfg.full_spectrum;

            if let Some(name) = reference {
                if name != "euclidean" {
                    bail!("unknown reference geometry: {name}");
                }
                return run_gauss_reference(&common, &cfg, started);
            }

            if cfg.d < 4 {
                bail!("the torpedo construction needs d >= 4 (got {})", cfg.d);
            }
            let eps: f64 = match &cfg.eps {
                Some(text) => parse_eps(text)?.to_f64(),
                None => 0.05,
            };
            let params = match cfg.rmax {
                Some(r) => TorpedoParams::with_rmax(cfg.d, eps, r)?,
                None => TorpedoParams::new(cfg.d, eps)?,
            };
            let settings = GaussSettings {
                curvature_grid: cfg.curvature_grid,
                endpoint_margin: 1e-4,
                quadrature: QuadratureRule::with_tolerance(cfg.tolerance),
                sector_grid: cfg.grid_n,
            };
            let mode = if cfg.full_spectrum {
                GaussMode::FullSpectrum
            } else {
                GaussMode::Certificate
            };
            let report = verify_gaussian(&params, mode, &settings)?;
            let verdict = if report.passed {
                "counterexample-verified"
            } else {
                "not-verified"
            };
            let mut envelope = ReportEnvelope::new("gauss", cfg.echo(), verdict, &report);
            if common.timing {
                envelope.timing_ms = Some(started.elapsed().as_millis());
            }
            let format = common.format.unwrap_or(OutputFormat::Human);
            let text = match format {
                OutputFormat::Json => to_json(&envelope)?,
                _ => human_stages(
                    "gauss",
                    verdict,
                    &[
                        ("d", report.d.to_string()),
                        ("eps", fmt_f64(report.eps)),
                        ("delta", fmt_f64(report.delta)),
                        ("cd_min", fmt_f64(report.cd_min)),
                        ("rayleigh_u", fmt_f64(report.rayleigh_u)),
                        ("rayleigh_b", fmt_f64(report.rayleigh_b)),
                        ("lambda_bound", fmt_f64(report.lambda_d_plus_2_bound)),
                        (
                            "lambda_computed",
                            report
                                .spectrum_lambda_d_plus_2
                                .map(fmt_f64)
                                .unwrap_or_else(|| "not-computed".into()),
                        ),
                    ],
                    &report.stages,
                ),
            };
            emit(common.output.as_deref(), &text)?;
            Ok(if report.passed { 0 } else { 2 })
        }
        Command::Spectrum { common, geometry, d, eps, rho, count, grid_n, rmax, lambda_max } => {
            let mut cfg = resolve_config(&common)?;
            if let Some(d) = d {
                cfg.d = d;
            }
            if let Some(e) = eps {
                cfg.eps = Some(e);
            }
            if let Some(c) = count {
                cfg.count = c;
            }
            if let Some(n) = grid_n {
                cfg.grid_n = n;
            }
            if let Some(r) = rmax {
                cfg.rmax = Some(r);
            }
            if let Some(l) = lambda_max {
                cfg.lambda_max = Some(l);
            }
            let spectrum = build_spectrum(&geometry, &cfg, rho)?;
            let format = common.format.unwrap_or(OutputFormat::Csv);
            let text = match format {
                OutputFormat::Json => {
                    let envelope = ReportEnvelope::new("spectrum", cfg.echo(), "emitted", &spectrum);
                    to_json(&envelope)?
                }
                _ => spectrum_csv(&spectrum, cfg.count),
            };
            emit(common.output.as_deref(), &text)?;
            Ok(0)
        }
        Command::Compare { common, source, target, lipschitz } => {
            let cfg = resolve_config(&common)?;
            if !(lipschitz > 0.0) {
                bail!("lipschitz constant must be positive");
            }
            let src = read_spectrum(&source)?;
            let tgt = read_spectrum(&target)?;
            let result = compare_spectra(&src, &tgt, lipschitz)?;
            let dominated = result.first_violation_index.is_none();
            let mut config = cfg.echo();
            config.insert("source".into(), source.display().to_string());
            config.insert("target".into(), target.display().to_string());
            config.insert("lipschitz".into(), lipschitz.to_string());
            let verdict = if dominated { "dominates" } else { "violated" };
            let envelope = ReportEnvelope::new("compare", config, verdict, &result);
            let format = common.format.unwrap_or(OutputFormat::Human);
            let text = match format {
                OutputFormat::Json => to_json(&envelope)?,
                _ => match result.first_violation_index {
                    None => format!("dominates over {} indices\n", result.horizon),
                    Some(k) => format!(
                        "violated at index {k} (gap {})\n",
                        fmt_f64(result.gap_at_violation.unwrap_or(f64::NAN))
                    ),
                },
            };
            emit(common.output.as_deref(), &text)?;
            Ok(if dominated { 0 } else { 2 })
        }
        Command::Ricci { common, geometry, d, eps, grid_n } => {
            let mut cfg = resolve_config(&common)?;
            if let Some(d) = d {
                cfg.d = d;
            }
            if let Some(e) = eps {
                cfg.eps = Some(e);
            }
            if let Some(n) = grid_n {
                cfg.grid_n = n;
            }
            let text = ricci_csv(&geometry, &cfg)?;
            emit(common.output.as_deref(), &text)?;
            Ok(0)
        }
    }
}

fn run_gauss_reference(common: &CommonOpts, cfg: &RunConfig, started: Instant) -> Result<i32> {
    // Flat Gaussian model space: the assembled spectrum must reproduce the
    // integer ladder, so the (d+2)-nd eigenvalue sits at 2 and there is no
    // counterexample.
    let d = cfg.d;
    let rmax = cfg.rmax.unwrap_or(12.0);
    let (spectrum, _) = warpspec::spectral::compute_spectrum(
        &Geometry::EuclideanGauss { d, rmax },
        4.5,
        d as u64 + 2,
        cfg.grid_n,
        true,
    )?;
    let lam = spectrum
        .value_at_index(d as u64 + 2)
        .ok_or_else(|| anyhow!("spectrum too short"))?;

    #[derive(Serialize)]
    struct ReferenceReport {
        d: u32,
        lambda_d_plus_2: f64,
        expected: f64,
        deviation: f64,
    }
    let report = ReferenceReport {
        d,
        lambda_d_plus_2: lam,
        expected: 2.0,
        deviation: (lam - 2.0).abs(),
    };
    let verdict = "model-space-no-counterexample";
    let mut envelope = ReportEnvelope::new("gauss", cfg.echo(), verdict, &report);
    if common.timing {
        envelope.timing_ms = Some(started.elapsed().as_millis());
    }
    let format = common.format.unwrap_or(OutputFormat::Human);
    let text = match format {
        OutputFormat::Json => to_json(&envelope)?,
        _ => format!(
            "gauss reference: lambda_{} = {} (expected 2): {verdict}\n",
            d + 2,
            fmt_f64(lam)
        ),
    };
    emit(common.output.as_deref(), &text)?;
    Ok(2)
}

fn build_spectrum(geometry: &str, cfg: &RunConfig, rho: Option<f64>) -> Result<Spectrum> {
    let count = cfg.count.max(1);
    match geometry {
        "round-sphere" => Ok(reference_spectrum(
            ReferenceKind::RoundSphere {
                d: cfg.d,
                rho: rho.unwrap_or(cfg.d as f64 - 1.0),
            },
            count,
        )),
        "ou" => Ok(reference_spectrum(ReferenceKind::OrnsteinUhlenbeck { d: cfg.d }, count)),
        "clifford-torus" => {
            let r = 0.5_f64.sqrt();
            Ok(reference_spectrum(ReferenceKind::ProductTorus { r1: r, r2: r }, count))
        }
        "sphere-eps" => {
            let eps = match &cfg.eps {
                Some(text) => parse_eps(text)?.to_f64(),
                None => 0.05,
            };
            if cfg.d < 3 {
                bail!("sphere-eps needs d >= 3");
            }
            let guess = reference_spectrum(
                ReferenceKind::RoundSphere { d: cfg.d, rho: cfg.d as f64 - 1.0 },
                count,
            )
            .truncation_lambda
                * (1.0 + eps)
                * 1.1
                + 2.0;
            Ok(computed_spectrum(
                &Geometry::PerturbedSphere { d: cfg.d, eps },
                count,
                guess,
                cfg,
            )?)
        }
        "torpedo" => {
            let eps = match &cfg.eps {
                Some(text) => parse_eps(text)?.to_f64(),
                None => 0.05,
            };
            let params = match cfg.rmax {
                Some(r) => TorpedoParams::with_rmax(cfg.d, eps, r)?,
                None => TorpedoParams::new(cfg.d, eps)?,
            };
            let cache = PotentialCache::build(&params);
            let guess = (count as f64).sqrt() + 4.0;
            Ok(computed_spectrum(&Geometry::TorpedoCylinder(cache), count, guess, cfg)?)
        }
        "euclidean-gauss" => {
            let rmax = cfg.rmax.unwrap_or(12.0);
            let guess = (count as f64).cbrt() * 2.0 + 3.0;
            Ok(computed_spectrum(
                &Geometry::EuclideanGauss { d: cfg.d, rmax },
                count,
                guess,
                cfg,
            )?)
        }
        other => bail!("unknown geometry: {other} (expected round-sphere, ou, clifford-torus, sphere-eps, torpedo, euclidean-gauss)"),
    }
}

/// Computed spectrum with either the capped threshold (certificate errors
/// surface with the required value) or the growing one.
fn computed_spectrum(
    geometry: &Geometry,
    count: u64,
    guess: f64,
    cfg: &RunConfig,
) -> Result<Spectrum> {
    let out = match cfg.lambda_max {
        Some(cap) => warpspec::spectral::compute_spectrum(geometry, cap, count, cfg.grid_n, true)?,
        None => compute_spectrum_with_count(geometry, count, guess, cfg.grid_n, true)?,
    };
    Ok(out.0)
}

fn spectrum_csv(spectrum: &Spectrum, count: u64) -> String {
    let mut out = String::from("index,lambda,multiplicity,sector\n");
    for (idx, lambda, label) in spectrum.indexed(count) {
        out.push_str(&format!("{idx},{},{},{label}\n", fmt_f64(lambda), 1));
    }
    out
}

fn read_spectrum(path: &std::path::Path) -> Result<Spectrum> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read spectrum file {}", path.display()))?;
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        // Either a bare spectrum or a report envelope holding one.
        if let Ok(s) = serde_json::from_str::<Spectrum>(&text) {
            return Ok(s);
        }
        let value: serde_json::Value = serde_json::from_str(&text)?;
        if let Some(report) = value.get("report") {
            return Ok(serde_json::from_value(report.clone())?);
        }
        bail!("JSON file does not contain a spectrum");
    }
    // CSV with header index,lambda,multiplicity,sector.
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if i == 0 {
            if !line.starts_with("index,") {
                bail!("CSV spectrum must start with the header index,lambda,multiplicity,sector");
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.splitn(4, ',').collect();
        if parts.len() != 4 {
            bail!("CSV line {} is malformed: {line}", i + 1);
        }
        entries.push(SpectrumEntry {
            lambda: parts[1].parse().with_context(|| format!("bad lambda on line {}", i + 1))?,
            multiplicity: parts[2].parse().with_context(|| format!("bad multiplicity on line {}", i + 1))?,
            label: parts[3].to_string(),
        });
    }
    if entries.is_empty() {
        bail!("CSV spectrum has no rows");
    }
    let truncation_lambda = entries.last().map(|e| e.lambda).unwrap_or(0.0);
    Ok(Spectrum { entries, truncation_lambda })
}

fn ricci_csv(geometry: &str, cfg: &RunConfig) -> Result<String> {
    let n = cfg.grid_n.max(2);
    let eps = match &cfg.eps {
        Some(text) => parse_eps(text)?.to_f64(),
        None => 0.05,
    };
    match geometry {
        "round-sphere" | "sphere-eps" => {
            let eps = if geometry == "round-sphere" { 0.0 } else { eps };
            if cfg.d < 3 {
                bail!("sphere curvature scan needs d >= 3");
            }
            let mut out = String::from("t,r_t,r_theta,r_s\n");
            for t in interior_grid(0.0, std::f64::consts::FRAC_PI_2, n, 1e-4) {
                let (rt, rth, rs) = ricci_closed_form(cfg.d, eps, t);
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    fmt_f64(t),
                    fmt_f64(rt),
                    fmt_f64(rth),
                    fmt_f64(rs)
                ));
            }
            Ok(out)
        }
        "torpedo" => {
            let params = match cfg.rmax {
                Some(r) => TorpedoParams::with_rmax(cfg.d, eps, r)?,
                None => TorpedoParams::new(cfg.d, eps)?,
            };
            let cache = PotentialCache::build(&params);
            let man = RadialWeightedManifold::new(
                params.d,
                warpspec::gauss::torpedo_profile(&params),
                cache.as_profile(),
            );
            let mut out = String::from("r,radial,tangential\n");
            for r in interior_grid(0.0, params.b + 10.0, n, 1e-4) {
                let f = bakry_emery_frame(&man, r)?;
                out.push_str(&format!(
                    "{},{},{}\n",
                    fmt_f64(r),
                    fmt_f64(f.radial),
                    fmt_f64(f.tangential)
                ));
            }
            Ok(out)
        }
        other => bail!("unknown curvature geometry: {other}"),
    }
}

fn human_stages(
    command: &str,
    verdict: &str,
    headline: &[(&str, String)],
    stages: &[warpspec::sphere::StageCheck],
) -> String {
    let mut out = format!("{command}: {verdict}\n");
    for (name, value) in headline {
        out.push_str(&format!("  {name} = {value}\n"));
    }
    for s in stages {
        out.push_str(&format!(
            "  [{}] {} value={} threshold={} margin={}\n",
            if s.pass { "PASS" } else { "FAIL" },
            s.name,
            fmt_f64(s.value),
            fmt_f64(s.threshold),
            fmt_f64(s.margin)
        ));
    }
    out
}
