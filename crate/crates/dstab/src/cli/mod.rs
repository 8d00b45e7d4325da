//! Command-line front end: subcommand dispatch into the library, JSON
//! reports, certificate files and plot-data emission. Exit codes follow
//! the verdict contract: 0 certified/consistent, 1 falsified,
//! 2 inconclusive, 64+ usage or input errors.

pub mod io;
pub mod report;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::certify::{
    orthant_positivity, parametric_block_det, parametric_charpoly_sum, CertificateDocument,
    PositivityStatus,
};
use crate::classes::{class_report, class_report_exact};
use crate::compound::{second_additive_compound, second_additive_compound_exact};
use crate::criteria::boundary::boundary_tests_sector;
use crate::criteria::check::{dstab_check, recognized_cos2theta, ExactSettings};
use crate::criteria::falsify::falsify_sweep;
use crate::criteria::verdict::{DiagonalPerturbation, PerturbationClass, VerdictStatus};
use crate::error::{Error, Result};
use crate::linalg::eig::{eigenvalues, Spectrum};
use crate::linalg::rational::{format_rat, parse_rat};
use crate::regions::{spectrum_in_region, LmiRegion, RegionKind};
use crate::systems::{frac_system_dstab, relative_dstab_check, to_first_order};
use crate::tol::Tol;

use io::{matrix_to_csv, matrix_to_json, parse_matrix, parse_region_json, parse_system, ParsedMatrix, SystemInput};
use report::{input_digest, AnalysisReport, SpectrumOut};

pub const EXIT_CERTIFIED: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;

#[derive(Parser, Debug)]
#[command(
    name = "dstab",
    version,
    about = "Stability and D-stability analysis of real matrices over unbounded LMI regions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Relative numeric tolerance for definiteness and boundary bands.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// RNG seed for sampling sweeps (verdicts are deterministic per seed).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Sampling budget for falsification sweeps.
    #[arg(long, global = true, default_value_t = 1000)]
    budget: usize,

    /// Run the exact rational pipeline (requires exactly-parseable input).
    #[arg(long, global = true)]
    exact: bool,

    /// Write the report (or matrix output) to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Additionally write eigenvalue points and region-boundary samples as
    /// CSV for external plotting.
    #[arg(long, global = true)]
    plot_data: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct RegionArgs {
    /// Region keyword: halfplane | shifted | sector | general.
    #[arg(long)]
    region: Option<String>,

    /// Shift parameter for --region shifted.
    #[arg(long)]
    alpha: Option<f64>,

    /// Sector half-angle (radians, 0 < theta <= pi/2) for --region sector.
    #[arg(long)]
    theta: Option<f64>,

    /// Region JSON file (required for --region general).
    #[arg(long)]
    region_file: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, Default, PartialEq)]
enum ClassArg {
    /// All positive diagonal matrices.
    #[default]
    Positive,
    /// Positive diagonals with entries >= 1.
    Ge1,
    /// Nonnegative diagonals applied additively (A - D).
    Additive,
}

impl From<ClassArg> for PerturbationClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Positive => PerturbationClass::Positive,
            ClassArg::Ge1 => PerturbationClass::PositiveGe1,
            ClassArg::Additive => PerturbationClass::NonnegativeAdditive,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, Default, PartialEq)]
enum CertifyMethod {
    /// Parametric determinant of [[A, D], [-D, A - 2cos(theta) D]].
    #[default]
    BlockDet,
    /// Constant coefficient of the cleared characteristic polynomial of
    /// A D^-1 + D A^-1.
    CharpolySum,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Eigenvalues of a matrix.
    Eig {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Q / P / P0 / P0+ class membership report.
    Classes {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Second additive compound matrix (CSV by default, exact with
    /// --exact).
    Compound {
        #[arg(long)]
        matrix: PathBuf,
        /// Emit the JSON matrix form instead of CSV.
        #[arg(long)]
        json: bool,
    },
    /// Classify the spectrum against an LMI region.
    RegionCheck {
        #[arg(long)]
        matrix: PathBuf,
        #[command(flatten)]
        region: RegionArgs,
    },
    /// Evaluate the six boundary conditions for a fixed diagonal D.
    Boundary {
        #[arg(long)]
        matrix: PathBuf,
        /// Comma-separated positive diagonal entries.
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<f64>,
        /// Sector half-angle (defaults to pi/2: the imaginary axis).
        #[arg(long)]
        theta: Option<f64>,
    },
    /// Full D-stability pipeline: stability, necessary condition, exact
    /// certificate attempt, falsification sweep.
    Check {
        #[arg(long)]
        matrix: PathBuf,
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
        /// Exact rational 2cos(theta) for sector certificates, e.g. "1".
        #[arg(long)]
        cos2theta: Option<String>,
    },
    /// Produce an exact polynomial certificate file.
    Certify {
        #[arg(long)]
        matrix: PathBuf,
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long)]
        cos2theta: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        method: CertifyMethod,
    },
    /// Randomized falsification sweep only.
    Sweep {
        #[arg(long)]
        matrix: PathBuf,
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
    },
    /// Relative D-stability of a mechanical system at a damping ratio.
    Mech {
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        zeta: f64,
    },
    /// Fractional-order family D-stability.
    Frac {
        #[arg(long)]
        system: Option<PathBuf>,
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(long)]
        gamma: Option<f64>,
    },
}

/// Entry point used by the binary and by integration tests; returns the
/// process exit code.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/version output with exit code 0.
            if e.use_stderr() {
                eprintln!("{e}");
                return EXIT_USAGE;
            }
            print!("{e}");
            return 0;
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_DATA
        }
    }
}

fn resolve_region(args: &RegionArgs, tol: Tol) -> Result<(LmiRegion, String)> {
    if let Some(path) = &args.region_file {
        let content = std::fs::read_to_string(path)?;
        let region = parse_region_json(&content, &path.display().to_string(), tol)?;
        return Ok((region, content));
    }
    let keyword = args.region.as_deref().unwrap_or("halfplane");
    match keyword {
        "half" | "halfplane" | "half_plane" => {
            Ok((LmiRegion::half_plane(), "halfplane".into()))
        }
        "shifted" => {
            let alpha = args.alpha.ok_or_else(|| Error::Parse {
                location: "--region shifted".into(),
                message: "requires --alpha".into(),
            })?;
            Ok((
                LmiRegion::shifted_half_plane(alpha),
                format!("shifted alpha={alpha}"),
            ))
        }
        "sector" => {
            let theta = args.theta.ok_or_else(|| Error::Parse {
                location: "--region sector".into(),
                message: "requires --theta".into(),
            })?;
            Ok((LmiRegion::sector(theta)?, format!("sector theta={theta}")))
        }
        "general" => Err(Error::Parse {
            location: "--region general".into(),
            message: "requires --region-file with L and M".into(),
        }),
        other => Err(Error::Parse {
            location: format!("--region {other}"),
            message: "expected halfplane | shifted | sector | general".into(),
        }),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text.as_bytes())?,
        None => println!("{text}"),
    }
    Ok(())
}

fn verdict_exit(status: VerdictStatus) -> i32 {
    match status {
        VerdictStatus::Certified => EXIT_CERTIFIED,
        VerdictStatus::Falsified => EXIT_FALSIFIED,
        VerdictStatus::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn base_parameters(cli: &Cli) -> Value {
    json!({
        "tol": cli.tol,
        "seed": cli.seed,
        "budget": cli.budget,
        "exact": cli.exact,
    })
}

fn exact_settings(
    cli: &Cli,
    parsed: &ParsedMatrix,
    cos2theta: Option<&str>,
) -> Result<Option<ExactSettings>> {
    if !cli.exact {
        return Ok(None);
    }
    let matrix = parsed.rational.clone().ok_or_else(|| Error::Parse {
        location: "--exact".into(),
        message: "input matrix is not exactly rational (use p/q or decimal tokens)".into(),
    })?;
    let cos2theta = cos2theta.map(parse_rat).transpose()?;
    Ok(Some(ExactSettings { matrix, cos2theta }))
}

fn write_plot_data(
    path: &Path,
    spectra: &[(&str, &Spectrum)],
    region: Option<&LmiRegion>,
) -> Result<()> {
    let mut lines = vec!["label,re,im".to_string()];
    let mut radius = 1.0f64;
    for (label, s) in spectra {
        for z in &s.eigenvalues {
            radius = radius.max(z.norm());
            lines.push(format!("{label},{},{}", z.re, z.im));
        }
    }
    let r = 1.5 * radius + 1.0;
    if let Some(region) = region {
        match region.kind {
            RegionKind::LeftHalfPlane => boundary_line(&mut lines, 0.0, r),
            RegionKind::ShiftedHalfPlane { alpha } => boundary_line(&mut lines, alpha, r),
            RegionKind::Sector { theta } => {
                for k in 0..=100 {
                    let t = r * k as f64 / 100.0;
                    let (s, c) = (theta.sin(), theta.cos());
                    lines.push(format!("boundary,{},{}", -t * s, t * c));
                    lines.push(format!("boundary,{},{}", -t * s, -t * c));
                }
            }
            RegionKind::General => {
                // Grid scan for near-boundary points of a general region.
                let tol = Tol(1e-2);
                for i in 0..=160 {
                    for j in 0..=160 {
                        let x = -r + 2.0 * r * i as f64 / 160.0;
                        let y = -r + 2.0 * r * j as f64 / 160.0;
                        let z = num_complex::Complex64::new(x, y);
                        let v = region.char_fn_max_eig(z);
                        if v.abs() <= tol.0 * (1.0 + z.norm()) {
                            lines.push(format!("boundary,{x},{y}"));
                        }
                    }
                }
            }
        }
    }
    std::fs::write(path, lines.join("\n") + "\n")?;
    Ok(())
}

fn boundary_line(lines: &mut Vec<String>, x: f64, r: f64) {
    for k in 0..=200 {
        let y = -r + 2.0 * r * k as f64 / 200.0;
        lines.push(format!("boundary,{x},{y}"));
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    let started = Instant::now();
    let tol = Tol(cli.tol);
    match &cli.command {
        Command::Eig { matrix } => {
            let raw = std::fs::read(matrix)?;
            let parsed = parse_matrix(matrix)?;
            let parse_ms = started.elapsed().as_secs_f64() * 1e3;
            let spectrum = eigenvalues(&parsed.real)?;
            let mut rep = AnalysisReport::new(
                "eig",
                base_parameters(cli),
                input_digest(&[&raw]),
            );
            rep.spectra.push(SpectrumOut::new("sigma(A)", &spectrum));
            rep.timings.parse_ms = parse_ms;
            rep.timings.analyze_ms = started.elapsed().as_secs_f64() * 1e3 - parse_ms;
            rep.timings.total_ms = started.elapsed().as_secs_f64() * 1e3;
            if let Some(p) = &cli.plot_data {
                write_plot_data(p, &[("sigma(A)", &spectrum)], None)?;
            }
            emit(cli, &rep.to_json())?;
            Ok(EXIT_CERTIFIED)
        }
        Command::Classes { matrix } => {
            let raw = std::fs::read(matrix)?;
            let parsed = parse_matrix(matrix)?;
            let result = if cli.exact {
                let q = parsed.rational.as_ref().ok_or_else(|| Error::Parse {
                    location: "--exact".into(),
                    message: "matrix is not exactly rational".into(),
                })?;
                class_report_exact(q)?
            } else {
                class_report(&parsed.real, tol)?
            };
            let mut rep = AnalysisReport::new(
                "classes",
                base_parameters(cli),
                input_digest(&[&raw]),
            );
            rep.results = serde_json::to_value(&result)?;
            rep.timings.total_ms = started.elapsed().as_secs_f64() * 1e3;
            emit(cli, &rep.to_json())?;
            Ok(EXIT_CERTIFIED)
        }
        Command::Compound { matrix, json } => {
            let parsed = parse_matrix(matrix)?;
            let result = if cli.exact {
                let q = parsed.rational.as_ref().ok_or_else(|| Error::Parse {
                    location: "--exact".into(),
                    message: "matrix is not exactly rational".into(),
                })?;
                let c = second_additive_compound_exact(q)?;
                ParsedMatrix {
                    real: c.to_real()?,
                    rational: Some(c),
                }
            } else {
                let c = second_additive_compound(&parsed.real)?;
                ParsedMatrix {
                    real: c.matrix,
                    rational: None,
                }
            };
            let text = if *json {
                matrix_to_json(&result)
            } else {
                matrix_to_csv(&result)
            };
            emit(cli, &text)?;
            Ok(EXIT_CERTIFIED)
        }
        Command::RegionCheck { matrix, region } => {
            let raw = std::fs::read(matrix)?;
            let parsed = parse_matrix(matrix)?;
            let (region, region_desc) = resolve_region(region, tol)?;
            let spectrum = eigenvalues(&parsed.real)?;
            let location = spectrum_in_region(&spectrum, &region, tol);
            let mut rep = AnalysisReport::new(
                "region-check",
                base_parameters(cli),
                input_digest(&[&raw, region_desc.as_bytes()]),
            );
            rep.spectra.push(SpectrumOut::new("sigma(A)", &spectrum));
            rep.results = json!({
                "allInside": location.all_inside,
                "inside": location.inside.iter().map(|z| json!({"re": z.re, "im": z.im})).collect::<Vec<_>>(),
                "boundaryHits": location.boundary_hits.iter().map(|z| json!({"re": z.re, "im": z.im})).collect::<Vec<_>>(),
                "outside": location.outside.iter().map(|z| json!({"re": z.re, "im": z.im})).collect::<Vec<_>>(),
            });
            rep.timings.total_ms = started.elapsed().as_secs_f64() * 1e3;
            if let Some(p) = &cli.plot_data {
                write_plot_data(p, &[("sigma(A)", &spectrum)], Some(&region))?;
            }
            emit(cli, &rep.to_json())?;
            Ok(if location.all_inside {
                EXIT_CERTIFIED
            } else if location.outside.is_empty() {
                EXIT_INCONCLUSIVE
            } else {
                EXIT_FALSIFIED
            })
        }
        Command::Boundary { matrix, d, theta } => {
            let raw = std::fs::read(matrix)?;
            let parsed = parse_matrix(matrix)?;
            let theta = theta.unwrap_or(std::f64::consts::FRAC_PI_2);
            let diag = DiagonalPerturbation::new(d.clone(), PerturbationClass::Positive)?;
            let bundle = boundary_tests_sector(&parsed.real, &diag.d, theta, tol)?;
            let mut rep = AnalysisReport::new(
                "boundary",
                json!({
                    "tol": cli.tol, "seed": cli.seed, "budget": cli.budget,
                    "exact": cli.exact, "d": d, "theta": theta,
                }),
                input_digest(&[&raw, format!("{d:?} {theta}").as_bytes()]),
            );
            rep.results = serde_json::to_value(&bundle)?;
            rep.timings.total_ms = started.elapsed().as_secs_f64() * 1e3;
            emit(cli, &rep.to_json())?;
            Ok(if bundle.agreement {
                EXIT_CERTIFIED
            } else {
                EXIT_INCONCLUSIVE
            })
        }
        Command::Check {
            matrix,
            region,
            class,
            cos2theta,
        } => {
            let raw = std::fs::read(matrix)?;
            let parsed = parse_matrix(matrix)?;
            let (region, region_desc) = resolve_region(region, tol)?;
            let exact = exact_settings(cli, &parsed, cos2theta.as_deref())?;
            let spectrum = eigenvalues(&parsed.real)?;
            let outcome = dstab_check(
                &parsed.real,
                &region,
                class.map(Into::into),
                cli.budget,
                cli.seed,
                tol,
                exact.as_ref(),
            )?;
            let mut rep = AnalysisReport::new(
                "check",
                json!({
                    "tol": cli.tol, "seed": cli.seed, "budget": cli.budget,
                    "exact": cli.exact, "region": region_desc, "class": format!("{class:?}"),
                }),
                input_digest(&[&raw, region_desc.as_bytes()]),
            );
            rep.spectra.push(SpectrumOut::new("sigma(A)", &spectrum));
            let status = outcome.verdict.status;
            if let Some(doc) = &outcome.certificate {
                let path = match &cli.out {
                    Some(out) => out.with_extension("certificate.json"),
                    None => PathBuf::from(format!(
                        "dstab-certificate-{}.json",
                        &doc.content_hash()[..12]
                    )),
                };
                std::fs::write(&path, doc.to_json())?;
                rep.certificate_path = Some(path.display().to_string());
            }
            rep.verdict = Some(outcome.verdict);
            rep.timings.total_ms = started.elapsed().as_secs_f64() * 1e3;
            if let Some(p) = &cli.plot_data {
                write_plot_data(p, &[("sigma(A)", &spectrum)], Some(&region))?;
            }
            emit(cli, &rep.to_json())?;
            Ok(verdict_exit(status))
        }
        Command::Certify {
            matrix,
            region,
            cos2theta,
            method,
        } => {
            let parsed = parse_matrix(matrix)?;
            let rational = parsed.rational.as_ref().ok_or_else(|| Error::Parse {
                location: "certify".into(),
                message: "certificates need an exactly rational matrix".into(),
            })?;
            let (region, _) = resolve_region(region, tol)?;
            // Block-determinant parameter: 2cos of the boundary-ray angle,
            // i.e. 0 for the half-plane and -2cos(theta) for the sector
            // rays at angles pi +- theta.
            let cos2 = match region.kind {
                RegionKind::LeftHalfPlane => crate::linalg::rational::rat_int(0),
                RegionKind::Sector { theta } => {
                    let supplied = cos2theta.as_deref().map(parse_rat).transpose()?;
                    let c = recognized_cos2theta(theta, supplied.as_ref()).ok_or_else(|| {
                        Error::Unsupported(format!(
                            "2cos({theta}) is not a recognized rational; pass --cos2theta p/q"
                        ))
                    })?;
                    -c
                }
                _ => {
                    return Err(Error::Unsupported(
                        "certificates exist for the half-plane and rational-angle sectors".into(),
                    ))
                }
            };
            let (poly, claim) = match method {
                CertifyMethod::BlockDet => {
                    let p = parametric_block_det(rational, &cos2)?;
                    let claim = format!(
                        "det[[A, D], [-D, A - ({})*D]] over d_i > 0",
                        format_rat(&cos2)
                    );
                    (p, claim)
                }
                CertifyMethod::CharpolySum => {
                    let full = parametric_charpoly_sum(rational)?;
                    let p = full.x_coefficient(0);
                    let claim =
                        "constant coefficient of the cleared characteristic polynomial of A D^-1 + D A^-1"
                            .to_string();
                    (p, claim)
                }
            };
            let positivity = orthant_positivity(&poly);
            let status = positivity.status;
            let doc = CertificateDocument::new(claim, rational, &cos2, &poly, &positivity);
            let text = doc.to_json();
            match &cli.out {
                Some(path) => std::fs::write(path, &text)?,
                None => println!("{text}"),
            }
            Ok(match status {
                PositivityStatus::NonvanishingOnOrthant => EXIT_CERTIFIED,
                PositivityStatus::Inconclusive => EXIT_INCONCLUSIVE,
            })
        }
        Command::Sweep {
            matrix,
            region,
            class,
        } => {
            let raw = std::fs::read(matrix)?;
            let parsed = parse_matrix(matrix)?;
            let (region, region_desc) = resolve_region(region, tol)?;
            let class = class
                .map(Into::into)
                .unwrap_or(PerturbationClass::Positive);
            let verdict = falsify_sweep(&parsed.real, &region, class, cli.budget, cli.seed, tol)?;
            let mut rep = AnalysisReport::new(
                "sweep",
                json!({
                    "tol": cli.tol, "seed": cli.seed, "budget": cli.budget,
                    "class": format!("{class:?}"), "region": region_desc,
                }),
                input_digest(&[&raw, region_desc.as_bytes()]),
            );
            let status = verdict.status;
            rep.verdict = Some(verdict);
            rep.timings.total_ms = started.elapsed().as_secs_f64() * 1e3;
            emit(cli, &rep.to_json())?;
            Ok(verdict_exit(status))
        }
        Command::Mech { system, zeta } => {
            let raw = std::fs::read(system)?;
            let sys = match parse_system(system, tol)? {
                SystemInput::Mechanical(sys) => sys,
                _ => {
                    return Err(Error::Parse {
                        location: system.display().to_string(),
                        message: "mech expects a mass/damping/stiffness system".into(),
                    })
                }
            };
            let state = to_first_order(&sys)?;
            let spectrum = eigenvalues(&state)?;
            let report = relative_dstab_check(&sys, *zeta, cli.budget, cli.seed, tol)?;
            let mut rep = AnalysisReport::new(
                "mech",
                json!({
                    "tol": cli.tol, "seed": cli.seed, "budget": cli.budget, "zeta": zeta,
                }),
                input_digest(&[&raw, format!("{zeta}").as_bytes()]),
            );
            rep.spectra
                .push(SpectrumOut::new("sigma(state matrix)", &spectrum));
            let status = report.verdict.status;
            rep.results = json!({
                "theta": report.theta,
                "testedNotion": report.tested_notion,
            });
            rep.verdict = Some(report.verdict);
            rep.timings.total_ms = started.elapsed().as_secs_f64() * 1e3;
            if let Some(p) = &cli.plot_data {
                let region = LmiRegion::sector(report.theta)?;
                write_plot_data(p, &[("sigma(state matrix)", &spectrum)], Some(&region))?;
            }
            emit(cli, &rep.to_json())?;
            Ok(verdict_exit(status))
        }
        Command::Frac {
            system,
            matrix,
            gamma,
        } => {
            let (parsed, gamma, raw) = match (system, matrix, gamma) {
                (Some(path), None, None) => {
                    let raw = std::fs::read(path)?;
                    match parse_system(path, tol)? {
                        SystemInput::Fractional { matrix, gamma } => (matrix, gamma, raw),
                        _ => {
                            return Err(Error::Parse {
                                location: path.display().to_string(),
                                message: "frac expects {\"matrix\": .., \"gamma\": ..}".into(),
                            })
                        }
                    }
                }
                (None, Some(path), Some(g)) => {
                    let raw = std::fs::read(path)?;
                    (parse_matrix(path)?, *g, raw)
                }
                _ => {
                    return Err(Error::Parse {
                        location: "frac".into(),
                        message: "pass either --system file.json or --matrix file --gamma g".into(),
                    })
                }
            };
            let exact = exact_settings(cli, &parsed, None)?;
            let spectrum = eigenvalues(&parsed.real)?;
            let outcome =
                frac_system_dstab(&parsed.real, gamma, cli.budget, cli.seed, tol, exact.as_ref())?;
            let mut rep = AnalysisReport::new(
                "frac",
                json!({
                    "tol": cli.tol, "seed": cli.seed, "budget": cli.budget,
                    "exact": cli.exact, "gamma": gamma,
                }),
                input_digest(&[&raw, format!("{gamma}").as_bytes()]),
            );
            rep.spectra.push(SpectrumOut::new("sigma(A)", &spectrum));
            let status = outcome.verdict.status;
            if let Some(doc) = &outcome.certificate {
                let path = match &cli.out {
                    Some(out) => out.with_extension("certificate.json"),
                    None => PathBuf::from(format!(
                        "dstab-certificate-{}.json",
                        &doc.content_hash()[..12]
                    )),
                };
                std::fs::write(&path, doc.to_json())?;
                rep.certificate_path = Some(path.display().to_string());
            }
            rep.verdict = Some(outcome.verdict);
            rep.timings.total_ms = started.elapsed().as_secs_f64() * 1e3;
            emit(cli, &rep.to_json())?;
            Ok(verdict_exit(status))
        }
    }
}
