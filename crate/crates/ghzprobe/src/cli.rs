//! Command-line surface.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage error, 3 internal
//! consistency error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use ghzprobe_core::{
    coefficient, even_subsets, is_optimal, mermin_check, optimal_vectors, BellOperator,
    CoefficientTable, Geometry, SignVector, SpectralAnalysis,
};
use rayon::prelude::*;

use crate::error::{AppError, AppResult};
use crate::geometry_file::{load_geometry, preset_geometry, GeometryJson};
use crate::report::{
    EigensystemReport, Format, MerminReportJson, OptimalReport, Render, SpectrumReport,
};
use crate::verify::{run_verify, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "ghzprobe",
    version,
    about = "Spectra of (n,2,2) Bell operators"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the four optimal sign vectors with certificates.
    Optimal(Flags),
    /// Coefficients, lambda^2 table and spectral radius of one operator.
    Spectrum(Flags),
    /// GHZ eigenpairs of the dense operator (n <= 10).
    Eigensystem(Flags),
    /// Random cross-checks against the dense eigensolver (n <= 5).
    Verify(Flags),
    /// Coefficient saturation and radius of the optimal vectors (n <= 6).
    Mermin(Flags),
}

#[derive(Debug, Clone, Args)]
pub struct Flags {
    /// Number of particles.
    #[arg(long)]
    pub n: Option<usize>,
    /// Sign vector: `+`/`-` string or `1`/`-1` tokens, length 2^n.
    #[arg(long, allow_hyphen_values = true)]
    pub f: Option<String>,
    /// JSON file `{"sites": [{"phi0": .., "phi1": ..}, ..]}`.
    #[arg(long, conflicts_with = "preset")]
    pub geometry_file: Option<PathBuf>,
    /// `orthogonal`, `aligned` or `optimal:<w>`.
    #[arg(long)]
    pub preset: Option<String>,
    /// Number of random trials (verify).
    #[arg(long)]
    pub trials: Option<u64>,
    /// 64-bit seed (verify).
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Optimal,
    Spectrum,
    Eigensystem,
    Verify,
    Mermin,
}

impl CommandKind {
    fn name(self) -> &'static str {
        match self {
            CommandKind::Optimal => "optimal",
            CommandKind::Spectrum => "spectrum",
            CommandKind::Eigensystem => "eigensystem",
            CommandKind::Verify => "verify",
            CommandKind::Mermin => "mermin",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum GeometrySource {
    Preset(String),
    File(PathBuf),
}

/// A fully validated invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: CommandKind,
    pub n: usize,
    pub f: Option<SignVector>,
    pub geometry: Option<GeometrySource>,
    pub trials: u64,
    pub seed: u64,
    pub output: Option<PathBuf>,
    pub format: Format,
}

pub const DEFAULT_TRIALS: u64 = 100;

fn usage(msg: impl Into<String>) -> AppError {
    AppError::Usage(msg.into())
}

impl RunConfig {
    pub fn from_command(command: Command) -> AppResult<RunConfig> {
        let (kind, flags) = match command {
            Command::Optimal(f) => (CommandKind::Optimal, f),
            Command::Spectrum(f) => (CommandKind::Spectrum, f),
            Command::Eigensystem(f) => (CommandKind::Eigensystem, f),
            Command::Verify(f) => (CommandKind::Verify, f),
            Command::Mermin(f) => (CommandKind::Mermin, f),
        };
        let name = kind.name();
        let n = flags
            .n
            .ok_or_else(|| usage(format!("{name} requires --n")))?;

        let geometry = match (flags.preset, flags.geometry_file) {
            (Some(p), None) => Some(GeometrySource::Preset(p)),
            (None, Some(path)) => Some(GeometrySource::File(path)),
            (None, None) => None,
            (Some(_), Some(_)) => return Err(usage("--preset and --geometry-file are exclusive")),
        };

        let takes_f = matches!(kind, CommandKind::Spectrum | CommandKind::Eigensystem);
        let takes_geometry = matches!(
            kind,
            CommandKind::Spectrum | CommandKind::Eigensystem | CommandKind::Verify
        );
        let takes_trials = kind == CommandKind::Verify;
        if flags.f.is_some() && !takes_f {
            return Err(usage(format!("{name} does not take --f")));
        }
        if geometry.is_some() && !takes_geometry {
            return Err(usage(format!("{name} does not take a geometry")));
        }
        if (flags.trials.is_some() || flags.seed.is_some()) && !takes_trials {
            return Err(usage(format!("{name} does not take --trials or --seed")));
        }
        if takes_f && flags.f.is_none() {
            return Err(usage(format!("{name} requires --f")));
        }
        if takes_f && geometry.is_none() {
            return Err(usage(format!(
                "{name} requires --preset or --geometry-file"
            )));
        }

        let f = match flags.f {
            Some(text) => {
                let f: SignVector = text.parse()?;
                if f.n() != n {
                    return Err(usage(format!(
                        "--f has {} entries but --n {n} needs {}",
                        f.len(),
                        1usize << n.min(31)
                    )));
                }
                Some(f)
            }
            None => None,
        };

        Ok(RunConfig {
            command: kind,
            n,
            f,
            geometry,
            trials: flags.trials.unwrap_or(DEFAULT_TRIALS),
            seed: flags.seed.unwrap_or(0),
            output: flags.output,
            format: flags.format,
        })
    }

    fn resolve_geometry(&self) -> AppResult<Option<Geometry>> {
        let g = match &self.geometry {
            None => return Ok(None),
            Some(GeometrySource::Preset(name)) => preset_geometry(name, self.n)?,
            Some(GeometrySource::File(path)) => load_geometry(path)?,
        };
        if g.n() != self.n {
            return Err(usage(format!(
                "geometry has {} sites but --n {}",
                g.n(),
                self.n
            )));
        }
        Ok(Some(g))
    }
}

/// Rendered report plus the exit code it implies.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub body: String,
    pub exit_code: i32,
}

/// Coefficient table computed across threads.
pub fn parallel_coefficient_table(f: &SignVector, g: &Geometry) -> AppResult<CoefficientTable> {
    let values = even_subsets(f.n())?
        .par_iter()
        .map(|&p| coefficient(f, g, p))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CoefficientTable::from_values(f.n(), values)?)
}

fn cmd_optimal(config: &RunConfig) -> AppResult<Outcome> {
    let vectors = optimal_vectors(config.n)?;
    let found: Vec<_> = vectors
        .into_par_iter()
        .map(|f| {
            let cert = is_optimal(&f);
            (f, cert)
        })
        .collect();
    let report = OptimalReport::new(config.n, &found);
    let exit_code = if report.all_certified() {
        EXIT_OK
    } else {
        EXIT_INTERNAL
    };
    Ok(Outcome {
        body: report.render(config.format)?,
        exit_code,
    })
}

fn cmd_spectrum(config: &RunConfig, f: &SignVector, g: &Geometry) -> AppResult<Outcome> {
    let table = parallel_coefficient_table(f, g)?;
    let analysis = SpectralAnalysis::from_table(table, g)?;
    let report = SpectrumReport::new(f, GeometryJson::from(g), &analysis);
    Ok(Outcome {
        body: report.render(config.format)?,
        exit_code: EXIT_OK,
    })
}

fn cmd_eigensystem(config: &RunConfig, f: &SignVector, g: &Geometry) -> AppResult<Outcome> {
    let op = BellOperator::new(f, g)?;
    let pairs = op.full_eigensystem()?;
    let report = EigensystemReport::new(&op, &pairs);
    Ok(Outcome {
        body: report.render(config.format)?,
        exit_code: EXIT_OK,
    })
}

fn cmd_verify(config: &RunConfig, g: Option<Geometry>) -> AppResult<Outcome> {
    let mut options = VerifyOptions::new(config.n, config.trials, config.seed);
    options.geometry = g;
    let report = run_verify(&options)?;
    Ok(Outcome {
        body: report.render(config.format)?,
        exit_code: if report.passed {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        },
    })
}

fn cmd_mermin(config: &RunConfig) -> AppResult<Outcome> {
    let report = MerminReportJson::from(&mermin_check(config.n)?);
    Ok(Outcome {
        body: report.render(config.format)?,
        exit_code: if report.passed {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        },
    })
}

pub fn execute(config: &RunConfig) -> AppResult<Outcome> {
    let g = config.resolve_geometry()?;
    match config.command {
        CommandKind::Optimal => cmd_optimal(config),
        CommandKind::Mermin => cmd_mermin(config),
        CommandKind::Verify => cmd_verify(config, g),
        CommandKind::Spectrum | CommandKind::Eigensystem => {
            let f = config.f.as_ref().expect("validated");
            let g = g.expect("validated");
            if config.command == CommandKind::Spectrum {
                cmd_spectrum(config, f, &g)
            } else {
                cmd_eigensystem(config, f, &g)
            }
        }
    }
}

fn write_output(config: &RunConfig, body: &str) -> AppResult<()> {
    match &config.output {
        Some(path) => fs::write(path, body).map_err(|source| AppError::Io {
            path: path.clone(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| AppError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = RunConfig::from_command(cli.command).and_then(|config| {
        let outcome = execute(&config)?;
        write_output(&config, &outcome.body)?;
        Ok(outcome.exit_code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(args: &[&str]) -> AppResult<RunConfig> {
        let cli =
            Cli::try_parse_from(std::iter::once("ghzprobe").chain(args.iter().copied())).unwrap();
        RunConfig::from_command(cli.command)
    }

    #[test]
    fn validates_required_fields() {
        assert!(matches!(
            config(&["spectrum", "--n", "2"]),
            Err(AppError::Usage(_))
        ));
        assert!(matches!(
            config(&["spectrum", "--n", "2", "--f", "+++-"]),
            Err(AppError::Usage(_))
        ));
        assert!(matches!(config(&["optimal"]), Err(AppError::Usage(_))));
        assert!(matches!(
            config(&["optimal", "--n", "2", "--f", "+++-"]),
            Err(AppError::Usage(_))
        ));
        assert!(matches!(
            config(&["mermin", "--n", "2", "--seed", "1"]),
            Err(AppError::Usage(_))
        ));
        let c = config(&["spectrum", "--n", "2", "--f", "-+++", "--preset", "aligned"]).unwrap();
        assert_eq!(c.f.unwrap().to_string(), "-+++");
        assert!(matches!(
            config(&["spectrum", "--n", "3", "--f", "+++-", "--preset", "aligned"]),
            Err(AppError::Usage(_))
        ));
        let err =
            config(&["spectrum", "--n", "2", "--f", "++x-", "--preset", "aligned"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn verify_defaults() {
        let c = config(&["verify", "--n", "3"]).unwrap();
        assert_eq!((c.trials, c.seed), (DEFAULT_TRIALS, 0));
        assert_eq!(c.format, Format::Json);
    }

    #[test]
    fn parallel_table_matches_serial() {
        let f: SignVector = "+-+++--+-+-++--+".parse().unwrap();
        let g = Geometry::from_angles(&[(0.3, 1.1), (2.0, 0.4), (5.0, 3.3), (0.9, 0.1)]).unwrap();
        let serial = ghzprobe_core::coefficient_table(&f, &g).unwrap();
        assert_eq!(parallel_coefficient_table(&f, &g).unwrap(), serial);
    }
}
