//! The `acf-contact` command line.
//!
//! ```text
//! acf-contact --config joint.json compute
//! acf-contact --builtin paper_default sweep --param particle-count --from 1 --to 30 --steps 30 --format csv
//! acf-contact --builtin paper_default validate --cubes 32 --tolerance 1e-6
//! acf-contact --builtin paper_default montecarlo --trials 10000 --seed 7
//! acf-contact --builtin paper_default compare --measured 0.5
//! ```
//!
//! Exit status: 0 success, 1 bad input, 2 numerical failure (open circuit,
//! singular system), 3 validation outside tolerance.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::config::{load_config, AssemblyConfig};
use crate::error::{Error, ErrorClass, Result};
use crate::model::{equivalent_resistance, ContactCount, StackAssembly};
use crate::network::{validate_stack, ValidationOptions};
use crate::report;
use crate::stats::{linear_grid, monte_carlo_contacts, sweep, SweepParameter};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NUMERICAL: i32 = 2;
pub const EXIT_TOLERANCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "acf-contact", version, about = "Contact resistance of ACF chip-on-glass joints")]
struct Cli {
    /// Assembly file (JSON).
    #[arg(long, global = true, conflicts_with = "builtin")]
    config: Option<PathBuf>,

    /// Use a bundled assembly instead of a file. Available: paper_default.
    #[arg(long, global = true)]
    builtin: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Param {
    ParticleCount,
    ShellThickness,
}

impl From<Param> for SweepParameter {
    fn from(p: Param) -> Self {
        match p {
            Param::ParticleCount => SweepParameter::ParticleCount,
            Param::ShellThickness => SweepParameter::ShellThickness,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Per-layer breakdown and total resistance.
    Compute,
    /// Total resistance over a grid of ACF particle counts or shell thicknesses.
    Sweep {
        #[arg(long, value_enum)]
        param: Option<Param>,
        #[arg(long)]
        from: Option<f64>,
        #[arg(long)]
        to: Option<f64>,
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Check the closed form against a unit-cube resistor network solve.
    Validate {
        #[arg(long, default_value_t = 32)]
        cubes: usize,
        #[arg(long, default_value_t = 1e-6)]
        tolerance: f64,
        /// Couple neighbouring cubes laterally.
        #[arg(long)]
        lateral: bool,
    },
    /// Sample contacting-particle counts from a spatial Poisson process.
    Montecarlo {
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Particles per μm².
        #[arg(long)]
        density: Option<f64>,
        /// Bump footprint, μm².
        #[arg(long)]
        area: Option<f64>,
    },
    /// Ratio of a measured resistance to the predicted total.
    Compare {
        /// Measured resistance, ohms. Defaults to the file's measured_resistance_ohm.
        #[arg(long)]
        measured: Option<f64>,
    },
}

enum Failure {
    Error(Error),
    Tolerance(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn load(cli: &Cli) -> Result<AssemblyConfig> {
    match (&cli.config, cli.builtin.as_deref()) {
        (Some(path), _) => load_config(path),
        (None, Some("paper_default")) => Ok(AssemblyConfig::paper_default()),
        (None, Some(other)) => Err(Error::invalid(
            "builtin",
            format!("unknown bundled assembly `{other}` (available: paper_default)"),
        )),
        (None, None) => Err(Error::invalid("config", "no assembly given: pass --config <FILE> or --builtin paper_default")),
    }
}

fn emit(cli: &Cli, table: impl FnOnce() -> String, csv: impl FnOnce() -> Result<String>, json: impl FnOnce() -> Result<String>) -> Result<String> {
    match cli.format {
        Format::Table => Ok(table()),
        Format::Csv => csv(),
        Format::Json => json().map(|mut s| {
            s.push('\n');
            s
        }),
    }
}

fn execute(cli: &Cli) -> std::result::Result<String, Failure> {
    let config = load(cli)?;
    let stack: StackAssembly = config.to_stack()?;
    let acf_name = stack.acf().map(|a| a.name().to_string());

    let text = match &cli.command {
        Command::Compute => {
            let b = equivalent_resistance(&stack)?;
            emit(cli, || report::breakdown_table(&b), || report::breakdown_csv(&b), || report::to_json(&b))?
        }
        Command::Sweep { param, from, to, steps } => {
            let configured = config.sweep;
            let parameter: SweepParameter = param
                .map(Into::into)
                .or(configured.map(|s| s.param))
                .unwrap_or(SweepParameter::ParticleCount);
            let (f0, t0, n0) = match configured {
                Some(s) if s.param == parameter => (s.from, s.to, s.steps),
                _ => parameter.default_range(),
            };
            let grid = linear_grid(from.unwrap_or(f0), to.unwrap_or(t0), steps.unwrap_or(n0))?;
            let result = sweep(&stack, parameter, &grid)?;
            let acf = acf_name.as_deref();
            emit(
                cli,
                || report::sweep_table(&result, acf),
                || report::sweep_csv(&result, acf),
                || report::to_json(&result),
            )?
        }
        Command::Validate { cubes, tolerance, lateral } => {
            let options = ValidationOptions {
                cubes_per_layer: *cubes,
                tolerance: *tolerance,
                lateral_coupling: *lateral,
            };
            let r = validate_stack(&stack, &options)?;
            let text = emit(cli, || report::validation_table(&r), || report::validation_csv(&r), || report::to_json(&r))?;
            if !r.passed {
                return Err(Failure::Tolerance(format!(
                    "{text}validation failed: relative error {:e} exceeds tolerance {:e}",
                    r.relative_error, r.tolerance
                )));
            }
            text
        }
        Command::Montecarlo { trials, seed, density, area } => {
            let configured = config.montecarlo;
            let from_layer = stack.acf().and_then(|a| match a.contacts() {
                ContactCount::Density { per_um2, area_um2 } => Some((per_um2, area_um2)),
                ContactCount::Count(_) => None,
            });
            let density = density
                .or(configured.map(|m| m.density_per_um2))
                .or(from_layer.map(|d| d.0))
                .ok_or_else(|| Error::invalid("density", "no particle density: pass --density or set montecarlo.density_per_um2"))?;
            let area = area
                .or(configured.map(|m| m.area_um2))
                .or(from_layer.map(|d| d.1))
                .ok_or_else(|| Error::invalid("area", "no footprint area: pass --area or set montecarlo.area_um2"))?;
            let trials = trials.or(configured.map(|m| m.trials)).unwrap_or(10_000);
            let seed = seed.or(configured.map(|m| m.seed)).unwrap_or(0);
            let d = monte_carlo_contacts(density, area, trials, seed)?;
            emit(cli, || report::distribution_table(&d), || report::distribution_csv(&d), || report::to_json(&d))?
        }
        Command::Compare { measured } => {
            let measured = measured
                .or(stack.measured_resistance())
                .ok_or_else(|| Error::invalid("measured", "no measurement: pass --measured or set measured_resistance_ohm"))?;
            let predicted = equivalent_resistance(&stack)?.total;
            let c = report::compare_measurement(predicted, measured)?;
            emit(cli, || report::comparison_table(&c), || report::comparison_csv(&c), || report::to_json(&c))?
        }
    };
    Ok(text)
}

/// Parses `args` (including the program name), runs the command and writes
/// its report to `out` and diagnostics to `err`. Returns the exit status.
pub fn run_command<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_INPUT
                }
            };
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(Failure::Tolerance(text)) => {
            let _ = writeln!(err, "{text}");
            EXIT_TOLERANCE
        }
        Err(Failure::Error(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e.class() {
                ErrorClass::Input => EXIT_INPUT,
                ErrorClass::Numerical => EXIT_NUMERICAL,
            }
        }
    }
}
