//! `hfent` — ground-state and thermal entanglement of the lithium-6
//! electron–nucleus hyperfine system, from the command line.
//!
//! Four subcommands cover the library's surface:
//!
//! * `ground-sweep` — tabulate ground energy, concurrence (numeric and
//!   closed form), and negativity over a grid of the electron field `c`.
//! * `thermal-sweep` — tabulate the Gibbs-state negativity over a `c` grid
//!   at one or more temperatures.
//! * `measure` — evaluate a single field point, optionally thermal.
//! * `critical-temp` — bisect for the temperature where the negativity's
//!   extremum at `c = 0` flips from dip to peak.
//!
//! Sweeps write CSV (to `--out` or standard output); `measure` and
//! `critical-temp` print `name=value` lines. All numbers carry twelve
//! significant digits and identical invocations produce byte-identical
//! output. Exit status is 0 on success, 2 for invalid arguments, and 3
//! when a numerical routine fails to converge or finds no sign change.

mod output;

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hfent_core::ground::{
    ground_point, ground_state, DEFAULT_DEGENERACY_TOL, GROUND_SWEEP_COLUMNS,
};
use hfent_core::measures::{concurrence_pure, negativity};
use hfent_core::spin::{physical_to_reduced, FieldParams};
use hfent_core::sweep::{linear_grid, SweepSeries};
use hfent_core::thermal::{find_critical_temperature, thermal_negativity};

use output::{format_significant, write_series_csv, write_thermal_csv};

/// Entanglement between a spin-1 nucleus and a spin-1/2 electron coupled by
/// the hyperfine interaction, under external magnetic fields.
#[derive(Parser)]
#[command(name = "hfent", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the electron field c at d = 0 and tabulate ground-state quantities as CSV
    GroundSweep(GroundSweepArgs),
    /// Sweep the electron field c at one or more temperatures and tabulate the negativity as CSV
    ThermalSweep(ThermalSweepArgs),
    /// Evaluate one field point: energy, degeneracy, and entanglement (thermal if --t is given)
    Measure(MeasureArgs),
    /// Find the temperature where the negativity's extremum at c = 0 changes character
    CriticalTemp(CriticalTempArgs),
}

#[derive(Args)]
struct GroundSweepArgs {
    /// Lower end of the c grid, in reduced units
    #[arg(long, default_value_t = -5.0, allow_negative_numbers = true)]
    c_min: f64,
    /// Upper end of the c grid, in reduced units
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    c_max: f64,
    /// Number of grid points, both endpoints included
    #[arg(long, default_value_t = 1001)]
    steps: usize,
    /// Write the CSV to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads used to evaluate grid points
    #[arg(long, default_value_t = NonZeroUsize::new(1).unwrap())]
    jobs: NonZeroUsize,
}

#[derive(Args)]
struct ThermalSweepArgs {
    /// Comma-separated temperatures in reduced units
    #[arg(
        long,
        value_delimiter = ',',
        num_args = 1..,
        default_values_t = [0.05, 0.107, 0.2, 0.5],
    )]
    temps: Vec<f64>,
    /// Lower end of the c grid, in reduced units
    #[arg(long, default_value_t = -2.0, allow_negative_numbers = true)]
    c_min: f64,
    /// Upper end of the c grid, in reduced units
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    c_max: f64,
    /// Number of grid points per temperature, both endpoints included
    #[arg(long, default_value_t = 401)]
    steps: usize,
    /// Write the CSV to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads used to evaluate grid points
    #[arg(long, default_value_t = NonZeroUsize::new(1).unwrap())]
    jobs: NonZeroUsize,
}

#[derive(Args)]
struct MeasureArgs {
    /// Electron field c, in reduced units
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    c: f64,
    /// Nuclear field d, in reduced units
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    d: f64,
    /// Temperature in reduced units; adds the Gibbs-state negativity to the output
    #[arg(long, allow_negative_numbers = true)]
    t: Option<f64>,
    /// Magnetic field acting on the electron, in tesla (pairs with --b2; replaces --c/--d)
    #[arg(long, requires = "b2", conflicts_with_all = ["c", "d"], allow_negative_numbers = true)]
    b1: Option<f64>,
    /// Magnetic field acting on the nucleus, in tesla (pairs with --b1; replaces --c/--d)
    #[arg(long, requires = "b1", conflicts_with_all = ["c", "d"], allow_negative_numbers = true)]
    b2: Option<f64>,
    /// Energy window within which eigenvalues count as one degenerate level
    #[arg(long, default_value_t = DEFAULT_DEGENERACY_TOL)]
    degeneracy_tol: f64,
}

#[derive(Args)]
struct CriticalTempArgs {
    /// Lower end of the temperature bracket, in reduced units
    #[arg(long, default_value_t = 0.05)]
    lo: f64,
    /// Upper end of the temperature bracket, in reduced units
    #[arg(long, default_value_t = 0.5)]
    hi: f64,
    /// Width of the final bracket around the critical temperature
    #[arg(long, default_value_t = 1e-4)]
    tol: f64,
}

/// Failures after argument parsing, split by exit status: bad values and
/// unusable output paths exit 2, numerical breakdowns exit 3.
#[derive(Debug)]
enum CliError {
    Args(String),
    Io(io::Error),
    Numerical(hfent_core::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Args(_) | CliError::Io(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Args(msg) => write!(f, "{msg}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Numerical(e) => write!(f, "{e}"),
        }
    }
}

impl From<hfent_core::Error> for CliError {
    fn from(e: hfent_core::Error) -> Self {
        match e {
            hfent_core::Error::InvalidRange(_) | hfent_core::Error::InvalidTemperature(_) => {
                CliError::Args(e.to_string())
            }
            other => CliError::Numerical(other),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::GroundSweep(args) => run_ground_sweep(args),
        Command::ThermalSweep(args) => run_thermal_sweep(args),
        Command::Measure(args) => run_measure(args),
        Command::CriticalTemp(args) => run_critical_temp(args),
    }
}

/// Rejects sweep ranges the grid cannot represent, before any work starts.
fn check_grid(min: f64, max: f64, steps: usize) -> Result<(), CliError> {
    if !(min.is_finite() && max.is_finite() && min < max) {
        return Err(CliError::Args(format!(
            "sweep range [{min}, {max}] must be finite with the minimum below the maximum"
        )));
    }
    if steps < 2 {
        return Err(CliError::Args(format!(
            "a sweep needs at least 2 steps, got {steps}"
        )));
    }
    Ok(())
}

/// Applies `f` to every grid point on up to `jobs` threads, returning the
/// results in grid order regardless of how the work was scheduled — output
/// built from them is byte-identical for any thread count.
fn par_map<T, F>(grid: &[f64], jobs: usize, f: F) -> hfent_core::Result<Vec<T>>
where
    T: Send,
    F: Fn(f64) -> hfent_core::Result<T> + Sync,
{
    if jobs <= 1 || grid.len() <= 1 {
        return grid.iter().map(|&x| f(x)).collect();
    }
    let chunk_len = grid.len().div_ceil(jobs);
    let per_chunk: Vec<Vec<hfent_core::Result<T>>> = std::thread::scope(|scope| {
        let f = &f;
        let workers: Vec<_> = grid
            .chunks(chunk_len)
            .map(|chunk| scope.spawn(move || chunk.iter().map(|&x| f(x)).collect()))
            .collect();
        workers
            .into_iter()
            .map(|w| w.join().expect("sweep worker panicked"))
            .collect()
    });
    per_chunk.into_iter().flatten().collect()
}

/// Routes CSV emission to `--out` or standard output, buffered either way.
fn write_output<F>(path: Option<&Path>, emit: F) -> Result<(), CliError>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    match path {
        Some(p) => {
            let file = File::create(p)
                .map_err(|e| CliError::Args(format!("cannot write to {}: {e}", p.display())))?;
            let mut writer = BufWriter::new(file);
            emit(&mut writer)?;
            writer.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut writer = BufWriter::new(stdout.lock());
            emit(&mut writer)?;
            writer.flush()?;
        }
    }
    Ok(())
}

fn run_ground_sweep(args: GroundSweepArgs) -> Result<(), CliError> {
    check_grid(args.c_min, args.c_max, args.steps)?;
    let grid = linear_grid(args.c_min, args.c_max, args.steps);
    let points = par_map(&grid, args.jobs.get(), |c| {
        ground_point(c, DEFAULT_DEGENERACY_TOL)
    })?;

    let mut series = SweepSeries::new(
        "c",
        GROUND_SWEEP_COLUMNS.iter().map(|s| s.to_string()).collect(),
    );
    for p in points {
        series.push_record(
            p.c,
            vec![
                p.energy_numeric,
                p.energy_closed,
                p.concurrence_numeric,
                p.concurrence_closed,
                p.negativity_mixed,
            ],
        )?;
    }
    write_output(args.out.as_deref(), |w| write_series_csv(w, &series))
}

fn run_thermal_sweep(args: ThermalSweepArgs) -> Result<(), CliError> {
    if args.temps.is_empty() {
        return Err(CliError::Args(
            "at least one temperature is required".into(),
        ));
    }
    for &t in &args.temps {
        if !(t.is_finite() && t > 0.0) {
            return Err(CliError::Args(format!(
                "temperatures must be positive, got {t}"
            )));
        }
    }
    check_grid(args.c_min, args.c_max, args.steps)?;

    let grid = linear_grid(args.c_min, args.c_max, args.steps);
    let mut sweeps = Vec::with_capacity(args.temps.len());
    for &t in &args.temps {
        let values = par_map(&grid, args.jobs.get(), |c| thermal_negativity(c, 0.0, t))?;
        let mut series = SweepSeries::new("c", vec!["negativity".to_string()]);
        for (&c, n) in grid.iter().zip(values) {
            series.push_record(c, vec![n])?;
        }
        sweeps.push((t, series));
    }
    write_output(args.out.as_deref(), |w| write_thermal_csv(w, &sweeps))
}

fn run_measure(args: MeasureArgs) -> Result<(), CliError> {
    let field = match (args.b1, args.b2) {
        (Some(b1), Some(b2)) => {
            eprintln!(
                "warning: tesla inputs are converted with the hyperfine splitting \
                 (228 MHz) taken as one reduced energy unit; see the README for \
                 this convention"
            );
            physical_to_reduced(b1, b2)
        }
        _ => FieldParams::reduced(args.c, args.d),
    };

    // Compute every requested value before printing anything, so a failure
    // cannot leave a half-written record on standard output.
    let gs = ground_state(&field, args.degeneracy_tol)?;
    let entanglement = if gs.is_degenerate() {
        ("negativity_mixed", negativity(&gs.state)?)
    } else {
        let pure = gs
            .state
            .as_pure_state(1e-9)
            .expect("a simple ground level is a pure projector");
        ("concurrence", concurrence_pure(&pure))
    };
    let thermal = match args.t {
        Some(t) => Some((t, thermal_negativity(field.c, field.d, t)?)),
        None => None,
    };

    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    writeln!(out, "c={}", format_significant(field.c))?;
    writeln!(out, "d={}", format_significant(field.d))?;
    if let Some((t, _)) = thermal {
        writeln!(out, "t={}", format_significant(t))?;
    }
    writeln!(out, "energy={}", format_significant(gs.energy))?;
    writeln!(out, "degeneracy={}", gs.degeneracy)?;
    writeln!(
        out,
        "{}={}",
        entanglement.0,
        format_significant(entanglement.1)
    )?;
    if let Some((_, n)) = thermal {
        writeln!(out, "negativity={}", format_significant(n))?;
    }
    out.flush()?;
    Ok(())
}

fn run_critical_temp(args: CriticalTempArgs) -> Result<(), CliError> {
    let result = find_critical_temperature(args.lo, args.hi, args.tol)?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    writeln!(out, "t_c={}", format_significant(result.t_c))?;
    writeln!(out, "bracket_low={}", format_significant(result.bracket.0))?;
    writeln!(out, "bracket_high={}", format_significant(result.bracket.1))?;
    writeln!(out, "iterations={}", result.iterations)?;
    out.flush()?;
    Ok(())
}
