//! Command-line front end: table reproduction, single shifts, potential
//! sampling, and Z sweeps, emitting deterministic CSV or pretty tables.

mod commands;
mod format;

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

pub const EXIT_CONFIG: u8 = 2;
pub const EXIT_COMPUTE: u8 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn config(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_CONFIG,
            message: message.into(),
        }
    }

    pub fn compute(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_COMPUTE,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MassArg {
    Electron,
    Muon,
    /// Muon-proton reduced mass (non-relativistic recoil display mode).
    MuonReduced,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Point,
    Sphere,
    Fermi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    NonrelPoint,
    RelPointAnalytic,
    RelPointNumeric,
    RelFnsApprox,
    RelFnsFull,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LengthUnitArg {
    Gevinv,
    Fm,
    Compton,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnergyUnitArg {
    Gev,
    Ev,
    Mev,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WhichTable {
    #[value(name = "II", alias = "ii", alias = "2")]
    Two,
    #[value(name = "III", alias = "iii", alias = "3")]
    Three,
    #[value(name = "IV", alias = "iv", alias = "4")]
    Four,
}

/// Hadronic vacuum-polarization Uehling potentials and level shifts of
/// hydrogenlike ions.
#[derive(Parser, Debug)]
#[command(
    name = "hadvp",
    version,
    about,
    after_help = "Uncertainty notation: pretty output prints value(unc) with the \
uncertainty in units of the shown trailing digits, e.g. -3.693(46)e-3 means \
-3.693e-3 +/- 0.046e-3. CSV output carries explicit *_unc columns instead. \
Exit codes: 0 success, 2 configuration error, 3 computation failure."
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,

    /// Polarization parameter-set file (default: builtin seven-region set).
    #[arg(long, global = true)]
    pub params: Option<PathBuf>,

    /// Alternate parameter set; enables the inter-set uncertainty component.
    #[arg(long, global = true)]
    pub alt_params: Option<PathBuf>,

    /// Radius CSV (Z,R_rms_fm,uncertainty_fm) overriding the builtin table.
    #[arg(long, global = true)]
    pub radii: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,

    /// Worker threads for row-parallel commands (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Recompute one of the published result tables with diff columns.
    Table {
        #[arg(value_enum)]
        which: WhichTable,
        /// Restrict to these Z values (tables II/III).
        #[arg(long, value_delimiter = ',')]
        only_z: Vec<u32>,
        /// Skip the uncertainty recomputations (faster).
        #[arg(long)]
        no_unc: bool,
    },
    /// One energy shift.
    Shift {
        #[arg(long)]
        z: u32,
        /// State label such as 1s, 2s, 2p1/2, 2p3/2, 3d5/2.
        #[arg(long)]
        state: String,
        #[arg(long, value_enum)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = ModelArg::Sphere)]
        model: ModelArg,
        /// rms radius in fm (default: table lookup).
        #[arg(long)]
        rms: Option<f64>,
        /// Fermi skin thickness in fm.
        #[arg(long, default_value_t = 2.3)]
        skin: f64,
        #[arg(long, value_enum, default_value_t = MassArg::Electron)]
        mass: MassArg,
        #[arg(long, value_enum, default_value_t = EnergyUnitArg::Ev)]
        unit: EnergyUnitArg,
        /// Skip the uncertainty recomputations (faster).
        #[arg(long)]
        no_unc: bool,
    },
    /// Sample potential curves on a logarithmic radial grid.
    Potential {
        #[arg(long)]
        z: u32,
        /// Comma-separated curves: hadronic-approx, hadronic-full,
        /// hadronic-convolved, electron-loop, muon-loop.
        #[arg(long, value_delimiter = ',', default_value = "hadronic-approx")]
        species: Vec<String>,
        #[arg(long, value_enum, default_value_t = ModelArg::Point)]
        model: ModelArg,
        #[arg(long)]
        rms: Option<f64>,
        #[arg(long, default_value_t = 2.3)]
        skin: f64,
        #[arg(long)]
        r_min: f64,
        #[arg(long)]
        r_max: f64,
        #[arg(long, default_value_t = 200)]
        points: usize,
        #[arg(long, value_enum, default_value_t = LengthUnitArg::Compton)]
        length_unit: LengthUnitArg,
        #[arg(long, value_enum, default_value_t = EnergyUnitArg::Gev)]
        energy_unit: EnergyUnitArg,
    },
    /// Shift for a range of Z, one row per charge number.
    Sweep {
        #[arg(long)]
        z_min: u32,
        #[arg(long)]
        z_max: u32,
        #[arg(long)]
        state: String,
        #[arg(long, value_enum)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = ModelArg::Sphere)]
        model: ModelArg,
        #[arg(long, default_value_t = 2.3)]
        skin: f64,
        #[arg(long, value_enum, default_value_t = MassArg::Electron)]
        mass: MassArg,
        /// Skip the uncertainty recomputations (faster).
        #[arg(long)]
        no_unc: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(output) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, output) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(EXIT_COMPUTE);
                }
            } else {
                print!("{output}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
