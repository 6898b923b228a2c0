// Copyright 2026 The thspec Authors
//
// Licensed under the Apache license, version 2.0 (the "license");
// you may not use this file except in compliance with the license.
// You may obtain a copy of the license at
//
//     http://www.apache.org/licenses/license-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the license is distributed on an "as is" basis,
// without warranties or conditions of any kind, either express or implied.
// See the license for the specific language governing permissions and
// limitations under the license.

//! `thspec` command line: level tables, oracle verification and sampled
//! wavefunctions.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage error,
//! 3 partial success (some requested level is unbound or did not converge).

mod output;
mod report;

pub use output::{write_spectrum, write_verify, write_wavefunctions, SPECTRUM_HEADER};
pub use report::{
    cmd_spectrum, cmd_verify, cmd_wavefunction, Cell, Check, SpectrumRow, VerifyReport, VerifyRow,
    VerifyTolerances, WavefunctionSamples,
};

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::constants::{builtin_molecules, load_molecules, MoleculeParams, PhysicalConstants};
use crate::error::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_TOLERANCE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARTIAL: i32 = 3;

/// Environment variable naming a molecule parameter file.
pub const MOLECULES_ENV: &str = "THSPEC_MOLECULES";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
pub enum Mode {
    Th,
    Morse,
    Oracle,
    All,
}

impl Mode {
    pub fn th(self) -> bool {
        matches!(self, Mode::Th | Mode::All)
    }
    pub fn morse(self) -> bool {
        matches!(self, Mode::Morse | Mode::All)
    }
    pub fn oracle(self) -> bool {
        matches!(self, Mode::Oracle | Mode::All)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Pretty,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct GridOverrides {
    pub n_points: Option<usize>,
    pub r_lo: Option<f64>,
    pub r_hi: Option<f64>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct ConstantsOverrides {
    pub hbar_c: Option<f64>,
    pub ev_per_inverse_cm: Option<f64>,
    pub ev_per_amu_c2: Option<f64>,
    pub grams_per_amu: Option<f64>,
}

impl ConstantsOverrides {
    pub fn apply(&self, mut c: PhysicalConstants) -> PhysicalConstants {
        if let Some(v) = self.hbar_c {
            c.hbar_c = v;
        }
        if let Some(v) = self.ev_per_inverse_cm {
            c.ev_per_inverse_cm = v;
        }
        if let Some(v) = self.ev_per_amu_c2 {
            c.ev_per_amu_c2 = v;
        }
        if let Some(v) = self.grams_per_amu {
            c.grams_per_amu = v;
        }
        c
    }
}

/// Fully resolved run: molecules are loaded and checked before any
/// computation starts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub molecules: Vec<MoleculeParams>,
    pub levels: Vec<u32>,
    pub mode: Mode,
    pub output_format: OutputFormat,
    pub full_precision: bool,
    pub grid_overrides: GridOverrides,
    pub constants: PhysicalConstants,
}

#[derive(Debug, Parser)]
#[command(
    name = "thspec",
    version,
    about = "Tietz-Hua vibrational spectra with an independent Numerov check"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate E − D for the requested molecules and levels.
    Spectrum(CommonArgs),
    /// Compare closed-form levels with the shooting oracle; JSON report.
    Verify(CommonArgs),
    /// Sample normalized radial functions R(r) on the validity domain.
    Wavefunction {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Comma-separated molecule names; defaults to every molecule in the table.
    #[arg(long, value_delimiter = ',')]
    pub molecules: Option<Vec<String>>,
    /// Parameter file (`name c_h mu_1e-23g b_h r_e beta D_cm-1` per line).
    /// Falls back to $THSPEC_MOLECULES, then to the built-in table.
    #[arg(long)]
    pub molecule_file: Option<PathBuf>,
    /// Comma-separated vibrational quantum numbers.
    #[arg(long, value_delimiter = ',', default_value = "0,5,7")]
    pub levels: Vec<u32>,
    #[arg(long, value_enum, default_value_t = Mode::All)]
    pub mode: Mode,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Emit full binary64 precision instead of 9 decimals.
    #[arg(long)]
    pub full_precision: bool,
    #[arg(long)]
    pub grid_points: Option<usize>,
    #[arg(long)]
    pub grid_r_lo: Option<f64>,
    #[arg(long)]
    pub grid_r_hi: Option<f64>,
    #[arg(long)]
    pub hbar_c: Option<f64>,
    #[arg(long)]
    pub ev_per_inverse_cm: Option<f64>,
    #[arg(long)]
    pub ev_per_amu_c2: Option<f64>,
    #[arg(long)]
    pub grams_per_amu: Option<f64>,
}

impl CommonArgs {
    /// Loads the molecule table and checks the selection.
    pub fn resolve(&self, env_file: Option<PathBuf>) -> Result<RunConfig> {
        let constants = ConstantsOverrides {
            hbar_c: self.hbar_c,
            ev_per_inverse_cm: self.ev_per_inverse_cm,
            ev_per_amu_c2: self.ev_per_amu_c2,
            grams_per_amu: self.grams_per_amu,
        }
        .apply(PhysicalConstants::default());

        let available = match self.molecule_file.clone().or(env_file) {
            Some(path) => {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                load_molecules(&text, &constants)?
            }
            None => builtin_molecules(&constants),
        };

        let molecules = match &self.molecules {
            None => available,
            Some(names) => {
                let names: Vec<&str> = names
                    .iter()
                    .map(|s| s.trim())
                    .filter(|s| !s.is_empty())
                    .collect();
                names
                    .iter()
                    .map(|name| {
                        available
                            .iter()
                            .find(|m| m.name == *name)
                            .cloned()
                            .ok_or_else(|| Error::UnknownMolecule(name.to_string()))
                    })
                    .collect::<Result<Vec<_>>>()?
            }
        };
        if molecules.is_empty() {
            return Err(Error::Domain("no molecules selected".into()));
        }
        if self.levels.is_empty() {
            return Err(Error::Domain("no levels selected".into()));
        }
        let mut levels = self.levels.clone();
        levels.sort_unstable();
        levels.dedup();

        Ok(RunConfig {
            molecules,
            levels,
            mode: self.mode,
            output_format: self.format,
            full_precision: self.full_precision,
            grid_overrides: GridOverrides {
                n_points: self.grid_points,
                r_lo: self.grid_r_lo,
                r_hi: self.grid_r_hi,
            },
            constants,
        })
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(
    args: I,
    env_file: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };

    let (common, samples) = match &cli.command {
        Command::Spectrum(c) | Command::Verify(c) => (c, None),
        Command::Wavefunction { common, samples } => (common, Some(*samples)),
    };
    let config = match common.resolve(env_file) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };

    let result = match cli.command {
        Command::Spectrum(_) => {
            let rows = cmd_spectrum(&config);
            let partial = rows.iter().any(SpectrumRow::is_partial);
            write_spectrum(out, &rows, config.output_format, config.full_precision).map(|()| {
                if partial {
                    EXIT_PARTIAL
                } else {
                    EXIT_OK
                }
            })
        }
        Command::Verify(_) => {
            let report = cmd_verify(&config);
            write_verify(out, &report).map(|()| {
                if report.passed {
                    EXIT_OK
                } else {
                    EXIT_TOLERANCE
                }
            })
        }
        Command::Wavefunction { .. } => {
            let (levels, failures) = cmd_wavefunction(&config, samples.unwrap_or(1000));
            for (name, n, e) in &failures {
                let _ = writeln!(err, "{name} n = {n}: {e}");
            }
            write_wavefunctions(out, &levels, config.output_format).map(|()| {
                if failures.is_empty() {
                    EXIT_OK
                } else {
                    EXIT_PARTIAL
                }
            })
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
