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

//! Physical constants, unit conversions and molecule parameter tables.
//!
//! Internal units: lengths in Å, energies in eV, masses carried as the rest
//! energy μc² in eV. With ħc in eV·Å the kinetic prefactor becomes
//! `2μ/ħ² = 2(μc²)/(ħc)²` in eV⁻¹·Å⁻².

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Conversion constants. The defaults are pinned to fixed literature values
/// so that tabulated spectra can be reproduced digit for digit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    /// ħc in eV·Å.
    pub hbar_c: f64,
    /// eV per cm⁻¹.
    pub ev_per_inverse_cm: f64,
    /// Rest energy of one atomic mass unit, in eV.
    pub ev_per_amu_c2: f64,
    /// Grams per atomic mass unit.
    pub grams_per_amu: f64,
}

impl PhysicalConstants {
    pub const HBAR_C: f64 = 1973.29;
    pub const EV_PER_INVERSE_CM: f64 = 1.239841875e-4;
    pub const EV_PER_AMU_C2: f64 = 931.494028e6;
    pub const GRAMS_PER_AMU: f64 = 1.660538782e-24;

    /// Wavenumber (cm⁻¹) to energy (eV).
    pub fn convert_wavenumber_to_ev(&self, wavenumber: f64) -> f64 {
        wavenumber * self.ev_per_inverse_cm
    }

    /// Mass given in units of 10⁻²³ g to rest energy μc² in eV.
    pub fn convert_mass_grams_to_ev(&self, mass_1e23_g: f64) -> Result<f64> {
        if !(mass_1e23_g > 0.0) || !mass_1e23_g.is_finite() {
            return Err(Error::Domain(format!(
                "mass must be positive and finite, got {mass_1e23_g}"
            )));
        }
        Ok(mass_1e23_g * 1e-23 / self.grams_per_amu * self.ev_per_amu_c2)
    }

    /// `2μ/ħ²` in eV⁻¹·Å⁻² for a reduced mass given as μc² in eV.
    pub fn two_mu_over_hbar2(&self, mu_c2: f64) -> f64 {
        2.0 * mu_c2 / (self.hbar_c * self.hbar_c)
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self {
            hbar_c: Self::HBAR_C,
            ev_per_inverse_cm: Self::EV_PER_INVERSE_CM,
            ev_per_amu_c2: Self::EV_PER_AMU_C2,
            grams_per_amu: Self::GRAMS_PER_AMU,
        }
    }
}

/// One row of a parameter table, in the units the table is written in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub name: String,
    pub c_h: f64,
    /// Reduced mass in 10⁻²³ g.
    pub mu_1e23_g: f64,
    /// Å⁻¹.
    pub b_h: f64,
    /// Å.
    pub r_e: f64,
    /// Morse constant in Å⁻¹, if tabulated.
    pub beta: Option<f64>,
    /// Well depth in cm⁻¹.
    pub depth_cm: f64,
}

/// Tietz-Hua parameters of a diatomic molecule in internal units.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MoleculeParams {
    pub name: String,
    /// Dimensionless potential constant.
    pub c_h: f64,
    /// Reduced mass as μc², eV.
    pub mu: f64,
    /// Å⁻¹.
    pub b_h: f64,
    /// Å.
    pub r_e: f64,
    /// Morse constant, Å⁻¹.
    pub beta: Option<f64>,
    /// Well depth, eV.
    pub depth: f64,
    /// ħc (eV·Å) the molecule was converted with.
    pub hbar_c: f64,
}

/// Relative tolerance for `b_h ≈ β(1 − c_h)`; table entries are rounded
/// independently.
pub const CONSISTENCY_TOLERANCE: f64 = 1e-2;

impl MoleculeParams {
    pub fn from_row(row: &TableRow, constants: &PhysicalConstants) -> Result<Self> {
        let mu = constants
            .convert_mass_grams_to_ev(row.mu_1e23_g)
            .map_err(|e| Error::Validation {
                field: "mu",
                message: e.to_string(),
            })?;
        let params = Self {
            name: row.name.clone(),
            c_h: row.c_h,
            mu,
            b_h: row.b_h,
            r_e: row.r_e,
            beta: row.beta,
            depth: constants.convert_wavenumber_to_ev(row.depth_cm),
            hbar_c: constants.hbar_c,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        fn positive(field: &'static str, value: f64) -> Result<()> {
            if value > 0.0 && value.is_finite() {
                Ok(())
            } else {
                Err(Error::Validation {
                    field,
                    message: format!("must be positive and finite, got {value}"),
                })
            }
        }
        positive("D", self.depth)?;
        positive("b_h", self.b_h)?;
        positive("r_e", self.r_e)?;
        positive("mu", self.mu)?;
        positive("hbar_c", self.hbar_c)?;
        if !(self.c_h < 1.0) || !self.c_h.is_finite() {
            return Err(Error::Validation {
                field: "c_h",
                message: format!("must be finite and below 1, got {}", self.c_h),
            });
        }
        if let Some(beta) = self.beta {
            positive("beta", beta)?;
            let mismatch = (self.b_h - beta * (1.0 - self.c_h)).abs() / self.b_h;
            if mismatch > CONSISTENCY_TOLERANCE {
                return Err(Error::Validation {
                    field: "beta",
                    message: format!(
                        "b_h = {} inconsistent with beta*(1 - c_h) = {} (relative mismatch {mismatch:.3e})",
                        self.b_h,
                        beta * (1.0 - self.c_h)
                    ),
                });
            }
        }
        Ok(())
    }

    /// `2μ/ħ²` in eV⁻¹·Å⁻².
    pub fn two_mu_over_hbar2(&self) -> f64 {
        2.0 * self.mu / (self.hbar_c * self.hbar_c)
    }

    /// The Morse exponent β; falls back to `b_h / (1 − c_h)` when the table
    /// does not carry one.
    pub fn morse_beta(&self) -> f64 {
        self.beta.unwrap_or(self.b_h / (1.0 - self.c_h))
    }

    /// Same molecule with a different potential constant, keeping β fixed so
    /// that `b_h = β(1 − c_h)`.
    pub fn with_potential_constant(&self, c_h: f64) -> Self {
        let beta = self.morse_beta();
        Self {
            c_h,
            b_h: beta * (1.0 - c_h),
            beta: Some(beta),
            ..self.clone()
        }
    }

    /// The c_h = 0 Morse molecule (`b_h = β`).
    pub fn morse_limit(&self) -> Self {
        self.with_potential_constant(0.0)
    }

    /// Position of the potential pole `r_e + ln(c_h)/b_h`, present only for
    /// `0 < c_h < 1`.
    pub fn pole(&self) -> Option<f64> {
        (self.c_h > 0.0).then(|| self.r_e + self.c_h.ln() / self.b_h)
    }
}

/// Parameters of six diatomic molecules: name, c_h, μ (10⁻²³ g), b_h (Å⁻¹),
/// r_e (Å), β (Å⁻¹), D (cm⁻¹).
pub const BUILTIN_TABLE: &str = "\
# name  c_h        mu_1e-23g  b_h_invA  r_e_A  beta_invA  D_cm-1
HF      0.127772   0.160      1.94207   0.917  2.2266     49382
N2      -0.032325  1.171      2.78585   1.097  2.6986     79885
I2      -0.139013  10.612     2.12343   2.666  1.8643     12547
H2      0.170066   0.084      1.61890   0.741  1.9506     38318
O2      0.027262   1.377      2.59103   1.207  2.6636     42041
O2+     -0.019445  1.377      2.86987   1.116  2.8151     54688
";

/// Parses a whitespace-delimited parameter table. Blank lines and anything
/// after `#` are ignored; a `-` in the β column means "not tabulated".
pub fn parse_table(source: &str) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for (idx, raw) in source.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 7 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected 7 columns, found {}", fields.len()),
            });
        }
        let number = |col: usize, what: &str| -> Result<f64> {
            fields[col]
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| Error::Parse {
                    line: line_no,
                    message: format!(
                        "column {} ({what}): cannot parse `{}`",
                        col + 1,
                        fields[col]
                    ),
                })
        };
        let beta = if fields[5] == "-" {
            None
        } else {
            Some(number(5, "beta")?)
        };
        rows.push(TableRow {
            name: fields[0].to_string(),
            c_h: number(1, "c_h")?,
            mu_1e23_g: number(2, "mu")?,
            b_h: number(3, "b_h")?,
            r_e: number(4, "r_e")?,
            beta,
            depth_cm: number(6, "D")?,
        });
    }
    Ok(rows)
}

/// Parses a parameter table and converts every row to internal units.
pub fn load_molecules(source: &str, constants: &PhysicalConstants) -> Result<Vec<MoleculeParams>> {
    parse_table(source)?
        .iter()
        .map(|row| MoleculeParams::from_row(row, constants))
        .collect()
}

pub fn builtin_rows() -> Vec<TableRow> {
    parse_table(BUILTIN_TABLE).expect("built-in table is well formed")
}

pub fn builtin_molecules(constants: &PhysicalConstants) -> Vec<MoleculeParams> {
    load_molecules(BUILTIN_TABLE, constants).expect("built-in table is valid")
}

pub fn builtin_molecule(name: &str, constants: &PhysicalConstants) -> Result<MoleculeParams> {
    builtin_molecules(constants)
        .into_iter()
        .find(|m| m.name == name)
        .ok_or_else(|| Error::UnknownMolecule(name.to_string()))
}

// Column precision of the built-in table; values carrying more digits fall
// back to the shortest round-trip representation.
fn format_column(value: f64, decimals: usize) -> String {
    let fixed = format!("{value:.decimals$}");
    if fixed.parse::<f64>() == Ok(value) {
        fixed
    } else {
        format!("{value}")
    }
}

/// Writes rows back out in the table format accepted by [`parse_table`].
pub fn serialize_table(rows: &[TableRow]) -> String {
    let mut out = String::from("# name  c_h  mu_1e-23g  b_h_invA  r_e_A  beta_invA  D_cm-1\n");
    for row in rows {
        let beta = row
            .beta
            .map_or_else(|| "-".to_string(), |b| format_column(b, 4));
        let _ = writeln!(
            out,
            "{} {} {} {} {} {} {}",
            row.name,
            format_column(row.c_h, 6),
            format_column(row.mu_1e23_g, 3),
            format_column(row.b_h, 5),
            format_column(row.r_e, 3),
            beta,
            format_column(row.depth_cm, 0),
        );
    }
    out
}
