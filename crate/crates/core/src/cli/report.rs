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

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{GridOverrides, RunConfig};
use crate::constants::MoleculeParams;
use crate::error::{Error, Result};
use crate::nu::{derive_coefficients, energy_residual, tau_prime};
use crate::numerov::{default_grid, find_eigenvalue, RadialGrid, REFINEMENT_TOLERANCE};
use crate::th_model::{morse_energy, nu_base_for_th, radial_wavefunction, th_energy};

/// One table entry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Cell {
    Value(f64),
    Unbound,
    Error(String),
    NotComputed,
}

impl Cell {
    fn from_result(r: Result<f64>) -> Self {
        match r {
            Ok(v) => Cell::Value(v),
            Err(Error::NoBoundLevel { .. }) => Cell::Unbound,
            Err(e) => Cell::Error(e.to_string()),
        }
    }

    pub fn value(&self) -> Option<f64> {
        match self {
            Cell::Value(v) => Some(*v),
            _ => None,
        }
    }

    fn is_partial(&self) -> bool {
        matches!(self, Cell::Unbound | Cell::Error(_))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub molecule: String,
    pub n: u32,
    pub c_h: f64,
    pub th: Cell,
    pub morse: Cell,
    pub oracle: Cell,
    pub delta_th_oracle: Option<f64>,
}

impl SpectrumRow {
    pub fn is_partial(&self) -> bool {
        self.th.is_partial() || self.morse.is_partial() || self.oracle.is_partial()
    }
}

pub fn grid_for(m: &MoleculeParams, overrides: &GridOverrides) -> Result<RadialGrid> {
    let base = default_grid(m);
    RadialGrid::new(
        overrides.r_lo.unwrap_or(base.r_lo),
        overrides.r_hi.unwrap_or(base.r_hi),
        overrides.n_points.unwrap_or(base.n_points),
    )
}

fn cells(config: &RunConfig) -> Vec<(&MoleculeParams, u32)> {
    config
        .molecules
        .iter()
        .flat_map(|m| config.levels.iter().map(move |&n| (m, n)))
        .collect()
}

/// `E − D` per requested mode for every (molecule, n), molecules in the
/// order given and levels ascending.
pub fn cmd_spectrum(config: &RunConfig) -> Vec<SpectrumRow> {
    let mode = config.mode;
    cells(config)
        .into_par_iter()
        .map(|(m, n)| {
            let th = if mode.th() {
                Cell::from_result(th_energy(n, m).map(|l| l.energy_minus_d))
            } else {
                Cell::NotComputed
            };
            let morse = if mode.morse() {
                Cell::from_result(morse_energy(n, m).map(|l| l.energy_minus_d))
            } else {
                Cell::NotComputed
            };
            let oracle = if mode.oracle() {
                Cell::from_result(
                    grid_for(m, &config.grid_overrides)
                        .and_then(|g| find_eigenvalue(n, m, &g))
                        .map(|o| o.energy_minus_d),
                )
            } else {
                Cell::NotComputed
            };
            let delta_th_oracle = th.value().zip(oracle.value()).map(|(a, b)| a - b);
            SpectrumRow {
                molecule: m.name.clone(),
                n,
                c_h: m.c_h,
                th,
                morse,
                oracle,
                delta_th_oracle,
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerifyTolerances {
    pub th_vs_oracle_ev: f64,
    pub morse_vs_oracle_ev: f64,
    pub refinement_ev: f64,
    pub nu_residual: f64,
}

impl Default for VerifyTolerances {
    fn default() -> Self {
        Self {
            th_vs_oracle_ev: 1e-4,
            morse_vs_oracle_ev: 1e-5,
            refinement_ev: REFINEMENT_TOLERANCE,
            nu_residual: 1e-8,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub value: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    fn at_most(name: &str, value: Option<f64>, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            value,
            tolerance,
            pass: value.is_some_and(|v| v.abs() <= tolerance),
        }
    }

    fn below(name: &str, value: Option<f64>, bound: f64) -> Self {
        Self {
            name: name.into(),
            value,
            tolerance: bound,
            pass: value.is_some_and(|v| v < bound),
        }
    }

    fn equals(name: &str, value: Option<f64>, expected: f64) -> Self {
        Self {
            name: name.into(),
            value,
            tolerance: expected,
            pass: value == Some(expected),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyRow {
    pub molecule: String,
    pub n: u32,
    pub c_h: f64,
    #[serde(rename = "E_th_minus_D_eV")]
    pub th: Option<f64>,
    #[serde(rename = "E_oracle_minus_D_eV")]
    pub oracle: Option<f64>,
    #[serde(rename = "delta_th_oracle_eV")]
    pub delta_th_oracle: Option<f64>,
    #[serde(rename = "E_morse_minus_D_eV")]
    pub morse: Option<f64>,
    #[serde(rename = "E_morse_oracle_minus_D_eV")]
    pub morse_oracle: Option<f64>,
    #[serde(rename = "delta_morse_oracle_eV")]
    pub delta_morse_oracle: Option<f64>,
    pub nu_residual: Option<f64>,
    pub tau_prime: Option<f64>,
    pub oracle_nodes: Option<usize>,
    #[serde(rename = "refinement_shift_eV")]
    pub refinement_shift: Option<f64>,
    #[serde(rename = "morse_refinement_shift_eV")]
    pub morse_refinement_shift: Option<f64>,
    pub errors: Vec<String>,
    pub checks: Vec<Check>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub grid_points: Vec<usize>,
    pub tolerances: VerifyTolerances,
    pub rows: Vec<VerifyRow>,
    pub passed: bool,
}

fn verify_row(
    m: &MoleculeParams,
    n: u32,
    overrides: &GridOverrides,
    tol: &VerifyTolerances,
) -> VerifyRow {
    let mut errors = Vec::new();
    let mut keep = |r: Result<f64>| match r {
        Ok(v) => Some(v),
        Err(e) => {
            errors.push(e.to_string());
            None
        }
    };

    let level = th_energy(n, m);
    let th = keep(
        level
            .as_ref()
            .map(|l| l.energy_minus_d)
            .map_err(Clone::clone),
    );
    let coefficients = level.as_ref().ok().and_then(|l| {
        nu_base_for_th(m, l.energy)
            .and_then(derive_coefficients)
            .ok()
    });
    let nu_residual = coefficients.map(|c| energy_residual(n, &c));
    let tau = coefficients.map(|c| tau_prime(&c));

    let grid = grid_for(m, overrides);
    let resolved = grid.as_ref().map(RadialGrid::is_resolved).unwrap_or(false);
    let oracle = grid.clone().and_then(|g| find_eigenvalue(n, m, &g));
    let oracle_energy = keep(
        oracle
            .as_ref()
            .map(|o| o.energy_minus_d)
            .map_err(Clone::clone),
    );
    let refinement_shift = oracle.as_ref().ok().map(|o| o.refinement_shift);
    let oracle_nodes = oracle.as_ref().ok().map(|o| o.node_count);

    let morse_mol = m.morse_limit();
    let morse = keep(morse_energy(n, &morse_mol).map(|l| l.energy_minus_d));
    let morse_oracle =
        grid_for(&morse_mol, overrides).and_then(|g| find_eigenvalue(n, &morse_mol, &g));
    let morse_oracle_energy = keep(
        morse_oracle
            .as_ref()
            .map(|o| o.energy_minus_d)
            .map_err(Clone::clone),
    );
    let morse_refinement_shift = morse_oracle.as_ref().ok().map(|o| o.refinement_shift);

    let delta_th_oracle = th.zip(oracle_energy).map(|(a, b)| a - b);
    let delta_morse_oracle = morse.zip(morse_oracle_energy).map(|(a, b)| a - b);

    let checks = vec![
        Check::at_most("th_vs_oracle", delta_th_oracle, tol.th_vs_oracle_ev),
        Check::at_most(
            "morse_vs_oracle",
            delta_morse_oracle,
            tol.morse_vs_oracle_ev,
        ),
        Check::at_most("nu_residual", nu_residual, tol.nu_residual),
        Check::below("tau_prime_negative", tau, 0.0),
        Check::equals(
            "oracle_node_count",
            oracle_nodes.map(|k| k as f64),
            f64::from(n),
        ),
        Check::at_most("th_refinement", refinement_shift, tol.refinement_ev),
        Check::at_most(
            "morse_refinement",
            morse_refinement_shift,
            tol.refinement_ev,
        ),
        Check::equals(
            "grid_resolution",
            Some(if resolved { 1.0 } else { 0.0 }),
            1.0,
        ),
    ];
    let passed = checks.iter().all(|c| c.pass);
    VerifyRow {
        molecule: m.name.clone(),
        n,
        c_h: m.c_h,
        th,
        oracle: oracle_energy,
        delta_th_oracle,
        morse,
        morse_oracle: morse_oracle_energy,
        delta_morse_oracle,
        nu_residual,
        tau_prime: tau,
        oracle_nodes,
        refinement_shift,
        morse_refinement_shift,
        errors,
        checks,
        passed,
    }
}

/// Closed form vs oracle for every (molecule, n); a failing row never stops
/// the others.
pub fn cmd_verify(config: &RunConfig) -> VerifyReport {
    let tolerances = VerifyTolerances::default();
    let rows: Vec<VerifyRow> = cells(config)
        .into_par_iter()
        .map(|(m, n)| verify_row(m, n, &config.grid_overrides, &tolerances))
        .collect();
    let mut grid_points: Vec<usize> = config
        .molecules
        .iter()
        .filter_map(|m| grid_for(m, &config.grid_overrides).ok().map(|g| g.n_points))
        .collect();
    grid_points.dedup();
    let passed = rows.iter().all(|r| r.passed);
    VerifyReport {
        grid_points,
        tolerances,
        rows,
        passed,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WavefunctionSamples {
    pub molecule: String,
    pub n: u32,
    #[serde(rename = "E_minus_D_eV")]
    pub energy_minus_d: f64,
    pub norm: f64,
    /// `(r [Å], R(r) [Å^-1/2])`.
    pub samples: Vec<(f64, f64)>,
}

/// Normalized `R(r)` at `samples` uniform points for each level; levels that
/// fail are returned separately.
pub fn cmd_wavefunction(
    config: &RunConfig,
    samples: usize,
) -> (Vec<WavefunctionSamples>, Vec<(String, u32, Error)>) {
    let results: Vec<_> = cells(config)
        .into_par_iter()
        .map(|(m, n)| {
            radial_wavefunction(n, m)
                .map(|wf| WavefunctionSamples {
                    molecule: m.name.clone(),
                    n,
                    energy_minus_d: wf.level.energy_minus_d,
                    norm: wf.norm,
                    samples: wf.sample(samples),
                })
                .map_err(|e| (m.name.clone(), n, e))
        })
        .collect();
    let mut ok = Vec::new();
    let mut failed = Vec::new();
    for r in results {
        match r {
            Ok(w) => ok.push(w),
            Err(e) => failed.push(e),
        }
    }
    (ok, failed)
}
