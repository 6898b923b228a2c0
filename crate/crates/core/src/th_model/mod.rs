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

//! The Tietz-Hua potential
//!
//! ```text
//! V(r) = D [(1 − e^{−b_h(r−r_e)}) / (1 − c_h e^{−b_h(r−r_e)})]²
//! ```
//!
//! specialised onto the NU engine: with `x = (r − r_e)/r_e`, `α = b_h r_e`
//! and `s = e^{−αx}` the s-wave radial equation takes the NU template form.

mod spectrum;
mod wavefunction;

pub use spectrum::{
    as_printed_residual, morse_energy, reading_energy, reading_residual, th_energy,
    th_energy_closed, ClosedFormReading, EnergyLevel, BISECTION_ITERATIONS, SCAN_POINTS,
};
pub use wavefunction::{radial_wavefunction, RadialWavefunction};

pub use crate::special::{jacobi_poly, laguerre_poly};

use serde::{Deserialize, Serialize};

use crate::constants::MoleculeParams;
use crate::error::{Error, Result};
use crate::nu::NuBase;

/// Offset kept between the lower domain edge and the pole or origin, Å.
pub const WALL_OFFSET: f64 = 1e-6;
/// Outer edge of the domain in units of `1/b_h` beyond `r_e`.
pub const OUTER_DECAY_LENGTHS: f64 = 25.0;

// |1 − c_h e^{−b_h(r−r_e)}| below this counts as sitting on the pole.
const POLE_GUARD: f64 = 1e-12;

pub fn th_potential(r: f64, m: &MoleculeParams) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("r must be positive, got {r}")));
    }
    let e = (-m.b_h * (r - m.r_e)).exp();
    let denom = 1.0 - m.c_h * e;
    if denom.abs() < POLE_GUARD {
        return Err(Error::Singularity {
            r_s: m.pole().unwrap_or(r),
        });
    }
    let ratio = (1.0 - e) / denom;
    Ok(m.depth * ratio * ratio)
}

/// Radial interval `(r_lo, r_hi)` on which wavefunctions and the shooting
/// oracle live: a hard wall just above the origin (or just outside the pole)
/// and an outer edge 25 decay lengths past equilibrium.
pub fn validity_domain(m: &MoleculeParams) -> (f64, f64) {
    let r_lo = match m.pole() {
        Some(r_s) => WALL_OFFSET.max(r_s + WALL_OFFSET),
        None => WALL_OFFSET,
    };
    (r_lo, m.r_e + OUTER_DECAY_LENGTHS / m.b_h)
}

/// Dimensionless form of the s-wave problem at one trial energy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimensionlessProblem {
    /// `2μD/ħ²`, Å⁻².
    pub d: f64,
    /// `2μE/ħ²`, Å⁻².
    pub eps: f64,
    /// `b_h r_e`.
    pub alpha: f64,
    pub c_h: f64,
    pub r_e: f64,
}

impl DimensionlessProblem {
    pub fn new(m: &MoleculeParams, energy: f64) -> Self {
        let k = m.two_mu_over_hbar2();
        Self {
            d: k * m.depth,
            eps: k * energy,
            alpha: m.b_h * m.r_e,
            c_h: m.c_h,
            r_e: m.r_e,
        }
    }

    pub fn x(&self, r: f64) -> f64 {
        (r - self.r_e) / self.r_e
    }

    pub fn s(&self, r: f64) -> f64 {
        (-self.alpha * self.x(r)).exp()
    }

    /// `r_e²/α² = 1/b_h²`.
    pub fn length_factor(&self) -> f64 {
        self.r_e * self.r_e / (self.alpha * self.alpha)
    }

    pub fn nu_base(&self) -> NuBase {
        let f = self.length_factor();
        let (c, d, eps) = (self.c_h, self.d, self.eps);
        NuBase {
            alpha1: 1.0,
            alpha2: c,
            alpha3: c,
            xi1: f * (d - eps * c * c),
            xi2: 2.0 * f * (d - eps * c),
            xi3: f * (d - eps),
        }
    }
}

/// NU template coefficients of the TH problem at energy `energy` (eV).
pub fn nu_base_for_th(m: &MoleculeParams, energy: f64) -> Result<NuBase> {
    if !(energy > 0.0 && energy < m.depth) {
        return Err(Error::Domain(format!(
            "energy {energy} eV outside (0, D = {} eV)",
            m.depth
        )));
    }
    Ok(DimensionlessProblem::new(m, energy).nu_base())
}
