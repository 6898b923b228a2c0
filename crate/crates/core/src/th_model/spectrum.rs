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

//! Vibrational (s-wave) levels of the TH well and its Morse limit.

use serde::{Deserialize, Serialize};

use super::DimensionlessProblem;
use crate::constants::MoleculeParams;
use crate::error::{Error, Result};
use crate::nu::{derive_coefficients, energy_residual, tau_prime, NuCoefficients};

/// Grid used to bracket the root of the quantization condition.
pub const SCAN_POINTS: usize = 512;
pub const BISECTION_ITERATIONS: usize = 60;
/// Scan edges sit `SCAN_MARGIN · D` inside `(0, D)`.
const SCAN_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyLevel {
    pub n: u32,
    /// E_{n,0} measured from the potential minimum, eV.
    pub energy: f64,
    /// `E − D`, the convention of published level tables, eV.
    pub energy_minus_d: f64,
    /// `√α₈ = √(d − ε)/b_h`.
    pub t: f64,
}

impl EnergyLevel {
    fn new(n: u32, energy: f64, m: &MoleculeParams, b: f64) -> Self {
        let p = DimensionlessProblem::new(m, energy);
        Self {
            n,
            energy,
            energy_minus_d: energy - m.depth,
            t: (p.d - p.eps).max(0.0).sqrt() / b,
        }
    }
}

fn coefficients_at(m: &MoleculeParams, energy: f64) -> Result<NuCoefficients> {
    derive_coefficients(DimensionlessProblem::new(m, energy).nu_base())
}

fn no_level(n: u32, m: &MoleculeParams) -> Error {
    Error::NoBoundLevel {
        n,
        molecule: m.name.clone(),
    }
}

/// Level `n` of the TH well from the NU quantization condition, bracketed on
/// a uniform energy scan and refined by bisection.
pub fn th_energy(n: u32, m: &MoleculeParams) -> Result<EnergyLevel> {
    let residual = |e: f64| coefficients_at(m, e).map(|c| energy_residual(n, &c));
    let lo_edge = SCAN_MARGIN * m.depth;
    let hi_edge = m.depth - lo_edge;
    let step = (hi_edge - lo_edge) / (SCAN_POINTS - 1) as f64;

    let mut bracket = None;
    let mut prev_e = lo_edge;
    let mut prev_r = residual(prev_e)?;
    for i in 1..SCAN_POINTS {
        let e = if i + 1 == SCAN_POINTS {
            hi_edge
        } else {
            lo_edge + step * i as f64
        };
        let r = residual(e)?;
        if prev_r == 0.0 {
            bracket = Some((prev_e, prev_e, prev_r));
            break;
        }
        if prev_r.signum() != r.signum() {
            bracket = Some((prev_e, e, prev_r));
            break;
        }
        prev_e = e;
        prev_r = r;
    }
    let (mut lo, mut hi, mut r_lo) = bracket.ok_or_else(|| no_level(n, m))?;

    for _ in 0..BISECTION_ITERATIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let r_mid = residual(mid)?;
        if r_mid == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if r_mid.signum() == r_lo.signum() {
            lo = mid;
            r_lo = r_mid;
        } else {
            hi = mid;
        }
    }
    let energy = 0.5 * (lo + hi);
    let c = coefficients_at(m, energy)?;
    let slope = tau_prime(&c);
    if slope >= 0.0 {
        return Err(Error::NotApplicable { tau_prime: slope });
    }
    Ok(EnergyLevel::new(n, energy, m, m.b_h))
}

/// Same level from the quantization condition solved in closed form.
///
/// With `t = √α₈` the TH coefficients make every `t²` term cancel, leaving
///
/// ```text
/// c_h (n² + n + ½) + (2n + 1)(√α₉ + c_h t) + 2 d (c_h − 1)/b_h² + 2 t √α₉ = 0
/// ```
///
/// which is linear in `t`.
pub fn th_energy_closed(n: u32, m: &MoleculeParams) -> Result<EnergyLevel> {
    let p = DimensionlessProblem::new(m, 0.0);
    let c = m.c_h;
    let nf = f64::from(n);
    let inv_b2 = p.length_factor();
    let sqrt_alpha9 = (c * c / 4.0 + inv_b2 * p.d * (c - 1.0) * (c - 1.0)).sqrt();
    let odd = 2.0 * nf + 1.0;
    let numerator = c * (nf * nf + nf + 0.5) + odd * sqrt_alpha9 + 2.0 * p.d * (c - 1.0) * inv_b2;
    let denominator = odd * c + 2.0 * sqrt_alpha9;
    let t = -numerator / denominator;
    finish_from_t(n, m, m.b_h, t)
}

fn finish_from_t(n: u32, m: &MoleculeParams, b: f64, t: f64) -> Result<EnergyLevel> {
    if !(t > 0.0) {
        return Err(no_level(n, m));
    }
    let energy = m.depth - b * b * t * t / m.two_mu_over_hbar2();
    if !(energy > 0.0) {
        return Err(no_level(n, m));
    }
    Ok(EnergyLevel {
        n,
        energy,
        energy_minus_d: energy - m.depth,
        t,
    })
}

/// Morse levels with exponent β:
///
/// ```text
/// E_n = D − (ħ²β²/8μ) (2n + 1 − 2√(2μD/(β²ħ²)))²
/// ```
///
/// Levels exist while `2n + 1 ≤ 2√(2μD/(β²ħ²))`; at equality `E = D`.
pub fn morse_energy(n: u32, m: &MoleculeParams) -> Result<EnergyLevel> {
    let beta = m.morse_beta();
    let k = m.two_mu_over_hbar2();
    let lambda = (k * m.depth).sqrt() / beta;
    let odd = 2.0 * f64::from(n) + 1.0;
    let gap = odd - 2.0 * lambda;
    if gap > 0.0 {
        return Err(no_level(n, m));
    }
    let energy = m.depth - beta * beta / (4.0 * k) * gap * gap;
    Ok(EnergyLevel {
        n,
        energy,
        energy_minus_d: energy - m.depth,
        t: -gap / 2.0,
    })
}

/// Readings of the closed-form TH energy equation used to adjudicate its
/// printed `n`-polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClosedFormReading {
    /// Fully literal: `c_h(n² + 3n + ½)`, a single `d(c_h − 1)/b_h²` term and
    /// `2√α₉ · t²` in place of `2√α₉ · t`.
    Literal,
    /// Structure of the NU quantization condition, printed polynomial
    /// `c_h(n² + 3n + ½)`.
    PrintedPolynomial,
    /// Structure of the NU quantization condition, polynomial
    /// `c_h(n² + n + ½)` obtained by direct substitution.
    DerivedPolynomial,
}

impl ClosedFormReading {
    pub const ALL: [ClosedFormReading; 3] = [
        ClosedFormReading::Literal,
        ClosedFormReading::PrintedPolynomial,
        ClosedFormReading::DerivedPolynomial,
    ];

    fn polynomial(self, n: f64) -> f64 {
        match self {
            ClosedFormReading::Literal | ClosedFormReading::PrintedPolynomial => {
                n * n + 3.0 * n + 0.5
            }
            ClosedFormReading::DerivedPolynomial => n * n + n + 0.5,
        }
    }

    // Coefficients (q, l, k) of q t² + l t + k = 0.
    fn quadratic(self, n: u32, m: &MoleculeParams) -> (f64, f64, f64) {
        let p = DimensionlessProblem::new(m, 0.0);
        let c = m.c_h;
        let nf = f64::from(n);
        let odd = 2.0 * nf + 1.0;
        let inv_b2 = p.length_factor();
        let sqrt_alpha9 = (c * c / 4.0 + inv_b2 * p.d * (c - 1.0) * (c - 1.0)).sqrt();
        let poly = c * self.polynomial(nf);
        match self {
            ClosedFormReading::Literal => (
                2.0 * sqrt_alpha9,
                odd * c,
                odd * sqrt_alpha9 + p.d * inv_b2 * (c - 1.0) + poly,
            ),
            _ => (
                0.0,
                odd * c + 2.0 * sqrt_alpha9,
                odd * sqrt_alpha9 + 2.0 * p.d * inv_b2 * (c - 1.0) + poly,
            ),
        }
    }
}

/// Left-hand side of the chosen reading at energy `energy`; dimensionless.
pub fn reading_residual(
    n: u32,
    m: &MoleculeParams,
    energy: f64,
    variant: ClosedFormReading,
) -> f64 {
    let p = DimensionlessProblem::new(m, energy);
    let t = (p.d - p.eps).max(0.0).sqrt() / m.b_h;
    let (q, l, k) = variant.quadratic(n, m);
    q * t * t + l * t + k
}

/// [`reading_residual`] for the equation exactly as typeset.
pub fn as_printed_residual(n: u32, m: &MoleculeParams, energy: f64) -> f64 {
    reading_residual(n, m, energy, ClosedFormReading::Literal)
}

/// Energy predicted by the chosen reading (largest positive `t` root).
pub fn reading_energy(
    n: u32,
    m: &MoleculeParams,
    variant: ClosedFormReading,
) -> Result<EnergyLevel> {
    let (q, l, k) = variant.quadratic(n, m);
    let t = if q == 0.0 {
        -k / l
    } else {
        let disc = l * l - 4.0 * q * k;
        if disc < 0.0 {
            return Err(no_level(n, m));
        }
        (-l + disc.sqrt()) / (2.0 * q)
    };
    finish_from_t(n, m, m.b_h, t)
}
