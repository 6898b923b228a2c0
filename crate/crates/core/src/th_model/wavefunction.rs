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

//! Normalized s-wave radial functions of the TH well.

use serde::{Deserialize, Serialize};

use super::spectrum::{th_energy, EnergyLevel};
use super::{validity_domain, DimensionlessProblem};
use crate::constants::MoleculeParams;
use crate::error::{Error, Result};
use crate::nu::{derive_coefficients, wavefunction_form, Branch, WavefunctionForm};
use crate::quadrature::CompositeGaussLegendre;

pub const QUADRATURE_ORDER: usize = 64;
pub const QUADRATURE_PANELS: usize = 64;
/// Relative agreement required between the base and panel-doubled integrals.
pub const QUADRATURE_TOLERANCE: f64 = 1e-11;
// Samples used to locate the envelope maximum.
const SCALE_SAMPLES: usize = 4001;

/// `R(r) = N s^p (1 − c_h s)^q P_n^{(A,B)}(1 − 2 c_h s)` with `s = e^{−b_h(r − r_e)}`.
///
/// Evaluated in log space: for heavy molecules the individual factors
/// overflow or underflow long before their product does.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadialWavefunction {
    pub level: EnergyLevel,
    pub form: WavefunctionForm,
    /// `N_{n,0}` relative to the bare closed form (may be ±inf for extreme
    /// parameters; `log_norm` is always finite).
    pub norm: f64,
    pub log_norm: f64,
    pub domain: (f64, f64),
    problem: DimensionlessProblem,
}

pub fn radial_wavefunction(n: u32, m: &MoleculeParams) -> Result<RadialWavefunction> {
    let level = th_energy(n, m)?;
    let problem = DimensionlessProblem::new(m, level.energy);
    let coefficients = derive_coefficients(problem.nu_base())?;
    let form = wavefunction_form(&coefficients, Branch::First);
    let domain = validity_domain(m);

    let mut wf = RadialWavefunction {
        level,
        form,
        norm: 1.0,
        log_norm: 0.0,
        domain,
        problem,
    };

    // Shift by the envelope maximum before exponentiating.
    let (lo, hi) = domain;
    let peak = (0..SCALE_SAMPLES)
        .map(|i| lo + (hi - lo) * i as f64 / (SCALE_SAMPLES - 1) as f64)
        .map(|r| wf.log_abs_unnormalized(r))
        .fold(f64::NEG_INFINITY, f64::max);
    wf.log_norm = -peak;

    let square = |r: f64| wf.evaluate(r).powi(2);
    let coarse =
        CompositeGaussLegendre::new(QUADRATURE_ORDER, QUADRATURE_PANELS).integrate(lo, hi, square);
    let fine = CompositeGaussLegendre::new(QUADRATURE_ORDER, 2 * QUADRATURE_PANELS)
        .integrate(lo, hi, square);
    if !(fine > 0.0 && fine.is_finite()) || (coarse - fine).abs() > QUADRATURE_TOLERANCE * fine {
        return Err(Error::Quadrature { coarse, fine });
    }
    wf.log_norm -= 0.5 * fine.ln();
    wf.norm = wf.log_norm.exp();
    Ok(wf)
}

impl RadialWavefunction {
    pub fn n(&self) -> u32 {
        self.level.n
    }

    fn log_abs_unnormalized(&self, r: f64) -> f64 {
        let s = self.problem.s(r);
        self.form.log_envelope(s) + self.form.polynomial(self.n(), s).abs().ln()
    }

    /// Normalized `R(r)`.
    pub fn evaluate(&self, r: f64) -> f64 {
        let s = self.problem.s(r);
        let p = self.form.polynomial(self.n(), s);
        if p == 0.0 {
            return 0.0;
        }
        let log_r = self.form.log_envelope(s) + p.abs().ln() + self.log_norm;
        p.signum() * log_r.exp()
    }

    /// `count` uniformly spaced `(r, R(r))` pairs spanning the domain.
    pub fn sample(&self, count: usize) -> Vec<(f64, f64)> {
        let (lo, hi) = self.domain;
        let count = count.max(2);
        (0..count)
            .map(|i| {
                let r = lo + (hi - lo) * i as f64 / (count - 1) as f64;
                (r, self.evaluate(r))
            })
            .collect()
    }

    /// Sign changes of `R` across `samples` uniform points. The sign is read
    /// from the polynomial factor, so nodes are counted even where `|R|`
    /// underflows.
    pub fn node_count(&self, samples: usize) -> usize {
        let (lo, hi) = self.domain;
        let samples = samples.max(2);
        let mut last = 0.0_f64;
        let mut nodes = 0;
        for i in 0..samples {
            let r = lo + (hi - lo) * i as f64 / (samples - 1) as f64;
            let p = self.form.polynomial(self.n(), self.problem.s(r));
            if p == 0.0 {
                continue;
            }
            if last != 0.0 && p.signum() != last.signum() {
                nodes += 1;
            }
            last = p;
        }
        nodes
    }

    /// `∫ R² dr` over the domain with `panels` Gauss-Legendre panels.
    pub fn norm_integral(&self, panels: usize) -> f64 {
        let (lo, hi) = self.domain;
        CompositeGaussLegendre::new(QUADRATURE_ORDER, panels)
            .integrate(lo, hi, |r| self.evaluate(r).powi(2))
    }
}
