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

//! Parametric Nikiforov-Uvarov solver for equations of the form
//!
//! ```text
//! ψ'' + (α₁ − α₂ s) / (s(1 − α₃ s)) ψ' + (−ξ₁ s² + ξ₂ s − ξ₃) / (s(1 − α₃ s))² ψ = 0
//! ```
//!
//! The engine knows nothing about the physical energy: callers build an
//! [`NuBase`] for each trial energy and root-find on [`energy_residual`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::{jacobi_poly, laguerre_poly};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NuBase {
    pub alpha1: f64,
    pub alpha2: f64,
    pub alpha3: f64,
    pub xi1: f64,
    pub xi2: f64,
    pub xi3: f64,
}

impl NuBase {
    pub fn new(alpha1: f64, alpha2: f64, alpha3: f64, xi1: f64, xi2: f64, xi3: f64) -> Self {
        Self {
            alpha1,
            alpha2,
            alpha3,
            xi1,
            xi2,
            xi3,
        }
    }
}

/// Derived coefficients. Only constructed through [`derive_coefficients`],
/// which guarantees `alpha8 >= 0` and `alpha9 >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NuCoefficients {
    pub base: NuBase,
    pub alpha4: f64,
    pub alpha5: f64,
    pub alpha6: f64,
    pub alpha7: f64,
    pub alpha8: f64,
    pub alpha9: f64,
    pub sqrt_alpha8: f64,
    pub sqrt_alpha9: f64,
    pub alpha10: f64,
    pub alpha11: f64,
    pub alpha12: f64,
    pub alpha13: f64,
    pub alpha10s: f64,
    pub alpha11s: f64,
    pub alpha12s: f64,
    pub alpha13s: f64,
    pub k_minus: f64,
    pub k_plus: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    First,
    Second,
}

pub fn derive_coefficients(base: NuBase) -> Result<NuCoefficients> {
    let NuBase {
        alpha1,
        alpha2,
        alpha3,
        xi1,
        xi2,
        xi3,
    } = base;
    let values = [alpha1, alpha2, alpha3, xi1, xi2, xi3];
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::Domain(format!("non-finite NU base {values:?}")));
    }

    let alpha4 = (1.0 - alpha1) / 2.0;
    let alpha5 = (alpha2 - 2.0 * alpha3) / 2.0;
    let alpha6 = alpha5 * alpha5 + xi1;
    let alpha7 = 2.0 * alpha4 * alpha5 - xi2;
    let alpha8 = alpha4 * alpha4 + xi3;
    let alpha9 = alpha3 * alpha7 + alpha3 * alpha3 * alpha8 + alpha6;
    if alpha8 < 0.0 {
        return Err(Error::NoRealBranch {
            name: "alpha8",
            value: alpha8,
        });
    }
    if alpha9 < 0.0 {
        return Err(Error::NoRealBranch {
            name: "alpha9",
            value: alpha9,
        });
    }
    let sqrt_alpha8 = alpha8.sqrt();
    let sqrt_alpha9 = alpha9.sqrt();

    let alpha10 = alpha1 + 2.0 * alpha4 + 2.0 * sqrt_alpha8;
    let alpha11 = alpha2 - 2.0 * alpha5 + 2.0 * (sqrt_alpha9 + alpha3 * sqrt_alpha8);
    let alpha12 = alpha4 + sqrt_alpha8;
    let alpha13 = alpha5 - (sqrt_alpha9 + alpha3 * sqrt_alpha8);

    let alpha10s = alpha1 + 2.0 * alpha4 - 2.0 * sqrt_alpha8;
    let alpha11s = alpha2 - 2.0 * alpha5 + 2.0 * (sqrt_alpha9 - alpha3 * sqrt_alpha8);
    let alpha12s = alpha4 - sqrt_alpha8;
    let alpha13s = alpha5 - (sqrt_alpha9 - alpha3 * sqrt_alpha8);

    let k_center = -(alpha7 + 2.0 * alpha3 * alpha8);
    let k_half_width = 2.0 * (alpha8 * alpha9).sqrt();

    Ok(NuCoefficients {
        base,
        alpha4,
        alpha5,
        alpha6,
        alpha7,
        alpha8,
        alpha9,
        sqrt_alpha8,
        sqrt_alpha9,
        alpha10,
        alpha11,
        alpha12,
        alpha13,
        alpha10s,
        alpha11s,
        alpha12s,
        alpha13s,
        k_minus: k_center - k_half_width,
        k_plus: k_center + k_half_width,
    })
}

/// Quantization condition of the first branch; zero at an eigenvalue.
pub fn energy_residual(n: u32, c: &NuCoefficients) -> f64 {
    let n = f64::from(n);
    let a2 = c.base.alpha2;
    let a3 = c.base.alpha3;
    a2 * n - (2.0 * n + 1.0) * c.alpha5
        + (2.0 * n + 1.0) * (c.sqrt_alpha9 + a3 * c.sqrt_alpha8)
        + n * (n - 1.0) * a3
        + c.alpha7
        + 2.0 * a3 * c.alpha8
        + 2.0 * c.sqrt_alpha8 * c.sqrt_alpha9
}

/// Multiplier convention of the α₅ term in the second-branch condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NTermConvention {
    /// `−(2n − 1)α₅`, as the second-branch condition is usually printed.
    AsPrinted,
    /// `−(2n + 1)α₅`, matching the first branch so that both conditions
    /// coincide when `α₈α₉ = 0`.
    Matching,
}

/// Second-branch quantization condition with the printed `−(2n − 1)α₅` term.
pub fn energy_residual_second_branch(n: u32, c: &NuCoefficients) -> f64 {
    energy_residual_second_branch_with(n, c, NTermConvention::AsPrinted)
}

pub fn energy_residual_second_branch_with(
    n: u32,
    c: &NuCoefficients,
    convention: NTermConvention,
) -> f64 {
    let n = f64::from(n);
    let a2 = c.base.alpha2;
    let a3 = c.base.alpha3;
    let alpha5_multiplier = match convention {
        NTermConvention::AsPrinted => 2.0 * n - 1.0,
        NTermConvention::Matching => 2.0 * n + 1.0,
    };
    a2 * n - alpha5_multiplier * c.alpha5
        + (2.0 * n + 1.0) * (c.sqrt_alpha9 + a3 * c.sqrt_alpha8)
        + n * (n - 1.0) * a3
        + c.alpha7
        + 2.0 * a3 * c.alpha8
        - 2.0 * c.sqrt_alpha8 * c.sqrt_alpha9
}

/// Slope of τ(s); the method requires it to be negative.
pub fn tau_prime(c: &NuCoefficients) -> f64 {
    -2.0 * c.base.alpha3 - 2.0 * (c.sqrt_alpha9 + c.base.alpha3 * c.sqrt_alpha8)
}

/// `α₃ → 0` limit: `ψ = s^p e^{γ s} L_n^{(order)}(scale · s)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LaguerreLimit {
    pub order: f64,
    pub scale: f64,
    pub exp_coefficient: f64,
}

/// Closed-form solution `ψ(s) = s^p (1 − α₃ s)^q P_n^{(a,b)}(1 − 2α₃ s)`, or
/// its Laguerre limit when `α₃ = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WavefunctionForm {
    pub s_exponent: f64,
    /// `q`; NaN in the Laguerre limit where the bracket becomes an exponential.
    pub bracket_exponent: f64,
    pub jacobi_a: f64,
    pub jacobi_b: f64,
    /// The `α₃` of the argument `1 − 2α₃ s` and of the bracket `1 − α₃ s`.
    pub argument_scale: f64,
    pub laguerre_limit: Option<LaguerreLimit>,
}

pub fn wavefunction_form(c: &NuCoefficients, branch: Branch) -> WavefunctionForm {
    let (a10, a11, a12, a13) = match branch {
        Branch::First => (c.alpha10, c.alpha11, c.alpha12, c.alpha13),
        Branch::Second => (c.alpha10s, c.alpha11s, c.alpha12s, c.alpha13s),
    };
    let a3 = c.base.alpha3;
    if a3 == 0.0 {
        return WavefunctionForm {
            s_exponent: a12,
            bracket_exponent: f64::NAN,
            jacobi_a: a10 - 1.0,
            jacobi_b: f64::NAN,
            argument_scale: 0.0,
            laguerre_limit: Some(LaguerreLimit {
                order: a10 - 1.0,
                scale: a11,
                exp_coefficient: a13,
            }),
        };
    }
    WavefunctionForm {
        s_exponent: a12,
        bracket_exponent: -a12 - a13 / a3,
        jacobi_a: a10 - 1.0,
        jacobi_b: a11 / a3 - a10 - 1.0,
        argument_scale: a3,
        laguerre_limit: None,
    }
}

impl WavefunctionForm {
    /// `ln` of the non-polynomial factor at `s`; requires `s > 0` and
    /// `1 − α₃ s > 0`.
    pub fn log_envelope(&self, s: f64) -> f64 {
        let power = self.s_exponent * s.ln();
        match self.laguerre_limit {
            Some(lim) => power + lim.exp_coefficient * s,
            None => power + self.bracket_exponent * (-self.argument_scale * s).ln_1p(),
        }
    }

    /// Polynomial factor of degree `n` at `s`.
    pub fn polynomial(&self, n: u32, s: f64) -> f64 {
        match self.laguerre_limit {
            Some(lim) => laguerre_poly(n, lim.order, lim.scale * s),
            None => jacobi_poly(
                n,
                self.jacobi_a,
                self.jacobi_b,
                1.0 - 2.0 * self.argument_scale * s,
            ),
        }
    }

    /// Unnormalized `ψ(s)`.
    pub fn evaluate(&self, n: u32, s: f64) -> f64 {
        self.log_envelope(s).exp() * self.polynomial(n, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_zero_cascade() {
        let c = derive_coefficients(NuBase::new(1.0, 0.0, 0.0, 0.0, 0.0, 0.0)).unwrap();
        for v in [c.alpha4, c.alpha5, c.alpha6, c.alpha7, c.alpha8, c.alpha9] {
            assert_eq!(v, 0.0);
        }
        assert_eq!(c.k_minus, 0.0);
        assert_eq!(c.k_plus, 0.0);
    }

    #[test]
    fn negative_alpha8_is_diagnosed() {
        let err = derive_coefficients(NuBase::new(1.0, 0.0, 0.0, 1.0, 0.0, -0.25)).unwrap_err();
        assert_eq!(
            err,
            Error::NoRealBranch {
                name: "alpha8",
                value: -0.25
            }
        );
    }

    #[test]
    fn negative_alpha9_is_diagnosed() {
        let err = derive_coefficients(NuBase::new(1.0, 0.0, 0.0, -2.0, 0.0, 1.0)).unwrap_err();
        assert!(matches!(err, Error::NoRealBranch { name: "alpha9", value } if value == -2.0));
    }

    #[test]
    fn non_finite_base_rejected() {
        assert!(matches!(
            derive_coefficients(NuBase::new(1.0, f64::NAN, 0.0, 0.0, 0.0, 0.0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn alpha5_for_unit_alpha3() {
        let c = derive_coefficients(NuBase::new(1.0, 2.0, 1.0, 3.0, -0.5, 0.7)).unwrap();
        assert_eq!(c.alpha5, 0.0);
        let c = derive_coefficients(NuBase::new(1.0, 2.0, 1.5, 3.0, -0.5, 0.7)).unwrap();
        assert_eq!(c.alpha5, -0.5);
    }

    #[test]
    fn tau_prime_signs() {
        let c = derive_coefficients(NuBase::new(1.0, 0.0, 0.0, 4.0, 1.0, 1.0)).unwrap();
        assert_eq!(c.alpha9, 4.0);
        assert_eq!(tau_prime(&c), -4.0);
        let c = derive_coefficients(NuBase::new(1.0, 0.0, 0.0, 0.0, 1.0, 1.0)).unwrap();
        assert_eq!(tau_prime(&c), 0.0);
    }

    #[test]
    fn morse_like_root_by_construction() {
        // α₁ = 1, α₂ = α₃ = 0: the n = 0 residual is √α₉ + α₇ + 2√(α₈α₉).
        // Pick ξ₁ = 1, ξ₂ = 3 so α₉ = 1, α₇ = −3, and α₈ = 1 makes it vanish.
        let c = derive_coefficients(NuBase::new(1.0, 0.0, 0.0, 1.0, 3.0, 1.0)).unwrap();
        assert_eq!(energy_residual(0, &c), 0.0);
    }

    #[test]
    fn branches_coincide_when_alpha8_vanishes() {
        let c = derive_coefficients(NuBase::new(1.0, 0.3, 0.2, 2.0, 0.5, 0.0)).unwrap();
        assert_eq!(c.alpha8, 0.0);
        for n in 0..6 {
            let first = energy_residual(n, &c);
            let matching = energy_residual_second_branch_with(n, &c, NTermConvention::Matching);
            assert_eq!(first, matching);
            // The printed α₅ multiplier leaves a constant −2α₅ offset.
            let printed = energy_residual_second_branch(n, &c);
            assert!((first - printed - (-2.0 * c.alpha5)).abs() < 1e-14);
        }
        let f1 = wavefunction_form(&c, Branch::First);
        let f2 = wavefunction_form(&c, Branch::Second);
        assert_eq!(f1, f2);
    }

    #[test]
    fn laguerre_flag_only_at_zero_alpha3() {
        let c = derive_coefficients(NuBase::new(1.0, 0.0, 0.0, 1.0, 3.0, 1.0)).unwrap();
        let form = wavefunction_form(&c, Branch::First);
        let lim = form.laguerre_limit.unwrap();
        assert_eq!(lim.order, c.alpha10 - 1.0);
        assert_eq!(lim.scale, c.alpha11);
        assert_eq!(lim.exp_coefficient, c.alpha13);
        // ψ = s^{α₁₂} e^{α₁₃ s} L_n^{α₁₀−1}(α₁₁ s)
        let s: f64 = 0.8;
        let expected = s.powf(c.alpha12)
            * (c.alpha13 * s).exp()
            * laguerre_poly(2, c.alpha10 - 1.0, c.alpha11 * s);
        assert!((form.evaluate(2, s) - expected).abs() < 1e-14 * expected.abs());

        let c = derive_coefficients(NuBase::new(1.0, 0.0, 1e-12, 1.0, 3.0, 1.0)).unwrap();
        assert!(wavefunction_form(&c, Branch::First)
            .laguerre_limit
            .is_none());
    }
}
