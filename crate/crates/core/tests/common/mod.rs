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

//! Independent oracles shared by the property and acceptance suites.

#![allow(dead_code)]

use thspec::nu::{tau_prime, NuBase, NuCoefficients};

pub fn close(actual: f64, expected: f64, rel: f64) -> bool {
    actual == expected || (actual - expected).abs() <= rel * expected.abs().max(actual.abs())
}

/// Coefficient cascade written out again from the definitions.
pub fn recompute(b: &NuBase) -> [f64; 19] {
    let a4 = (1.0 - b.alpha1) / 2.0;
    let a5 = (b.alpha2 - 2.0 * b.alpha3) / 2.0;
    let a6 = a5 * a5 + b.xi1;
    let a7 = 2.0 * a4 * a5 - b.xi2;
    let a8 = a4 * a4 + b.xi3;
    let a9 = b.alpha3 * a7 + b.alpha3 * b.alpha3 * a8 + a6;
    let (r8, r9) = (a8.sqrt(), a9.sqrt());
    [
        a4,
        a5,
        a6,
        a7,
        a8,
        a9,
        b.alpha1 + 2.0 * a4 + 2.0 * r8,
        b.alpha2 - 2.0 * a5 + 2.0 * (r9 + b.alpha3 * r8),
        a4 + r8,
        a5 - (r9 + b.alpha3 * r8),
        b.alpha1 + 2.0 * a4 - 2.0 * r8,
        b.alpha2 - 2.0 * a5 + 2.0 * (r9 - b.alpha3 * r8),
        a4 - r8,
        a5 - (r9 - b.alpha3 * r8),
        -(a7 + 2.0 * b.alpha3 * a8) - 2.0 * (a8 * a9).sqrt(),
        -(a7 + 2.0 * b.alpha3 * a8) + 2.0 * (a8 * a9).sqrt(),
        r8,
        r9,
        // τ′ = −2α₃ − 2(√α₉ + α₃√α₈)
        -2.0 * b.alpha3 - 2.0 * (r9 + b.alpha3 * r8),
    ]
}

pub fn derived(c: &NuCoefficients) -> [f64; 19] {
    [
        c.alpha4,
        c.alpha5,
        c.alpha6,
        c.alpha7,
        c.alpha8,
        c.alpha9,
        c.alpha10,
        c.alpha11,
        c.alpha12,
        c.alpha13,
        c.alpha10s,
        c.alpha11s,
        c.alpha12s,
        c.alpha13s,
        c.k_minus,
        c.k_plus,
        c.sqrt_alpha8,
        c.sqrt_alpha9,
        tau_prime(c),
    ]
}

/// Quantization condition term by term; `sign` picks the branch.
pub fn residual_terms(n: f64, b: &NuBase, r: &[f64; 19], sign: f64, alpha5_mult: f64) -> f64 {
    let (a5, a7, a8, r8, r9) = (r[1], r[3], r[4], r[16], r[17]);
    let terms = [
        b.alpha2 * n,
        -alpha5_mult * a5,
        (2.0 * n + 1.0) * (r9 + b.alpha3 * r8),
        n * (n - 1.0) * b.alpha3,
        a7,
        2.0 * b.alpha3 * a8,
        sign * 2.0 * r8 * r9,
    ];
    terms.iter().sum()
}

/// `C(z, k)` for real `z`.
pub fn binomial(z: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (z - f64::from(j)) / f64::from(j + 1))
}

/// Explicit finite sum.
pub fn jacobi_series(n: u32, a: f64, b: f64, x: f64) -> f64 {
    let nf = f64::from(n);
    (0..=n)
        .map(|j| {
            binomial(nf + a, n - j)
                * binomial(nf + b, j)
                * ((x - 1.0) / 2.0).powi(j as i32)
                * ((x + 1.0) / 2.0).powi((n - j) as i32)
        })
        .sum()
}

pub fn laguerre_series(n: u32, a: f64, x: f64) -> f64 {
    let nf = f64::from(n);
    let mut factorial = 1.0;
    (0..=n)
        .map(|k| {
            if k > 0 {
                factorial *= f64::from(k);
            }
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign * binomial(nf + a, n - k) * x.powi(k as i32) / factorial
        })
        .sum()
}
