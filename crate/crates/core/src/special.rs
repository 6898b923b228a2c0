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

//! Orthogonal polynomials used by the closed-form wavefunctions.

/// Jacobi polynomial `P_n^{(a,b)}(x)` by the three-term recurrence in degree.
///
/// The recurrence is valid for any real `a`, `b` except where one of its
/// denominators `2k(k+a+b)(2k+a+b-2)` vanishes; those points fall back to
/// the explicit finite sum.
pub fn jacobi_poly(n: u32, a: f64, b: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
    for k in 2..=n {
        let k = f64::from(k);
        let s = 2.0 * k + a + b;
        let denom = 2.0 * k * (k + a + b) * (s - 2.0);
        if denom == 0.0 {
            return jacobi_series(n, a, b, x);
        }
        let c1 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        let c2 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        let next = (c1 * cur - c2 * prev) / denom;
        prev = cur;
        cur = next;
    }
    cur
}

/// Generalised binomial coefficient `C(z, k)` for real `z`.
fn binomial(z: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (z - f64::from(j)) / f64::from(j + 1))
}

// Σ_j C(n+a, n-j) C(n+b, j) ((x-1)/2)^j ((x+1)/2)^(n-j)
fn jacobi_series(n: u32, a: f64, b: f64, x: f64) -> f64 {
    let nf = f64::from(n);
    let lo = (x - 1.0) / 2.0;
    let hi = (x + 1.0) / 2.0;
    (0..=n)
        .map(|j| {
            binomial(nf + a, n - j)
                * binomial(nf + b, j)
                * lo.powi(j as i32)
                * hi.powi((n - j) as i32)
        })
        .sum()
}

/// Associated Laguerre polynomial `L_n^{(a)}(x)` by the three-term recurrence.
pub fn laguerre_poly(n: u32, a: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + a - x;
    for k in 1..n {
        let k = f64::from(k);
        let next = ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}
