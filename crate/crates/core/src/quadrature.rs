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

//! Composite Gauss-Legendre quadrature.

use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;

/// Fixed-order Gauss-Legendre rule applied panel by panel on `[a, b]`.
pub struct CompositeGaussLegendre {
    rule: GaussLegendre,
    panels: usize,
}

impl CompositeGaussLegendre {
    pub fn new(order: usize, panels: usize) -> Self {
        let order = NonZeroUsize::new(order.max(2)).expect("order is at least 2");
        Self {
            rule: GaussLegendre::new(order),
            panels: panels.max(1),
        }
    }

    pub fn panels(&self) -> usize {
        self.panels
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let width = (b - a) / self.panels as f64;
        (0..self.panels)
            .map(|i| {
                let lo = a + width * i as f64;
                let hi = if i + 1 == self.panels { b } else { lo + width };
                self.rule.integrate(lo, hi, &mut f)
            })
            .sum()
    }
}
