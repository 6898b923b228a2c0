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

//! Shooting-method reference solver for the s-wave radial equation
//!
//! ```text
//! R'' + (2μ/ħ²)(E − V(r)) R = 0,   R(r_lo) = R(r_hi) = 0
//! ```
//!
//! on a uniform grid with Numerov's scheme. Brackets come from the node
//! count of the outward solution (a Sturm count of the discrete problem);
//! the level is then pinned by the matching defect at the outer classical
//! turning point. Nothing here uses the closed-form spectrum.

use serde::{Deserialize, Serialize};

use crate::constants::MoleculeParams;
use crate::error::{Error, Result};
use crate::th_model::{th_potential, validity_domain};

pub const DEFAULT_POINTS: usize = 20_000;
/// Below this the grid is accepted but reported as under-resolved.
pub const RESOLVED_POINTS: usize = 2000;
const MIN_POINTS: usize = 16;
/// Energy tolerance of the final bracket, eV.
pub const ENERGY_TOLERANCE: f64 = 1e-9;
/// Allowed eigenvalue shift when the step is halved, eV.
pub const REFINEMENT_TOLERANCE: f64 = 1e-6;

const TAIL_SEED: f64 = 1e-30;
/// The outward sweep starts at the first point with `h² (2μ/ħ²) V / 12`
/// below this; further in, the Numerov weights can turn negative while the
/// solution is already vanishingly small.
const WALL_WEIGHT_LIMIT: f64 = 0.25;
const RESCALE_ABOVE: f64 = 1e200;
const MAX_NODE_BISECTIONS: usize = 200;
const MAX_DEFECT_BISECTIONS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialGrid {
    pub r_lo: f64,
    pub r_hi: f64,
    pub n_points: usize,
    pub step: f64,
}

impl RadialGrid {
    pub fn new(r_lo: f64, r_hi: f64, n_points: usize) -> Result<Self> {
        if !(r_lo.is_finite() && r_hi.is_finite() && r_lo < r_hi) {
            return Err(Error::Grid(format!(
                "need r_lo < r_hi, got [{r_lo}, {r_hi}]"
            )));
        }
        if n_points < MIN_POINTS {
            return Err(Error::Grid(format!(
                "need at least {MIN_POINTS} points, got {n_points}"
            )));
        }
        Ok(Self {
            r_lo,
            r_hi,
            n_points,
            step: (r_hi - r_lo) / (n_points - 1) as f64,
        })
    }

    pub fn is_resolved(&self) -> bool {
        self.n_points >= RESOLVED_POINTS
    }

    /// Same interval with half the step.
    pub fn refined(&self) -> Self {
        Self::new(self.r_lo, self.r_hi, 2 * self.n_points - 1).expect("refining a valid grid")
    }

    pub fn r(&self, i: usize) -> f64 {
        if i + 1 == self.n_points {
            self.r_hi
        } else {
            self.r_lo + self.step * i as f64
        }
    }
}

pub fn default_grid(m: &MoleculeParams) -> RadialGrid {
    let (r_lo, r_hi) = validity_domain(m);
    RadialGrid::new(r_lo, r_hi, DEFAULT_POINTS).expect("validity domain is a proper interval")
}

/// Outcome of one shot at a trial energy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Shot {
    /// Sign changes of the outward solution across the whole grid, i.e. the
    /// number of discrete levels below the trial energy.
    pub node_count: usize,
    /// Sign changes of the outward/inward solution matched at `matching_index`.
    pub composite_nodes: usize,
    /// Normalized Wronskian of the outward and inward solutions at the
    /// matching point; zero exactly at an eigenvalue.
    pub match_defect: f64,
    pub matching_index: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleEigenvalue {
    pub n: u32,
    pub energy: f64,
    pub energy_minus_d: f64,
    pub residual_mismatch: f64,
    /// Composite-solution nodes at the converged energy.
    pub node_count: usize,
    /// `E(h/2) − E(h)`, eV.
    pub refinement_shift: f64,
}

/// Precomputed potential on a grid, reused across trial energies.
struct Shooter<'a> {
    grid: &'a RadialGrid,
    /// (2μ/ħ²)·V(r_i), Å⁻².
    scaled_potential: Vec<f64>,
    potential: Vec<f64>,
    kinetic: f64,
    start: usize,
}

impl<'a> Shooter<'a> {
    fn new(m: &MoleculeParams, grid: &'a RadialGrid) -> Result<Self> {
        if let Some(r_s) = m.pole() {
            if r_s >= grid.r_lo && r_s <= grid.r_hi {
                return Err(Error::Grid(format!(
                    "potential pole r_s = {r_s} Å lies inside [{}, {}]",
                    grid.r_lo, grid.r_hi
                )));
            }
        }
        let potential = (0..grid.n_points)
            .map(|i| th_potential(grid.r(i), m))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::Grid(e.to_string()))?;
        let kinetic = m.two_mu_over_hbar2();
        let scaled_potential: Vec<f64> = potential.iter().map(|v| kinetic * v).collect();
        let h2 = grid.step * grid.step / 12.0;
        let start = scaled_potential
            .iter()
            .position(|&v| h2 * v < WALL_WEIGHT_LIMIT)
            .unwrap_or(0)
            .min(grid.n_points - 3);
        Ok(Self {
            grid,
            scaled_potential,
            potential,
            kinetic,
            start,
        })
    }

    fn turning_index(&self, energy: f64) -> usize {
        let last = self.grid.n_points - 1;
        let idx = self
            .potential
            .iter()
            .rposition(|&v| v <= energy)
            .unwrap_or_else(|| {
                self.potential
                    .iter()
                    .enumerate()
                    .min_by(|a, b| a.1.total_cmp(b.1))
                    .map_or(1, |(i, _)| i)
            });
        idx.clamp(self.start + 1, last - 1)
    }

    fn shoot(&self, energy: f64) -> Shot {
        self.shoot_matched(energy, self.turning_index(energy))
    }

    fn shoot_matched(&self, energy: f64, matching_index: usize) -> Shot {
        let h2 = self.grid.step * self.grid.step / 12.0;
        let eps = self.kinetic * energy;
        let f = |i: usize| 1.0 + h2 * (eps - self.scaled_potential[i]);
        let last = self.grid.n_points - 1;
        let m = matching_index;

        // outward over the whole grid
        let first = self.start;
        let (mut y_prev, mut y) = (0.0_f64, TAIL_SEED);
        let (mut f_prev, mut f_cur) = (f(first), f(first + 1));
        let mut node_count = 0;
        let mut inner_nodes = 0;
        let mut out_pair = (0.0, 0.0);
        for i in first + 1..last {
            let f_next = f(i + 1);
            let mut y_next = ((12.0 - 10.0 * f_cur) * y - f_prev * y_prev) / f_next;
            if y_next.abs() > RESCALE_ABOVE {
                y_next /= RESCALE_ABOVE;
                y /= RESCALE_ABOVE;
            }
            if y_next.signum() != y.signum() && y_next != 0.0 && y != 0.0 {
                node_count += 1;
                if i < m {
                    inner_nodes += 1;
                }
            }
            if i == m {
                out_pair = (y, y_next);
            }
            y_prev = y;
            y = y_next;
            f_prev = f_cur;
            f_cur = f_next;
        }

        // inward down to the matching point
        let (mut y_prev, mut y) = (0.0_f64, TAIL_SEED);
        let (mut f_prev, mut f_cur) = (f(last), f(last - 1));
        let mut outer_nodes = 0;
        let mut in_pair = (0.0, 0.0);
        let mut i = last - 1;
        while i > m {
            let f_next = f(i - 1);
            let mut y_next = ((12.0 - 10.0 * f_cur) * y - f_prev * y_prev) / f_next;
            if y_next.abs() > RESCALE_ABOVE {
                y_next /= RESCALE_ABOVE;
                y /= RESCALE_ABOVE;
            }
            if y_next.signum() != y.signum() && y_next != 0.0 && y != 0.0 {
                outer_nodes += 1;
            }
            if i - 1 == m {
                in_pair = (y_next, y);
            }
            y_prev = y;
            y = y_next;
            f_prev = f_cur;
            f_cur = f_next;
            i -= 1;
        }

        let unit = |(a, b): (f64, f64)| {
            let norm = a.hypot(b);
            if norm > 0.0 {
                (a / norm, b / norm)
            } else {
                (0.0, 0.0)
            }
        };
        let (out_m, out_next) = unit(out_pair);
        let (in_m, in_next) = unit(in_pair);
        Shot {
            node_count,
            composite_nodes: inner_nodes + outer_nodes,
            match_defect: out_next * in_m - in_next * out_m,
            matching_index: m,
        }
    }

    fn solve(&self, n: u32, m: &MoleculeParams) -> Result<(f64, Shot)> {
        let target = n as usize;
        let not_found = || Error::NoBoundLevel {
            n,
            molecule: m.name.clone(),
        };
        let margin = 1e-9 * m.depth;
        let (mut lo, mut hi) = (margin, m.depth - margin);
        let mut count_lo = self.shoot(lo).node_count;
        let mut count_hi = self.shoot(hi).node_count;
        if count_hi <= target || count_lo > target {
            return Err(not_found());
        }

        let mut iterations = 0;
        while !(count_lo == target && count_hi == target + 1) {
            iterations += 1;
            if iterations > MAX_NODE_BISECTIONS || hi - lo <= f64::EPSILON * hi {
                return Err(not_found());
            }
            let mid = 0.5 * (lo + hi);
            let count = self.shoot(mid).node_count;
            if count <= target {
                lo = mid;
                count_lo = count;
            } else {
                hi = mid;
                count_hi = count;
            }
        }

        let matching = self.turning_index(0.5 * (lo + hi));
        let mut d_lo = self.shoot_matched(lo, matching).match_defect;
        let mut d_hi = self.shoot_matched(hi, matching).match_defect;
        let use_defect = d_lo.signum() != d_hi.signum();
        for _ in 0..MAX_DEFECT_BISECTIONS {
            if hi - lo <= ENERGY_TOLERANCE {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let below = if use_defect {
                let d = self.shoot_matched(mid, matching).match_defect;
                let below = d.signum() == d_lo.signum();
                if below {
                    d_lo = d;
                } else {
                    d_hi = d;
                }
                below
            } else {
                self.shoot(mid).node_count <= target
            };
            if below {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        // The defect is smooth across the final bracket; interpolate.
        let energy = if use_defect && d_hi != d_lo {
            (lo - d_lo * (hi - lo) / (d_hi - d_lo)).clamp(lo, hi)
        } else {
            0.5 * (lo + hi)
        };
        Ok((energy, self.shoot(energy)))
    }
}

/// Node count and matching defect at one trial energy.
pub fn integrate_at_energy(energy: f64, m: &MoleculeParams, grid: &RadialGrid) -> Result<Shot> {
    if !(energy > 0.0 && energy < m.depth) {
        return Err(Error::Domain(format!(
            "energy {energy} eV outside (0, D = {} eV)",
            m.depth
        )));
    }
    Ok(Shooter::new(m, grid)?.shoot(energy))
}

/// Level `n` on `grid`, with the shift under step halving attached.
pub fn find_eigenvalue(n: u32, m: &MoleculeParams, grid: &RadialGrid) -> Result<OracleEigenvalue> {
    let (energy, shot) = Shooter::new(m, grid)?.solve(n, m)?;
    let fine_grid = grid.refined();
    let (fine, _) = Shooter::new(m, &fine_grid)?.solve(n, m)?;
    Ok(OracleEigenvalue {
        n,
        energy,
        energy_minus_d: energy - m.depth,
        residual_mismatch: shot.match_defect,
        node_count: shot.composite_nodes,
        refinement_shift: fine - energy,
    })
}
