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

//! Shooting oracle behaviour on the built-in molecules.

use thspec::constants::{builtin_molecule, MoleculeParams, PhysicalConstants};
use thspec::numerov::{default_grid, find_eigenvalue, integrate_at_energy, RadialGrid};
use thspec::th_model::th_energy;

fn molecule(name: &str) -> MoleculeParams {
    builtin_molecule(name, &PhysicalConstants::default()).unwrap()
}

#[test]
fn node_staircase() {
    let hf = molecule("HF");
    let grid = default_grid(&hf);
    let e2 = find_eigenvalue(2, &hf, &grid).unwrap().energy;
    let e3 = find_eigenvalue(3, &hf, &grid).unwrap().energy;
    assert_eq!(
        integrate_at_energy(0.5 * (e2 + e3), &hf, &grid)
            .unwrap()
            .node_count,
        3
    );
    assert_eq!(
        integrate_at_energy(e2 - 1e-6, &hf, &grid)
            .unwrap()
            .node_count,
        2
    );
    assert_eq!(
        integrate_at_energy(e3 + 1e-6, &hf, &grid)
            .unwrap()
            .node_count,
        4
    );

    let mut last = 0;
    for i in 1..200 {
        let e = hf.depth * f64::from(i) / 200.0;
        let count = integrate_at_energy(e, &hf, &grid).unwrap().node_count;
        assert!(
            count >= last,
            "node count fell from {last} to {count} at {e} eV"
        );
        last = count;
    }
}

#[test]
fn defect_changes_sign_at_eigenvalue() {
    let n2 = molecule("N2");
    let grid = default_grid(&n2);
    let level = find_eigenvalue(5, &n2, &grid).unwrap();
    let below = integrate_at_energy(level.energy - 1e-5, &n2, &grid).unwrap();
    let above = integrate_at_energy(level.energy + 1e-5, &n2, &grid).unwrap();
    assert!(level.residual_mismatch.abs() < 1e-3);
    assert!(below.match_defect.signum() != above.match_defect.signum());
    assert_eq!(level.node_count, 5);
}

#[test]
fn matches_closed_form_independently() {
    for name in ["HF", "I2", "O2+"] {
        let m = molecule(name);
        let grid = default_grid(&m);
        for n in [0, 5, 7] {
            let oracle = find_eigenvalue(n, &m, &grid).unwrap();
            let closed = th_energy(n, &m).unwrap();
            assert!(
                (oracle.energy - closed.energy).abs() <= 1e-4,
                "{name} n = {n}"
            );
            assert!(oracle.refinement_shift.abs() <= 1e-6, "{name} n = {n}");
        }
    }
}

#[test]
fn step_halving_converges() {
    let h2 = molecule("H2");
    let (lo, hi) = (default_grid(&h2).r_lo, default_grid(&h2).r_hi);
    let e = |points| {
        find_eigenvalue(4, &h2, &RadialGrid::new(lo, hi, points).unwrap())
            .unwrap()
            .energy
    };
    let (coarse, mid, fine) = (e(1000), e(1999), e(3997));
    let d1 = (coarse - mid).abs();
    let d2 = (mid - fine).abs();
    // Fourth-order scheme: roughly sixteenfold per halving.
    assert!(d2 < d1 / 8.0, "{d1} then {d2}");
}

#[test]
fn coarse_grid_is_reported_not_rejected() {
    let hf = molecule("HF");
    let g = default_grid(&hf);
    let coarse = RadialGrid::new(g.r_lo, g.r_hi, 500).unwrap();
    assert!(!coarse.is_resolved());
    assert!(find_eigenvalue(0, &hf, &coarse).is_ok());
}
