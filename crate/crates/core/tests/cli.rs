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

//! Command-line behaviour through `cli::run` and the built binary.

use std::process::Command;

use serde_json::Value;
use thspec::cli::{run, EXIT_OK, EXIT_PARTIAL, EXIT_TOLERANCE, EXIT_USAGE, SPECTRUM_HEADER};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("thspec").chain(args.iter().copied());
    let code = run(argv, None, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn spectrum_is_deterministic() {
    let args = ["spectrum", "--molecules", "HF,I2", "--levels", "0,5"];
    let (code, first, _) = invoke(&args);
    assert_eq!(code, EXIT_OK);
    for _ in 0..3 {
        assert_eq!(invoke(&args).1, first);
    }
    let mut lines = first.lines();
    assert_eq!(lines.next().unwrap(), SPECTRUM_HEADER.join(","));
    assert_eq!(lines.count(), 4);
}

#[test]
fn csv_and_json_agree() {
    let (_, csv_text, _) = invoke(&["spectrum", "--molecules", "N2,O2", "--levels", "0,7"]);
    let (_, json_text, _) = invoke(&[
        "spectrum",
        "--molecules",
        "N2,O2",
        "--levels",
        "0,7",
        "--format",
        "json",
    ]);
    let rows: Vec<Value> = serde_json::from_str(&json_text).unwrap();
    let mut reader = csv::Reader::from_reader(csv_text.as_bytes());
    let records: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), rows.len());
    for (record, row) in records.iter().zip(&rows) {
        assert_eq!(row["molecule"], record[0]);
        for (i, key) in SPECTRUM_HEADER.iter().enumerate().skip(1) {
            let from_csv: f64 = record[i].parse().unwrap();
            assert_eq!(row[*key].as_f64().unwrap(), from_csv, "{key}");
        }
    }
}

#[test]
fn csv_has_nine_decimals() {
    let (_, text, _) = invoke(&[
        "spectrum",
        "--molecules",
        "HF",
        "--levels",
        "0",
        "--mode",
        "th",
    ]);
    let line = text.lines().nth(1).unwrap();
    let fields: Vec<&str> = line.split(',').collect();
    assert_eq!(fields[3].split('.').nth(1).unwrap().len(), 9);
    assert_eq!(fields[4], "");
    assert_eq!(fields[5], "");
}

#[test]
fn full_precision_round_trips() {
    let (_, text, _) = invoke(&[
        "spectrum",
        "--molecules",
        "HF",
        "--levels",
        "0",
        "--mode",
        "th",
        "--full-precision",
    ]);
    let value: f64 = text
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .nth(3)
        .unwrap()
        .parse()
        .unwrap();
    let c = thspec::PhysicalConstants::default();
    let hf = thspec::constants::builtin_molecule("HF", &c).unwrap();
    assert_eq!(
        value,
        thspec::th_model::th_energy(0, &hf).unwrap().energy_minus_d
    );
}

#[test]
fn unbound_level_is_partial() {
    let (code, text, _) = invoke(&["spectrum", "--molecules", "H2", "--levels", "0,400"]);
    assert_eq!(code, EXIT_PARTIAL);
    let last = text.lines().last().unwrap();
    assert!(last.starts_with("H2,400,"));
    assert!(last.contains("unbound"));
}

#[test]
fn usage_errors() {
    assert_eq!(invoke(&["spectrum", "--molecules", "XY"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["spectrum", "--molecules", ""]).0, EXIT_USAGE);
    assert_eq!(invoke(&["spectrum", "--levels", "x"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["--help"]).0, EXIT_OK);
}

#[test]
fn verify_passes_on_defaults_subset() {
    let (code, text, _) = invoke(&["verify", "--molecules", "I2", "--levels", "0,7"]);
    assert_eq!(code, EXIT_OK);
    let report: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["rows"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_flags_coarse_grid() {
    let (code, text, _) = invoke(&[
        "verify",
        "--molecules",
        "HF",
        "--levels",
        "0",
        "--grid-points",
        "500",
    ]);
    assert_eq!(code, EXIT_TOLERANCE);
    let report: Value = serde_json::from_str(&text).unwrap();
    let checks = report["rows"][0]["checks"].as_array().unwrap();
    let resolution = checks
        .iter()
        .find(|c| c["name"] == "grid_resolution")
        .unwrap();
    assert_eq!(resolution["pass"], false);
}

fn wavefunction_rows(args: &[&str]) -> Vec<(f64, f64)> {
    let (code, text, _) = invoke(args);
    assert_eq!(code, EXIT_OK);
    csv::Reader::from_reader(text.as_bytes())
        .records()
        .map(|r| {
            let r = r.unwrap();
            (r[2].parse().unwrap(), r[3].parse().unwrap())
        })
        .collect()
}

#[test]
fn sampled_wavefunction_is_normalized() {
    for n in ["0", "2", "5"] {
        let rows = wavefunction_rows(&[
            "wavefunction",
            "--molecules",
            "HF",
            "--levels",
            n,
            "--samples",
            "4000",
        ]);
        let integral: f64 = rows
            .windows(2)
            .map(|w| 0.5 * (w[1].0 - w[0].0) * (w[0].1.powi(2) + w[1].1.powi(2)))
            .sum();
        assert!((integral - 1.0).abs() <= 1e-3, "n = {n}: {integral}");
    }
}

#[test]
fn sampled_wavefunction_nodes() {
    let rows = wavefunction_rows(&["wavefunction", "--molecules", "HF", "--levels", "2"]);
    let significant: Vec<f64> = rows
        .iter()
        .map(|r| r.1)
        .filter(|v| v.abs() > 1e-12)
        .collect();
    let changes = significant
        .windows(2)
        .filter(|w| w[0].signum() != w[1].signum())
        .count();
    assert_eq!(changes, 2);
}

#[test]
fn binary_reads_molecule_file_from_env() {
    let dir = std::env::temp_dir().join(format!("thspec-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("molecules.txt");
    std::fs::write(
        &path,
        "# name c_h mu b_h r_e beta D\nXX 0.0 0.16 2.2266 0.917 - 49384\n",
    )
    .unwrap();

    let output = Command::new(env!("CARGO_BIN_EXE_thspec"))
        .args(["spectrum", "--levels", "0", "--mode", "morse"])
        .env("THSPEC_MOLECULES", &path)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(EXIT_OK));
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(
        text.lines().nth(1).unwrap().starts_with("XX,0,0,"),
        "{text}"
    );

    let output = Command::new(env!("CARGO_BIN_EXE_thspec"))
        .args(["spectrum", "--molecules", "HF"])
        .env("THSPEC_MOLECULES", &path)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(EXIT_USAGE));
    std::fs::remove_dir_all(&dir).unwrap();
}
