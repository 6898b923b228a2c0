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

use std::io::Write;

use serde_json::{Map, Value};

use super::report::{Cell, SpectrumRow, VerifyReport, WavefunctionSamples};
use super::OutputFormat;
use crate::error::{Error, Result};

pub const SPECTRUM_HEADER: [&str; 7] = [
    "molecule",
    "n",
    "c_h",
    "E_th_minus_D_eV",
    "E_morse_minus_D_eV",
    "E_oracle_minus_D_eV",
    "delta_th_oracle_eV",
];

const DECIMALS: usize = 9;

fn io(e: impl std::fmt::Display) -> Error {
    Error::Io(e.to_string())
}

fn number(v: f64, full: bool) -> String {
    // Drop the sign of values that round to zero.
    let v = if v == 0.0 || (!full && v.abs() < 0.5e-9) {
        v.abs()
    } else {
        v
    };
    if full {
        format!("{v:e}")
    } else {
        format!("{v:.DECIMALS$}")
    }
}

fn cell_text(c: &Cell, full: bool) -> String {
    match c {
        Cell::Value(v) => number(*v, full),
        Cell::Unbound => "unbound".into(),
        Cell::Error(_) => "error".into(),
        Cell::NotComputed => String::new(),
    }
}

fn row_fields(r: &SpectrumRow, full: bool) -> [String; 7] {
    [
        r.molecule.clone(),
        r.n.to_string(),
        r.c_h.to_string(),
        cell_text(&r.th, full),
        cell_text(&r.morse, full),
        cell_text(&r.oracle, full),
        r.delta_th_oracle
            .map(|d| number(d, full))
            .unwrap_or_default(),
    ]
}

/// JSON value for a printed field, so that CSV and JSON carry the same digits.
fn json_field(text: &str) -> Value {
    if text.is_empty() {
        return Value::Null;
    }
    match text
        .parse::<f64>()
        .ok()
        .and_then(serde_json::Number::from_f64)
    {
        Some(n) => Value::Number(n),
        None => Value::String(text.into()),
    }
}

pub fn write_spectrum(
    out: &mut dyn Write,
    rows: &[SpectrumRow],
    format: OutputFormat,
    full_precision: bool,
) -> Result<()> {
    let table: Vec<[String; 7]> = rows.iter().map(|r| row_fields(r, full_precision)).collect();
    match format {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(SPECTRUM_HEADER).map_err(io)?;
            for fields in &table {
                w.write_record(fields).map_err(io)?;
            }
            w.flush().map_err(io)?;
        }
        OutputFormat::Json => {
            let array: Vec<Value> = table
                .iter()
                .map(|fields| {
                    let mut obj = Map::new();
                    for (key, text) in SPECTRUM_HEADER.iter().zip(fields) {
                        let v = match *key {
                            "molecule" => Value::String(text.clone()),
                            _ => json_field(text),
                        };
                        obj.insert((*key).into(), v);
                    }
                    Value::Object(obj)
                })
                .collect();
            serde_json::to_writer_pretty(&mut *out, &array).map_err(io)?;
            writeln!(out).map_err(io)?;
        }
        OutputFormat::Pretty => {
            let mut widths = SPECTRUM_HEADER.map(str::len);
            for fields in &table {
                for (w, f) in widths.iter_mut().zip(fields) {
                    *w = (*w).max(f.len());
                }
            }
            let line = |fields: &[&str]| {
                fields
                    .iter()
                    .zip(widths)
                    .enumerate()
                    .map(|(i, (f, w))| {
                        if i == 0 {
                            format!("{f:<w$}")
                        } else {
                            format!("{f:>w$}")
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            writeln!(out, "{}", line(&SPECTRUM_HEADER)).map_err(io)?;
            for fields in &table {
                let refs: Vec<&str> = fields.iter().map(String::as_str).collect();
                writeln!(out, "{}", line(&refs)).map_err(io)?;
            }
        }
    }
    Ok(())
}

/// The verification report is always JSON.
pub fn write_verify(out: &mut dyn Write, report: &VerifyReport) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, report).map_err(io)?;
    writeln!(out).map_err(io)
}

/// Samples are written at full precision: `molecule,n,r_A,R`.
pub fn write_wavefunctions(
    out: &mut dyn Write,
    levels: &[WavefunctionSamples],
    format: OutputFormat,
) -> Result<()> {
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, levels).map_err(io)?;
            writeln!(out).map_err(io)?;
        }
        OutputFormat::Csv | OutputFormat::Pretty => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["molecule", "n", "r_A", "R"]).map_err(io)?;
            for level in levels {
                let n = level.n.to_string();
                for (r, value) in &level.samples {
                    w.write_record([
                        level.molecule.as_str(),
                        &n,
                        &format!("{r:e}"),
                        &format!("{value:e}"),
                    ])
                    .map_err(io)?;
                }
            }
            w.flush().map_err(io)?;
        }
    }
    Ok(())
}
