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

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid molecule parameter `{field}`: {message}")]
    Validation {
        field: &'static str,
        message: String,
    },

    #[error("domain error: {0}")]
    Domain(String),

    /// A quantity that must sit under a square root went negative.
    #[error("no real bound-state branch: {name} = {value:e} < 0")]
    NoRealBranch { name: &'static str, value: f64 },

    #[error("potential pole at r_s = {r_s} Å")]
    Singularity { r_s: f64 },

    #[error("no bound level n = {n} for {molecule}")]
    NoBoundLevel { n: u32, molecule: String },

    #[error("quadrature did not converge: coarse = {coarse:e}, fine = {fine:e}")]
    Quadrature { coarse: f64, fine: f64 },

    #[error("method not applicable: tau' = {tau_prime} is not negative")]
    NotApplicable { tau_prime: f64 },

    #[error("grid configuration: {0}")]
    Grid(String),

    #[error("unknown molecule `{0}`")]
    UnknownMolecule(String),

    #[error("{0}")]
    Io(String),
}
