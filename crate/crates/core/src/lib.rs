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

//! Vibrational spectra of diatomic molecules in the Tietz-Hua potential.
//!
//! * [`nu`] – parametric Nikiforov-Uvarov engine (coefficients, quantization
//!   conditions, closed-form solutions).
//! * [`th_model`] – the Tietz-Hua specialisation: potential, levels, Morse
//!   limit and normalized radial functions.
//! * [`numerov`] – an independent shooting solver used to cross-check every
//!   closed-form level.
//! * [`constants`] – pinned unit conversions and the molecule table.
//! * [`cli`] – the `thspec` command line front end.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod constants;
pub mod error;
pub mod nu;
pub mod numerov;
pub mod quadrature;
pub mod special;
pub mod th_model;

pub use constants::{MoleculeParams, PhysicalConstants};
pub use error::{Error, Result};
