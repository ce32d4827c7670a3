// Copyright 2026 The shorphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! The three instantaneous Shor transformations on the `x`/`y` register and
//! the two end-to-end pipelines built from them.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::config::ExperimentConfig;
use crate::error::{Error, Result};
use crate::statevec::{BasisLabel, EnergySpectrum, StateVector, DIM, REGISTER_STATES};

/// Base of the modular exponentiation `y(x) = 3^x mod 4`.
pub const BASE: usize = 3;
/// The number being factored.
pub const MODULUS: usize = 4;

/// Largest modulus tolerated outside the `y = 0` slice by [`apply_mod_exp`].
pub const MOD_EXP_DOMAIN_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum PipelineMode {
    /// Transformations separated by free Schrödinger evolution.
    #[default]
    FreeEvolution,
    /// Every generated state carries its natural phase `exp(-i E_{mn} t)`.
    NaturalPhase,
}

impl std::fmt::Display for PipelineMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PipelineMode::FreeEvolution => "free-evolution",
            PipelineMode::NaturalPhase => "natural-phase",
        })
    }
}

impl std::str::FromStr for PipelineMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "free-evolution" => Ok(PipelineMode::FreeEvolution),
            "natural-phase" => Ok(PipelineMode::NaturalPhase),
            other => Err(Error::InvalidArgument(format!(
                "unknown pipeline mode `{other}` (expected free-evolution or natural-phase)"
            ))),
        }
    }
}

/// Delays between the superposition and the modular exponentiation (`tau1`)
/// and between the modular exponentiation and the DFT (`tau2`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
#[serde(try_from = "RawDelays")]
pub struct DelaySchedule {
    tau1: f64,
    tau2: f64,
}

#[derive(Deserialize)]
struct RawDelays {
    tau1: f64,
    tau2: f64,
}

impl TryFrom<RawDelays> for DelaySchedule {
    type Error = Error;

    fn try_from(raw: RawDelays) -> Result<Self> {
        DelaySchedule::new(raw.tau1, raw.tau2)
    }
}

impl DelaySchedule {
    pub fn new(tau1: f64, tau2: f64) -> Result<Self> {
        for (name, tau) in [("tau1", tau1), ("tau2", tau2)] {
            if !tau.is_finite() || tau < 0.0 {
                return Err(Error::InvalidArgument(format!(
                    "{name} must be finite and >= 0, got {tau}"
                )));
            }
        }
        Ok(DelaySchedule { tau1, tau2 })
    }

    pub fn zero() -> Self {
        DelaySchedule { tau1: 0.0, tau2: 0.0 }
    }

    pub fn tau1(&self) -> f64 {
        self.tau1
    }

    pub fn tau2(&self) -> f64 {
        self.tau2
    }

    pub fn total(&self) -> f64 {
        self.tau1 + self.tau2
    }
}

/// Applies a 4×4 matrix to the `x` register, identity on `y`.
fn apply_on_x(state: &StateVector, matrix: &[[Complex64; 4]; 4]) -> StateVector {
    let src = state.amplitudes();
    let mut out = [Complex64::new(0.0, 0.0); DIM];
    for (k, row) in matrix.iter().enumerate() {
        for n in 0..REGISTER_STATES {
            out[REGISTER_STATES * k + n] = row
                .iter()
                .enumerate()
                .map(|(x, m)| m * src[REGISTER_STATES * x + n])
                .sum();
        }
    }
    StateVector::from_amplitudes(out).expect("linear map of finite amplitudes")
}

/// Hadamard on each of the two `x` qubits: entries `½(-1)^{popcount(k & x)}`.
pub fn hadamard_x_matrix() -> [[Complex64; 4]; 4] {
    let mut h = [[Complex64::new(0.0, 0.0); 4]; 4];
    for (k, row) in h.iter_mut().enumerate() {
        for (x, e) in row.iter_mut().enumerate() {
            let sign = if (k & x).count_ones() % 2 == 0 { 0.5 } else { -0.5 };
            *e = Complex64::new(sign, 0.0);
        }
    }
    h
}

/// DFT on the `x` register: entries `½ exp(2πi k x / 4) = ½ i^{kx}`.
pub fn dft_x_matrix() -> [[Complex64; 4]; 4] {
    // Powers of i are exact, so the ideal interference cancels exactly.
    const I_POW: [Complex64; 4] = [
        Complex64::new(0.5, 0.0),
        Complex64::new(0.0, 0.5),
        Complex64::new(-0.5, 0.0),
        Complex64::new(0.0, -0.5),
    ];
    let mut f = [[Complex64::new(0.0, 0.0); 4]; 4];
    for (k, row) in f.iter_mut().enumerate() {
        for (x, e) in row.iter_mut().enumerate() {
            *e = I_POW[(k * x) % 4];
        }
    }
    f
}

/// Creates the uniform superposition over `x` from `|0,0⟩`.
pub fn superpose_x(state: &StateVector) -> StateVector {
    apply_on_x(state, &hadamard_x_matrix())
}

/// `|x,n⟩ → ½ Σₖ exp(2πi k x / 4) |k,n⟩`.
pub fn dft_x(state: &StateVector) -> StateVector {
    apply_on_x(state, &dft_x_matrix())
}

/// `3^x mod 4`.
pub fn mod_exp_classical(x: usize) -> Result<usize> {
    if x >= REGISTER_STATES {
        return Err(Error::ValueOutOfRange(x));
    }
    Ok((0..x).fold(1, |acc, _| acc * BASE % MODULUS))
}

/// Moves the amplitude of `|m,0⟩` to `|m, 3^m mod 4⟩`, phases untouched.
///
/// Only defined on states whose `y` register is in the ground state.
pub fn apply_mod_exp(state: &StateVector) -> Result<StateVector> {
    for label in BasisLabel::all().filter(|l| l.n != 0) {
        let weight = state.amplitude(label).norm();
        if weight > MOD_EXP_DOMAIN_TOL {
            return Err(Error::OutsideModExpDomain {
                m: label.m,
                n: label.n,
                weight,
            });
        }
    }
    let mut out = [Complex64::new(0.0, 0.0); DIM];
    for m in 0..REGISTER_STATES {
        let target = BasisLabel::new(m, mod_exp_classical(m)?)?;
        out[target.index()] = state.amplitude(BasisLabel { m, n: 0 });
    }
    StateVector::from_amplitudes(out)
}

/// Runs the post-superposition part of the free-evolution pipeline:
/// evolve `tau1`, modular exponentiation, evolve `tau2`, DFT.
///
/// `psi1` need not be normalized; restricting it to a single `|m,0⟩` term
/// isolates the contribution of that history chain.
pub fn run_from_superposition(
    psi1: &StateVector,
    spectrum: &EnergySpectrum,
    delays: &DelaySchedule,
) -> Result<StateVector> {
    let s = psi1.free_evolve(spectrum, delays.tau1)?;
    let s = apply_mod_exp(&s)?;
    let s = s.free_evolve(spectrum, delays.tau2)?;
    Ok(dft_x(&s))
}

/// Full pipeline for the given mode, spectrum and delays.
///
/// Transformations are instantaneous; the clock only advances during delays.
/// In natural-phase mode the transformation-intrinsic phases are computed with
/// a zero spectrum and the natural phases `exp(-i E_{mn} (τ₁+τ₂))` are applied
/// at the end.
pub fn run_pipeline_with(mode: PipelineMode, spectrum: &EnergySpectrum, delays: &DelaySchedule) -> Result<StateVector> {
    let psi1 = superpose_x(&StateVector::init_ground());
    match mode {
        PipelineMode::FreeEvolution => run_from_superposition(&psi1, spectrum, delays),
        PipelineMode::NaturalPhase => {
            let intrinsic = run_from_superposition(&psi1, &EnergySpectrum::zero(), delays)?;
            Ok(intrinsic.with_natural_phases(spectrum, delays.total()))
        }
    }
}

pub fn run_pipeline(config: &ExperimentConfig) -> Result<StateVector> {
    run_pipeline_with(config.mode, &config.spectrum()?, &config.delays)
}

/// Contribution of the history chain starting from `|m,0⟩` after the
/// superposition, i.e. the free-evolution pipeline with the initial
/// superposition truncated to that single term.
pub fn history_chain(start_m: usize, spectrum: &EnergySpectrum, delays: &DelaySchedule) -> Result<StateVector> {
    let start = BasisLabel::new(start_m, 0)?;
    let psi1 = superpose_x(&StateVector::init_ground()).restricted(|l| l == start);
    run_from_superposition(&psi1, spectrum, delays)
}
