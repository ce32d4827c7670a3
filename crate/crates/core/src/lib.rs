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

//! Phase-exact simulation of Shor's algorithm for N = 4 on a 2 + 2 qubit
//! register, showing how free evolution of the wave function between
//! instantaneous transformations spoils the interference the algorithm needs,
//! and how pulses locked to reference oscillations give every newly generated
//! state its natural phase `exp(-i E t)` again.
//!
//! * [`statevec`]: amplitudes, energy spectrum, free evolution, measurement.
//! * [`transforms`]: superposition, `3^x mod 4`, DFT and the two pipelines.
//! * [`pulses`]: two-level resonant and sudden pulse dynamics.
//! * [`shor`]: interference condition, period and factor extraction, sweeps.
//! * [`config`] and [`cli`]: experiment configs and the command-line front end.

pub mod cli;
pub mod config;
pub mod error;
pub mod pulses;
pub mod shor;
pub mod statevec;
pub mod transforms;

pub use config::{ExperimentConfig, OutputFormat, SpectrumSpec};
pub use error::{Error, Result};
pub use pulses::{PulseMode, PulseSpec, TwoLevelState, TwoLevelSystem};
pub use shor::{check_condition, run_experiment, sweep, ConditionResidual, RunReport, RunStatus};
pub use statevec::{Amplitude, BasisLabel, EnergySpectrum, StateVector, XDistribution};
pub use transforms::{DelaySchedule, PipelineMode};
