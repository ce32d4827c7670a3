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

//! Experiment configuration and its TOML file form.
//!
//! ```toml
//! mode = "free-evolution"        # or "natural-phase"
//! tau1 = 0.1
//! tau2 = 0.1
//! qubit_frequencies = [1.0, 2.3, 3.7, 5.1]   # or: energies = [16 values, index 4m+n]
//! seed = 7
//! retry_cap = 16
//! tolerance = 1e-9
//! output_format = "json"         # or "csv"
//! ```
//!
//! Every key is optional. Unknown keys are rejected.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::statevec::{EnergySpectrum, DEFAULT_QUBIT_FREQUENCIES};
use crate::transforms::{DelaySchedule, PipelineMode};

/// Environment variable selecting the default output format.
pub const FORMAT_ENV: &str = "SHORPHASE_FORMAT";

pub const DEFAULT_RETRY_CAP: u32 = 16;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

impl OutputFormat {
    /// Reads [`FORMAT_ENV`], falling back to JSON when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(FORMAT_ENV) {
            Ok(v) => v.parse(),
            Err(_) => Ok(OutputFormat::Json),
        }
    }
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::Config(format!(
                "unknown output format `{other}` (expected json or csv)"
            ))),
        }
    }
}

/// Energy spectrum as given by the user.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumSpec {
    /// Additive model over the four qubits.
    QubitFrequencies([f64; 4]),
    /// Full table in index order `4m + n`.
    Energies(EnergySpectrum),
}

impl Default for SpectrumSpec {
    fn default() -> Self {
        SpectrumSpec::QubitFrequencies(DEFAULT_QUBIT_FREQUENCIES)
    }
}

impl SpectrumSpec {
    pub fn resolve(&self) -> Result<EnergySpectrum> {
        match self {
            SpectrumSpec::QubitFrequencies(w) => EnergySpectrum::additive(*w),
            SpectrumSpec::Energies(table) => Ok(*table),
        }
    }
}

/// One fully validated experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub mode: PipelineMode,
    pub delays: DelaySchedule,
    pub spectrum: SpectrumSpec,
    pub seed: u64,
    /// Maximum number of measurement draws per run.
    pub retry_cap: u32,
    /// Tolerance on the wrapped interference residuals.
    pub tolerance: f64,
    pub output_format: OutputFormat,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            mode: PipelineMode::FreeEvolution,
            delays: DelaySchedule::zero(),
            spectrum: SpectrumSpec::default(),
            seed: 0,
            retry_cap: DEFAULT_RETRY_CAP,
            tolerance: DEFAULT_TOLERANCE,
            output_format: OutputFormat::Json,
        }
    }
}

impl ExperimentConfig {
    pub fn spectrum(&self) -> Result<EnergySpectrum> {
        self.spectrum.resolve()
    }

    pub fn with_delays(mut self, tau1: f64, tau2: f64) -> Result<Self> {
        self.delays = DelaySchedule::new(tau1, tau2)?;
        Ok(self)
    }

    pub fn with_mode(mut self, mode: PipelineMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_spectrum(mut self, spectrum: EnergySpectrum) -> Self {
        self.spectrum = SpectrumSpec::Energies(spectrum);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Parses a TOML config, filling unspecified keys with defaults.
    pub fn from_toml_str(src: &str) -> Result<Self> {
        let raw: RawConfig = toml::from_str(src).map_err(|e| Error::Config(e.to_string()))?;
        raw.into_config(OutputFormat::Json).map_err(|e| anchor(src, e))
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(&RawConfig::from(self)).expect("config values are representable in TOML")
    }
}

/// Config with every key optional, as read from a file or assembled from
/// command-line flags.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<PipelineMode>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau2: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub qubit_frequencies: Option<[f64; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub energies: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub retry_cap: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output_format: Option<OutputFormat>,
}

/// A validation failure tied to a config key.
#[derive(Debug)]
struct KeyError {
    key: &'static str,
    message: String,
}

fn key_err(key: &'static str, e: impl std::fmt::Display) -> KeyError {
    KeyError {
        key,
        message: e.to_string(),
    }
}

/// Reports the offending key with its line number in `src` when present.
fn anchor(src: &str, e: KeyError) -> Error {
    let line = src.lines().position(|l| {
        l.trim_start()
            .strip_prefix(e.key)
            .is_some_and(|rest| rest.trim_start().starts_with('='))
    });
    match line {
        Some(i) => Error::Config(format!("line {}: `{}`: {}", i + 1, e.key, e.message)),
        None => Error::Config(format!("`{}`: {}", e.key, e.message)),
    }
}

impl RawConfig {
    pub fn from_toml_str(src: &str) -> Result<Self> {
        toml::from_str(src).map_err(|e| Error::Config(e.to_string()))
    }

    /// Values set in `over` replace those in `self`. Setting either spectrum
    /// key in `over` replaces both spectrum keys.
    pub fn merged_with(mut self, over: RawConfig) -> RawConfig {
        if over.qubit_frequencies.is_some() || over.energies.is_some() {
            self.qubit_frequencies = over.qubit_frequencies;
            self.energies = over.energies;
        }
        RawConfig {
            mode: over.mode.or(self.mode),
            tau1: over.tau1.or(self.tau1),
            tau2: over.tau2.or(self.tau2),
            qubit_frequencies: self.qubit_frequencies,
            energies: self.energies,
            seed: over.seed.or(self.seed),
            retry_cap: over.retry_cap.or(self.retry_cap),
            tolerance: over.tolerance.or(self.tolerance),
            output_format: over.output_format.or(self.output_format),
        }
    }

    /// Validates and fills defaults; `default_format` applies when no format is set.
    pub fn validate(self, default_format: OutputFormat) -> Result<ExperimentConfig> {
        self.into_config(default_format)
            .map_err(|e| Error::Config(format!("`{}`: {}", e.key, e.message)))
    }

    /// Like [`RawConfig::validate`], anchoring diagnostics to lines of `src`.
    pub fn validate_against(self, src: &str, default_format: OutputFormat) -> Result<ExperimentConfig> {
        self.into_config(default_format).map_err(|e| anchor(src, e))
    }

    fn into_config(self, default_format: OutputFormat) -> std::result::Result<ExperimentConfig, KeyError> {
        let d = ExperimentConfig::default();
        let tau1 = self.tau1.unwrap_or(0.0);
        let tau2 = self.tau2.unwrap_or(0.0);
        DelaySchedule::new(tau1, 0.0).map_err(|e| key_err("tau1", e))?;
        let delays = DelaySchedule::new(tau1, tau2).map_err(|e| key_err("tau2", e))?;
        let spectrum = match (self.qubit_frequencies, self.energies) {
            (Some(_), Some(_)) => {
                return Err(key_err(
                    "energies",
                    "set either qubit_frequencies or energies, not both",
                ))
            }
            (Some(w), None) => {
                EnergySpectrum::additive(w).map_err(|e| key_err("qubit_frequencies", e))?;
                SpectrumSpec::QubitFrequencies(w)
            }
            (None, Some(table)) => {
                SpectrumSpec::Energies(EnergySpectrum::try_from(table).map_err(|e| key_err("energies", e))?)
            }
            (None, None) => d.spectrum,
        };
        let retry_cap = self.retry_cap.unwrap_or(d.retry_cap);
        if retry_cap < 1 {
            return Err(key_err("retry_cap", "must be at least 1"));
        }
        let tolerance = self.tolerance.unwrap_or(d.tolerance);
        if !tolerance.is_finite() || tolerance <= 0.0 {
            return Err(key_err("tolerance", format!("must be finite and > 0, got {tolerance}")));
        }
        Ok(ExperimentConfig {
            mode: self.mode.unwrap_or(d.mode),
            delays,
            spectrum,
            seed: self.seed.unwrap_or(d.seed),
            retry_cap,
            tolerance,
            output_format: self.output_format.unwrap_or(default_format),
        })
    }
}

impl From<&ExperimentConfig> for RawConfig {
    fn from(c: &ExperimentConfig) -> Self {
        let (qubit_frequencies, energies) = match c.spectrum {
            SpectrumSpec::QubitFrequencies(w) => (Some(w), None),
            SpectrumSpec::Energies(t) => (None, Some(t.energies().to_vec())),
        };
        RawConfig {
            mode: Some(c.mode),
            tau1: Some(c.delays.tau1()),
            tau2: Some(c.delays.tau2()),
            qubit_frequencies,
            energies,
            seed: Some(c.seed),
            retry_cap: Some(c.retry_cap),
            tolerance: Some(c.tolerance),
            output_format: Some(c.output_format),
        }
    }
}
