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

//! Period finding and factoring on top of the pipelines, the interference
//! condition, and parameter sweeps.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use crate::config::ExperimentConfig;
use crate::error::{Error, Result};
use crate::statevec::{wrap_phase, EnergySpectrum, StateVector, XDistribution, REGISTER_STATES};
use crate::transforms::{self, DelaySchedule, PipelineMode, BASE, MODULUS};

/// Number of states in the `x` register.
pub const X_REGISTER_SIZE: usize = REGISTER_STATES;

/// Wrapped phase mismatches between the two history chains feeding each
/// surviving output state. Interference is intact iff both vanish mod 2π.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConditionResidual {
    /// `(E₂₀-E₀₀)τ₁ + (E₂₁-E₀₁)τ₂`, wrapped to `(-π, π]`.
    pub delta1: f64,
    /// `(E₃₀-E₁₀)τ₁ + (E₃₃-E₁₃)τ₂`, wrapped to `(-π, π]`.
    pub delta2: f64,
    pub satisfied: bool,
}

/// Unwrapped phase combinations `(Δ₁, Δ₂)`.
pub fn condition_phases(spectrum: &EnergySpectrum, delays: &DelaySchedule) -> (f64, f64) {
    let e = |m, n| spectrum.energy(m, n);
    let (t1, t2) = (delays.tau1(), delays.tau2());
    (
        (e(2, 0) - e(0, 0)) * t1 + (e(2, 1) - e(0, 1)) * t2,
        (e(3, 0) - e(1, 0)) * t1 + (e(3, 3) - e(1, 3)) * t2,
    )
}

/// The integers `(n₁, n₂)` removed by wrapping the phase combinations.
pub fn wrap_counts(spectrum: &EnergySpectrum, delays: &DelaySchedule) -> (i64, i64) {
    let (d1, d2) = condition_phases(spectrum, delays);
    let count = |d: f64| ((d - wrap_phase(d)) / TAU).round() as i64;
    (count(d1), count(d2))
}

pub fn check_condition(spectrum: &EnergySpectrum, delays: &DelaySchedule, tol: f64) -> ConditionResidual {
    let (d1, d2) = condition_phases(spectrum, delays);
    let (delta1, delta2) = (wrap_phase(d1), wrap_phase(d2));
    ConditionResidual {
        delta1,
        delta2,
        satisfied: delta1.abs() <= tol && delta2.abs() <= tol,
    }
}

/// Period candidate `T = D / x`.
///
/// `Ok(None)` for `x = 0`, which carries no period information.
pub fn extract_period(measured_x: usize, d: usize) -> Result<Option<usize>> {
    if measured_x >= d {
        return Err(Error::InvalidArgument(format!(
            "measured x = {measured_x} outside 0..{d}"
        )));
    }
    match measured_x {
        0 => Ok(None),
        x if d.is_multiple_of(x) => Ok(Some(d / x)),
        x => Err(Error::ExtractionFailure { x, d }),
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % modulus;
        }
        b = b * b % modulus;
        exp >>= 1;
    }
    acc
}

/// Factor of 4 from an even period: with `z = 3^{T/2}`, tries `gcd(z-1, 4)`
/// and then `gcd(z+1, 4)`, returning the first nontrivial one.
pub fn factor_from_period(period: usize) -> Option<usize> {
    if period == 0 || !period.is_multiple_of(2) {
        return None;
    }
    let n = MODULUS as u64;
    // gcd(z ± 1, N) only depends on z mod N.
    let z = pow_mod(BASE as u64, (period / 2) as u64, n);
    [(z + n - 1) % n, (z + 1) % n]
        .into_iter()
        .map(|v| gcd(v, n))
        .find(|&f| f != 1 && f != n)
        .map(|f| f as usize)
}

/// Smallest `T > 0` with `3^T ≡ 1 (mod 4)`.
pub fn true_period() -> usize {
    (1..=MODULUS)
        .find(|&t| pow_mod(BASE as u64, t as u64, MODULUS as u64) == 1)
        .unwrap_or(MODULUS)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RunStatus {
    /// Minimal period found and factored.
    Factored,
    /// A multiple of the true period was extracted; it still factors.
    FactoredFromMultiplePeriod,
    /// Every draw up to the retry cap returned `x = 0`.
    RetryCapExhausted,
    /// The measured `x` does not divide `D`.
    ExtractionFailed,
    /// A period was extracted but yields no nontrivial factor.
    NoFactor,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub final_state: StateVector,
    pub x_distribution: XDistribution,
    pub residuals: ConditionResidual,
    /// Last drawn `x`.
    pub measured_x: usize,
    /// Number of draws taken.
    pub attempts: u32,
    pub period: Option<usize>,
    pub factor: Option<usize>,
    pub status: RunStatus,
    pub config_echo: ExperimentConfig,
}

/// Runs one experiment: pipeline, exact distribution, residuals, a seeded
/// measurement, period extraction and factoring.
///
/// Outcomes `x = 0` are redrawn with seeds `seed + 1, seed + 2, ...` for at
/// most `retry_cap` draws in total.
pub fn run_experiment(config: &ExperimentConfig) -> Result<RunReport> {
    let spectrum = config.spectrum()?;
    let final_state = transforms::run_pipeline_with(config.mode, &spectrum, &config.delays)?;
    let x_distribution = final_state.measure_x_distribution()?;
    let residuals = check_condition(&spectrum, &config.delays, config.tolerance);

    let mut measured_x = 0;
    let mut attempts = 0;
    while attempts < config.retry_cap {
        measured_x = final_state.sample_x(config.seed.wrapping_add(attempts as u64))?;
        attempts += 1;
        if measured_x != 0 {
            break;
        }
    }

    let (period, factor, status) = match extract_period(measured_x, X_REGISTER_SIZE) {
        Ok(None) => (None, None, RunStatus::RetryCapExhausted),
        Err(Error::ExtractionFailure { .. }) => (None, None, RunStatus::ExtractionFailed),
        Err(e) => return Err(e),
        Ok(Some(t)) => match factor_from_period(t) {
            None => (Some(t), None, RunStatus::NoFactor),
            Some(f) if t == true_period() => (Some(t), Some(f), RunStatus::Factored),
            Some(f) => (Some(t), Some(f), RunStatus::FactoredFromMultiplePeriod),
        },
    };

    Ok(RunReport {
        final_state,
        x_distribution,
        residuals,
        measured_x,
        attempts,
        period,
        factor,
        status,
        config_echo: config.clone(),
    })
}

/// Runs every config, in parallel, returning results in input order. A
/// failing config does not abort the others.
pub fn sweep(configs: &[ExperimentConfig]) -> Result<Vec<Result<RunReport>>> {
    if configs.is_empty() {
        return Err(Error::InvalidArgument("sweep grid is empty".into()));
    }
    Ok(configs.par_iter().map(run_experiment).collect())
}

/// Evenly spaced samples over a closed interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub start: f64,
    pub end: f64,
    pub count: usize,
}

impl Axis {
    pub fn new(start: f64, end: f64, count: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::InvalidArgument("grid axis needs at least one point".into()));
        }
        if !start.is_finite() || !end.is_finite() || start < 0.0 || end < start {
            return Err(Error::InvalidArgument(format!("invalid delay range [{start}, {end}]")));
        }
        Ok(Axis { start, end, count })
    }

    pub fn value(&self, i: usize) -> f64 {
        if self.count == 1 {
            self.start
        } else {
            self.start + (self.end - self.start) * i as f64 / (self.count - 1) as f64
        }
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(|i| self.value(i))
    }
}

/// One point of a free-evolution delay scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridRow {
    pub tau1: f64,
    pub tau2: f64,
    pub delta1: f64,
    pub delta2: f64,
    pub satisfied: bool,
    pub p0: f64,
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
    /// `|amp(1,1)|`, the modulus of the state that vanishes in the ideal run.
    pub amp11_mod: f64,
}

impl GridRow {
    pub fn distribution(&self) -> XDistribution {
        XDistribution([self.p0, self.p1, self.p2, self.p3])
    }
}

/// Scans `(τ₁, τ₂)` over a grid with the free-evolution pipeline.
/// Rows are ordered with `τ₁` as the outer index.
pub fn delay_grid(spectrum: &EnergySpectrum, tau1: &Axis, tau2: &Axis, tol: f64) -> Result<Vec<GridRow>> {
    let points: Vec<(f64, f64)> = tau1.values().flat_map(|a| tau2.values().map(move |b| (a, b))).collect();
    points
        .par_iter()
        .map(|&(t1, t2)| {
            let delays = DelaySchedule::new(t1, t2)?;
            let state = transforms::run_pipeline_with(PipelineMode::FreeEvolution, spectrum, &delays)?;
            let p = state.measure_x_distribution()?.0;
            let r = check_condition(spectrum, &delays, tol);
            Ok(GridRow {
                tau1: t1,
                tau2: t2,
                delta1: r.delta1,
                delta2: r.delta2,
                satisfied: r.satisfied,
                p0: p[0],
                p1: p[1],
                p2: p[2],
                p3: p[3],
                amp11_mod: state.amplitude_of(1, 1)?.norm(),
            })
        })
        .collect()
}
