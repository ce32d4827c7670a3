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

//! Single resonant transition `|k⟩ ↔ |p⟩` driven by a rectangular pulse.
//!
//! The drive is the rotating-wave coupling
//! `-(Ω/2)[e^{iθ(t)} |k⟩⟨p| + e^{-iθ(t)} |p⟩⟨k|]` on top of the bare energies
//! `E_k`, `E_p`. The drive phase `θ(t)` depends on how the pulse is produced:
//!
//! * coherent: cut from a continuous reference, `θ = ω_pk t + φ`;
//! * non-coherent: started fresh at `t₀`, `θ = ω_pk (t - t₀) + φ₀`;
//! * phase-corrected: non-coherent with `φ₀ = φ + ω_pk t₀`, which reproduces
//!   the coherent pulse.
//!
//! The sudden mode is the instantaneous limit of a strong square pulse with
//! fixed area `α`.

pub mod rk4;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::statevec::{wrap_phase, Amplitude};

/// Default number of integrator steps per pulse.
pub const DEFAULT_ODE_STEPS: usize = 1000;

/// Amplitude moduli below this are treated as exactly zero when choosing the
/// closed-form branch.
const ZERO_AMPLITUDE: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwoLevelSystem {
    pub e_k: f64,
    pub e_p: f64,
}

impl TwoLevelSystem {
    pub fn new(e_k: f64, e_p: f64) -> Result<Self> {
        if !e_k.is_finite() || !e_p.is_finite() {
            return Err(Error::InvalidArgument("level energies must be finite".into()));
        }
        Ok(TwoLevelSystem { e_k, e_p })
    }

    /// Transition frequency `ω_pk = E_p - E_k`.
    pub fn omega_pk(&self) -> f64 {
        self.e_p - self.e_k
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PulseMode {
    Coherent,
    NonCoherent,
    PhaseCorrected,
    Sudden,
}

impl PulseMode {
    pub fn name(self) -> &'static str {
        match self {
            PulseMode::Coherent => "coherent",
            PulseMode::NonCoherent => "noncoherent",
            PulseMode::PhaseCorrected => "phase-corrected",
            PulseMode::Sudden => "sudden",
        }
    }
}

impl std::str::FromStr for PulseMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "coherent" => Ok(PulseMode::Coherent),
            "noncoherent" | "non-coherent" => Ok(PulseMode::NonCoherent),
            "phase-corrected" => Ok(PulseMode::PhaseCorrected),
            "sudden" => Ok(PulseMode::Sudden),
            other => Err(Error::InvalidArgument(format!("unknown pulse mode `{other}`"))),
        }
    }
}

/// One rectangular pulse.
///
/// `phase` is `φ` for coherent and phase-corrected pulses and `φ₀` for
/// non-coherent ones; it is stored wrapped to `(-π, π]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PulseSpec {
    rabi: f64,
    t0: f64,
    tau: f64,
    phase: f64,
    mode: PulseMode,
    sudden_area: f64,
}

impl PulseSpec {
    /// A resonant pulse of Rabi frequency `rabi` lasting `tau` from `t0`.
    pub fn resonant(mode: PulseMode, rabi: f64, t0: f64, tau: f64, phase: f64) -> Result<Self> {
        if mode == PulseMode::Sudden {
            return Err(Error::InvalidArgument("use PulseSpec::sudden for sudden pulses".into()));
        }
        if !rabi.is_finite() || rabi < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "Rabi frequency must be finite and >= 0, got {rabi}"
            )));
        }
        if !tau.is_finite() || tau < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "pulse duration must be finite and >= 0, got {tau}"
            )));
        }
        if !t0.is_finite() || !phase.is_finite() {
            return Err(Error::InvalidArgument(
                "pulse start time and phase must be finite".into(),
            ));
        }
        Ok(PulseSpec {
            rabi,
            t0,
            tau,
            phase: wrap_phase(phase),
            mode,
            sudden_area: 0.0,
        })
    }

    /// A resonant pulse specified by its area `α = Ωτ/2` instead of `Ω`.
    pub fn resonant_with_area(mode: PulseMode, area: f64, t0: f64, tau: f64, phase: f64) -> Result<Self> {
        if tau.is_nan() || tau <= 0.0 {
            return Err(Error::InvalidArgument(
                "an area-specified pulse needs a positive duration".into(),
            ));
        }
        Self::resonant(mode, 2.0 * area / tau, t0, tau, phase)
    }

    /// Instantaneous pulse of area `α = lim Vτ` applied at `t0`.
    pub fn sudden(t0: f64, area: f64) -> Result<Self> {
        if !area.is_finite() || !t0.is_finite() {
            return Err(Error::InvalidArgument(
                "sudden pulse area and time must be finite".into(),
            ));
        }
        Ok(PulseSpec {
            rabi: 0.0,
            t0,
            tau: 0.0,
            phase: 0.0,
            mode: PulseMode::Sudden,
            sudden_area: area,
        })
    }

    pub fn rabi(&self) -> f64 {
        self.rabi
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn mode(&self) -> PulseMode {
        self.mode
    }

    /// Rotation angle `α`: `Ωτ/2` for resonant pulses, the stored area for sudden ones.
    pub fn area(&self) -> f64 {
        match self.mode {
            PulseMode::Sudden => self.sudden_area,
            _ => 0.5 * self.rabi * self.tau,
        }
    }

    pub fn end_time(&self) -> f64 {
        self.t0 + self.tau
    }

    /// Same pulse with a different mode, keeping all other parameters.
    pub fn with_mode(&self, mode: PulseMode) -> Result<Self> {
        match mode {
            PulseMode::Sudden => Self::sudden(self.t0, self.area()),
            _ => Self::resonant(mode, self.rabi, self.t0, self.tau, self.phase),
        }
    }

    pub fn with_phase(&self, phase: f64) -> Result<Self> {
        Self::resonant(self.mode, self.rabi, self.t0, self.tau, phase)
    }

    pub fn with_t0(&self, t0: f64) -> Result<Self> {
        Self::resonant(self.mode, self.rabi, t0, self.tau, self.phase)
    }

    fn expect_mode(&self, expected: PulseMode) -> Result<()> {
        if self.mode != expected {
            return Err(Error::PulseModeMismatch {
                expected: expected.name(),
                actual: self.mode.name(),
            });
        }
        Ok(())
    }
}

/// Initial phase `φ₀ = φ + ω_pk t₀` (wrapped) that makes a pulse started at
/// `t0` act like a reference-locked one with phase `phi`.
pub fn corrected_initial_phase(sys: &TwoLevelSystem, phi: f64, t0: f64) -> f64 {
    wrap_phase(phi + sys.omega_pk() * t0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwoLevelState {
    pub c_k: Amplitude,
    pub c_p: Amplitude,
}

impl TwoLevelState {
    pub fn new(c_k: Amplitude, c_p: Amplitude) -> Self {
        TwoLevelState { c_k, c_p }
    }

    /// Population in `|k⟩` with its natural phase at time `t`, nothing in `|p⟩`.
    pub fn natural(sys: &TwoLevelSystem, modulus: f64, t: f64) -> Self {
        TwoLevelState {
            c_k: Complex64::from_polar(modulus, -sys.e_k * t),
            c_p: Complex64::new(0.0, 0.0),
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.c_k.norm_sqr() + self.c_p.norm_sqr()
    }

    pub fn max_diff(&self, other: &TwoLevelState) -> f64 {
        (self.c_k - other.c_k).norm().max((self.c_p - other.c_p).norm())
    }
}

/// Solution with `C_p(t₀) = 0` for the drive phase `θ(t) = ω_pk t + phi`.
fn closed_form(sys: &TwoLevelSystem, c_k0: Amplitude, t0: f64, tau: f64, alpha: f64, phi: f64) -> TwoLevelState {
    let c_k = c_k0 * alpha.cos() * Complex64::from_polar(1.0, -sys.e_k * tau);
    let c_p = c_k0 * alpha.sin() * Complex64::from_polar(1.0, FRAC_PI_2 - phi + sys.e_k * t0 - sys.e_p * (t0 + tau));
    TwoLevelState { c_k, c_p }
}

fn has_upper_population(init: &TwoLevelState) -> bool {
    init.c_p.norm() > ZERO_AMPLITUDE
}

fn default_step(pulse: &PulseSpec) -> f64 {
    pulse.tau / DEFAULT_ODE_STEPS as f64
}

/// Reference-locked pulse.
///
/// From `C_k(t₀) = |C_k| e^{-iE_k t₀}`, `C_p(t₀) = 0` the result is
/// `C_k = |C_k| cos α e^{-iE_k(t₀+τ)}` and
/// `C_p = |C_k| sin α e^{i(π/2-φ)} e^{-iE_p(t₀+τ)}`: both levels end up with
/// their natural phases. An initial `C_p ≠ 0` is integrated numerically.
pub fn evolve_coherent(sys: &TwoLevelSystem, pulse: &PulseSpec, init: &TwoLevelState) -> Result<TwoLevelState> {
    pulse.expect_mode(PulseMode::Coherent)?;
    if pulse.tau == 0.0 {
        return Ok(*init);
    }
    if has_upper_population(init) {
        return integrate_ode(sys, pulse, init, default_step(pulse));
    }
    Ok(closed_form(
        sys,
        init.c_k,
        pulse.t0,
        pulse.tau,
        pulse.area(),
        pulse.phase,
    ))
}

/// Pulse whose phase `φ₀` is referred to its own start time.
///
/// The newborn amplitude is `C_p = |C_k| sin α e^{i(π/2-φ₀)} e^{-iE_k t₀ - iE_p τ}`,
/// carrying the history of its parent instead of the natural phase.
pub fn evolve_noncoherent(sys: &TwoLevelSystem, pulse: &PulseSpec, init: &TwoLevelState) -> Result<TwoLevelState> {
    pulse.expect_mode(PulseMode::NonCoherent)?;
    Ok(noncoherent(sys, pulse, pulse.phase, init))
}

fn noncoherent(sys: &TwoLevelSystem, pulse: &PulseSpec, phi0: f64, init: &TwoLevelState) -> TwoLevelState {
    if pulse.tau == 0.0 {
        return *init;
    }
    if has_upper_population(init) {
        let step = default_step(pulse);
        return ode(sys, pulse, |t| sys.omega_pk() * (t - pulse.t0) + phi0, init, step);
    }
    let alpha = pulse.area();
    let c_k = init.c_k * alpha.cos() * Complex64::from_polar(1.0, -sys.e_k * pulse.tau);
    let c_p = init.c_k * alpha.sin() * Complex64::from_polar(1.0, FRAC_PI_2 - phi0 - sys.e_p * pulse.tau);
    TwoLevelState { c_k, c_p }
}

/// Non-coherent pulse whose initial phase is tied to its start time,
/// `φ₀ = φ + ω_pk t₀`, with `pulse.phase` read as the desired `φ`.
pub fn evolve_phase_corrected(sys: &TwoLevelSystem, pulse: &PulseSpec, init: &TwoLevelState) -> Result<TwoLevelState> {
    pulse.expect_mode(PulseMode::PhaseCorrected)?;
    let phi0 = corrected_initial_phase(sys, pulse.phase, pulse.t0);
    Ok(noncoherent(sys, pulse, phi0, init))
}

/// Instantaneous rotation `C_k ← C_k cos α + i C_p sin α`,
/// `C_p ← i C_k sin α + C_p cos α`.
///
/// With `C_p = 0` the newborn amplitude is `i C_k sin α`: it inherits the
/// parent's phase plus π/2, not its own natural phase.
pub fn evolve_sudden(init: &TwoLevelState, area: f64) -> TwoLevelState {
    let (s, c) = area.sin_cos();
    let i = Complex64::new(0.0, 1.0);
    TwoLevelState {
        c_k: init.c_k * c + i * init.c_p * s,
        c_p: i * init.c_k * s + init.c_p * c,
    }
}

/// Numerical integration of the two coupled amplitude equations over the
/// pulse, with step at most `step`.
pub fn integrate_ode(
    sys: &TwoLevelSystem,
    pulse: &PulseSpec,
    init: &TwoLevelState,
    step: f64,
) -> Result<TwoLevelState> {
    if !step.is_finite() || step <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "integration step must be positive, got {step}"
        )));
    }
    let omega = sys.omega_pk();
    let t0 = pulse.t0;
    let phase = pulse.phase;
    let out = match pulse.mode {
        PulseMode::Coherent => ode(sys, pulse, |t| omega * t + phase, init, step),
        PulseMode::NonCoherent => ode(sys, pulse, |t| omega * (t - t0) + phase, init, step),
        PulseMode::PhaseCorrected => {
            let phi0 = corrected_initial_phase(sys, phase, t0);
            ode(sys, pulse, |t| omega * (t - t0) + phi0, init, step)
        }
        PulseMode::Sudden => {
            return Err(Error::InvalidArgument(
                "sudden pulses have no finite-duration dynamics".into(),
            ))
        }
    };
    Ok(out)
}

fn ode(
    sys: &TwoLevelSystem,
    pulse: &PulseSpec,
    drive_phase: impl Fn(f64) -> f64,
    init: &TwoLevelState,
    step: f64,
) -> TwoLevelState {
    if pulse.tau == 0.0 {
        return *init;
    }
    let steps = (pulse.tau / step).ceil().max(1.0) as usize;
    let half_rabi = 0.5 * pulse.rabi;
    let minus_i = Complex64::new(0.0, -1.0);
    let rhs = |t: f64, y: &[Complex64; 2]| {
        let drive = Complex64::from_polar(half_rabi, drive_phase(t));
        [
            minus_i * (sys.e_k * y[0] - drive * y[1]),
            minus_i * (sys.e_p * y[1] - drive.conj() * y[0]),
        ]
    };
    let [c_k, c_p] = rk4::rk4_fixed(rhs, pulse.t0, [init.c_k, init.c_p], pulse.end_time(), steps);
    TwoLevelState { c_k, c_p }
}

/// Dispatches on the pulse mode.
pub fn apply_pulse(sys: &TwoLevelSystem, pulse: &PulseSpec, init: &TwoLevelState) -> Result<TwoLevelState> {
    match pulse.mode {
        PulseMode::Coherent => evolve_coherent(sys, pulse, init),
        PulseMode::NonCoherent => evolve_noncoherent(sys, pulse, init),
        PulseMode::PhaseCorrected => evolve_phase_corrected(sys, pulse, init),
        PulseMode::Sudden => Ok(evolve_sudden(init, pulse.area())),
    }
}

/// `arg(a) - arg(b)` wrapped to `(-π, π]`.
pub fn phase_difference(a: Amplitude, b: Amplitude) -> f64 {
    wrap_phase(a.arg() - b.arg())
}
