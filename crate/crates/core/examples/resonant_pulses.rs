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

//! Coherent, non-coherent and phase-corrected resonant pulses on one
//! transition, checked against direct integration of the amplitude equations.
//!
//! ```bash
//! cargo run -p shorphase --example resonant_pulses
//! ```

use std::f64::consts::FRAC_PI_2;

use shorphase::pulses::{apply_pulse, corrected_initial_phase, integrate_ode, phase_difference};
use shorphase::statevec::wrap_phase;
use shorphase::{PulseMode, PulseSpec, TwoLevelState, TwoLevelSystem};

fn main() -> shorphase::Result<()> {
    let sys = TwoLevelSystem::new(1.0, 3.0)?;
    let (t0, tau) = (0.5, 0.2);
    let init = TwoLevelState::natural(&sys, 1.0, t0);
    let natural_p = wrap_phase(-sys.e_p * (t0 + tau));
    println!(
        "ω_pk = {}, natural phase of |p> at pulse end = {natural_p:+.9}",
        sys.omega_pk()
    );

    let coherent = PulseSpec::resonant_with_area(PulseMode::Coherent, FRAC_PI_2, t0, tau, FRAC_PI_2)?;
    let reference = apply_pulse(&sys, &coherent, &init)?;
    for mode in [PulseMode::Coherent, PulseMode::NonCoherent, PulseMode::PhaseCorrected] {
        let pulse = coherent.with_mode(mode)?;
        let out = apply_pulse(&sys, &pulse, &init)?;
        let ode = integrate_ode(&sys, &pulse, &init, tau / 1000.0)?;
        println!(
            "{:>16}: |C_p| = {:.9}, arg C_p = {:+.9}, error vs coherent = {:+.9}, |closed - RK4| = {:.2e}",
            mode.name(),
            out.c_p.norm(),
            out.c_p.arg(),
            phase_difference(out.c_p, reference.c_p),
            out.max_diff(&ode)
        );
    }

    // A phase-corrected pulse fired late by δt₀ picks up ω_pk δt₀.
    let phi0 = corrected_initial_phase(&sys, FRAC_PI_2, t0);
    println!("\ncorrected φ₀ = {phi0:+.9}");
    for dt0 in [0.0, 1e-3, 1e-2, 1e-1] {
        let late = PulseSpec::resonant_with_area(PulseMode::NonCoherent, FRAC_PI_2, t0 + dt0, tau, phi0)?;
        let start = TwoLevelState::natural(&sys, 1.0, t0 + dt0);
        let got = apply_pulse(&sys, &late, &start)?;
        let want = apply_pulse(
            &sys,
            &late.with_mode(PulseMode::Coherent)?.with_phase(FRAC_PI_2)?,
            &start,
        )?;
        println!(
            "δt₀ = {dt0:<6} phase error = {:+.9} (ω_pk δt₀ = {:+.9})",
            phase_difference(got.c_p, want.c_p),
            sys.omega_pk() * dt0
        );
    }
    Ok(())
}
