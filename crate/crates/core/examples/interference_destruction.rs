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

//! Free evolution between the transformations spoils the interference.
//!
//! Scans equal delays `τ₁ = τ₂ = τ` with the default spectrum and compares
//! the leaked amplitude `|amp(1,1)|` with `½|sin(Δ₁/2)|`.
//!
//! ```bash
//! cargo run -p shorphase --example interference_destruction
//! ```

use shorphase::transforms::run_pipeline_with;
use shorphase::{check_condition, DelaySchedule, EnergySpectrum, PipelineMode};

fn main() -> shorphase::Result<()> {
    let spectrum = EnergySpectrum::default();
    println!(
        "{:>6} {:>10} {:>10} {:>14} {:>14} {:>8} {:>8}",
        "tau", "delta1", "delta2", "|amp(1,1)|", "½|sin(d1/2)|", "P(x=1)", "ok"
    );
    for i in 0..=12 {
        let tau = 0.1 * i as f64;
        let delays = DelaySchedule::new(tau, tau)?;
        let state = run_pipeline_with(PipelineMode::FreeEvolution, &spectrum, &delays)?;
        let p = state.measure_x_distribution()?;
        let r = check_condition(&spectrum, &delays, 1e-9);
        println!(
            "{:>6.2} {:>10.5} {:>10.5} {:>14.10} {:>14.10} {:>8.5} {:>8}",
            tau,
            r.delta1,
            r.delta2,
            state.amplitude_of(1, 1)?.norm(),
            0.5 * (r.delta1 / 2.0).sin().abs(),
            p.probability(1),
            r.satisfied
        );
    }

    // The additive spectrum depends on τ₁+τ₂ only through ω₃, so a full
    // period 2π/ω₃ brings the interference back.
    let omega3 = spectrum.energy(2, 0) - spectrum.energy(0, 0);
    let tau = std::f64::consts::PI / omega3;
    let delays = DelaySchedule::new(tau, tau)?;
    let p = run_pipeline_with(PipelineMode::FreeEvolution, &spectrum, &delays)?.measure_x_distribution()?;
    println!(
        "\nτ₁ = τ₂ = π/ω₃ = {tau:.6}: satisfied = {}, P(x) = {:?}",
        check_condition(&spectrum, &delays, 1e-9).satisfied,
        p.0
    );
    Ok(())
}
