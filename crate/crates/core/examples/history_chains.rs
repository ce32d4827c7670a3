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

//! The amplitude of |0,1⟩ is the sum of two terms with different histories:
//! one generated from |0,0⟩, the other from |2,0⟩.
//!
//! ```bash
//! cargo run -p shorphase --example history_chains
//! ```

use shorphase::transforms::{history_chain, run_pipeline_with};
use shorphase::{DelaySchedule, EnergySpectrum, PipelineMode};

fn main() -> shorphase::Result<()> {
    let spectrum = EnergySpectrum::default();
    let delays = DelaySchedule::new(0.4, 0.25)?;

    let via_00 = history_chain(0, &spectrum, &delays)?.amplitude_of(0, 1)?;
    let via_20 = history_chain(2, &spectrum, &delays)?.amplitude_of(0, 1)?;
    let full = run_pipeline_with(PipelineMode::FreeEvolution, &spectrum, &delays)?.amplitude_of(0, 1)?;

    println!(
        "|0,0> -> |0,0> -> |0,1> -> |0,1>   contributes {via_00:.6}  (phase {:+.6})",
        via_00.arg()
    );
    println!(
        "|0,0> -> |2,0> -> |2,1> -> |0,1>   contributes {via_20:.6}  (phase {:+.6})",
        via_20.arg()
    );
    println!("sum {:.6}   full pipeline {full:.6}", via_00 + via_20);
    println!("|amp(0,1)| = {:.6} instead of 0.5", full.norm());
    Ok(())
}
