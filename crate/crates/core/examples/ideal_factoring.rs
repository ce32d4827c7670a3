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

//! Factor 4 with instantaneous transformations and no delays.
//!
//! ```bash
//! cargo run -p shorphase --example ideal_factoring
//! ```

use shorphase::{run_experiment, ExperimentConfig};

fn main() -> shorphase::Result<()> {
    let config = ExperimentConfig::default();
    let report = run_experiment(&config)?;

    println!("final state (nonzero amplitudes):");
    for label in shorphase::BasisLabel::all() {
        let a = report.final_state.amplitude(label);
        if a.norm() > 1e-12 {
            println!("  |{},{}>  {:+.6} {:+.6}i", label.m, label.n, a.re, a.im);
        }
    }
    println!("P(x) = {:?}", report.x_distribution.0);
    println!(
        "measured x = {} after {} draw(s), period = {:?}, factor = {:?}",
        report.measured_x, report.attempts, report.period, report.factor
    );
    Ok(())
}
