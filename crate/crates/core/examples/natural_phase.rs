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

//! With natural phases the outcome no longer depends on delays or spectrum.
//!
//! ```bash
//! cargo run -p shorphase --example natural_phase
//! ```

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shorphase::{run_experiment, EnergySpectrum, ExperimentConfig, PipelineMode};

fn main() -> shorphase::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2026);
    println!(
        "{:>8} {:>8} {:>28} {:>28}",
        "tau1", "tau2", "P(x) free evolution", "P(x) natural phase"
    );
    for _ in 0..8 {
        let spectrum = EnergySpectrum::from_table(std::array::from_fn(|_| rng.random_range(-5.0..5.0)))?;
        let (t1, t2) = (rng.random_range(0.0..10.0), rng.random_range(0.0..10.0));
        let base = ExperimentConfig::default()
            .with_spectrum(spectrum)
            .with_delays(t1, t2)?;
        let free = run_experiment(&base)?;
        let natural = run_experiment(&base.with_mode(PipelineMode::NaturalPhase))?;
        let fmt = |p: [f64; 4]| format!("[{:.3}, {:.3}, {:.3}, {:.3}]", p[0], p[1], p[2], p[3]);
        println!(
            "{t1:>8.3} {t2:>8.3} {:>28} {:>28}   factor: {:?} vs {:?}",
            fmt(free.x_distribution.0),
            fmt(natural.x_distribution.0),
            free.factor,
            natural.factor
        );
    }
    Ok(())
}
