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

//! Experiments as TOML files, and a parallel sweep over seeds.
//!
//! ```bash
//! cargo run -p shorphase --example config_sweep
//! ```

use shorphase::{sweep, ExperimentConfig, RunStatus};

const CONFIG: &str = r#"
mode = "free-evolution"
tau1 = 0.3
tau2 = 0.3
qubit_frequencies = [1.0, 2.3, 3.7, 5.1]
retry_cap = 16
"#;

fn main() -> shorphase::Result<()> {
    let base = ExperimentConfig::from_toml_str(CONFIG)?;
    print!("resolved config:\n{}", base.to_toml_string());

    let grid: Vec<_> = (0..200).map(|seed| base.clone().with_seed(seed)).collect();
    let reports = sweep(&grid)?;
    let mut counts = std::collections::BTreeMap::new();
    for report in reports.iter().flatten() {
        *counts.entry(format!("{:?}", report.status)).or_insert(0) += 1;
    }
    println!("\noutcomes over {} seeds: {counts:?}", grid.len());
    let factored = reports
        .iter()
        .flatten()
        .filter(|r| matches!(r.status, RunStatus::Factored))
        .count();
    println!("success rate {:.3}", factored as f64 / grid.len() as f64);
    Ok(())
}
