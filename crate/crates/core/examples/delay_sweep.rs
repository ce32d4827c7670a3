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

//! Delay grid with an integer spectrum: the interference condition and the
//! measured distribution agree point by point. Writes CSV to stdout.
//!
//! ```bash
//! cargo run -p shorphase --example delay_sweep > grid.csv
//! ```

use shorphase::cli::rows_csv;
use shorphase::shor::{delay_grid, Axis};
use shorphase::EnergySpectrum;

fn main() -> shorphase::Result<()> {
    let spectrum = EnergySpectrum::additive([1.0, 2.0, 3.0, 5.0])?;
    let axis = Axis::new(0.0, std::f64::consts::TAU, 17)?;
    let rows = delay_grid(&spectrum, &axis, &axis, 1e-9)?;
    let agree = rows
        .iter()
        .filter(|r| r.satisfied == r.distribution().is_ideal(1e-9))
        .count();
    eprintln!(
        "{} rows, {} satisfied, condition agrees with distribution on {agree}",
        rows.len(),
        rows.iter().filter(|r| r.satisfied).count()
    );
    print!("{}", rows_csv(&rows)?);
    Ok(())
}
