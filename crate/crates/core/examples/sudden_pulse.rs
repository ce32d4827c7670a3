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

//! A sudden non-resonant pulse hands the parent's phase to the new state.
//!
//! ```bash
//! cargo run -p shorphase --example sudden_pulse
//! ```

use std::f64::consts::FRAC_PI_2;

use shorphase::pulses::evolve_sudden;
use shorphase::statevec::wrap_phase;
use shorphase::{TwoLevelState, TwoLevelSystem};

fn main() -> shorphase::Result<()> {
    let sys = TwoLevelSystem::new(1.0, 3.0)?;
    for t0 in [0.0, 0.4, 1.3] {
        let init = TwoLevelState::natural(&sys, 1.0, t0);
        let out = evolve_sudden(&init, FRAC_PI_2);
        println!(
            "t0 = {t0:.1}: arg C_p = {:+.6}, parent + π/2 = {:+.6}, natural -E_p t0 = {:+.6}",
            out.c_p.arg(),
            wrap_phase(-sys.e_k * t0 + FRAC_PI_2),
            wrap_phase(-sys.e_p * t0)
        );
    }
    Ok(())
}
