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

//! Classic fixed-step fourth-order Runge-Kutta over small complex systems.

use num_complex::Complex64;

/// Integrates `dy/dt = f(t, y)` from `t0` to `t_end` in `steps` equal steps.
pub fn rk4_fixed<const N: usize, F>(f: F, t0: f64, y0: [Complex64; N], t_end: f64, steps: usize) -> [Complex64; N]
where
    F: Fn(f64, &[Complex64; N]) -> [Complex64; N],
{
    if steps == 0 {
        return y0;
    }
    let h = (t_end - t0) / steps as f64;
    let mut y = y0;
    for i in 0..steps {
        // Recompute t from the index so it does not drift.
        let t = t0 + i as f64 * h;
        let k1 = f(t, &y);
        let k2 = f(t + 0.5 * h, &axpy(&y, 0.5 * h, &k1));
        let k3 = f(t + 0.5 * h, &axpy(&y, 0.5 * h, &k2));
        let k4 = f(t + h, &axpy(&y, h, &k3));
        for j in 0..N {
            y[j] += (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]) * (h / 6.0);
        }
    }
    y
}

fn axpy<const N: usize>(y: &[Complex64; N], a: f64, k: &[Complex64; N]) -> [Complex64; N] {
    let mut out = *y;
    for j in 0..N {
        out[j] += k[j] * a;
    }
    out
}
