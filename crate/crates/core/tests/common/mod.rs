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

//! Oracles written straight from the closed-form expressions, independent of
//! the simulator's transformation code.

#![allow(dead_code)]

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shorphase::{DelaySchedule, EnergySpectrum, StateVector};
use std::f64::consts::FRAC_PI_2;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn state_from(terms: &[((usize, usize), Complex64)]) -> StateVector {
    let mut amps = [c(0.0, 0.0); 16];
    for &((m, n), a) in terms {
        amps[4 * m + n] += a;
    }
    StateVector::from_amplitudes(amps).unwrap()
}

/// ½(|0,1⟩ + |2,1⟩ + |0,3⟩ − |2,3⟩)
pub fn ideal_final_state() -> StateVector {
    state_from(&[
        ((0, 1), c(0.5, 0.0)),
        ((2, 1), c(0.5, 0.0)),
        ((0, 3), c(0.5, 0.0)),
        ((2, 3), c(-0.5, 0.0)),
    ])
}

/// History phase factor of the chain starting from |m,0⟩.
pub fn chain_phase(s: &EnergySpectrum, d: &DelaySchedule, m: usize) -> Complex64 {
    let y = [1, 3, 1, 3][m];
    Complex64::from_polar(1.0, -s.energy(m, 0) * d.tau1() - s.energy(m, y) * d.tau2())
}

/// Final state after the DFT, assembled term by term from the four
/// bracketed superpositions and their history phases.
pub fn free_evolution_final_state(s: &EnergySpectrum, d: &DelaySchedule) -> StateVector {
    let q = 0.25;
    let i = c(0.0, 1.0);
    let one = c(1.0, 0.0);
    let brackets: [(usize, [Complex64; 4]); 4] = [
        (1, [one, one, one, one]),
        (3, [one, i, -one, -i]),
        (1, [one, -one, one, -one]),
        (3, [one, -i, -one, i]),
    ];
    let mut terms = Vec::new();
    for (m, (n, coeffs)) in brackets.iter().enumerate() {
        let ph = chain_phase(s, d, m);
        for (k, a) in coeffs.iter().enumerate() {
            terms.push(((k, *n), a * ph * q));
        }
    }
    state_from(&terms)
}

pub fn random_spectrum(rng: &mut ChaCha8Rng) -> EnergySpectrum {
    EnergySpectrum::from_table(std::array::from_fn(|_| rng.random_range(-10.0..10.0))).unwrap()
}

pub fn random_normalized_state(rng: &mut ChaCha8Rng) -> StateVector {
    let amps: [Complex64; 16] = std::array::from_fn(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
    let s = StateVector::from_amplitudes(amps).unwrap();
    s.scaled(c(1.0 / s.norm(), 0.0))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Reference-locked pulse end state from `|C_k| e^{-iE_k t₀}`, `C_p = 0`.
pub fn coherent_end(ck0: f64, e_k: f64, e_p: f64, t0: f64, tau: f64, alpha: f64, phi: f64) -> (Complex64, Complex64) {
    let t = t0 + tau;
    (
        Complex64::from_polar(ck0 * alpha.cos(), -e_k * t),
        Complex64::from_polar(ck0 * alpha.sin(), FRAC_PI_2 - phi - e_p * t),
    )
}

/// Pulse started at `t₀` with its own phase `φ₀`.
pub fn noncoherent_end(
    ck0: f64,
    e_k: f64,
    e_p: f64,
    t0: f64,
    tau: f64,
    alpha: f64,
    phi0: f64,
) -> (Complex64, Complex64) {
    (
        Complex64::from_polar(ck0 * alpha.cos(), -e_k * (t0 + tau)),
        Complex64::from_polar(ck0 * alpha.sin(), FRAC_PI_2 - phi0 - e_k * t0 - e_p * tau),
    )
}

/// Wrapped difference of two angles.
pub fn angle_diff(a: f64, b: f64) -> f64 {
    shorphase::statevec::wrap_phase(a - b)
}
