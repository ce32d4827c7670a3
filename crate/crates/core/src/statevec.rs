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

//! Sixteen-amplitude register over the basis |m,n⟩ of two 2-qubit registers.
//!
//! The left register holds `x` (value `m`), the right register holds `y`
//! (value `n`). Amplitudes are stored at index `4m + n`. Bit `i` of that index
//! is qubit `i`, so qubits 0 and 1 are the `y` bits `n₀, n₁` and qubits 2 and 3
//! are the `x` bits `m₀, m₁`.

use num_complex::Complex64;
use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A complex probability amplitude.
pub type Amplitude = Complex64;

/// Dimension of the register (2 + 2 qubits).
pub const DIM: usize = 16;

/// Number of values each 2-qubit register can hold.
pub const REGISTER_STATES: usize = 4;

/// Tolerance on the norm accepted by measurement.
pub const NORM_TOLERANCE: f64 = 1e-9;

/// Wraps a phase into `(-π, π]`.
pub fn wrap_phase(phase: f64) -> f64 {
    use std::f64::consts::{PI, TAU};
    let r = phase.rem_euclid(TAU);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

/// Basis label `|m,n⟩` in decimal notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisLabel {
    pub m: usize,
    pub n: usize,
}

impl BasisLabel {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m >= REGISTER_STATES || n >= REGISTER_STATES {
            return Err(Error::IndexOutOfRange { m, n });
        }
        Ok(BasisLabel { m, n })
    }

    /// Builds the label from individual qubit values, `m = m₀ + 2m₁` and
    /// `n = n₀ + 2n₁`.
    pub fn from_bits(m1: bool, m0: bool, n1: bool, n0: bool) -> Self {
        BasisLabel {
            m: m0 as usize + 2 * m1 as usize,
            n: n0 as usize + 2 * n1 as usize,
        }
    }

    /// Qubit values `(m₁, m₀, n₁, n₀)`.
    pub fn bits(self) -> (bool, bool, bool, bool) {
        (self.m & 2 != 0, self.m & 1 != 0, self.n & 2 != 0, self.n & 1 != 0)
    }

    pub fn index(self) -> usize {
        REGISTER_STATES * self.m + self.n
    }

    pub fn from_index(index: usize) -> Result<Self> {
        if index >= DIM {
            return Err(Error::InvalidArgument(format!("basis index {index} out of range")));
        }
        Ok(BasisLabel {
            m: index / REGISTER_STATES,
            n: index % REGISTER_STATES,
        })
    }

    /// All sixteen labels in storage order.
    pub fn all() -> impl Iterator<Item = BasisLabel> {
        (0..DIM).map(|i| BasisLabel {
            m: i / REGISTER_STATES,
            n: i % REGISTER_STATES,
        })
    }
}

/// Energies `E_{mn}` of the sixteen basis states (ħ = 1, angular frequency units).
///
/// Serialized as a flat array of 16 numbers in index order `4m + n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct EnergySpectrum {
    energies: [f64; DIM],
}

/// Qubit frequencies of the default additive spectrum, indexed by qubit.
pub const DEFAULT_QUBIT_FREQUENCIES: [f64; 4] = [1.0, 2.3, 3.7, 5.1];

impl EnergySpectrum {
    pub fn from_table(energies: [f64; DIM]) -> Result<Self> {
        if let Some(i) = energies.iter().position(|e| !e.is_finite()) {
            return Err(Error::InvalidArgument(format!("energy at index {i} is not finite")));
        }
        Ok(EnergySpectrum { energies })
    }

    /// Non-interacting qubits: `E = Σᵢ ωᵢ·bitᵢ` with bit `i` of the index `4m + n`.
    pub fn additive(qubit_frequencies: [f64; 4]) -> Result<Self> {
        let mut energies = [0.0; DIM];
        for (index, e) in energies.iter_mut().enumerate() {
            *e = (0..4)
                .filter(|bit| index >> bit & 1 == 1)
                .map(|bit| qubit_frequencies[bit])
                .sum();
        }
        Self::from_table(energies)
    }

    pub fn zero() -> Self {
        EnergySpectrum { energies: [0.0; DIM] }
    }

    pub fn energy(&self, m: usize, n: usize) -> f64 {
        self.energies[REGISTER_STATES * m + n]
    }

    pub fn energy_of(&self, label: BasisLabel) -> f64 {
        self.energies[label.index()]
    }

    pub fn energies(&self) -> &[f64; DIM] {
        &self.energies
    }
}

impl Default for EnergySpectrum {
    fn default() -> Self {
        Self::additive(DEFAULT_QUBIT_FREQUENCIES).expect("default frequencies are finite")
    }
}

impl TryFrom<Vec<f64>> for EnergySpectrum {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        let energies: [f64; DIM] = v.try_into().map_err(|v: Vec<f64>| {
            Error::InvalidArgument(format!("energy table needs {DIM} entries, got {}", v.len()))
        })?;
        Self::from_table(energies)
    }
}

impl From<EnergySpectrum> for Vec<f64> {
    fn from(s: EnergySpectrum) -> Self {
        s.energies.to_vec()
    }
}

/// Probabilities of the four `x`-register outcomes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct XDistribution(pub [f64; REGISTER_STATES]);

/// Outcome distribution of the textbook Shor run for N = 4.
pub const IDEAL_X_DISTRIBUTION: XDistribution = XDistribution([0.5, 0.0, 0.5, 0.0]);

impl XDistribution {
    pub fn probability(&self, x: usize) -> f64 {
        self.0[x]
    }

    pub fn max_abs_diff(&self, other: &XDistribution) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Whether every probability lies within `tol` of the ideal `{0: ½, 2: ½}`.
    pub fn is_ideal(&self, tol: f64) -> bool {
        self.max_abs_diff(&IDEAL_X_DISTRIBUTION) <= tol
    }
}

/// State of the four-qubit register.
///
/// Serialized as an array of 16 `[re, im]` pairs in index order `4m + n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<[f64; 2]>", into = "Vec<[f64; 2]>")]
pub struct StateVector {
    amps: [Amplitude; DIM],
}

impl StateVector {
    /// All qubits in their ground state, `|0,0⟩`.
    pub fn init_ground() -> Self {
        let mut amps = [Complex64::new(0.0, 0.0); DIM];
        amps[0] = Complex64::new(1.0, 0.0);
        StateVector { amps }
    }

    pub fn zero() -> Self {
        StateVector {
            amps: [Complex64::new(0.0, 0.0); DIM],
        }
    }

    /// Wraps raw amplitudes. The state need not be normalized; truncated
    /// superpositions are legitimate inputs to the transformations.
    pub fn from_amplitudes(amps: [Amplitude; DIM]) -> Result<Self> {
        if let Some(i) = amps.iter().position(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::InvalidArgument(format!("amplitude at index {i} is not finite")));
        }
        Ok(StateVector { amps })
    }

    /// `|m,n⟩` with unit amplitude.
    pub fn basis(label: BasisLabel) -> Self {
        let mut s = Self::zero();
        s.amps[label.index()] = Complex64::new(1.0, 0.0);
        s
    }

    pub fn amplitudes(&self) -> &[Amplitude; DIM] {
        &self.amps
    }

    pub fn amplitude(&self, label: BasisLabel) -> Amplitude {
        self.amps[label.index()]
    }

    pub fn amplitude_of(&self, m: usize, n: usize) -> Result<Amplitude> {
        Ok(self.amplitude(BasisLabel::new(m, n)?))
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Multiplies each amplitude of `|m,n⟩` by `exp(-i E_{mn} dt)`.
    pub fn free_evolve(&self, spectrum: &EnergySpectrum, dt: f64) -> Result<Self> {
        if !dt.is_finite() || dt < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "evolution time must be finite and >= 0, got {dt}"
            )));
        }
        let mut amps = self.amps;
        for (a, e) in amps.iter_mut().zip(spectrum.energies.iter()) {
            *a *= Complex64::from_polar(1.0, -e * dt);
        }
        Ok(StateVector { amps })
    }

    /// Applies `exp(-i E_{mn} t)` to each amplitude without time validation.
    pub(crate) fn with_natural_phases(&self, spectrum: &EnergySpectrum, t: f64) -> Self {
        let mut amps = self.amps;
        for (a, e) in amps.iter_mut().zip(spectrum.energies.iter()) {
            *a *= Complex64::from_polar(1.0, -e * t);
        }
        StateVector { amps }
    }

    fn check_normalized(&self) -> Result<()> {
        let norm = self.norm();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::Unnormalized(norm));
        }
        Ok(())
    }

    /// `P(x = m) = Σₙ |amp(m,n)|²`.
    pub fn measure_x_distribution(&self) -> Result<XDistribution> {
        self.check_normalized()?;
        let mut p = [0.0; REGISTER_STATES];
        for label in BasisLabel::all() {
            p[label.m] += self.amplitude(label).norm_sqr();
        }
        Ok(XDistribution(p))
    }

    /// Draws an `x` outcome from a ChaCha8 stream seeded with `seed`.
    pub fn sample_x(&self, seed: u64) -> Result<usize> {
        let dist = self.measure_x_distribution()?;
        let weights = WeightedIndex::new(dist.0)
            .map_err(|e| Error::InvalidArgument(format!("cannot sample distribution: {e}")))?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Ok(weights.sample(&mut rng))
    }

    /// Whether `self ≈ e^{iθ} other` within `tol` in the Euclidean norm, with θ
    /// taken from the largest component of the overlap.
    pub fn equal_up_to_global_phase(&self, other: &StateVector, tol: f64) -> bool {
        let overlap = self
            .amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| a * b.conj())
            .max_by(|x, y| x.norm_sqr().total_cmp(&y.norm_sqr()))
            .unwrap_or_default();
        let rot = if overlap.norm() > 0.0 {
            Complex64::from_polar(1.0, overlap.arg())
        } else {
            Complex64::new(1.0, 0.0)
        };
        self.distance(&other.scaled(rot)) <= tol
    }

    /// Euclidean distance between amplitude vectors.
    pub fn distance(&self, other: &StateVector) -> f64 {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Largest componentwise modulus of the difference.
    pub fn max_component_diff(&self, other: &StateVector) -> f64 {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        let mut amps = self.amps;
        amps.iter_mut().for_each(|a| *a *= factor);
        StateVector { amps }
    }

    /// Keeps only the amplitudes selected by `keep`, zeroing the rest.
    pub fn restricted(&self, keep: impl Fn(BasisLabel) -> bool) -> Self {
        let mut amps = self.amps;
        for label in BasisLabel::all() {
            if !keep(label) {
                amps[label.index()] = Complex64::new(0.0, 0.0);
            }
        }
        StateVector { amps }
    }
}

impl std::ops::Add for StateVector {
    type Output = StateVector;

    fn add(mut self, rhs: StateVector) -> StateVector {
        self.amps.iter_mut().zip(rhs.amps.iter()).for_each(|(a, b)| *a += b);
        self
    }
}

impl TryFrom<Vec<[f64; 2]>> for StateVector {
    type Error = Error;

    fn try_from(v: Vec<[f64; 2]>) -> Result<Self> {
        if v.len() != DIM {
            return Err(Error::InvalidArgument(format!(
                "state needs {DIM} amplitudes, got {}",
                v.len()
            )));
        }
        let mut amps = [Complex64::new(0.0, 0.0); DIM];
        for (a, [re, im]) in amps.iter_mut().zip(v) {
            *a = Complex64::new(re, im);
        }
        Self::from_amplitudes(amps)
    }
}

impl From<StateVector> for Vec<[f64; 2]> {
    fn from(s: StateVector) -> Self {
        s.amps.iter().map(|a| [a.re, a.im]).collect()
    }
}
