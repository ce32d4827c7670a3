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

use thiserror::Error;

/// Errors produced by the simulator.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("state is not normalized (norm = {0})")]
    Unnormalized(f64),
    #[error("basis index ({m}, {n}) out of range, both must lie in 0..=3")]
    IndexOutOfRange { m: usize, n: usize },
    #[error("register value {0} out of range 0..=3")]
    ValueOutOfRange(usize),
    #[error("modular exponentiation is only defined on the y = 0 slice, found weight {weight:e} on |{m},{n}>")]
    OutsideModExpDomain { m: usize, n: usize, weight: f64 },
    #[error("pulse mode mismatch: expected {expected}, got {actual}")]
    PulseModeMismatch {
        expected: &'static str,
        actual: &'static str,
    },
    #[error("period extraction failed: measured x = {x} does not divide D = {d}")]
    ExtractionFailure { x: usize, d: usize },
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
