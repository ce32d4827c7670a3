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

//! Command-line front end. The binary only forwards `std::env::args` to
//! [`run_from_args`]; everything else lives here so it can be driven in tests.
//!
//! Exit codes: 0 success, 1 usage or config error, 2 no factor found.

use std::f64::consts::FRAC_PI_2;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::config::{ExperimentConfig, OutputFormat, RawConfig};
use crate::error::{Error, Result};
use crate::pulses::{self, PulseMode, PulseSpec, TwoLevelState, TwoLevelSystem};
use crate::shor::{self, Axis, ConditionResidual, GridRow, RunReport};
use crate::statevec::{wrap_phase, EnergySpectrum};
use crate::transforms::{DelaySchedule, PipelineMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NO_FACTOR: i32 = 2;

/// Column order of `sweep` CSV output.
pub const SWEEP_CSV_HEADER: [&str; 10] = [
    "tau1",
    "tau2",
    "delta1",
    "delta2",
    "satisfied",
    "p0",
    "p1",
    "p2",
    "p3",
    "amp11_mod",
];

/// Column order of `shor-demo` CSV output.
pub const REPORT_CSV_HEADER: [&str; 16] = [
    "mode",
    "tau1",
    "tau2",
    "seed",
    "delta1",
    "delta2",
    "satisfied",
    "p0",
    "p1",
    "p2",
    "p3",
    "measured_x",
    "attempts",
    "period",
    "factor",
    "status",
];

#[derive(Debug, Parser)]
#[command(
    name = "shorphase",
    version,
    about = "Phase-exact Shor-for-4 and resonant pulse simulator"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the factoring experiment and print its report.
    ShorDemo(ShorDemoArgs),
    /// Apply one pulse to a two-level system.
    Pulse(PulseArgs),
    /// Scan the free-evolution pipeline over a (tau1, tau2) grid.
    Sweep(SweepArgs),
    /// Print the interference residuals for a spectrum and delays.
    CheckCondition(CheckConditionArgs),
}

#[derive(Debug, Args, Default)]
pub struct SpectrumArgs {
    /// Additive spectrum: four comma-separated qubit frequencies.
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        conflicts_with = "energies"
    )]
    pub qubit_frequencies: Option<Vec<f64>>,
    /// Full spectrum: sixteen comma-separated energies in index order 4m+n.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub energies: Option<Vec<f64>>,
}

impl SpectrumArgs {
    fn into_raw(self, raw: &mut RawConfig) -> Result<()> {
        if let Some(w) = self.qubit_frequencies {
            let w: [f64; 4] = w
                .try_into()
                .map_err(|_| Error::Config("--qubit-frequencies needs exactly 4 values".into()))?;
            raw.qubit_frequencies = Some(w);
        }
        raw.energies = self.energies;
        Ok(())
    }

    fn resolve(self) -> Result<EnergySpectrum> {
        let mut raw = RawConfig::default();
        self.into_raw(&mut raw)?;
        raw.validate(OutputFormat::Json)?.spectrum()
    }
}

#[derive(Debug, Args, Default)]
pub struct ShorDemoArgs {
    /// TOML config file; flags override its values.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// free-evolution or natural-phase.
    #[arg(long)]
    pub mode: Option<PipelineMode>,
    #[arg(long, allow_negative_numbers = true)]
    pub tau1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub tau2: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub retry_cap: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    pub tolerance: Option<f64>,
    /// json or csv.
    #[arg(long)]
    pub format: Option<OutputFormat>,
    #[command(flatten)]
    pub spectrum: SpectrumArgs,
    /// Also write the resolved config to this file.
    #[arg(long)]
    pub write_config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PulseArgs {
    /// coherent, noncoherent, phase-corrected or sudden.
    #[arg(long, default_value = "coherent")]
    pub mode: PulseMode,
    /// Rabi frequency; mutually exclusive with --area.
    #[arg(long, conflicts_with = "area")]
    pub rabi: Option<f64>,
    /// Pulse area α = Ωτ/2 (default π/2).
    #[arg(long, allow_negative_numbers = true)]
    pub area: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub duration: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub t0: f64,
    /// φ for coherent and phase-corrected pulses, φ₀ for noncoherent ones.
    #[arg(long, default_value_t = FRAC_PI_2, allow_negative_numbers = true)]
    pub phase: f64,
    /// Energy of the initially populated level |k⟩.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub ek: f64,
    /// Energy of the target level |p⟩.
    #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
    pub ep: f64,
    /// Integrator step (default duration/1000).
    #[arg(long)]
    pub step: Option<f64>,
    #[arg(long)]
    pub format: Option<OutputFormat>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 0.0)]
    pub tau1_min: f64,
    #[arg(long, default_value_t = std::f64::consts::TAU)]
    pub tau1_max: f64,
    #[arg(long, default_value_t = 32)]
    pub n1: usize,
    #[arg(long, default_value_t = 0.0)]
    pub tau2_min: f64,
    #[arg(long, default_value_t = std::f64::consts::TAU)]
    pub tau2_max: f64,
    #[arg(long, default_value_t = 32)]
    pub n2: usize,
    #[arg(long, default_value_t = crate::config::DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    #[command(flatten)]
    pub spectrum: SpectrumArgs,
    /// Output file; the rows go to stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub format: Option<OutputFormat>,
}

#[derive(Debug, Args)]
pub struct CheckConditionArgs {
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub tau1: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub tau2: f64,
    #[arg(long, default_value_t = crate::config::DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    #[command(flatten)]
    pub spectrum: SpectrumArgs,
    #[arg(long)]
    pub format: Option<OutputFormat>,
}

/// Rounds to 12 significant digits.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            code
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::ShorDemo(a) => cmd_shor_demo(a),
        Command::Pulse(a) => cmd_pulse(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::CheckCondition(a) => cmd_check_condition(a),
    };
    match result {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return EXIT_USAGE;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn default_format(flag: Option<OutputFormat>) -> Result<OutputFormat> {
    match flag {
        Some(f) => Ok(f),
        None => OutputFormat::from_env(),
    }
}

/// Reads the config file (if any), applies flag overrides and validates.
pub fn resolve_demo_config(args: &mut ShorDemoArgs) -> Result<ExperimentConfig> {
    let env_format = OutputFormat::from_env()?;
    let (file_raw, src) = match &args.config {
        Some(path) => {
            let src = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            let raw = RawConfig::from_toml_str(&src).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            (raw, src)
        }
        None => (RawConfig::default(), String::new()),
    };
    let mut flags = RawConfig {
        mode: args.mode,
        tau1: args.tau1,
        tau2: args.tau2,
        seed: args.seed,
        retry_cap: args.retry_cap,
        tolerance: args.tolerance,
        output_format: args.format,
        ..RawConfig::default()
    };
    std::mem::take(&mut args.spectrum).into_raw(&mut flags)?;
    let merged = file_raw.merged_with(flags);
    let validated = match &args.config {
        Some(path) => merged
            .validate_against(&src, env_format)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display()))),
        None => merged.validate(env_format),
    };
    validated
}

pub fn cmd_shor_demo(mut args: ShorDemoArgs) -> Result<(String, i32)> {
    let config = resolve_demo_config(&mut args)?;
    if let Some(path) = &args.write_config {
        write_file(path, &config.to_toml_string())?;
    }
    let report = shor::run_experiment(&config)?;
    let text = match config.output_format {
        OutputFormat::Json => report_json(&report)?,
        OutputFormat::Csv => report_csv(&report)?,
    };
    let code = if report.factor.is_some() {
        EXIT_OK
    } else {
        EXIT_NO_FACTOR
    };
    Ok((text, code))
}

pub fn report_json(report: &RunReport) -> Result<String> {
    let mut s = serde_json::to_string_pretty(report).map_err(|e| Error::Config(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn report_csv(report: &RunReport) -> Result<String> {
    let c = &report.config_echo;
    let p = report.x_distribution.0;
    let opt = |v: Option<usize>| v.map(|v| v.to_string()).unwrap_or_default();
    let status = serde_json::to_value(report.status).map_err(|e| Error::Config(e.to_string()))?;
    let row = vec![
        c.mode.to_string(),
        c.delays.tau1().to_string(),
        c.delays.tau2().to_string(),
        c.seed.to_string(),
        sig12(report.residuals.delta1).to_string(),
        sig12(report.residuals.delta2).to_string(),
        report.residuals.satisfied.to_string(),
        sig12(p[0]).to_string(),
        sig12(p[1]).to_string(),
        sig12(p[2]).to_string(),
        sig12(p[3]).to_string(),
        report.measured_x.to_string(),
        report.attempts.to_string(),
        opt(report.period),
        opt(report.factor),
        status.as_str().unwrap_or_default().to_string(),
    ];
    csv_string(&REPORT_CSV_HEADER, std::iter::once(row))
}

fn csv_string<R: IntoIterator<Item = Vec<String>>>(header: &[&str], rows: R) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Config(e.to_string());
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Config(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))
}

/// Outcome of `shorphase pulse`, with phases wrapped to `(-π, π]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PulseReport {
    pub mode: &'static str,
    pub e_k: f64,
    pub e_p: f64,
    pub t0: f64,
    pub tau: f64,
    pub rabi: f64,
    pub area: f64,
    pub phase: f64,
    pub ck_modulus: f64,
    pub ck_phase: f64,
    pub cp_modulus: f64,
    pub cp_phase: f64,
    /// `-E_k (t₀+τ)` and `-E_p (t₀+τ)`, the natural phases at the pulse end.
    pub natural_phase_k: f64,
    pub natural_phase_p: f64,
    /// Largest amplitude difference between closed form and integrator.
    pub ode_discrepancy: Option<f64>,
    /// `arg C_p` minus the coherent pulse's `arg C_p` for the same parameters.
    pub phase_error: Option<f64>,
    /// `ω_pk t₀`, the expected phase error of a non-coherent pulse.
    pub expected_phase_error: Option<f64>,
    /// Sudden pulses: `arg C_p(t₀⁺) - arg C_k(t₀⁻)`.
    pub inherited_phase_shift: Option<f64>,
}

impl PulseReport {
    fn rounded(mut self) -> Self {
        for v in [
            &mut self.rabi,
            &mut self.area,
            &mut self.phase,
            &mut self.ck_modulus,
            &mut self.ck_phase,
            &mut self.cp_modulus,
            &mut self.cp_phase,
            &mut self.natural_phase_k,
            &mut self.natural_phase_p,
        ] {
            *v = sig12(*v);
        }
        for v in [
            &mut self.ode_discrepancy,
            &mut self.phase_error,
            &mut self.expected_phase_error,
            &mut self.inherited_phase_shift,
        ]
        .into_iter()
        .flatten()
        {
            *v = sig12(*v);
        }
        self
    }
}

/// Runs one pulse from `|k⟩` carrying its natural phase at `t₀`.
pub fn pulse_report(args: &PulseArgs) -> Result<PulseReport> {
    let sys = TwoLevelSystem::new(args.ek, args.ep)?;
    let area = args.area.unwrap_or(FRAC_PI_2);
    let pulse = match (args.mode, args.rabi) {
        (PulseMode::Sudden, _) => PulseSpec::sudden(args.t0, area)?,
        (mode, Some(rabi)) => PulseSpec::resonant(mode, rabi, args.t0, args.duration, args.phase)?,
        (mode, None) => PulseSpec::resonant_with_area(mode, area, args.t0, args.duration, args.phase)?,
    };
    let init = TwoLevelState::natural(&sys, 1.0, args.t0);
    let fin = pulses::apply_pulse(&sys, &pulse, &init)?;
    let t_end = pulse.end_time();

    let mut report = PulseReport {
        mode: pulse.mode().name(),
        e_k: sys.e_k,
        e_p: sys.e_p,
        t0: pulse.t0(),
        tau: pulse.tau(),
        rabi: pulse.rabi(),
        area: pulse.area(),
        phase: pulse.phase(),
        ck_modulus: fin.c_k.norm(),
        ck_phase: wrap_phase(fin.c_k.arg()),
        cp_modulus: fin.c_p.norm(),
        cp_phase: wrap_phase(fin.c_p.arg()),
        natural_phase_k: wrap_phase(-sys.e_k * t_end),
        natural_phase_p: wrap_phase(-sys.e_p * t_end),
        ode_discrepancy: None,
        phase_error: None,
        expected_phase_error: None,
        inherited_phase_shift: None,
    };

    if pulse.mode() == PulseMode::Sudden {
        if fin.c_p.norm() > 1e-12 {
            report.inherited_phase_shift = Some(pulses::phase_difference(fin.c_p, init.c_k));
        }
        return Ok(report.rounded());
    }

    let step = args.step.unwrap_or(pulse.tau() / pulses::DEFAULT_ODE_STEPS as f64);
    if pulse.tau() > 0.0 {
        let ode = pulses::integrate_ode(&sys, &pulse, &init, step)?;
        report.ode_discrepancy = Some(ode.max_diff(&fin));
    }
    if pulse.mode() != PulseMode::Coherent && fin.c_p.norm() > 1e-12 {
        let coherent = pulses::evolve_coherent(&sys, &pulse.with_mode(PulseMode::Coherent)?, &init)?;
        report.phase_error = Some(pulses::phase_difference(fin.c_p, coherent.c_p));
        report.expected_phase_error = Some(match pulse.mode() {
            PulseMode::NonCoherent => wrap_phase(sys.omega_pk() * pulse.t0()),
            _ => 0.0,
        });
    }
    Ok(report.rounded())
}

pub fn cmd_pulse(args: PulseArgs) -> Result<(String, i32)> {
    let format = default_format(args.format)?;
    let report = pulse_report(&args)?;
    let text = match format {
        OutputFormat::Json => serde_json::to_string_pretty(&report).map_err(|e| Error::Config(e.to_string()))? + "\n",
        OutputFormat::Csv => {
            let value = serde_json::to_value(&report).map_err(|e| Error::Config(e.to_string()))?;
            let obj = value.as_object().expect("report serializes to an object");
            let header: Vec<&str> = obj.keys().map(String::as_str).collect();
            let row = obj
                .values()
                .map(|v| match v {
                    serde_json::Value::Null => String::new(),
                    serde_json::Value::String(s) => s.clone(),
                    other => other.to_string(),
                })
                .collect();
            csv_string(&header, std::iter::once(row))?
        }
    };
    Ok((text, EXIT_OK))
}

pub fn sweep_rows(args: SweepArgs) -> Result<(Vec<GridRow>, Option<PathBuf>, OutputFormat)> {
    let format = default_format(args.format)?;
    if args.tolerance.is_nan() || args.tolerance <= 0.0 {
        return Err(Error::Config(format!(
            "--tolerance must be > 0, got {}",
            args.tolerance
        )));
    }
    let spectrum = args.spectrum.resolve()?;
    let a1 = Axis::new(args.tau1_min, args.tau1_max, args.n1)?;
    let a2 = Axis::new(args.tau2_min, args.tau2_max, args.n2)?;
    let rows = shor::delay_grid(&spectrum, &a1, &a2, args.tolerance)?;
    Ok((rows, args.out, format))
}

pub fn rows_csv(rows: &[GridRow]) -> Result<String> {
    let f = |x: f64| sig12(x).to_string();
    csv_string(
        &SWEEP_CSV_HEADER,
        rows.iter().map(|r| {
            vec![
                f(r.tau1),
                f(r.tau2),
                f(r.delta1),
                f(r.delta2),
                r.satisfied.to_string(),
                f(r.p0),
                f(r.p1),
                f(r.p2),
                f(r.p3),
                f(r.amp11_mod),
            ]
        }),
    )
}

pub fn cmd_sweep(args: SweepArgs) -> Result<(String, i32)> {
    let (rows, out, format) = sweep_rows(args)?;
    let body = match format {
        OutputFormat::Csv => rows_csv(&rows)?,
        OutputFormat::Json => serde_json::to_string_pretty(&rows).map_err(|e| Error::Config(e.to_string()))? + "\n",
    };
    match out {
        Some(path) => {
            write_file(&path, &body)?;
            let satisfied = rows.iter().filter(|r| r.satisfied).count();
            Ok((
                format!(
                    "wrote {} rows ({satisfied} satisfied) to {}\n",
                    rows.len(),
                    path.display()
                ),
                EXIT_OK,
            ))
        }
        None => Ok((body, EXIT_OK)),
    }
}

pub fn check_condition_residual(args: CheckConditionArgs) -> Result<(ConditionResidual, OutputFormat)> {
    let format = default_format(args.format)?;
    let delays = DelaySchedule::new(args.tau1, args.tau2)?;
    if args.tolerance.is_nan() || args.tolerance <= 0.0 {
        return Err(Error::Config(format!(
            "--tolerance must be > 0, got {}",
            args.tolerance
        )));
    }
    let spectrum = args.spectrum.resolve()?;
    Ok((shor::check_condition(&spectrum, &delays, args.tolerance), format))
}

pub fn cmd_check_condition(args: CheckConditionArgs) -> Result<(String, i32)> {
    let (r, format) = check_condition_residual(args)?;
    let text = match format {
        OutputFormat::Json => serde_json::to_string_pretty(&r).map_err(|e| Error::Config(e.to_string()))? + "\n",
        OutputFormat::Csv => csv_string(
            &["delta1", "delta2", "satisfied"],
            std::iter::once(vec![
                sig12(r.delta1).to_string(),
                sig12(r.delta2).to_string(),
                r.satisfied.to_string(),
            ]),
        )?,
    };
    Ok((text, EXIT_OK))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(sig12(0.5), 0.5);
        assert_eq!(sig12(1.0 / 7.0), 0.142857142857);
        assert_eq!(sig12(-1.0e-20 / 3.0), -3.33333333333e-21);
        assert_eq!(sig12(0.0), 0.0);
    }
}
