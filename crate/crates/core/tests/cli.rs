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

use serde_json::Value;
use shorphase::cli::{run_from_args, EXIT_NO_FACTOR, EXIT_OK, EXIT_USAGE, SWEEP_CSV_HEADER};
use shorphase::{run_experiment, ExperimentConfig, RunStatus};
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("shorphase").chain(args.iter().copied());
    let code = run_from_args(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap_or_else(|e| panic!("bad json {e}: {s}"))
}

fn schema_validator() -> jsonschema::Validator {
    let schema = json(include_str!("../schema/run_report.schema.json"));
    jsonschema::validator_for(&schema).unwrap()
}

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_shorphase"));
    c.env_remove(shorphase::config::FORMAT_ENV);
    c
}

#[test]
fn ideal_demo_factors_four() {
    let (code, out, _) = run(&["shor-demo", "--tau1", "0", "--tau2", "0", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["factor"], 2);
    assert_eq!(v["period"], 2);
    assert_eq!(v["status"], "factored");
    assert!(schema_validator().is_valid(&v));
}

#[test]
fn natural_phase_demo_factors_four() {
    let (code, out, _) = run(&[
        "shor-demo",
        "--mode",
        "natural-phase",
        "--tau1",
        "7.3",
        "--tau2",
        "1.9",
        "--format",
        "json",
    ]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["factor"], 2);
    assert_eq!(v["x_distribution"], json("[0.5, 0.0, 0.5, 0.0]"));
    assert!(schema_validator().is_valid(&v));
}

#[test]
fn reports_validate_against_schema() {
    let validator = schema_validator();
    for seed in 0..20u64 {
        let cfg = ExperimentConfig::default()
            .with_delays(0.4, 0.9)
            .unwrap()
            .with_seed(seed);
        let v = serde_json::to_value(run_experiment(&cfg).unwrap()).unwrap();
        let errors: Vec<_> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{errors:?}");
    }
    let table = ExperimentConfig::default().with_spectrum(shorphase::EnergySpectrum::zero());
    assert!(validator.is_valid(&serde_json::to_value(run_experiment(&table).unwrap()).unwrap()));
}

#[test]
fn usage_errors_exit_one() {
    let (code, _, err) = run(&["shor-demo", "--tau1", "-1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("tau1"), "{err}");
    assert_eq!(run(&["shor-demo", "--no-such-flag"]).0, EXIT_USAGE);
    assert_eq!(run(&["shor-demo", "--retry-cap", "0"]).0, EXIT_USAGE);
    assert_eq!(run(&["shor-demo", "--qubit-frequencies", "1,2,3"]).0, EXIT_USAGE);
    assert_eq!(run(&["pulse", "--mode", "wobbly"]).0, EXIT_USAGE);
    assert_eq!(run(&["pulse", "--rabi", "1", "--area", "1"]).0, EXIT_USAGE);
    assert_eq!(run(&["check-condition", "--tau2", "-3"]).0, EXIT_USAGE);
    assert_eq!(run(&["--help"]).0, EXIT_OK);
}

#[test]
fn malformed_config_is_line_anchored() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    std::fs::write(&path, "seed = 3\nmode = \"free-evolution\"\ntau2 = -0.5\n").unwrap();
    let (code, _, err) = run(&["shor-demo", "--config", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 3"), "{err}");

    std::fs::write(&path, "seed = 3\ntau1 = [\n").unwrap();
    let (code, _, err) = run(&["shor-demo", "--config", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 2") || err.contains("2:"), "{err}");
}

#[test]
fn config_roundtrip_reproduces_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.toml");
    let p = path.to_str().unwrap();
    let flags = [
        "shor-demo",
        "--tau1",
        "0.35",
        "--tau2",
        "1.25",
        "--seed",
        "77",
        "--qubit-frequencies",
        "0.5,1.5,2.5,4.25",
        "--format",
        "json",
    ];
    let (code1, from_flags, _) = run(&[&flags[..], &["--write-config", p]].concat());
    let (code2, from_file, _) = run(&["shor-demo", "--config", p]);
    assert_eq!(code1, code2);
    assert_eq!(json(&from_flags), json(&from_file));
    // Flags override file values.
    let (_, overridden, _) = run(&["shor-demo", "--config", p, "--tau1", "0"]);
    assert_eq!(json(&overridden)["config_echo"]["delays"]["tau1"], 0.0);
    assert_eq!(json(&overridden)["config_echo"]["seed"], 77);
}

#[test]
fn no_factor_exits_two() {
    // Pick a destroyed-interference run whose measurement lands on x = 3.
    let base = ExperimentConfig::default().with_delays(0.3, 0.3).unwrap();
    let seed = (0..10_000)
        .find(|&s| run_experiment(&base.clone().with_seed(s)).unwrap().status == RunStatus::ExtractionFailed)
        .expect("some seed measures x = 3");
    let seed = seed.to_string();
    let (code, out, _) = run(&[
        "shor-demo",
        "--tau1",
        "0.3",
        "--tau2",
        "0.3",
        "--seed",
        &seed,
        "--format",
        "json",
    ]);
    assert_eq!(code, EXIT_NO_FACTOR);
    assert_eq!(json(&out)["factor"], Value::Null);
}

#[test]
fn environment_selects_default_format() {
    let out = bin()
        .args(["shor-demo"])
        .env(shorphase::config::FORMAT_ENV, "csv")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.starts_with(
            "mode,tau1,tau2,seed,delta1,delta2,satisfied,p0,p1,p2,p3,measured_x,attempts,period,factor,status\n"
        ),
        "{text}"
    );
    assert!(text.lines().nth(1).unwrap().ends_with(",2,2,factored"), "{text}");

    let out = bin().args(["shor-demo"]).output().unwrap();
    assert!(json(&String::from_utf8(out.stdout).unwrap()).is_object());

    let out = bin()
        .args(["shor-demo"])
        .env(shorphase::config::FORMAT_ENV, "yaml")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = bin().args(["shor-demo", "--tau1", "-1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn pulse_coherent_reports_natural_phase() {
    let (code, out, _) = run(&[
        "pulse", "--mode", "coherent", "--area", "1.5708", "--phase", "1.5708", "--format", "json",
    ]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert!((v["cp_modulus"].as_f64().unwrap() - 1.0).abs() < 1e-8);
    let d = v["cp_phase"].as_f64().unwrap() - v["natural_phase_p"].as_f64().unwrap();
    assert!(d.abs() < 1e-4, "{v}");
    assert!(v["ode_discrepancy"].as_f64().unwrap() < 1e-8);
}

#[test]
fn pulse_sudden_zero_area_is_identity() {
    let (code, out, _) = run(&["pulse", "--mode", "sudden", "--area", "0", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["ck_modulus"], 1.0);
    assert_eq!(v["cp_modulus"], 0.0);
    let (_, out, _) = run(&[
        "pulse",
        "--mode",
        "sudden",
        "--area",
        "1.5707963267948966",
        "--t0",
        "0.8",
        "--format",
        "json",
    ]);
    assert!((json(&out)["inherited_phase_shift"].as_f64().unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-11);
}

#[test]
fn pulse_noncoherent_reports_phase_error() {
    let (code, out, _) = run(&[
        "pulse",
        "--mode",
        "noncoherent",
        "--t0",
        "0.5",
        "--duration",
        "0.2",
        "--ek",
        "1",
        "--ep",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert!((v["phase_error"].as_f64().unwrap() - 1.0).abs() < 1e-11);
    assert!((v["expected_phase_error"].as_f64().unwrap() - 1.0).abs() < 1e-11);
    assert!((v["cp_phase"].as_f64().unwrap() + 1.1).abs() < 1e-11);

    let (_, out, _) = run(&["pulse", "--mode", "phase-corrected", "--t0", "0.5", "--format", "csv"]);
    let mut lines = out.lines();
    let header: Vec<_> = lines.next().unwrap().split(',').collect();
    let row: Vec<_> = lines.next().unwrap().split(',').collect();
    let col = header.iter().position(|h| *h == "phase_error").unwrap();
    assert!(row[col].parse::<f64>().unwrap().abs() < 1e-11);
}

#[test]
fn sweep_single_point() {
    let (code, out, _) = run(&[
        "sweep",
        "--n1",
        "1",
        "--n2",
        "1",
        "--tau1-max",
        "0",
        "--tau2-max",
        "0",
        "--format",
        "csv",
    ]);
    assert_eq!(code, EXIT_OK);
    let mut r = csv::Reader::from_reader(out.as_bytes());
    assert_eq!(r.headers().unwrap().iter().collect::<Vec<_>>(), SWEEP_CSV_HEADER);
    let rows: Vec<_> = r.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 1);
    let fields: Vec<_> = rows[0].iter().collect();
    assert_eq!(fields, ["0", "0", "0", "0", "true", "0.5", "0", "0.5", "0", "0"]);
}

#[test]
fn sweep_file_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.csv");
    let (code, out, _) = run(&[
        "sweep",
        "--n1",
        "7",
        "--n2",
        "5",
        "--tau1-max",
        "2",
        "--tau2-max",
        "3",
        "--out",
        path.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("wrote 35 rows"));
    let mut r = csv::Reader::from_path(&path).unwrap();
    let rows: Vec<Vec<f64>> = r
        .records()
        .map(|rec| {
            rec.unwrap()
                .iter()
                .map(|f| {
                    if f == "true" {
                        1.0
                    } else if f == "false" {
                        0.0
                    } else {
                        f.parse().unwrap()
                    }
                })
                .collect()
        })
        .collect();
    assert_eq!(rows.len(), 35);
    for (i, row) in rows.iter().enumerate() {
        // Row-major with tau1 as the outer index.
        assert!((row[0] - 2.0 * (i / 5) as f64 / 6.0).abs() < 1e-11);
        assert!((row[1] - 3.0 * (i % 5) as f64 / 4.0).abs() < 1e-11);
        assert!((row[9] - 0.5 * (row[2] / 2.0).sin().abs()).abs() < 1e-11);
        let p: f64 = row[5..9].iter().sum();
        assert!((p - 1.0).abs() < 1e-11);
    }

    let json_path = dir.path().join("grid.json");
    let (code, _, _) = run(&[
        "sweep",
        "--n1",
        "3",
        "--n2",
        "2",
        "--out",
        json_path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code, EXIT_OK);
    let v = json(&std::fs::read_to_string(&json_path).unwrap());
    assert_eq!(v.as_array().unwrap().len(), 6);
}

#[test]
fn sweep_unwritable_path() {
    let (code, _, err) = run(&[
        "sweep",
        "--n1",
        "2",
        "--n2",
        "2",
        "--out",
        "/nonexistent-dir/x/grid.csv",
    ]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("cannot write"));
}

#[test]
fn check_condition_command() {
    let (code, out, _) = run(&["check-condition", "--tau1", "0.1", "--tau2", "0.1", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["satisfied"], false);
    assert!((v["delta1"].as_f64().unwrap() - 1.02).abs() < 1e-12);
    let (_, out, _) = run(&["check-condition", "--format", "csv"]);
    assert_eq!(out, "delta1,delta2,satisfied\n0,0,true\n");
}
