// Copyright contributors to the ftqc-bench project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::path::Path;
use std::process::{Command, Output};

use ftqc_bench::qasm::parse_qasm;
use ftqc_bench::report::parse_csv_report;

fn ftqc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ftqc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const CH: &str = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\nch q[0],q[1];\n";

#[test]
fn fidelity_values() {
    for (gates, expected) in [("1000", 0.3677), ("5000", 0.0067)] {
        let o = ftqc(&["fidelity", "--gates", gates, "--gate-fidelity", "0.999"]);
        assert_eq!(o.status.code(), Some(0));
        let v: f64 = stdout(&o).trim().parse().unwrap();
        assert!((v - expected).abs() < 5e-4, "{gates}: {v}");
    }
}

#[test]
fn estimate_text_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "ch.qasm", CH);
    let o = ftqc(&["estimate", &file]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("t_gates: 2\n"));

    let o = ftqc(&["estimate", &file, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["counts"]["t_gates"], 2);
    assert_eq!(v["counts"]["rotation_gates"], 0);
    assert!(v["estimate"]["total_physical_qubits"].as_u64().unwrap() > 0);
}

#[test]
fn params_file_and_flag_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "ch.qasm", CH);
    let params = write(dir.path(), "p.json", r#"{"cycle_time_per_distance": 800.0}"#);
    let runtime = |args: &[&str]| -> u64 {
        let o = ftqc(args);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        v["estimate"]["runtime"].as_u64().unwrap()
    };
    let base = runtime(&["estimate", &file, "--json"]);
    let doubled = runtime(&["estimate", &file, "--json", "--params", &params]);
    assert_eq!(doubled, 2 * base);
    let overridden = runtime(&["estimate", &file, "--json", "--params", &params, "--cycle_time_per_distance", "400"]);
    assert_eq!(overridden, base);

    let bad = write(dir.path(), "bad.json", r#"{"nonsense": 1}"#);
    assert_eq!(ftqc(&["estimate", &file, "--params", &bad]).status.code(), Some(1));
}

#[test]
fn optimize_emits_parseable_qasm() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "ch.qasm", CH);
    let o = ftqc(&["optimize", &file, "--passes", "merge-1q"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let c = parse_qasm(&stdout(&o), "out").unwrap();
    assert_eq!(c.gate_count(), 5);

    let out = dir.path().join("out.qasm");
    let o = ftqc(&["optimize", &file, "--passes", "merge-1q,remove-redundancies", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    assert_eq!(parse_qasm(&std::fs::read_to_string(out).unwrap(), "out").unwrap(), c);

    assert_eq!(ftqc(&["optimize", &file, "--passes", "no-such-pass"]).status.code(), Some(1));
}

#[test]
fn compare_formats() {
    let o = ftqc(&["compare", "--circuits", "builtin:qft:4,builtin:dj:4", "--passes", "each", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let records = parse_csv_report(&text).unwrap();
    assert_eq!(records.len(), 2 * 7);
    assert!(records.iter().all(|r| r.verified));
    assert_eq!(ftqc_bench::render_report(&records, ftqc_bench::Format::Csv), text);

    let o = ftqc(&["compare", "--circuits", "builtin:qft:4", "--passes", "none", "--format", "md", "--stretches", "1,2"]);
    let md = stdout(&o);
    assert!(md.starts_with("| circuit | pipeline | stretch | NISQ #G | FTQC #Q | FTQC t |"));
    assert_eq!(md.lines().count(), 4);
    assert!(md.contains("| NEUTRAL |"));

    let o = ftqc(&["compare", "--circuits", "builtin:qft:3", "--passes", "commutative-cancellation", "--passes", "merge-1q", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn frontier_table() {
    let o = ftqc(&["frontier", "builtin:qft:6", "--stretches", "1,2,4,8", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows.len(), 4);
    for w in rows.windows(2) {
        assert!(w[1]["total_physical_qubits"].as_u64() <= w[0]["total_physical_qubits"].as_u64());
        assert!(w[1]["runtime_ns"].as_u64() > w[0]["runtime_ns"].as_u64());
    }
    assert_eq!(ftqc(&["frontier", "builtin:qft:6", "--stretches", "2,4"]).status.code(), Some(1));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write(dir.path(), "broken.qasm", "qreg q[2];\nh q[0];\nfoo q[1];\n");
    let o = ftqc(&["estimate", &broken]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("broken.qasm:3:1: error: unknown gate `foo`"), "{}", stderr(&o));

    let missing = dir.path().join("missing.qasm");
    assert_eq!(ftqc(&["estimate", missing.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(ftqc(&["estimate"]).status.code(), Some(1));
    assert_eq!(ftqc(&["nonsense"]).status.code(), Some(1));
    assert_eq!(ftqc(&["--help"]).status.code(), Some(0));
    assert_eq!(ftqc(&["compare", "--circuits", "builtin:bogus:3", "--passes", "none"]).status.code(), Some(1));

    let o = ftqc(&["estimate", "builtin:qft:4", "--physical_error_rate", "0.0099"]);
    assert_eq!(o.status.code(), Some(4), "{}", stderr(&o));
}

#[test]
fn unknown_include_warns_but_succeeds() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "w.qasm", "include \"mine.inc\";\nqreg q[1];\nh q[0];\n");
    let o = ftqc(&["estimate", &file]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("warning"));
}
