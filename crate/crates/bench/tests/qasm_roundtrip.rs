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

mod common;

use ftqc_bench::qasm::{emit_qasm, parse_qasm, Severity};
use ftqc_core::angle::Angle;
use ftqc_core::circuit::{Circuit, Gate};
use proptest::prelude::*;

fn assert_rejection_is_positioned(src: &str) {
    if let Err(diags) = parse_qasm(src, "p") {
        assert!(diags.iter().any(|d| d.severity == Severity::Error));
        let lines = src.split('\n').count();
        for d in &diags {
            assert!(d.line >= 1 && d.line <= lines, "{d:?} in {src:?}");
            assert!(d.column >= 1, "{d:?}");
        }
    }
}

const FRAGMENTS: [&str; 40] = [
    "OPENQASM", "2.0", "3.0", ";", "include", "\"qelib1.inc\"", "qreg", "creg", "q", "c", "r", "[", "]", "(", ")",
    ",", "->", "0", "1", "2", "17", "h", "cx", "rz", "u3", "measure", "barrier", "pi", "+", "-", "*", "/", "gate",
    "{", "}", "\n", " ", "1e400", "0.5", "//x\n",
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn emit_then_parse_is_identity(seed in any::<u64>()) {
        let c = common::random_ir_circuit(seed, 6, 40);
        let text = emit_qasm(&c);
        let back = parse_qasm(&text, c.name()).map_err(|d| TestCaseError::fail(format!("{d:?}\n{text}")))?;
        prop_assert_eq!(back, c);
    }

    #[test]
    fn emit_is_deterministic(seed in any::<u64>()) {
        let c = common::random_ir_circuit(seed, 4, 20);
        prop_assert_eq!(emit_qasm(&c), emit_qasm(&c.clone()));
    }

    #[test]
    fn arbitrary_text_never_panics(src in "\\PC{0,200}") {
        assert_rejection_is_positioned(&src);
    }

    #[test]
    fn token_soup_never_panics(parts in proptest::collection::vec(proptest::sample::select(&FRAGMENTS[..]), 0..60)) {
        assert_rejection_is_positioned(&parts.join(" "));
    }

    #[test]
    fn float_angles_round_trip_bit_identically(x in -3.0f64..3.0) {
        let c = Circuit::with_gates(1, "f", [Gate::ry(Angle::from_radians(x), 0)]).unwrap();
        let back = parse_qasm(&emit_qasm(&c), "f").unwrap();
        prop_assert_eq!(back.gates()[0].angle(), c.gates()[0].angle());
    }
}

#[test]
fn angle_examples() {
    let c = parse_qasm("qreg q[2]; rz(-pi/4) q[1]; rz(0.3) q[0];", "a").unwrap();
    assert_eq!(c.gates()[0].angle(), Some(Angle::pi_fraction(-1, 4)));
    assert_eq!(c.gates()[1].angle().unwrap().radians(), 0.3);
}

#[test]
fn huge_literals_are_rejected_or_kept_finite() {
    let d = parse_qasm("qreg q[1]; rz(1e400) q[0];", "h").unwrap_err();
    assert!(d[0].message.contains("finite"));
    let c = parse_qasm("qreg q[1]; rz(123456789012345678901234567890123456789012345*pi) q[0];", "h").unwrap();
    assert_eq!(c.gate_count(), 1);
}
