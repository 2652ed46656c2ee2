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

//! Before/after comparison of a pass pipeline on one circuit.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::circuit::{Circuit, GateKind};
use crate::estimator::{count_logical, estimate_physical, EstimateError, EstimatorParams};
use crate::passes::{pipeline_label, run_pipeline, PassId};
use crate::sim::{equivalent_up_to_global_phase, MAX_EQUIV_QUBITS};
use crate::synthesis::translate_to_target;

/// Oracle tolerance on every amplitude.
pub const ORACLE_TOLERANCE: f64 = 1e-8;

/// Largest `|delta_g|` still treated as an unchanged gate count by the
/// trade-off finding.
pub const F3_GATE_TOLERANCE: i64 = 2;

/// Gate count, physical qubits and runtime of a circuit before and after a
/// pipeline, with signed percent changes.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ComparisonRecord {
    pub circuit_name: String,
    pub pass_pipeline: String,
    pub runtime_stretch: f64,
    pub gate_count_before: u64,
    pub gate_count_after: u64,
    pub physical_qubits_before: u64,
    pub physical_qubits_after: u64,
    pub runtime_ns_before: u64,
    pub runtime_ns_after: u64,
    pub delta_g: i64,
    pub delta_q: i64,
    pub delta_t: i64,
    /// Whether the simulation oracle confirmed the optimized circuit.
    pub verified: bool,
    pub note: String,
}

impl ComparisonRecord {
    pub fn finding(&self) -> FindingTag {
        classify_finding(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FindingTag {
    /// Fewer gates, identical qubits and runtime.
    F1CliffordOnly,
    /// Fewer gates, qubits and no more runtime.
    F2RotationReduction,
    /// Gate count flat while qubits and runtime move in opposite directions.
    F3Tradeoff,
    Neutral,
    Mixed,
}

impl FindingTag {
    pub fn name(self) -> &'static str {
        match self {
            FindingTag::F1CliffordOnly => "F1_CLIFFORD_ONLY",
            FindingTag::F2RotationReduction => "F2_ROTATION_REDUCTION",
            FindingTag::F3Tradeoff => "F3_TRADEOFF",
            FindingTag::Neutral => "NEUTRAL",
            FindingTag::Mixed => "MIXED",
        }
    }
}

impl fmt::Display for FindingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Classifies a delta triple, testing F1, F2, F3, neutral and mixed in that
/// order.
pub fn classify_deltas(delta_g: i64, delta_q: i64, delta_t: i64, gate_tolerance: i64) -> FindingTag {
    if delta_g < 0 && delta_q == 0 && delta_t == 0 {
        FindingTag::F1CliffordOnly
    } else if delta_g < 0 && delta_q < 0 && delta_t <= 0 {
        FindingTag::F2RotationReduction
    } else if delta_g.abs() <= gate_tolerance && delta_q.signum() * delta_t.signum() < 0 {
        FindingTag::F3Tradeoff
    } else if delta_g == 0 && delta_q == 0 && delta_t == 0 {
        FindingTag::Neutral
    } else {
        FindingTag::Mixed
    }
}

pub fn classify_finding(record: &ComparisonRecord) -> FindingTag {
    classify_deltas(record.delta_g, record.delta_q, record.delta_t, F3_GATE_TOLERANCE)
}

/// `round(100·(after − before)/before)` with halves rounded away from zero,
/// or `None` when `before` is zero.
pub fn percent_change(before: u64, after: u64) -> Option<i64> {
    if before == 0 {
        return None;
    }
    let num = 100 * (i128::from(after) - i128::from(before));
    let den = i128::from(before);
    let (q, r) = (num / den, num % den);
    let rounded = if 2 * r.abs() >= den { q + num.signum() } else { q };
    Some(rounded as i64)
}

#[derive(Clone, Debug, PartialEq)]
pub enum CompareError {
    /// The optimized circuit is not equivalent to the input.
    SemanticViolation { circuit: String, pipeline: String },
    Estimate(EstimateError),
}

impl fmt::Display for CompareError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompareError::SemanticViolation { circuit, pipeline } => {
                write!(f, "pipeline `{pipeline}` changed the unitary of `{circuit}`")
            }
            CompareError::Estimate(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for CompareError {}

impl From<EstimateError> for CompareError {
    fn from(e: EstimateError) -> CompareError {
        CompareError::Estimate(e)
    }
}

/// The circuit without its measurements, if every measurement is terminal:
/// no unitary gate touches a measured qubit afterwards.
pub fn strip_terminal_measurements(circuit: &Circuit) -> Option<Circuit> {
    let mut measured = alloc::vec![false; circuit.num_qubits()];
    let mut kept = Vec::with_capacity(circuit.gates().len());
    for gate in circuit.gates() {
        match gate.kind() {
            GateKind::Measure => measured[gate.qubits()[0]] = true,
            GateKind::Barrier => kept.push(gate.clone()),
            _ if gate.qubits().iter().any(|&q| measured[q]) => return None,
            _ => kept.push(gate.clone()),
        }
    }
    Some(circuit.with_same_shape(kept))
}

/// Translates, counts and estimates `circuit`, runs `passes`, estimates
/// again, and checks the result with the simulation oracle when the circuit
/// is small enough. Circuits that cannot be checked are reported with
/// `verified == false` and a note.
pub fn compare(circuit: &Circuit, passes: &[PassId], params: &EstimatorParams) -> Result<ComparisonRecord, CompareError> {
    let pipeline = pipeline_label(passes);
    let before = translate_to_target(circuit);
    let after = run_pipeline(circuit, passes);
    let est_before = estimate_physical(&count_logical(&before)?, params)?;
    let est_after = estimate_physical(&count_logical(&after)?, params)?;

    let mut notes: Vec<String> = Vec::new();
    let verified = if circuit.num_qubits() > MAX_EQUIV_QUBITS {
        notes.push(alloc::format!("unverified: more than {MAX_EQUIV_QUBITS} qubits"));
        false
    } else {
        match (strip_terminal_measurements(circuit), strip_terminal_measurements(&after)) {
            (Some(a), Some(b)) => {
                let same = equivalent_up_to_global_phase(&a, &b, ORACLE_TOLERANCE)
                    .expect("oracle inputs are small and measurement-free");
                if !same {
                    return Err(CompareError::SemanticViolation { circuit: circuit.name().to_string(), pipeline });
                }
                true
            }
            _ => {
                notes.push("unverified: mid-circuit measurement".to_string());
                false
            }
        }
    };

    let mut delta = |label: &str, b: u64, a: u64| {
        percent_change(b, a).unwrap_or_else(|| {
            notes.push(alloc::format!("zero baseline for {label}"));
            0
        })
    };
    let (gb, ga) = (before.gate_count() as u64, after.gate_count() as u64);
    let delta_g = delta("gate count", gb, ga);
    let delta_q = delta("physical qubits", est_before.total_physical_qubits, est_after.total_physical_qubits);
    let delta_t = delta("runtime", est_before.runtime_ns, est_after.runtime_ns);

    Ok(ComparisonRecord {
        circuit_name: circuit.name().to_string(),
        pass_pipeline: pipeline,
        runtime_stretch: params.runtime_stretch,
        gate_count_before: gb,
        gate_count_after: ga,
        physical_qubits_before: est_before.total_physical_qubits,
        physical_qubits_after: est_after.total_physical_qubits,
        runtime_ns_before: est_before.runtime_ns,
        runtime_ns_after: est_after.runtime_ns,
        delta_g,
        delta_q,
        delta_t,
        verified,
        note: notes.join("; "),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::generators::gen_qft;
    use crate::circuit::Gate;
    use proptest::prelude::*;

    #[test]
    fn rounding_half_away_from_zero() {
        assert_eq!(percent_change(7, 5), Some(-29));
        assert_eq!(percent_change(8, 7), Some(-13)); // -12.5
        assert_eq!(percent_change(8, 9), Some(13)); // 12.5
        assert_eq!(percent_change(3, 2), Some(-33));
        assert_eq!(percent_change(5, 5), Some(0));
        assert_eq!(percent_change(0, 5), None);
        assert_eq!(percent_change(1, 0), Some(-100));
    }

    #[test]
    fn finding_examples() {
        assert_eq!(classify_deltas(-41, 0, 0, 2), FindingTag::F1CliffordOnly);
        assert_eq!(classify_deltas(-14, -40, -23, 2), FindingTag::F2RotationReduction);
        assert_eq!(classify_deltas(0, -24, 34, 2), FindingTag::F3Tradeoff);
        assert_eq!(classify_deltas(0, 0, 0, 2), FindingTag::Neutral);
        assert_eq!(classify_deltas(5, 3, 1, 2), FindingTag::Mixed);
        assert_eq!(classify_deltas(-3, 10, -5, 2), FindingTag::Mixed);
        assert_eq!(classify_deltas(-3, 10, -5, 3), FindingTag::F3Tradeoff);
    }

    proptest! {
        #[test]
        fn classification_is_total(g in -200i64..200, q in -200i64..200, t in -200i64..200) {
            let tag = classify_deltas(g, q, t, F3_GATE_TOLERANCE);
            prop_assert_eq!(tag, classify_deltas(g, q, t, F3_GATE_TOLERANCE));
            if g == 0 && q == 0 && t == 0 {
                prop_assert_eq!(tag, FindingTag::Neutral);
            }
        }
    }

    #[test]
    fn identity_pipeline_is_flat() {
        let c = gen_qft(4).unwrap();
        let rec = compare(&c, &[], &EstimatorParams::default()).unwrap();
        assert_eq!((rec.delta_g, rec.delta_q, rec.delta_t), (0, 0, 0));
        assert!(rec.verified);
        assert_eq!(rec.pass_pipeline, "none");
        assert_eq!(rec.finding(), FindingTag::Neutral);
    }

    #[test]
    fn merge_on_controlled_hadamard() {
        let c = Circuit::with_gates(2, "ch", [Gate::ch(0, 1)]).unwrap();
        let rec = compare(&c, &[PassId::Merge1q], &EstimatorParams::default()).unwrap();
        assert_eq!((rec.gate_count_before, rec.gate_count_after), (7, 5));
        assert_eq!((rec.delta_g, rec.delta_q, rec.delta_t), (-29, 0, 0));
        assert_eq!(rec.finding(), FindingTag::F1CliffordOnly);
    }

    #[test]
    fn measurements_and_size_limits() {
        let c = Circuit::with_gates(2, "m", [Gate::h(0), Gate::measure(0, 0), Gate::cnot(0, 1), Gate::measure(1, 1)]).unwrap();
        let rec = compare(&c, &[PassId::RemoveRedundancies], &EstimatorParams::default()).unwrap();
        assert!(!rec.verified);
        assert!(rec.note.contains("mid-circuit"));
        let t = Circuit::with_gates(2, "m", [Gate::h(0), Gate::cnot(0, 1), Gate::measure(0, 0), Gate::measure(1, 1)]).unwrap();
        assert!(compare(&t, &[PassId::Merge1q], &EstimatorParams::default()).unwrap().verified);
        let big = gen_qft(11).unwrap();
        let rec = compare(&big, &[PassId::RemoveRedundancies], &EstimatorParams::default()).unwrap();
        assert!(!rec.verified);
        assert!(rec.note.contains("unverified"));
    }

    #[test]
    fn zero_baseline_is_noted() {
        let c = Circuit::new(1, "empty").unwrap();
        let rec = compare(&c, &[], &EstimatorParams::default()).unwrap();
        assert_eq!(rec.delta_g, 0);
        assert!(rec.note.contains("zero baseline for gate count"));
    }

    #[test]
    fn infeasible_estimates_propagate() {
        let p = EstimatorParams { physical_error_rate: 0.0099, ..EstimatorParams::default() };
        let c = gen_qft(3).unwrap();
        assert_eq!(compare(&c, &[], &p), Err(CompareError::Estimate(EstimateError::Infeasible)));
    }
}
