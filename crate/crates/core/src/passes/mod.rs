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

//! Optimization passes over target-set circuits.
//!
//! Every pass is a pure `Circuit -> Circuit` function that preserves the
//! circuit's unitary up to global phase. Fixpoint passes sweep left to right
//! and stop after [`MAX_SWEEPS`] sweeps at most.

mod cancel;
mod commute;
mod merge;
mod redundancy;
mod schedule;
mod template;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use cancel::{commutative_cancellation, commute_through_multis};
pub use commute::{commutes, wire_role, WireRole};
pub use merge::merge_1q;
pub use redundancy::remove_redundancies;
pub use schedule::reschedule_rotations;
pub use template::template_rewrite;

use crate::angle::Angle;
use crate::circuit::{Axis, Circuit, Gate};
use crate::synthesis::translate_to_target;

/// Upper bound on sweeps for fixpoint passes.
pub const MAX_SWEEPS: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScheduleMode {
    Asap,
    Alap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PassId {
    RemoveRedundancies,
    Merge1q,
    CommutativeCancellation,
    CommuteThroughMultis,
    TemplateRewrite,
    RescheduleRotations(ScheduleMode),
}

impl PassId {
    pub const ALL: [PassId; 7] = [
        PassId::RemoveRedundancies,
        PassId::Merge1q,
        PassId::CommutativeCancellation,
        PassId::CommuteThroughMultis,
        PassId::TemplateRewrite,
        PassId::RescheduleRotations(ScheduleMode::Asap),
        PassId::RescheduleRotations(ScheduleMode::Alap),
    ];

    pub fn name(self) -> &'static str {
        match self {
            PassId::RemoveRedundancies => "remove-redundancies",
            PassId::Merge1q => "merge-1q",
            PassId::CommutativeCancellation => "commutative-cancellation",
            PassId::CommuteThroughMultis => "commute-through-multis",
            PassId::TemplateRewrite => "template-rewrite",
            PassId::RescheduleRotations(ScheduleMode::Asap) => "reschedule-rotations:asap",
            PassId::RescheduleRotations(ScheduleMode::Alap) => "reschedule-rotations:alap",
        }
    }

    pub fn run(self, circuit: &Circuit) -> Circuit {
        match self {
            PassId::RemoveRedundancies => remove_redundancies(circuit),
            PassId::Merge1q => merge_1q(circuit),
            PassId::CommutativeCancellation => commutative_cancellation(circuit),
            PassId::CommuteThroughMultis => commute_through_multis(circuit),
            PassId::TemplateRewrite => template_rewrite(circuit),
            PassId::RescheduleRotations(mode) => reschedule_rotations(circuit, mode),
        }
    }
}

impl fmt::Display for PassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownPass(pub String);

impl fmt::Display for UnknownPass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown pass `{}`", self.0)
    }
}

impl core::error::Error for UnknownPass {}

impl FromStr for PassId {
    type Err = UnknownPass;

    fn from_str(s: &str) -> Result<PassId, UnknownPass> {
        PassId::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| UnknownPass(s.into()))
    }
}

/// Parses a comma-separated pass list. Empty input is the empty pipeline.
pub fn parse_pipeline(list: &str) -> Result<Vec<PassId>, UnknownPass> {
    list.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::parse).collect()
}

/// Pipeline label used in reports: pass names joined by `+`, or `none`.
pub fn pipeline_label(passes: &[PassId]) -> String {
    if passes.is_empty() {
        return "none".into();
    }
    let names: Vec<&str> = passes.iter().map(|p| p.name()).collect();
    names.join("+")
}

/// Translates to the target set, runs `passes` in order, then translates
/// again.
pub fn run_pipeline(circuit: &Circuit, passes: &[PassId]) -> Circuit {
    let mut current = translate_to_target(circuit);
    for pass in passes {
        current = pass.run(&current);
    }
    translate_to_target(&current)
}

/// Canonical gate for a rotation about `axis`: fixed gates where one exists,
/// `None` for the identity.
pub fn axis_gate(axis: Axis, angle: Angle, qubit: usize) -> Option<Gate> {
    if angle.is_identity() {
        return None;
    }
    let fixed = match (axis, angle.as_pi_fraction()) {
        (Axis::Z, Some((1, 1))) => Gate::z(qubit),
        (Axis::Z, Some((1, 2))) => Gate::s(qubit),
        (Axis::Z, Some((-1, 2))) => Gate::sdg(qubit),
        (Axis::Z, Some((1, 4))) => Gate::t(qubit),
        (Axis::Z, Some((-1, 4))) => Gate::tdg(qubit),
        (Axis::X, Some((1, 1))) => Gate::x(qubit),
        (Axis::X, Some((1, 2))) => Gate::sx(qubit),
        (Axis::Y, Some((1, 1))) => Gate::y(qubit),
        _ => Gate::rotation(axis, angle, qubit),
    };
    Some(fixed)
}

/// Result of merging two rotations about the same axis, or `None` if the
/// gates are not such a pair. The inner `None` means they cancel.
pub(crate) fn merge_same_axis(a: &Gate, b: &Gate) -> Option<Option<Gate>> {
    let (qa, qb) = (a.qubits(), b.qubits());
    if qa.len() != 1 || qa != qb {
        return None;
    }
    let (axis_a, angle_a) = a.axis_rotation()?;
    let (axis_b, angle_b) = b.axis_rotation()?;
    if axis_a != axis_b {
        return None;
    }
    Some(axis_gate(axis_a, angle_a + angle_b, qa[0]))
}

/// Rebuilds a circuit from a slot vector, dropping deleted slots.
pub(crate) fn collect_slots(template: &Circuit, slots: Vec<Option<Gate>>) -> Circuit {
    template.with_same_shape(slots.into_iter().flatten().collect())
}

/// Runs `sweep` until it reports no change or the sweep budget runs out.
pub(crate) fn to_fixpoint(circuit: &Circuit, mut sweep: impl FnMut(&Circuit) -> Option<Circuit>) -> Circuit {
    let mut current = circuit.clone();
    for _ in 0..MAX_SWEEPS {
        match sweep(&current) {
            Some(next) => current = next,
            None => break,
        }
    }
    current
}

#[cfg(test)]
pub(crate) mod testutil {
    use super::*;
    use crate::sim::equivalent_up_to_global_phase;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub fn circ(n: usize, gates: impl IntoIterator<Item = Gate>) -> Circuit {
        Circuit::with_gates(n, "t", gates).unwrap()
    }

    pub fn assert_equivalent(a: &Circuit, b: &Circuit) {
        assert!(equivalent_up_to_global_phase(a, b, 1e-8).unwrap(), "not equivalent:\n{a:?}\n{b:?}");
    }

    /// Random target-set circuit rich in mergeable and cancelling structure.
    pub fn random_target_circuit(rng: &mut ChaCha8Rng, n: usize, len: usize) -> Circuit {
        let mut c = Circuit::new(n, "random").unwrap();
        while c.gates().len() < len {
            let q = rng.gen_range(0..n);
            let angle = if rng.gen_bool(0.5) {
                Angle::pi_fraction(rng.gen_range(-7..=8), 8)
            } else {
                Angle::from_radians(rng.gen_range(-3.0..3.0))
            };
            let gate = match rng.gen_range(0..16) {
                0 => Gate::h(q),
                1 => Gate::s(q),
                2 => Gate::sdg(q),
                3 => Gate::t(q),
                4 => Gate::tdg(q),
                5 => Gate::x(q),
                6 => Gate::y(q),
                7 => Gate::z(q),
                8 => Gate::sx(q),
                9 => Gate::rx(angle, q),
                10 => Gate::ry(angle, q),
                11 => Gate::rz(angle, q),
                _ if n >= 2 => {
                    let mut t = rng.gen_range(0..n - 1);
                    if t >= q {
                        t += 1;
                    }
                    Gate::cnot(q, t)
                }
                _ => Gate::rz(angle, q),
            };
            c.push(gate).unwrap();
        }
        c
    }

    pub fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }
}
