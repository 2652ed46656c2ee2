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

//! Commutation-aware cancellation and gate motion.

use alloc::vec;
use alloc::vec::Vec;

use super::commute::{axis_of, wire_role, WireRole};
use super::{collect_slots, merge_same_axis, remove_redundancies, to_fixpoint};
use crate::circuit::{Axis, Circuit, Gate, GateKind};

/// Slot indices of the gates on each wire, in circuit order.
fn wire_lists(slots: &[Option<Gate>], num_qubits: usize) -> Vec<Vec<usize>> {
    let mut wires = vec![Vec::new(); num_qubits];
    for (i, slot) in slots.iter().enumerate() {
        if let Some(gate) = slot {
            for &q in gate.qubits() {
                wires[q].push(i);
            }
        }
    }
    wires
}

/// First live gate after slot `from` on `wire` that `skip` does not accept.
fn next_blocking(
    slots: &[Option<Gate>],
    wire: &[usize],
    from: usize,
    mut skip: impl FnMut(&Gate) -> bool,
) -> Option<usize> {
    let start = wire.partition_point(|&i| i <= from);
    wire[start..].iter().copied().find(|&k| slots[k].as_ref().is_some_and(|g| !skip(g)))
}

/// Partner of gate `i` that it can be moved next to and combined with.
fn partner(slots: &[Option<Gate>], wires: &[Vec<usize>], i: usize) -> Option<usize> {
    let gate = slots[i].as_ref()?;
    let q = gate.qubits();
    match gate.kind() {
        GateKind::CNOT => {
            let (c, t) = (q[0], q[1]);
            let on_c = next_blocking(slots, &wires[c], i, |g| g.is_single_qubit_unitary() && wire_role(g, c) == WireRole::ZLike)?;
            let on_t = next_blocking(slots, &wires[t], i, |g| g.is_single_qubit_unitary() && wire_role(g, t) == WireRole::XLike)?;
            (on_c == on_t && slots[on_c].as_ref() == Some(gate)).then_some(on_c)
        }
        GateKind::H => {
            let k = next_blocking(slots, &wires[q[0]], i, |_| false)?;
            (slots[k].as_ref()?.kind() == GateKind::H).then_some(k)
        }
        _ => {
            let axis = axis_of(gate)?;
            let w = q[0];
            let k = match axis {
                Axis::Z => next_blocking(slots, &wires[w], i, |g| g.kind() == GateKind::CNOT && wire_role(g, w) == WireRole::ZLike),
                Axis::X => next_blocking(slots, &wires[w], i, |g| g.kind() == GateKind::CNOT && wire_role(g, w) == WireRole::XLike),
                Axis::Y => next_blocking(slots, &wires[w], i, |_| false),
            }?;
            (axis_of(slots[k].as_ref()?) == Some(axis)).then_some(k)
        }
    }
}

fn cancellation_sweep(circuit: &Circuit) -> Option<Circuit> {
    let mut slots: Vec<Option<Gate>> = circuit.gates().iter().cloned().map(Some).collect();
    let wires = wire_lists(&slots, circuit.num_qubits());
    let mut changed = false;
    for i in 0..slots.len() {
        let Some(k) = partner(&slots, &wires, i) else { continue };
        let gate = slots[i].take().expect("partners exist only for live gates");
        let later = slots[k].as_ref().expect("partners are live");
        // No same-axis merge means a self-inverse pair such as H·H or CNOT·CNOT.
        slots[k] = merge_same_axis(&gate, later).flatten();
        changed = true;
    }
    changed.then(|| collect_slots(circuit, slots))
}

/// Moves Z-axis gates past CNOT controls and X-axis gates past CNOT targets
/// to meet and merge with the next gate on the wire about the same axis.
/// CNOT pairs separated only by commuting single-qubit gates cancel, as do
/// adjacent H and Y-axis pairs. Runs to a fixpoint.
pub fn commutative_cancellation(circuit: &Circuit) -> Circuit {
    to_fixpoint(circuit, cancellation_sweep)
}

/// Whether `gate` commutes with the CNOT `other` on `wire`.
fn passes_through(gate: &Gate, other: &Gate, wire: usize) -> bool {
    other.kind() == GateKind::CNOT && {
        let role = wire_role(gate, wire);
        role != WireRole::Other && role == wire_role(other, wire)
    }
}

fn motion_sweep(circuit: &Circuit) -> Vec<Gate> {
    let mut gates = circuit.gates().to_vec();
    for i in 0..gates.len() {
        let gate = &gates[i];
        if !gate.is_single_qubit_unitary() || axis_of(gate).is_none_or(|a| a == Axis::Y) {
            continue;
        }
        let wire = gate.qubits()[0];
        let mut skipped = 0;
        let mut dest = 0;
        for k in (0..i).rev() {
            if !gates[k].acts_on(wire) {
                continue;
            }
            if passes_through(gate, &gates[k], wire) {
                skipped += 1;
                continue;
            }
            dest = k + 1;
            break;
        }
        if skipped > 0 {
            let moved = gates.remove(i);
            gates.insert(dest, moved);
        }
    }
    gates
}

/// Moves single-qubit gates earlier past CNOTs they commute with, then runs
/// [`remove_redundancies`], repeating until nothing changes.
pub fn commute_through_multis(circuit: &Circuit) -> Circuit {
    to_fixpoint(circuit, |c| {
        let moved = c.with_same_shape(motion_sweep(c));
        let next = remove_redundancies(&moved);
        (next != *c).then_some(next)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::Angle;
    use crate::passes::testutil::*;

    fn a(x: f64) -> Angle {
        Angle::from_radians(x)
    }

    #[test]
    fn rotation_cancels_across_control() {
        let c = circ(2, [Gate::rz(a(0.3), 0), Gate::cnot(0, 1), Gate::rz(a(-0.3), 0)]);
        assert_eq!(commutative_cancellation(&c).gates(), [Gate::cnot(0, 1)]);
    }

    #[test]
    fn target_side_t_is_blocked() {
        let c = circ(2, [Gate::t(1), Gate::cnot(0, 1)]);
        assert_eq!(commutative_cancellation(&c), c);
        let d = circ(2, [Gate::t(1), Gate::cnot(0, 1), Gate::t(1)]);
        assert_eq!(commutative_cancellation(&d), d);
    }

    #[test]
    fn merge_lands_on_the_later_gate() {
        let c = circ(2, [Gate::t(0), Gate::cnot(0, 1), Gate::h(1), Gate::t(0)]);
        let out = commutative_cancellation(&c);
        assert_eq!(out.gates(), [Gate::cnot(0, 1), Gate::h(1), Gate::s(0)]);
        assert_equivalent(&c, &out);
    }

    #[test]
    fn x_axis_through_target_and_cnot_pairs() {
        let c = circ(2, [Gate::sx(1), Gate::cnot(0, 1), Gate::sx(1)]);
        assert_eq!(commutative_cancellation(&c).gates(), [Gate::cnot(0, 1), Gate::x(1)]);
        let d = circ(2, [Gate::cnot(0, 1), Gate::t(0), Gate::rx(a(0.2), 1), Gate::cnot(0, 1)]);
        let out = commutative_cancellation(&d);
        assert_eq!(out.gates(), [Gate::t(0), Gate::rx(a(0.2), 1)]);
        assert_equivalent(&d, &out);
    }

    #[test]
    fn motion_examples() {
        let c = circ(2, [Gate::cnot(0, 1), Gate::rz(a(0.3), 0)]);
        assert_eq!(commute_through_multis(&c).gates(), [Gate::rz(a(0.3), 0), Gate::cnot(0, 1)]);
        let d = circ(2, [Gate::cnot(0, 1), Gate::rz(a(0.3), 1)]);
        assert_eq!(commute_through_multis(&d), d);
    }

    #[test]
    fn motion_exposes_redundancies() {
        let c = circ(3, [Gate::t(0), Gate::cnot(0, 1), Gate::cnot(0, 2), Gate::tdg(0)]);
        let out = commute_through_multis(&c);
        assert_eq!(out.gates(), [Gate::cnot(0, 1), Gate::cnot(0, 2)]);
        assert_equivalent(&c, &out);
    }
}
