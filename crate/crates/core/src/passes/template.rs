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

//! Fixed template library.
//!
//! - T1: `H(a) H(b) CNOT(a,b) H(a) H(b)` becomes `CNOT(b,a)`.
//! - T2: `CNOT(a,b) R(a) CNOT(a,b)` becomes `R(a)` for any Z-axis gate `R`.
//! - T3: `CNOT(a,b) X(a) CNOT(a,b)` becomes `X(a) X(b)`.

use alloc::vec;
use alloc::vec::Vec;

use super::commute::axis_of;
use super::{collect_slots, to_fixpoint};
use crate::circuit::{Axis, Circuit, Gate, GateKind};

struct Wires {
    lists: Vec<Vec<usize>>,
}

impl Wires {
    fn new(slots: &[Option<Gate>], num_qubits: usize) -> Wires {
        let mut lists = vec![Vec::new(); num_qubits];
        for (i, slot) in slots.iter().enumerate() {
            for &q in slot.as_ref().map(Gate::qubits).unwrap_or(&[]) {
                lists[q].push(i);
            }
        }
        Wires { lists }
    }

    fn next(&self, slots: &[Option<Gate>], wire: usize, from: usize) -> Option<usize> {
        let list = &self.lists[wire];
        let start = list.partition_point(|&i| i <= from);
        list[start..].iter().copied().find(|&k| slots[k].is_some())
    }

    fn prev(&self, slots: &[Option<Gate>], wire: usize, from: usize) -> Option<usize> {
        let list = &self.lists[wire];
        let end = list.partition_point(|&i| i < from);
        list[..end].iter().rev().copied().find(|&k| slots[k].is_some())
    }
}

fn is_kind(slots: &[Option<Gate>], at: Option<usize>, kind: GateKind) -> Option<usize> {
    at.filter(|&k| slots[k].as_ref().is_some_and(|g| g.kind() == kind))
}

/// Tries each template anchored at the CNOT in slot `i`.
fn rewrite_at(slots: &mut [Option<Gate>], wires: &Wires, i: usize) -> bool {
    let Some(gate) = slots[i].as_ref().filter(|g| g.kind() == GateKind::CNOT) else { return false };
    let (a, b) = (gate.qubits()[0], gate.qubits()[1]);

    let hadamards = [
        is_kind(slots, wires.prev(slots, a, i), GateKind::H),
        is_kind(slots, wires.prev(slots, b, i), GateKind::H),
        is_kind(slots, wires.next(slots, a, i), GateKind::H),
        is_kind(slots, wires.next(slots, b, i), GateKind::H),
    ];
    if hadamards.iter().all(Option::is_some) {
        for h in hadamards.into_iter().flatten() {
            slots[h] = None;
        }
        slots[i] = Some(Gate::cnot(b, a));
        return true;
    }

    let Some(mid) = wires.next(slots, a, i) else { return false };
    let Some(closing) = wires.next(slots, a, mid) else { return false };
    if slots[closing] != slots[i] || wires.next(slots, b, i) != Some(closing) {
        return false;
    }
    let middle = slots[mid].as_ref().expect("wire lookups return live slots");
    if middle.kind() == GateKind::X {
        slots[i] = None;
        slots[closing] = Some(Gate::x(b));
        true
    } else if axis_of(middle) == Some(Axis::Z) {
        slots[i] = None;
        slots[closing] = None;
        true
    } else {
        false
    }
}

fn sweep(circuit: &Circuit) -> Option<Circuit> {
    let mut slots: Vec<Option<Gate>> = circuit.gates().iter().cloned().map(Some).collect();
    let wires = Wires::new(&slots, circuit.num_qubits());
    let mut changed = false;
    for i in 0..slots.len() {
        changed |= rewrite_at(&mut slots, &wires, i);
    }
    changed.then(|| collect_slots(circuit, slots))
}

/// Rewrites occurrences of templates T1 to T3 until none remain.
pub fn template_rewrite(circuit: &Circuit) -> Circuit {
    to_fixpoint(circuit, sweep)
}
