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

//! Adjacent inverse-pair removal and same-axis rotation merging.

use alloc::vec;
use alloc::vec::Vec;

use super::{collect_slots, merge_same_axis, to_fixpoint};
use crate::circuit::{Circuit, Gate, GateKind};

enum Pair {
    Cancel,
    Merge(Gate),
}

/// How `later` combines with `earlier` when nothing sits between them on
/// any of their qubits.
fn combine(earlier: &Gate, later: &Gate) -> Option<Pair> {
    if let Some(merged) = merge_same_axis(earlier, later) {
        return Some(merged.map_or(Pair::Cancel, Pair::Merge));
    }
    let self_inverse = matches!(earlier.kind(), GateKind::H | GateKind::CNOT);
    (self_inverse && earlier == later).then_some(Pair::Cancel)
}

fn sweep(circuit: &Circuit) -> Option<Circuit> {
    let mut slots: Vec<Option<Gate>> = circuit.gates().iter().cloned().map(Some).collect();
    let mut stacks: Vec<Vec<usize>> = vec![Vec::new(); circuit.num_qubits()];
    let mut changed = false;
    for j in 0..slots.len() {
        let gate = slots[j].clone().expect("unvisited slots are live");
        let qubits = gate.qubits();
        let top = stacks[qubits[0]].last().copied();
        let partner = top.filter(|&i| {
            let prev = slots[i].as_ref().expect("stacked slots are live");
            prev.qubits() == qubits && qubits.iter().all(|&q| stacks[q].last() == Some(&i))
        });
        if let Some(i) = partner {
            let prev = slots[i].as_ref().expect("stacked slots are live");
            match combine(prev, &gate) {
                Some(Pair::Cancel) => {
                    slots[i] = None;
                    slots[j] = None;
                    for &q in qubits {
                        stacks[q].pop();
                    }
                    changed = true;
                    continue;
                }
                Some(Pair::Merge(merged)) => {
                    slots[i] = Some(merged);
                    slots[j] = None;
                    changed = true;
                    continue;
                }
                None => {}
            }
        }
        for &q in qubits {
            stacks[q].push(j);
        }
    }
    changed.then(|| collect_slots(circuit, slots))
}

/// Deletes adjacent inverse pairs (H·H, CNOT·CNOT, and same-axis pairs such
/// as S·Sdg or RZ(θ)·RZ(-θ)) and merges adjacent same-axis rotations, until
/// nothing changes. Two gates are adjacent when no gate sits between them on
/// any qubit they share, and they act on the same qubits.
pub fn remove_redundancies(circuit: &Circuit) -> Circuit {
    to_fixpoint(circuit, sweep)
}
