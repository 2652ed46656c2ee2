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

//! Rotation-layer rescheduling over the commutation-relaxed DAG.

use alloc::vec;
use alloc::vec::Vec;

use super::commute::{commutes, wire_role, WireRole};
use super::ScheduleMode;
use crate::circuit::Circuit;
use crate::dag::{rotation_layers, Dag};

/// DAG with an edge between every pair of gates that share a qubit and do
/// not commute under the rule table, up to transitivity.
pub(crate) fn relaxed_dag(circuit: &Circuit) -> Dag {
    let gates = circuit.gates();
    let mut on_wire: Vec<Vec<usize>> = vec![Vec::new(); circuit.num_qubits()];
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); gates.len()];
    for (j, gate) in gates.iter().enumerate() {
        for &w in gate.qubits() {
            for &i in on_wire[w].iter().rev() {
                if !commutes(&gates[i], gate) && !preds[j].contains(&i) {
                    preds[j].push(i);
                }
                // Such a gate orders everything before it on this wire.
                if wire_role(&gates[i], w) == WireRole::Other {
                    break;
                }
            }
            on_wire[w].push(j);
        }
    }
    Dag::from_predecessors(preds)
}

/// Reorders commuting gates so arbitrary-angle rotations come as early
/// (`Asap`) or as late (`Alap`) as the commutation rules allow. The gate
/// multiset is unchanged.
///
/// An `Asap` result is kept only if it does not increase
/// [`rotation_layers`], and an `Alap` result only if it does not decrease
/// it; otherwise the input is returned.
pub fn reschedule_rotations(circuit: &Circuit, mode: ScheduleMode) -> Circuit {
    let gates = circuit.gates();
    let dag = relaxed_dag(circuit);
    let order = dag.topological_order_by(|i| {
        let rotation = gates[i].is_arbitrary_rotation();
        let late = match mode {
            ScheduleMode::Asap => !rotation,
            ScheduleMode::Alap => rotation,
        };
        (late, i)
    });
    let candidate = circuit.with_same_shape(order.into_iter().map(|i| gates[i].clone()).collect());
    let (before, after) = (rotation_layers(circuit), rotation_layers(&candidate));
    let keep = match mode {
        ScheduleMode::Asap => after <= before,
        ScheduleMode::Alap => after >= before,
    };
    if keep {
        candidate
    } else {
        circuit.clone()
    }
}
