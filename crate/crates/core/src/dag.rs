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

//! Gate dependency DAG and ASAP layering.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::circuit::{Circuit, GateKind};

/// Dependency DAG of a circuit. Node `i` is gate `i`; there is an edge
/// `g → h` when `h` is the next gate after `g` on some shared qubit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dag {
    preds: Vec<Vec<usize>>,
    succs: Vec<Vec<usize>>,
}

pub fn to_dag(circuit: &Circuit) -> Dag {
    let n = circuit.gates().len();
    let mut preds = vec![Vec::new(); n];
    let mut succs = vec![Vec::new(); n];
    let mut last: Vec<Option<usize>> = vec![None; circuit.num_qubits()];
    for (i, gate) in circuit.gates().iter().enumerate() {
        for &q in gate.qubits() {
            if let Some(p) = last[q] {
                if !preds[i].contains(&p) {
                    preds[i].push(p);
                    succs[p].push(i);
                }
            }
            last[q] = Some(i);
        }
    }
    Dag { preds, succs }
}

impl Dag {
    /// Builds a DAG from per-node predecessor lists.
    pub(crate) fn from_predecessors(preds: Vec<Vec<usize>>) -> Dag {
        let mut succs = vec![Vec::new(); preds.len()];
        for (node, ps) in preds.iter().enumerate() {
            for &p in ps {
                succs[p].push(node);
            }
        }
        Dag { preds, succs }
    }

    pub fn len(&self) -> usize {
        self.preds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.preds.is_empty()
    }

    pub fn predecessors(&self, node: usize) -> &[usize] {
        &self.preds[node]
    }

    pub fn successors(&self, node: usize) -> &[usize] {
        &self.succs[node]
    }

    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.preds[i].is_empty())
    }

    pub fn edge_count(&self) -> usize {
        self.succs.iter().map(Vec::len).sum()
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.succs[from].contains(&to)
    }

    /// Kahn's algorithm, always taking the ready node that `priority` ranks
    /// lowest.
    pub fn topological_order_by<K: Ord>(&self, mut priority: impl FnMut(usize) -> K) -> Vec<usize> {
        let mut indegree: Vec<usize> = self.preds.iter().map(Vec::len).collect();
        let mut ready: BTreeSet<(K, usize)> = self.roots().map(|i| (priority(i), i)).collect();
        let mut order = Vec::with_capacity(self.len());
        while let Some((_, node)) = ready.pop_first() {
            order.push(node);
            for &s in &self.succs[node] {
                indegree[s] -= 1;
                if indegree[s] == 0 {
                    ready.insert((priority(s), s));
                }
            }
        }
        order
    }
}

/// ASAP level of every gate: one more than the deepest predecessor, starting
/// at 1. Barriers take the level of their deepest predecessor so they order
/// gates without occupying a layer of their own.
pub fn asap_levels(circuit: &Circuit) -> Vec<usize> {
    let mut depth = vec![0usize; circuit.num_qubits()];
    circuit
        .gates()
        .iter()
        .map(|gate| {
            let base = gate.qubits().iter().map(|&q| depth[q]).max().unwrap_or(0);
            let level = if gate.kind() == GateKind::Barrier { base } else { base + 1 };
            for &q in gate.qubits() {
                depth[q] = level;
            }
            level
        })
        .collect()
}

/// Number of distinct ASAP levels holding at least one arbitrary-angle
/// RX/RY/RZ gate.
pub fn rotation_layers(circuit: &Circuit) -> usize {
    asap_levels(circuit)
        .into_iter()
        .zip(circuit.gates())
        .filter(|(_, g)| g.is_arbitrary_rotation())
        .map(|(level, _)| level)
        .collect::<BTreeSet<_>>()
        .len()
}
