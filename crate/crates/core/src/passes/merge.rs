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

//! Single-qubit run resynthesis.

use alloc::vec;
use alloc::vec::Vec;

use super::collect_slots;
use crate::circuit::{Circuit, Gate};
use crate::matrix::Mat2;
use crate::synthesis::resynthesize_1q;

fn flush(slots: &mut [Option<Gate>], run: &mut Vec<usize>, wire: usize) {
    if run.len() >= 2 {
        let product = Mat2::of_sequence(run.iter().map(|&i| slots[i].as_ref().expect("run slots are live")))
            .expect("runs hold single-qubit unitaries");
        let replacement = resynthesize_1q(&product, wire).expect("products of unitaries are unitary");
        if replacement.len() < run.len() {
            let mut fresh = replacement.into_iter();
            for &i in run.iter() {
                slots[i] = fresh.next();
            }
        }
    }
    run.clear();
}

/// Replaces every maximal run of single-qubit gates on a wire by its
/// resynthesized form when that is strictly shorter. Replacement gates take
/// the positions of the first gates of the run.
pub fn merge_1q(circuit: &Circuit) -> Circuit {
    let mut slots: Vec<Option<Gate>> = circuit.gates().iter().cloned().map(Some).collect();
    let mut runs: Vec<Vec<usize>> = vec![Vec::new(); circuit.num_qubits()];
    for i in 0..slots.len() {
        let gate = slots[i].as_ref().expect("unvisited slots are live");
        if gate.is_single_qubit_unitary() {
            runs[gate.qubits()[0]].push(i);
            continue;
        }
        let qubits = gate.qubits().to_vec();
        for q in qubits {
            flush(&mut slots, &mut runs[q], q);
        }
    }
    for (q, run) in runs.iter_mut().enumerate() {
        flush(&mut slots, run, q);
    }
    collect_slots(circuit, slots)
}
