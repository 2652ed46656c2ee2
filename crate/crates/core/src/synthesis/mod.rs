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

//! Translation into the target gate set
//! `{X, Y, Z, H, S, Sdg, T, Tdg, SX, RX, RY, RZ, CNOT}`.

mod decompose;
mod resynth;

use alloc::vec::Vec;
use core::fmt;

pub use decompose::{decompose_ccx, decompose_ccz, decompose_ch, decompose_swap, decompose_u3};
pub use resynth::{
    clifford_word, resynthesize_1q, search_clifford_words, CLIFFORD_GENERATORS, CLIFFORD_WORDS,
    MAX_CLIFFORD_WORD,
};

use crate::circuit::{Circuit, Gate, GateKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SynthesisError {
    DuplicateOperands,
    NonUnitary,
}

impl fmt::Display for SynthesisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SynthesisError::DuplicateOperands => f.write_str("decomposition operands must be distinct"),
            SynthesisError::NonUnitary => f.write_str("matrix is not unitary"),
        }
    }
}

impl core::error::Error for SynthesisError {}

/// Target-set gates implementing `gate`, or `None` when it already is one.
fn lower(gate: &Gate) -> Option<Vec<Gate>> {
    let q = gate.qubits();
    // Operands of a gate inside a circuit are distinct, so these cannot fail.
    let out = match gate.kind() {
        GateKind::CH => decompose_ch(q[0], q[1]),
        GateKind::CCX => decompose_ccx(q[0], q[1], q[2]),
        GateKind::CCZ => decompose_ccz(q[0], q[1], q[2]),
        GateKind::SWAP => decompose_swap(q[0], q[1]),
        GateKind::U3 => {
            let a = gate.angles();
            Ok(decompose_u3(a[0], a[1], a[2], q[0]))
        }
        _ => return None,
    };
    Some(out.expect("circuit gates have distinct operands"))
}

/// Rewrites every CH, CCX, CCZ, SWAP and U3 gate into target-set gates.
/// Circuits already in the target set come back unchanged.
pub fn translate_to_target(circuit: &Circuit) -> Circuit {
    let mut gates = Vec::with_capacity(circuit.gates().len());
    for gate in circuit.gates() {
        match lower(gate) {
            Some(seq) => gates.extend(seq),
            None => gates.push(gate.clone()),
        }
    }
    circuit.with_same_shape(gates)
}
