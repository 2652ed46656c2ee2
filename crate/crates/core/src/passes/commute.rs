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

//! Commutation rule table shared by the passes.
//!
//! Z-axis gates (Z, S, Sdg, T, Tdg, RZ) commute with a CNOT control, X-axis
//! gates (X, SX, RX) with a CNOT target, and Z-axis gates with each other.
//! Everything else that shares a qubit is treated as non-commuting.

use crate::circuit::{Axis, Gate, GateKind};

/// How a gate touches one wire, as far as the rule table is concerned.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WireRole {
    /// Z-axis single-qubit gate, or CNOT control.
    ZLike,
    /// X-axis single-qubit gate, or CNOT target.
    XLike,
    Other,
}

pub(crate) fn axis_of(gate: &Gate) -> Option<Axis> {
    if !gate.is_single_qubit_unitary() {
        return None;
    }
    gate.axis_rotation().map(|(axis, _)| axis)
}

/// Role of `gate` on `wire`; `Other` if it does not act there.
pub fn wire_role(gate: &Gate, wire: usize) -> WireRole {
    if gate.kind() == GateKind::CNOT {
        return match gate.qubits() {
            [c, _] if *c == wire => WireRole::ZLike,
            [_, t] if *t == wire => WireRole::XLike,
            _ => WireRole::Other,
        };
    }
    match axis_of(gate) {
        Some(Axis::Z) if gate.acts_on(wire) => WireRole::ZLike,
        Some(Axis::X) if gate.acts_on(wire) => WireRole::XLike,
        _ => WireRole::Other,
    }
}

/// Whether `a` and `b` commute under the rule table. Gates on disjoint
/// qubits always commute.
pub fn commutes(a: &Gate, b: &Gate) -> bool {
    let shared = a.qubits().iter().any(|q| b.acts_on(*q));
    if !shared {
        return true;
    }
    let (one, other) = match (a.is_single_qubit_unitary(), b.is_single_qubit_unitary()) {
        (true, true) => return axis_of(a) == Some(Axis::Z) && axis_of(b) == Some(Axis::Z),
        (true, false) => (a, b),
        (false, true) => (b, a),
        (false, false) => return false,
    };
    if other.kind() != GateKind::CNOT {
        return false;
    }
    let wire = one.qubits()[0];
    let role = wire_role(one, wire);
    role != WireRole::Other && role == wire_role(other, wire)
}
