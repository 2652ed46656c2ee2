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

//! Fixed decompositions of the extended input gates into the target set.

use alloc::vec;
use alloc::vec::Vec;

use super::SynthesisError;
use crate::angle::Angle;
use crate::circuit::Gate;

fn distinct(qubits: &[usize]) -> Result<(), SynthesisError> {
    for (i, q) in qubits.iter().enumerate() {
        if qubits[..i].contains(q) {
            return Err(SynthesisError::DuplicateOperands);
        }
    }
    Ok(())
}

/// Controlled-H as S, H, T on the target, a CNOT from the control, then
/// RZ(-π/4), H, RZ(-π/2) on the target.
pub fn decompose_ch(control: usize, target: usize) -> Result<Vec<Gate>, SynthesisError> {
    distinct(&[control, target])?;
    Ok(vec![
        Gate::s(target),
        Gate::h(target),
        Gate::t(target),
        Gate::cnot(control, target),
        Gate::rz(Angle::pi_fraction(-1, 4), target),
        Gate::h(target),
        Gate::rz(Angle::pi_fraction(-1, 2), target),
    ])
}

/// Doubly-controlled Z: six CNOTs and seven T/T† gates.
pub fn decompose_ccz(a: usize, b: usize, c: usize) -> Result<Vec<Gate>, SynthesisError> {
    distinct(&[a, b, c])?;
    Ok(vec![
        Gate::cnot(b, c),
        Gate::tdg(c),
        Gate::cnot(a, c),
        Gate::t(c),
        Gate::cnot(b, c),
        Gate::tdg(c),
        Gate::cnot(a, c),
        Gate::t(b),
        Gate::t(c),
        Gate::cnot(a, b),
        Gate::t(a),
        Gate::tdg(b),
        Gate::cnot(a, b),
    ])
}

/// Toffoli: the CCZ network conjugated by H on the target.
pub fn decompose_ccx(a: usize, b: usize, target: usize) -> Result<Vec<Gate>, SynthesisError> {
    let mut gates = decompose_ccz(a, b, target)?;
    gates.insert(0, Gate::h(target));
    // The closing H sits right after the last gate touching the target.
    gates.insert(10, Gate::h(target));
    Ok(gates)
}

pub fn decompose_swap(a: usize, b: usize) -> Result<Vec<Gate>, SynthesisError> {
    distinct(&[a, b])?;
    Ok(vec![Gate::cnot(a, b), Gate::cnot(b, a), Gate::cnot(a, b)])
}

/// `U3(θ, φ, λ) = RZ(φ)·RX(-π/2)·RZ(θ)·RX(π/2)·RZ(λ)` up to phase, emitted
/// in circuit order with identity rotations dropped. When θ is an identity
/// angle the RX pair cancels and only `RZ(φ + λ)` remains.
pub fn decompose_u3(theta: Angle, phi: Angle, lambda: Angle, qubit: usize) -> Vec<Gate> {
    let seq = if theta.is_identity() {
        vec![Gate::rz(phi + lambda, qubit)]
    } else {
        vec![
            Gate::rz(lambda, qubit),
            Gate::rx(Angle::pi_fraction(1, 2), qubit),
            Gate::rz(theta, qubit),
            Gate::rx(Angle::pi_fraction(-1, 2), qubit),
            Gate::rz(phi, qubit),
        ]
    };
    seq.into_iter().filter(|g| !g.angle().is_some_and(Angle::is_identity)).collect()
}
