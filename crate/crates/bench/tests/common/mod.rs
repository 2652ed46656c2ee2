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

//! Seeded random circuits over every gate kind, for round-trip and
//! soundness checks.

#![allow(dead_code)]

use ftqc_core::angle::Angle;
use ftqc_core::circuit::{Circuit, Gate, GateKind};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const ALL_KINDS: [GateKind; 20] = [
    GateKind::H,
    GateKind::S,
    GateKind::Sdg,
    GateKind::X,
    GateKind::Y,
    GateKind::Z,
    GateKind::T,
    GateKind::Tdg,
    GateKind::SX,
    GateKind::RX,
    GateKind::RY,
    GateKind::RZ,
    GateKind::CNOT,
    GateKind::CH,
    GateKind::CCX,
    GateKind::CCZ,
    GateKind::SWAP,
    GateKind::U3,
    GateKind::Measure,
    GateKind::Barrier,
];

/// Exact multiples of π with small denominators, plain floats, or floats
/// spread over many magnitudes.
pub fn random_angle(rng: &mut ChaCha8Rng) -> Angle {
    match rng.gen_range(0..4) {
        0 => Angle::pi_fraction(rng.gen_range(-64..=64), rng.gen_range(1..=64)),
        1 => Angle::pi_fraction(rng.gen_range(-3..=3), 1 << rng.gen_range(0..20)),
        2 => Angle::from_radians(rng.gen_range(-10.0..10.0)),
        _ => Angle::from_radians(rng.gen_range(-1.0f64..1.0) * 10f64.powi(rng.gen_range(-12..3))),
    }
}

/// Up to `max_gates` gates over `n` qubits drawn from `kinds`.
pub fn random_circuit(seed: u64, n: usize, max_gates: usize, kinds: &[GateKind]) -> Circuit {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let usable: Vec<GateKind> = kinds.iter().copied().filter(|k| k.arity().unwrap_or(1) <= n).collect();
    let mut circuit = Circuit::new(n, format!("rand_{seed}")).expect("n is positive");
    let count = rng.gen_range(0..=max_gates);
    let mut order: Vec<usize> = (0..n).collect();
    for _ in 0..count {
        let kind = *usable.choose(&mut rng).expect("1-qubit kinds always fit");
        order.shuffle(&mut rng);
        let gate = match kind {
            GateKind::Measure => Gate::measure(order[0], rng.gen_range(0..n + 2)),
            GateKind::Barrier => Gate::barrier(order[..rng.gen_range(1..=n)].to_vec()),
            _ => {
                let angles = (0..kind.num_angles()).map(|_| random_angle(&mut rng)).collect();
                let arity = kind.arity().expect("only barriers are variadic");
                Gate::new(kind, angles, order[..arity].to_vec()).expect("shape matches kind")
            }
        };
        circuit.push(gate).expect("operands are in range");
    }
    circuit
}

/// Random circuit of 1 to `max_qubits` qubits over every gate kind.
pub fn random_ir_circuit(seed: u64, max_qubits: usize, max_gates: usize) -> Circuit {
    let n = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15).gen_range(1..=max_qubits);
    random_circuit(seed, n, max_gates, &ALL_KINDS)
}
