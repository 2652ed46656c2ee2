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

//! Deterministic benchmark circuits, emitted directly in the target set.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::angle::Angle;
use crate::circuit::{Circuit, Gate};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvalidSize {
    pub generator: &'static str,
    pub min: usize,
    pub found: usize,
}

impl fmt::Display for InvalidSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} needs at least {} qubits, got {}", self.generator, self.min, self.found)
    }
}

impl core::error::Error for InvalidSize {}

fn check(generator: &'static str, n: usize, min: usize) -> Result<(), InvalidSize> {
    if n < min {
        return Err(InvalidSize { generator, min, found: n });
    }
    Ok(())
}

fn build(n: usize, name: alloc::string::String, gates: Vec<Gate>) -> Circuit {
    Circuit::with_gates(n, name, gates).expect("generators emit valid gates")
}

/// Controlled phase `diag(1, 1, 1, e^{iθ})` as RZ(θ/2) on the control, then
/// CNOT, RZ(-θ/2), CNOT, RZ(θ/2) on the target.
pub fn controlled_phase(theta: Angle, control: usize, target: usize) -> [Gate; 5] {
    let half = theta.half();
    [
        Gate::rz(half, control),
        Gate::cnot(control, target),
        Gate::rz(-half, target),
        Gate::cnot(control, target),
        Gate::rz(half, target),
    ]
}

/// QFT gates on `qubits` without the final reversal swaps.
fn qft_gates(qubits: &[usize]) -> Vec<Gate> {
    let mut gates = Vec::new();
    for (j, &target) in qubits.iter().enumerate() {
        gates.push(Gate::h(target));
        for (k, &control) in qubits.iter().enumerate().skip(j + 1) {
            gates.extend(controlled_phase(Angle::pi_fraction(1, 1 << (k - j)), control, target));
        }
    }
    gates
}

/// Inverse of a rotation or self-inverse gate sequence.
fn inverse(gates: &[Gate]) -> Vec<Gate> {
    gates
        .iter()
        .rev()
        .map(|g| match g.axis_rotation() {
            Some((axis, angle)) if g.kind().is_rotation() => Gate::rotation(axis, -angle, g.qubits()[0]),
            _ => g.clone(),
        })
        .collect()
}

/// Deutsch-Jozsa on `n - 1` input qubits and one ancilla (the last qubit),
/// with the balanced oracle `f(x) = x₀ ⊕ … ⊕ x_{n-2}` and X-conjugated odd
/// inputs.
pub fn gen_dj(n: usize) -> Result<Circuit, InvalidSize> {
    check("dj", n, 1)?;
    let ancilla = n - 1;
    let mut gates = Vec::new();
    gates.push(Gate::x(ancilla));
    gates.extend((0..n).map(Gate::h));
    for i in 0..ancilla {
        if i % 2 == 1 {
            gates.push(Gate::x(i));
        }
        gates.push(Gate::cnot(i, ancilla));
        if i % 2 == 1 {
            gates.push(Gate::x(i));
        }
    }
    gates.extend((0..ancilla).map(Gate::h));
    Ok(build(n, format!("dj_{n}"), gates))
}

/// Graph state of a random graph with every vertex degree at most `degree`.
/// Each edge is a CZ written as H, CNOT, H.
pub fn gen_graphstate(n: usize, degree: usize, seed: u64) -> Result<Circuit, InvalidSize> {
    check("graphstate", n, 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut rng);
    let mut deg = alloc::vec![0usize; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if deg[u] < degree && deg[v] < degree {
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v));
        }
    }
    edges.sort_unstable();
    let mut gates: Vec<Gate> = (0..n).map(Gate::h).collect();
    for (u, v) in edges {
        gates.extend([Gate::h(v), Gate::cnot(u, v), Gate::h(v)]);
    }
    Ok(build(n, format!("graphstate_{n}"), gates))
}

/// Quantum Fourier transform without the final qubit reversal.
pub fn gen_qft(n: usize) -> Result<Circuit, InvalidSize> {
    check("qft", n, 1)?;
    let qubits: Vec<usize> = (0..n).collect();
    Ok(build(n, format!("qft_{n}"), qft_gates(&qubits)))
}

/// GHZ preparation followed by the QFT.
pub fn gen_qftentangled(n: usize) -> Result<Circuit, InvalidSize> {
    check("qftentangled", n, 1)?;
    let mut gates = alloc::vec![Gate::h(0)];
    gates.extend((0..n - 1).map(|i| Gate::cnot(i, i + 1)));
    let qubits: Vec<usize> = (0..n).collect();
    gates.extend(qft_gates(&qubits));
    Ok(build(n, format!("qftentangled_{n}"), gates))
}

/// Phase estimation of the eigenphase `phase` of `diag(1, e^{iφ})`, with
/// `n - 1` counting qubits and the eigenstate on the last qubit. Counting
/// qubit `j` controls the phase `2^j·φ`, and the inverse QFT leaves the
/// estimate big-endian on the counting register.
pub fn gen_qpe(n: usize, phase: Angle) -> Result<Circuit, InvalidSize> {
    check("qpe", n, 2)?;
    let target = n - 1;
    let counting: Vec<usize> = (0..target).collect();
    let mut gates = alloc::vec![Gate::x(target)];
    gates.extend(counting.iter().map(|&q| Gate::h(q)));
    for &j in &counting {
        gates.extend(controlled_phase(phase.scale(1 << j), j, target));
    }
    gates.extend(inverse(&qft_gates(&counting)));
    Ok(build(n, format!("qpeexact_{n}"), gates))
}

/// The exactly representable phase used by the `qpeexact` benchmark:
/// `2π·k/2^(n-1)` with `k` the alternating bit pattern `…0101`.
pub fn qpe_exact_phase(n: usize) -> Angle {
    let bits = n.saturating_sub(1).min(62);
    let k = (0..bits).step_by(2).fold(0i64, |acc, b| acc | (1 << b));
    if bits == 0 {
        return Angle::ZERO;
    }
    Angle::pi_fraction(k, 1 << (bits - 1))
}

fn random_angle(rng: &mut ChaCha8Rng) -> Angle {
    if rng.gen_bool(0.5) {
        Angle::pi_fraction(rng.gen_range(-7..=8), 8)
    } else {
        Angle::from_radians(rng.gen_range(-core::f64::consts::PI..core::f64::consts::PI))
    }
}

/// `depth` layers over a random qubit order, pairing some neighbours into
/// CNOTs and giving the rest a random target-set gate. Half of the rotation
/// angles are multiples of π/8.
pub fn gen_random(n: usize, depth: usize, seed: u64) -> Result<Circuit, InvalidSize> {
    check("random", n, 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    let mut gates = Vec::new();
    for _ in 0..depth {
        order.shuffle(&mut rng);
        let mut rest = &order[..];
        while let Some((&q, tail)) = rest.split_first() {
            rest = tail;
            if let Some((&t, tail)) = rest.split_first().filter(|_| rng.gen_bool(0.3)) {
                rest = tail;
                gates.push(Gate::cnot(q, t));
                continue;
            }
            gates.push(match rng.gen_range(0..12) {
                0 => Gate::h(q),
                1 => Gate::s(q),
                2 => Gate::sdg(q),
                3 => Gate::t(q),
                4 => Gate::tdg(q),
                5 => Gate::x(q),
                6 => Gate::y(q),
                7 => Gate::z(q),
                8 => Gate::sx(q),
                9 => Gate::rx(random_angle(&mut rng), q),
                10 => Gate::ry(random_angle(&mut rng), q),
                _ => Gate::rz(random_angle(&mut rng), q),
            });
        }
    }
    Ok(build(n, format!("random_{n}_{depth}_{seed}"), gates))
}

/// Like [`gen_random`] but with Clifford gates only: H, S, Sdg, X, Y, Z, SX,
/// CNOT and rotations by multiples of π/2.
pub fn gen_clifford(n: usize, depth: usize, seed: u64) -> Result<Circuit, InvalidSize> {
    check("clifford", n, 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    let mut gates = Vec::new();
    for _ in 0..depth {
        order.shuffle(&mut rng);
        let mut rest = &order[..];
        while let Some((&q, tail)) = rest.split_first() {
            rest = tail;
            if let Some((&t, tail)) = rest.split_first().filter(|_| rng.gen_bool(0.3)) {
                rest = tail;
                gates.push(Gate::cnot(q, t));
                continue;
            }
            let quarter = Angle::pi_fraction(rng.gen_range(-1..=2), 2);
            gates.push(match rng.gen_range(0..10) {
                0 => Gate::h(q),
                1 => Gate::s(q),
                2 => Gate::sdg(q),
                3 => Gate::x(q),
                4 => Gate::y(q),
                5 => Gate::z(q),
                6 => Gate::sx(q),
                7 => Gate::rx(quarter, q),
                8 => Gate::ry(quarter, q),
                _ => Gate::rz(quarter, q),
            });
        }
    }
    Ok(build(n, format!("clifford_{n}_{depth}_{seed}"), gates))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::GateKind;
    use crate::estimator::count_logical;
    use crate::sim::{equivalent_up_to_global_phase, simulate, Statevector};

    #[test]
    fn one_qubit_qft_is_hadamard() {
        assert_eq!(gen_qft(1).unwrap().gates(), [Gate::h(0)]);
    }

    #[test]
    fn qft_rotation_counts() {
        let qft = gen_qft(10).unwrap();
        // Three RZs per controlled phase; the 9 nearest-neighbour pairs use
        // π/4 halves, which are T-like.
        let arbitrary = qft.gates().iter().filter(|g| g.is_arbitrary_rotation()).count();
        assert_eq!(arbitrary, 3 * (45 - 9));
        let counts = count_logical(&qft).unwrap();
        assert_eq!(counts.rotation_gates, 108);
        assert_eq!(counts.t_gates, 27);
        assert_eq!(qft.gate_count(), 10 + 45 * 5);
        assert!(qft.is_target_set());
    }

    #[test]
    fn controlled_phase_matches_definition() {
        let tau = 2.0 * core::f64::consts::PI;
        for theta in [Angle::pi_fraction(1, 2), Angle::pi_fraction(-3, 4), Angle::from_radians(2.9)] {
            let decomposed = Circuit::with_gates(2, "cp", controlled_phase(theta, 0, 1)).unwrap();
            let phases: Vec<f64> = (0..4)
                .map(|i| {
                    let a = simulate(&decomposed, &Statevector::basis(2, i)).unwrap().amplitudes()[i];
                    assert!((a.norm() - 1.0).abs() < 1e-12);
                    libm::atan2(a.im, a.re)
                })
                .collect();
            // diag(1, 1, 1, e^{iθ}) up to a global phase.
            assert!(libm::remainder(phases[1] - phases[0], tau).abs() < 1e-12);
            assert!(libm::remainder(phases[2] - phases[0], tau).abs() < 1e-12);
            assert!(libm::remainder(phases[3] - phases[0] - theta.radians(), tau).abs() < 1e-12);
        }
    }

    #[test]
    fn dj_reports_balanced() {
        for n in [2, 5, 10] {
            let dj = gen_dj(n).unwrap();
            let out = simulate(&dj, &Statevector::zero(n)).unwrap();
            // Inputs all zero means only the ancilla bit (the LSB) may be set.
            let all_zero: f64 = out.probabilities()[..2].iter().sum();
            assert!(all_zero < 1e-12, "n = {n}");
        }
    }

    #[test]
    fn qpe_recovers_exact_phases() {
        for n in [2, 4, 7] {
            let m = n - 1;
            for k in [0i64, 1, (1 << m) - 1] {
                let phase = Angle::pi_fraction(2 * k, 1 << m);
                let out = simulate(&gen_qpe(n, phase).unwrap(), &Statevector::zero(n)).unwrap();
                // Counting register holds k, the target stays |1⟩.
                let index = ((k as usize) << 1) | 1;
                assert!((out.probabilities()[index] - 1.0).abs() < 1e-9, "n = {n}, k = {k}");
            }
        }
        let exact = gen_qpe(6, qpe_exact_phase(6)).unwrap();
        let out = simulate(&exact, &Statevector::zero(6)).unwrap();
        assert!(out.probabilities()[(0b10101 << 1) | 1] > 1.0 - 1e-9);
    }

    #[test]
    fn ghz_prefix_and_graph_degree() {
        let q = gen_qftentangled(4).unwrap();
        assert_eq!(&q.gates()[..4], [Gate::h(0), Gate::cnot(0, 1), Gate::cnot(1, 2), Gate::cnot(2, 3)]);
        let g = gen_graphstate(10, 2, 7).unwrap();
        let mut deg = [0usize; 10];
        for gate in g.gates().iter().filter(|g| g.kind() == GateKind::CNOT) {
            deg[gate.qubits()[0]] += 1;
            deg[gate.qubits()[1]] += 1;
        }
        assert!(deg.iter().all(|&d| d <= 2));
        assert!(deg.iter().sum::<usize>() > 0);
        assert_eq!(count_logical(&g).unwrap().t_gates, 0);
    }

    #[test]
    fn generators_are_deterministic_and_valid() {
        assert_eq!(gen_random(5, 8, 3).unwrap(), gen_random(5, 8, 3).unwrap());
        assert_ne!(gen_random(5, 8, 3).unwrap(), gen_random(5, 8, 4).unwrap());
        assert_eq!(gen_graphstate(8, 3, 1).unwrap(), gen_graphstate(8, 3, 1).unwrap());
        let c = gen_clifford(6, 10, 2).unwrap();
        assert!(c.gates().iter().all(|g| g.kind() == GateKind::CNOT
            || g.angle_class().is_some_and(|k| k <= crate::angle::AngleClass::Clifford)));
        assert!(gen_random(6, 10, 9).unwrap().gates().len() <= 60);
        assert_eq!(gen_qpe(1, Angle::ZERO), Err(InvalidSize { generator: "qpe", min: 2, found: 1 }));
        assert!(gen_qft(0).is_err());
        let c = gen_random(3, 5, 1).unwrap();
        assert!(equivalent_up_to_global_phase(&c, &c, 1e-12).unwrap());
    }
}
