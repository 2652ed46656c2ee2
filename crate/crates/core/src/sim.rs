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

//! Dense statevector simulation, used as the semantic oracle for every
//! circuit rewrite.
//!
//! Basis states are indexed big-endian: qubit 0 is the most significant bit,
//! so for two qubits the amplitudes are ordered `|00⟩, |01⟩, |10⟩, |11⟩` with
//! the left label belonging to qubit 0.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::circuit::{Circuit, Gate, GateKind};
use crate::matrix::{c, Mat2};

/// Largest register [`simulate`] accepts.
pub const MAX_SIM_QUBITS: usize = 14;
/// Largest register [`equivalent_up_to_global_phase`] accepts.
pub const MAX_EQUIV_QUBITS: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimError {
    TooManyQubits { num_qubits: usize, max: usize },
    ContainsMeasure,
    StateSizeMismatch { expected: usize, found: usize },
    QubitCountMismatch { left: usize, right: usize },
}

impl fmt::Display for SimError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimError::TooManyQubits { num_qubits, max } => {
                write!(f, "{num_qubits} qubits exceeds the simulation limit of {max}")
            }
            SimError::ContainsMeasure => f.write_str("cannot simulate a circuit containing measurements"),
            SimError::StateSizeMismatch { expected, found } => {
                write!(f, "initial state has {found} amplitudes, expected {expected}")
            }
            SimError::QubitCountMismatch { left, right } => {
                write!(f, "cannot compare circuits on {left} and {right} qubits")
            }
        }
    }
}

impl core::error::Error for SimError {}

/// Amplitudes of an `n`-qubit pure state.
#[derive(Clone, Debug, PartialEq)]
pub struct Statevector {
    amplitudes: Vec<Complex64>,
}

impl Statevector {
    /// `|0…0⟩` on `num_qubits` qubits.
    pub fn zero(num_qubits: usize) -> Statevector {
        Statevector::basis(num_qubits, 0)
    }

    pub fn basis(num_qubits: usize, index: usize) -> Statevector {
        let mut amplitudes = vec![c(0.0, 0.0); 1 << num_qubits];
        amplitudes[index] = c(1.0, 0.0);
        Statevector { amplitudes }
    }

    /// Wraps raw amplitudes; the length must be a power of two.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Option<Statevector> {
        amplitudes.len().is_power_of_two().then_some(Statevector { amplitudes })
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn num_qubits(&self) -> usize {
        self.amplitudes.len().trailing_zeros() as usize
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }
}

/// A gate lowered to bit masks over the amplitude index.
enum Op {
    Matrix { controls: usize, target: usize, m: Mat2 },
    Swap { a: usize, b: usize },
    PhaseFlip { mask: usize },
}

fn mask(num_qubits: usize, qubit: usize) -> usize {
    1 << (num_qubits - 1 - qubit)
}

fn lower(gate: &Gate, n: usize) -> Option<Op> {
    let q = gate.qubits();
    let bit = |i: usize| mask(n, q[i]);
    let x = Mat2::of_kind(GateKind::X, &[]).unwrap();
    Some(match gate.kind() {
        GateKind::Barrier | GateKind::Measure => return None,
        GateKind::CNOT => Op::Matrix { controls: bit(0), target: bit(1), m: x },
        GateKind::CH => Op::Matrix { controls: bit(0), target: bit(1), m: Mat2::of_kind(GateKind::H, &[]).unwrap() },
        GateKind::CCX => Op::Matrix { controls: bit(0) | bit(1), target: bit(2), m: x },
        GateKind::CCZ => Op::PhaseFlip { mask: bit(0) | bit(1) | bit(2) },
        GateKind::SWAP => Op::Swap { a: bit(0), b: bit(1) },
        _ => Op::Matrix { controls: 0, target: bit(0), m: Mat2::of_gate(gate)? },
    })
}

fn compile(circuit: &Circuit) -> Result<Vec<Op>, SimError> {
    if circuit.num_qubits() > MAX_SIM_QUBITS {
        return Err(SimError::TooManyQubits { num_qubits: circuit.num_qubits(), max: MAX_SIM_QUBITS });
    }
    if circuit.gates().iter().any(|g| g.kind() == GateKind::Measure) {
        return Err(SimError::ContainsMeasure);
    }
    Ok(circuit.gates().iter().filter_map(|g| lower(g, circuit.num_qubits())).collect())
}

fn run(ops: &[Op], amps: &mut [Complex64]) {
    for op in ops {
        match *op {
            Op::Matrix { controls, target, m } => {
                let [[m00, m01], [m10, m11]] = m.0;
                for i in 0..amps.len() {
                    if i & target != 0 || i & controls != controls {
                        continue;
                    }
                    let j = i | target;
                    let (a, b) = (amps[i], amps[j]);
                    amps[i] = m00 * a + m01 * b;
                    amps[j] = m10 * a + m11 * b;
                }
            }
            Op::Swap { a, b } => {
                for i in 0..amps.len() {
                    if i & a != 0 && i & b == 0 {
                        amps.swap(i, (i & !a) | b);
                    }
                }
            }
            Op::PhaseFlip { mask } => {
                for (i, amp) in amps.iter_mut().enumerate() {
                    if i & mask == mask {
                        *amp = -*amp;
                    }
                }
            }
        }
    }
}

/// Applies every gate of `circuit` to `initial`. Barriers are skipped.
pub fn simulate(circuit: &Circuit, initial: &Statevector) -> Result<Statevector, SimError> {
    let ops = compile(circuit)?;
    let expected = 1usize << circuit.num_qubits();
    if initial.amplitudes.len() != expected {
        return Err(SimError::StateSizeMismatch { expected, found: initial.amplitudes.len() });
    }
    let mut state = initial.clone();
    run(&ops, &mut state.amplitudes);
    Ok(state)
}

/// Whether two circuits implement the same unitary up to one global phase.
///
/// Every computational basis state is pushed through both circuits. The phase
/// is fixed once, from the largest-magnitude output amplitude of the first
/// basis input, and every output column must then agree within `tol` in the
/// max norm.
pub fn equivalent_up_to_global_phase(a: &Circuit, b: &Circuit, tol: f64) -> Result<bool, SimError> {
    if a.num_qubits() != b.num_qubits() {
        return Err(SimError::QubitCountMismatch { left: a.num_qubits(), right: b.num_qubits() });
    }
    let n = a.num_qubits();
    if n > MAX_EQUIV_QUBITS {
        return Err(SimError::TooManyQubits { num_qubits: n, max: MAX_EQUIV_QUBITS });
    }
    let (ops_a, ops_b) = (compile(a)?, compile(b)?);
    let dim = 1usize << n;
    let mut phase: Option<Complex64> = None;
    let mut col_a = vec![c(0.0, 0.0); dim];
    let mut col_b = vec![c(0.0, 0.0); dim];
    for input in 0..dim {
        col_a.iter_mut().for_each(|x| *x = c(0.0, 0.0));
        col_b.iter_mut().for_each(|x| *x = c(0.0, 0.0));
        col_a[input] = c(1.0, 0.0);
        col_b[input] = c(1.0, 0.0);
        run(&ops_a, &mut col_a);
        run(&ops_b, &mut col_b);
        let ph = match phase {
            Some(p) => p,
            None => {
                let (idx, _) = col_a
                    .iter()
                    .enumerate()
                    .fold((0, -1.0), |best, (i, x)| if x.norm() > best.1 { (i, x.norm()) } else { best });
                let ratio = col_b[idx] / col_a[idx];
                if !ratio.norm().is_finite() || ratio.norm() < 0.5 {
                    return Ok(false);
                }
                let p = ratio / ratio.norm();
                phase = Some(p);
                p
            }
        };
        let worst = col_a.iter().zip(&col_b).map(|(x, y)| (*y - *x * ph).norm()).fold(0.0, f64::max);
        if worst > tol {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::Angle;
    use approx::assert_abs_diff_eq;

    fn circuit(n: usize, gates: impl IntoIterator<Item = Gate>) -> Circuit {
        Circuit::with_gates(n, "t", gates).unwrap()
    }

    #[test]
    fn hadamard_gives_equal_probabilities() {
        let out = simulate(&circuit(1, [Gate::h(0)]), &Statevector::zero(1)).unwrap();
        let s = core::f64::consts::FRAC_1_SQRT_2;
        assert_abs_diff_eq!(out.amplitudes()[0].re, s, epsilon = 1e-15);
        assert_abs_diff_eq!(out.amplitudes()[1].re, s, epsilon = 1e-15);
        let p = out.probabilities();
        assert_abs_diff_eq!(p[0], 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(p[1], 0.5, epsilon = 1e-15);
    }

    #[test]
    fn empty_circuit_is_identity() {
        let init = simulate(&circuit(2, [Gate::h(0), Gate::t(1)]), &Statevector::zero(2)).unwrap();
        assert_eq!(simulate(&circuit(2, []), &init).unwrap(), init);
    }

    #[test]
    fn cnot_flips_target_when_control_set() {
        // |10⟩: qubit 0 is 1.
        let out = simulate(&circuit(2, [Gate::cnot(0, 1)]), &Statevector::basis(2, 0b10)).unwrap();
        assert_abs_diff_eq!(out.amplitudes()[0b11].re, 1.0, epsilon = 1e-15);
        let idle = simulate(&circuit(2, [Gate::cnot(0, 1)]), &Statevector::basis(2, 0b01)).unwrap();
        assert_abs_diff_eq!(idle.amplitudes()[0b01].re, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn rejects_measure_and_oversize() {
        let m = circuit(1, [Gate::measure(0, 0)]);
        assert_eq!(simulate(&m, &Statevector::zero(1)), Err(SimError::ContainsMeasure));
        let big = Circuit::new(15, "big").unwrap();
        assert!(matches!(simulate(&big, &Statevector::zero(1)), Err(SimError::TooManyQubits { .. })));
        let a = circuit(1, []);
        let b = circuit(2, []);
        assert!(matches!(equivalent_up_to_global_phase(&a, &b, 1e-8), Err(SimError::QubitCountMismatch { .. })));
    }

    #[test]
    fn equivalence_examples() {
        let c1 = circuit(2, [Gate::h(0), Gate::cnot(0, 1), Gate::rz(Angle::from_radians(0.3), 1)]);
        assert!(equivalent_up_to_global_phase(&c1, &c1, 1e-12).unwrap());
        assert!(!equivalent_up_to_global_phase(&circuit(1, [Gate::x(0)]), &circuit(1, [Gate::z(0)]), 1e-8).unwrap());
        // S and RZ(π/2) differ only by a global phase.
        let s = circuit(1, [Gate::s(0)]);
        let rz = circuit(1, [Gate::rz(Angle::pi_fraction(1, 2), 0)]);
        assert!(equivalent_up_to_global_phase(&s, &rz, 1e-12).unwrap());
        // Relative phases between columns are not a global phase.
        assert!(!equivalent_up_to_global_phase(&circuit(1, [Gate::z(0)]), &circuit(1, []), 1e-8).unwrap());
    }

    #[test]
    fn barrier_is_invisible() {
        let a = circuit(2, [Gate::h(0), Gate::barrier(alloc::vec![0, 1]), Gate::cnot(0, 1)]);
        let b = circuit(2, [Gate::h(0), Gate::cnot(0, 1)]);
        assert!(equivalent_up_to_global_phase(&a, &b, 1e-12).unwrap());
    }

    #[test]
    fn three_qubit_gates() {
        let toffoli = circuit(3, [Gate::ccx(0, 1, 2)]);
        let out = simulate(&toffoli, &Statevector::basis(3, 0b110)).unwrap();
        assert_abs_diff_eq!(out.amplitudes()[0b111].re, 1.0, epsilon = 1e-15);
        let ccz = circuit(3, [Gate::ccz(0, 1, 2)]);
        let out = simulate(&ccz, &Statevector::basis(3, 0b111)).unwrap();
        assert_abs_diff_eq!(out.amplitudes()[0b111].re, -1.0, epsilon = 1e-15);
        let swap = circuit(2, [Gate::swap(0, 1)]);
        let out = simulate(&swap, &Statevector::basis(2, 0b10)).unwrap();
        assert_abs_diff_eq!(out.amplitudes()[0b01].re, 1.0, epsilon = 1e-15);
    }
}
