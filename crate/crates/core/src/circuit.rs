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

//! Gate-list circuit representation.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::angle::{Angle, AngleClass};

/// Every instruction kind the toolkit understands.
///
/// The first thirteen form the target gate set; the rest are accepted on
/// input and removed by [`crate::synthesis::translate_to_target`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GateKind {
    H,
    S,
    Sdg,
    X,
    Y,
    Z,
    T,
    Tdg,
    SX,
    RX,
    RY,
    RZ,
    CNOT,
    CH,
    CCX,
    CCZ,
    SWAP,
    U3,
    Measure,
    Barrier,
}

/// Rotation axis of a single-qubit gate that is a rotation about X, Y or Z.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl GateKind {
    pub const TARGET_SET: [GateKind; 13] = [
        GateKind::X,
        GateKind::Y,
        GateKind::Z,
        GateKind::H,
        GateKind::S,
        GateKind::Sdg,
        GateKind::T,
        GateKind::Tdg,
        GateKind::SX,
        GateKind::RX,
        GateKind::RY,
        GateKind::RZ,
        GateKind::CNOT,
    ];

    /// Number of qubit operands, or `None` for the variadic barrier.
    pub fn arity(self) -> Option<usize> {
        use GateKind::*;
        match self {
            CNOT | CH | SWAP => Some(2),
            CCX | CCZ => Some(3),
            Barrier => None,
            _ => Some(1),
        }
    }

    pub fn num_angles(self) -> usize {
        match self {
            GateKind::RX | GateKind::RY | GateKind::RZ => 1,
            GateKind::U3 => 3,
            _ => 0,
        }
    }

    /// Target gate set plus the non-unitary `Measure` and `Barrier`.
    pub fn is_target(self) -> bool {
        Self::TARGET_SET.contains(&self) || self.is_directive()
    }

    /// `Measure` and `Barrier`, which passes never move gates across.
    pub fn is_directive(self) -> bool {
        matches!(self, GateKind::Measure | GateKind::Barrier)
    }

    pub fn is_rotation(self) -> bool {
        matches!(self, GateKind::RX | GateKind::RY | GateKind::RZ)
    }

    /// Lowercase OpenQASM 2 mnemonic.
    pub fn mnemonic(self) -> &'static str {
        use GateKind::*;
        match self {
            H => "h",
            S => "s",
            Sdg => "sdg",
            X => "x",
            Y => "y",
            Z => "z",
            T => "t",
            Tdg => "tdg",
            SX => "sx",
            RX => "rx",
            RY => "ry",
            RZ => "rz",
            CNOT => "cx",
            CH => "ch",
            CCX => "ccx",
            CCZ => "ccz",
            SWAP => "swap",
            U3 => "u3",
            Measure => "measure",
            Barrier => "barrier",
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.mnemonic())
    }
}

/// One instruction: kind, angles (RX/RY/RZ carry one, U3 carries θ, φ, λ)
/// and ordered qubit operands. `Measure` also records its classical bit.
#[derive(Clone, Debug, PartialEq)]
pub struct Gate {
    kind: GateKind,
    angles: Vec<Angle>,
    qubits: Vec<usize>,
    clbit: Option<usize>,
}

macro_rules! fixed_1q {
    ($($name:ident => $kind:ident),* $(,)?) => {
        $(
            pub fn $name(qubit: usize) -> Gate {
                Gate::raw(GateKind::$kind, Vec::new(), vec![qubit])
            }
        )*
    };
}

impl Gate {
    fn raw(kind: GateKind, angles: Vec<Angle>, qubits: Vec<usize>) -> Gate {
        Gate { kind, angles, qubits, clbit: None }
    }

    /// Builds a gate after checking operand and angle counts and operand
    /// distinctness. Qubit bounds are checked when the gate joins a circuit.
    pub fn new(kind: GateKind, angles: Vec<Angle>, qubits: Vec<usize>) -> Result<Gate, CircuitError> {
        let gate = Gate::raw(kind, angles, qubits);
        gate.check_shape()?;
        Ok(gate)
    }

    fixed_1q! {
        h => H, s => S, sdg => Sdg, x => X, y => Y, z => Z, t => T, tdg => Tdg, sx => SX,
    }

    pub fn rx(angle: Angle, qubit: usize) -> Gate {
        Gate::raw(GateKind::RX, vec![angle], vec![qubit])
    }

    pub fn ry(angle: Angle, qubit: usize) -> Gate {
        Gate::raw(GateKind::RY, vec![angle], vec![qubit])
    }

    pub fn rz(angle: Angle, qubit: usize) -> Gate {
        Gate::raw(GateKind::RZ, vec![angle], vec![qubit])
    }

    pub fn rotation(axis: Axis, angle: Angle, qubit: usize) -> Gate {
        match axis {
            Axis::X => Gate::rx(angle, qubit),
            Axis::Y => Gate::ry(angle, qubit),
            Axis::Z => Gate::rz(angle, qubit),
        }
    }

    pub fn u3(theta: Angle, phi: Angle, lambda: Angle, qubit: usize) -> Gate {
        Gate::raw(GateKind::U3, vec![theta, phi, lambda], vec![qubit])
    }

    pub fn cnot(control: usize, target: usize) -> Gate {
        Gate::raw(GateKind::CNOT, Vec::new(), vec![control, target])
    }

    pub fn ch(control: usize, target: usize) -> Gate {
        Gate::raw(GateKind::CH, Vec::new(), vec![control, target])
    }

    pub fn swap(a: usize, b: usize) -> Gate {
        Gate::raw(GateKind::SWAP, Vec::new(), vec![a, b])
    }

    pub fn ccx(a: usize, b: usize, target: usize) -> Gate {
        Gate::raw(GateKind::CCX, Vec::new(), vec![a, b, target])
    }

    pub fn ccz(a: usize, b: usize, c: usize) -> Gate {
        Gate::raw(GateKind::CCZ, Vec::new(), vec![a, b, c])
    }

    pub fn measure(qubit: usize, clbit: usize) -> Gate {
        Gate { kind: GateKind::Measure, angles: Vec::new(), qubits: vec![qubit], clbit: Some(clbit) }
    }

    pub fn barrier(qubits: Vec<usize>) -> Gate {
        Gate::raw(GateKind::Barrier, Vec::new(), qubits)
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn qubits(&self) -> &[usize] {
        &self.qubits
    }

    pub fn angles(&self) -> &[Angle] {
        &self.angles
    }

    /// The rotation angle of an RX/RY/RZ gate.
    pub fn angle(&self) -> Option<Angle> {
        self.kind.is_rotation().then(|| self.angles[0])
    }

    pub fn clbit(&self) -> Option<usize> {
        self.clbit
    }

    pub fn is_single_qubit_unitary(&self) -> bool {
        self.qubits.len() == 1 && !self.kind.is_directive()
    }

    pub fn acts_on(&self, qubit: usize) -> bool {
        self.qubits.contains(&qubit)
    }

    /// Axis and angle for gates that are rotations about a Pauli axis up to
    /// global phase, e.g. `S` is `(Z, π/2)`.
    pub fn axis_rotation(&self) -> Option<(Axis, Angle)> {
        use GateKind::*;
        let quarter = |n| Angle::pi_fraction(n, 4);
        Some(match self.kind {
            Z => (Axis::Z, Angle::PI),
            S => (Axis::Z, quarter(2)),
            Sdg => (Axis::Z, quarter(-2)),
            T => (Axis::Z, quarter(1)),
            Tdg => (Axis::Z, quarter(-1)),
            RZ => (Axis::Z, self.angles[0]),
            X => (Axis::X, Angle::PI),
            SX => (Axis::X, quarter(2)),
            RX => (Axis::X, self.angles[0]),
            Y => (Axis::Y, Angle::PI),
            RY => (Axis::Y, self.angles[0]),
            _ => return None,
        })
    }

    /// Angle class of the gate as a non-Clifford resource, treating fixed
    /// gates by their rotation angle (`T` is `TLike`, `S` is `Clifford`).
    /// `None` for multi-qubit gates and directives.
    pub fn angle_class(&self) -> Option<AngleClass> {
        if self.kind == GateKind::H {
            return Some(AngleClass::Clifford);
        }
        self.axis_rotation().map(|(_, angle)| angle.class())
    }

    /// RX/RY/RZ whose angle is neither Clifford nor T-like.
    pub fn is_arbitrary_rotation(&self) -> bool {
        self.angle().is_some_and(|a| a.class() == AngleClass::Arbitrary)
    }

    fn check_shape(&self) -> Result<(), CircuitError> {
        match self.kind.arity() {
            Some(n) if self.qubits.len() != n => {
                return Err(CircuitError::Arity { kind: self.kind, expected: n, found: self.qubits.len() })
            }
            None if self.qubits.is_empty() => {
                return Err(CircuitError::Arity { kind: self.kind, expected: 1, found: 0 })
            }
            _ => {}
        }
        if self.angles.len() != self.kind.num_angles() {
            return Err(CircuitError::AngleCount {
                kind: self.kind,
                expected: self.kind.num_angles(),
                found: self.angles.len(),
            });
        }
        for (i, q) in self.qubits.iter().enumerate() {
            if self.qubits[..i].contains(q) {
                return Err(CircuitError::DuplicateOperand { kind: self.kind, qubit: *q });
            }
        }
        Ok(())
    }
}

/// Circuit construction errors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CircuitError {
    NoQubits,
    Arity { kind: GateKind, expected: usize, found: usize },
    AngleCount { kind: GateKind, expected: usize, found: usize },
    DuplicateOperand { kind: GateKind, qubit: usize },
    QubitOutOfRange { kind: GateKind, qubit: usize, num_qubits: usize },
}

impl fmt::Display for CircuitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CircuitError::NoQubits => f.write_str("circuit must have at least one qubit"),
            CircuitError::Arity { kind, expected, found } => {
                write!(f, "{kind} expects {expected} qubit operand(s), found {found}")
            }
            CircuitError::AngleCount { kind, expected, found } => {
                write!(f, "{kind} expects {expected} angle(s), found {found}")
            }
            CircuitError::DuplicateOperand { kind, qubit } => {
                write!(f, "{kind} uses qubit {qubit} more than once")
            }
            CircuitError::QubitOutOfRange { kind, qubit, num_qubits } => {
                write!(f, "{kind} acts on qubit {qubit} but the circuit has {num_qubits} qubits")
            }
        }
    }
}

impl core::error::Error for CircuitError {}

/// A qubit count plus an ordered gate list.
#[derive(Clone, Debug, PartialEq)]
pub struct Circuit {
    num_qubits: usize,
    gates: Vec<Gate>,
    name: String,
}

impl Circuit {
    pub fn new(num_qubits: usize, name: impl Into<String>) -> Result<Circuit, CircuitError> {
        if num_qubits == 0 {
            return Err(CircuitError::NoQubits);
        }
        Ok(Circuit { num_qubits, gates: Vec::new(), name: name.into() })
    }

    pub fn with_gates(
        num_qubits: usize,
        name: impl Into<String>,
        gates: impl IntoIterator<Item = Gate>,
    ) -> Result<Circuit, CircuitError> {
        let mut circuit = Circuit::new(num_qubits, name)?;
        for gate in gates {
            circuit.push(gate)?;
        }
        Ok(circuit)
    }

    pub fn push(&mut self, gate: Gate) -> Result<(), CircuitError> {
        gate.check_shape()?;
        if let Some(&q) = gate.qubits.iter().find(|&&q| q >= self.num_qubits) {
            return Err(CircuitError::QubitOutOfRange { kind: gate.kind, qubit: q, num_qubits: self.num_qubits });
        }
        self.gates.push(gate);
        Ok(())
    }

    /// Same register and name, different gates. The gates must come from a
    /// transformation of this circuit's gates.
    pub(crate) fn with_same_shape(&self, gates: Vec<Gate>) -> Circuit {
        debug_assert!(gates.iter().all(|g| g.check_shape().is_ok()));
        debug_assert!(gates.iter().all(|g| g.qubits.iter().all(|&q| q < self.num_qubits)));
        Circuit { num_qubits: self.num_qubits, gates, name: self.name.clone() }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    /// Gate count as reported for NISQ comparisons: every instruction except
    /// barriers.
    pub fn gate_count(&self) -> usize {
        self.gates.iter().filter(|g| g.kind != GateKind::Barrier).count()
    }

    pub fn count_kind(&self, kind: GateKind) -> usize {
        self.gates.iter().filter(|g| g.kind == kind).count()
    }

    pub fn is_target_set(&self) -> bool {
        self.gates.iter().all(|g| g.kind.is_target())
    }

    /// Smallest classical register that holds every recorded classical bit.
    pub fn num_clbits(&self) -> usize {
        self.gates.iter().filter_map(|g| g.clbit).map(|c| c + 1).max().unwrap_or(0)
    }
}
