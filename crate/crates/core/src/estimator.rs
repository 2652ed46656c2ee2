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

//! Logical resource counts and surface-code physical estimates.
//!
//! The model charges each logical qubit a square patch of `2d²` physical
//! qubits, lays out `q` algorithm qubits as `2q + ⌈√(8q)⌉ + 1` patches, and
//! feeds T states from identical distillation factories. The error budget is
//! split evenly between logical errors, distillation and rotation synthesis.

use alloc::vec::Vec;
use core::fmt;

use crate::angle::AngleClass;
use crate::circuit::{Circuit, GateKind};
use crate::dag::rotation_layers;

/// Largest code distance considered before declaring an estimate infeasible.
pub const MAX_CODE_DISTANCE: u32 = 101;

/// Seven-category logical resource counts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct LogicalCounts {
    pub logical_qubits: u64,
    pub t_gates: u64,
    pub rotation_gates: u64,
    pub rotation_layers: u64,
    pub ccz_gates: u64,
    pub ccix_gates: u64,
    pub measurements: u64,
}

impl LogicalCounts {
    pub fn validate(&self) -> Result<(), EstimateError> {
        if self.rotation_layers > self.rotation_gates {
            return Err(EstimateError::InvalidCounts("rotation_layers exceeds rotation_gates"));
        }
        if (self.rotation_layers == 0) != (self.rotation_gates == 0) {
            return Err(EstimateError::InvalidCounts("rotation_layers is zero exactly when rotation_gates is"));
        }
        Ok(())
    }
}

/// Hardware and error-correction model constants.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default, deny_unknown_fields))]
pub struct EstimatorParams {
    /// Physical error rate `p`.
    pub physical_error_rate: f64,
    /// Threshold error rate `p_th`.
    pub threshold: f64,
    /// Prefactor `a` of the logical error rate per patch and cycle.
    pub crossing_prefactor: f64,
    /// Total failure budget `ε`.
    pub total_error_budget: f64,
    /// Nanoseconds per logical cycle per unit of code distance.
    pub cycle_time_per_distance: f64,
    /// Slope `A` of the T cost per synthesized rotation.
    pub synthesis_a: f64,
    /// Offset `B` of the T cost per synthesized rotation.
    pub synthesis_b: f64,
    /// Factory footprint in logical patches.
    pub factory_qubits_coeff: f64,
    /// Logical cycles per distilled T state.
    pub factory_cycles_per_output: f64,
    /// Runtime stretch `r ≥ 1` traded against factory count.
    pub runtime_stretch: f64,
}

impl Default for EstimatorParams {
    fn default() -> EstimatorParams {
        EstimatorParams {
            physical_error_rate: 1e-3,
            threshold: 1e-2,
            crossing_prefactor: 0.03,
            total_error_budget: 1e-3,
            cycle_time_per_distance: 400.0,
            synthesis_a: 0.53,
            synthesis_b: 5.3,
            factory_qubits_coeff: 15.0,
            factory_cycles_per_output: 10.0,
            runtime_stretch: 1.0,
        }
    }
}

impl EstimatorParams {
    pub fn validate(&self) -> Result<(), EstimateError> {
        let positive = [
            ("physical_error_rate", self.physical_error_rate),
            ("threshold", self.threshold),
            ("crossing_prefactor", self.crossing_prefactor),
            ("total_error_budget", self.total_error_budget),
            ("cycle_time_per_distance", self.cycle_time_per_distance),
            ("synthesis_a", self.synthesis_a),
            ("synthesis_b", self.synthesis_b),
            ("factory_qubits_coeff", self.factory_qubits_coeff),
            ("factory_cycles_per_output", self.factory_cycles_per_output),
        ];
        for (name, value) in positive {
            if !(value > 0.0 && value.is_finite()) {
                return Err(EstimateError::InvalidParams(name));
            }
        }
        if self.physical_error_rate >= self.threshold {
            return Err(EstimateError::InvalidParams("physical_error_rate"));
        }
        if self.total_error_budget >= 1.0 {
            return Err(EstimateError::InvalidParams("total_error_budget"));
        }
        if !(self.runtime_stretch >= 1.0 && self.runtime_stretch.is_finite()) {
            return Err(EstimateError::InvalidParams("runtime_stretch"));
        }
        Ok(())
    }
}

/// Physical resources for one parameter set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PhysicalEstimate {
    pub code_distance: u32,
    /// Logical cycles `C`.
    pub logical_depth: u64,
    pub layout_qubits: u64,
    pub algorithm_physical_qubits: u64,
    pub factory_count: u64,
    pub factory_physical_qubits: u64,
    pub total_physical_qubits: u64,
    /// Wall-clock runtime in nanoseconds.
    #[cfg_attr(feature = "serde", serde(rename = "runtime"))]
    pub runtime_ns: u64,
    pub t_states_total: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum EstimateError {
    /// The circuit still holds a gate outside the target set.
    UnsupportedGate(GateKind),
    InvalidCounts(&'static str),
    /// Named parameter is out of range.
    InvalidParams(&'static str),
    /// Stretch list not ascending from 1.
    InvalidStretches,
    /// No code distance up to [`MAX_CODE_DISTANCE`] meets the error budget.
    Infeasible,
}

impl fmt::Display for EstimateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EstimateError::UnsupportedGate(kind) => {
                write!(f, "gate `{kind}` is not in the target set; translate the circuit first")
            }
            EstimateError::InvalidCounts(why) => write!(f, "invalid logical counts: {why}"),
            EstimateError::InvalidParams(name) => write!(f, "estimator parameter `{name}` is out of range"),
            EstimateError::InvalidStretches => f.write_str("stretches must ascend and start at 1"),
            EstimateError::Infeasible => write!(
                f,
                "no code distance up to {MAX_CODE_DISTANCE} meets the error budget at this physical error rate"
            ),
        }
    }
}

impl core::error::Error for EstimateError {}

/// Counts the non-Clifford activity of a target-set circuit. T-like
/// rotations count as T gates; Clifford and identity gates count as nothing.
pub fn count_logical(circuit: &Circuit) -> Result<LogicalCounts, EstimateError> {
    let mut counts = LogicalCounts { logical_qubits: circuit.num_qubits() as u64, ..LogicalCounts::default() };
    for gate in circuit.gates() {
        let kind = gate.kind();
        if !kind.is_target() {
            return Err(EstimateError::UnsupportedGate(kind));
        }
        match kind {
            GateKind::Measure => counts.measurements += 1,
            GateKind::T | GateKind::Tdg => counts.t_gates += 1,
            GateKind::RX | GateKind::RY | GateKind::RZ => match gate.angle_class() {
                Some(AngleClass::TLike) => counts.t_gates += 1,
                Some(AngleClass::Arbitrary) => counts.rotation_gates += 1,
                _ => {}
            },
            _ => {}
        }
    }
    counts.rotation_layers = rotation_layers(circuit) as u64;
    Ok(counts)
}

/// Patches needed to lay out `q` algorithm qubits with routing space.
pub fn layout_qubits(q: u64) -> u64 {
    2 * q + libm::ceil(libm::sqrt(8.0 * q as f64)) as u64 + 1
}

/// Whether distance `d` keeps the logical failure within its budget share.
fn distance_suffices(layout: u64, depth: u64, params: &EstimatorParams, d: u32) -> bool {
    let ratio = params.physical_error_rate / params.threshold;
    let exponent = f64::from(d + 1) / 2.0;
    (layout as f64) * (depth as f64) * params.crossing_prefactor * libm::pow(ratio, exponent)
        <= params.total_error_budget / 3.0
}

/// Smallest odd `d ≥ 3` with `layout·C·a·(p/p_th)^((d+1)/2) ≤ ε/3`.
pub fn code_distance(counts: &LogicalCounts, params: &EstimatorParams, depth: u64) -> Result<u32, EstimateError> {
    params.validate()?;
    let layout = layout_qubits(counts.logical_qubits);
    // Solve for (d+1)/2 in the log domain, then settle on the exact test.
    let ratio = params.physical_error_rate / params.threshold;
    let target = params.total_error_budget / 3.0 / ((layout * depth.max(1)) as f64 * params.crossing_prefactor);
    let guess = libm::ceil(libm::log(target) / libm::log(ratio)).clamp(2.0, f64::from(MAX_CODE_DISTANCE + 1) / 2.0);
    let mut d = 2 * guess as u32 - 1;
    while d > 3 && distance_suffices(layout, depth, params, d - 2) {
        d -= 2;
    }
    while !distance_suffices(layout, depth, params, d) {
        d += 2;
        if d > MAX_CODE_DISTANCE {
            return Err(EstimateError::Infeasible);
        }
    }
    Ok(d)
}

/// T states consumed per synthesized arbitrary rotation.
pub fn rotation_t_cost(rotation_gates: u64, params: &EstimatorParams) -> u64 {
    if rotation_gates == 0 {
        return 0;
    }
    let share = params.total_error_budget / 3.0;
    libm::ceil(params.synthesis_a * libm::log2(rotation_gates as f64 / share) + params.synthesis_b) as u64
}

/// Physical qubits and runtime for `counts` under `params`.
///
/// The factory count is capped at the number of T states, since a factory
/// delivers at least one state over the whole run.
pub fn estimate_physical(counts: &LogicalCounts, params: &EstimatorParams) -> Result<PhysicalEstimate, EstimateError> {
    counts.validate()?;
    params.validate()?;
    let t_rot = rotation_t_cost(counts.rotation_gates, params);
    let toffolis = counts.ccz_gates + counts.ccix_gates;
    let t_states_total = counts.t_gates + t_rot * counts.rotation_gates + 4 * toffolis;
    let depth = (counts.measurements
        + counts.rotation_gates
        + counts.t_gates
        + 3 * toffolis
        + t_rot * counts.rotation_layers)
        .max(1);
    let d = code_distance(counts, params, depth)?;
    let patch = 2 * u64::from(d) * u64::from(d);
    let layout = layout_qubits(counts.logical_qubits);
    let algorithm_physical_qubits = layout * patch;
    let factory_count = if t_states_total == 0 {
        0
    } else {
        let needed = t_states_total as f64 * params.factory_cycles_per_output / (depth as f64 * params.runtime_stretch);
        (libm::ceil(needed) as u64).min(t_states_total)
    };
    let factory_physical_qubits = libm::ceil(factory_count as f64 * params.factory_qubits_coeff * patch as f64) as u64;
    let runtime_ns =
        libm::round(depth as f64 * params.runtime_stretch * params.cycle_time_per_distance * f64::from(d)) as u64;
    Ok(PhysicalEstimate {
        code_distance: d,
        logical_depth: depth,
        layout_qubits: layout,
        algorithm_physical_qubits,
        factory_count,
        factory_physical_qubits,
        total_physical_qubits: algorithm_physical_qubits + factory_physical_qubits,
        runtime_ns,
        t_states_total,
    })
}

/// One estimate per runtime stretch. `stretches` must ascend from 1; the
/// stretch in `params` is ignored.
pub fn frontier(
    counts: &LogicalCounts,
    params: &EstimatorParams,
    stretches: &[f64],
) -> Result<Vec<PhysicalEstimate>, EstimateError> {
    if stretches.first() != Some(&1.0) || stretches.windows(2).any(|w| w[0].partial_cmp(&w[1]) != Some(core::cmp::Ordering::Less)) {
        return Err(EstimateError::InvalidStretches);
    }
    stretches
        .iter()
        .map(|&r| estimate_physical(counts, &EstimatorParams { runtime_stretch: r, ..*params }))
        .collect()
}

/// Success probability of `gate_count` gates that each succeed with
/// probability `gate_fidelity` (expected in `(0, 1]`).
pub fn expected_fidelity(gate_count: u64, gate_fidelity: f64) -> f64 {
    libm::pow(gate_fidelity, gate_count as f64)
}
