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

//! Quantum circuit optimization and fault-tolerant resource estimation.
//!
//! The crate is `no_std` (with `alloc`). It covers the circuit IR with exact
//! angle arithmetic, a statevector oracle, translation to a Clifford+T-style
//! target gate set, NISQ optimization passes, logical/physical resource
//! estimation for a surface-code machine, and the benchmark comparison that
//! relates gate-count changes to estimated qubit and runtime changes.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod angle;
pub mod bench;
pub mod circuit;
pub mod dag;
pub mod estimator;
pub mod matrix;
pub mod passes;
pub mod sim;
pub mod synthesis;

pub use angle::{add_angles, classify_angle, Angle, AngleClass};
pub use circuit::{Axis, Circuit, CircuitError, Gate, GateKind};
pub use dag::{rotation_layers, to_dag, Dag};
pub use matrix::Mat2;
pub use sim::{equivalent_up_to_global_phase, simulate, SimError, Statevector};
pub use synthesis::{resynthesize_1q, translate_to_target, SynthesisError};
pub use passes::{run_pipeline, PassId, ScheduleMode};
pub use estimator::{
    count_logical, estimate_physical, expected_fidelity, frontier, EstimateError, EstimatorParams, LogicalCounts,
    PhysicalEstimate,
};
