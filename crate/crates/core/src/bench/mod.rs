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

//! Benchmark circuits and the before/after comparison.

mod compare;
mod generators;

pub use compare::{
    classify_deltas, classify_finding, compare, percent_change, strip_terminal_measurements, CompareError,
    ComparisonRecord, FindingTag, F3_GATE_TOLERANCE, ORACLE_TOLERANCE,
};
pub use generators::{
    controlled_phase, gen_clifford, gen_dj, gen_graphstate, gen_qft, gen_qftentangled, gen_qpe, gen_random,
    qpe_exact_phase, InvalidSize,
};
