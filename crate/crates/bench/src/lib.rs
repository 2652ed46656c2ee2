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

//! File formats, reports and the command line around `ftqc-core`.

pub mod cli;
pub mod params;
pub mod qasm;
pub mod report;

pub use qasm::{emit_qasm, parse_qasm, parse_qasm_with_warnings, ParseDiagnostic, Parsed, Severity};
pub use report::{parse_csv_report, parse_json_report, render_report, Format};
