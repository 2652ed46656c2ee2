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

//! Comparison and frontier reports as markdown, CSV or JSON.

use std::fmt::Write as _;
use std::str::FromStr;

use ftqc_core::bench::ComparisonRecord;
use ftqc_core::estimator::PhysicalEstimate;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Markdown,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Format, String> {
        match s {
            "md" | "markdown" => Ok(Format::Markdown),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format `{s}`; expected md, csv or json")),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("malformed CSV report: {0}")]
    Csv(#[from] csv::Error),
    #[error("malformed JSON report: {0}")]
    Json(#[from] serde_json::Error),
}

/// `+34`, `-24`, `0`.
pub fn signed_percent(delta: i64) -> String {
    if delta > 0 {
        format!("+{delta}")
    } else {
        delta.to_string()
    }
}

/// Orders records by circuit, then pipeline, then stretch.
pub fn sort_records(records: &mut [ComparisonRecord]) {
    records.sort_by(|a, b| {
        (&a.circuit_name, &a.pass_pipeline)
            .cmp(&(&b.circuit_name, &b.pass_pipeline))
            .then(a.runtime_stretch.total_cmp(&b.runtime_stretch))
    });
}

pub fn render_report(records: &[ComparisonRecord], format: Format) -> String {
    let mut sorted = records.to_vec();
    sort_records(&mut sorted);
    match format {
        Format::Markdown => render_markdown(&sorted),
        Format::Csv => render_csv(&sorted),
        Format::Json => render_json(&sorted),
    }
}

fn render_markdown(records: &[ComparisonRecord]) -> String {
    let mut out = String::new();
    out.push_str("| circuit | pipeline | stretch | NISQ #G | FTQC #Q | FTQC t | finding | note |\n");
    out.push_str("|---|---|---:|---:|---:|---:|---|---|\n");
    for r in records {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} | {} |",
            r.circuit_name,
            r.pass_pipeline,
            r.runtime_stretch,
            signed_percent(r.delta_g),
            signed_percent(r.delta_q),
            signed_percent(r.delta_t),
            r.finding().name(),
            r.note.replace('|', "\\|"),
        );
    }
    out
}

/// Header row of the ComparisonRecord field names, then one row per record.
fn render_csv(records: &[ComparisonRecord]) -> String {
    let mut writer = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    writer.write_record(CSV_HEADER).expect("writing to memory");
    for r in records {
        writer.serialize(r).expect("records serialize to flat rows");
    }
    String::from_utf8(writer.into_inner().expect("flushing to memory")).expect("CSV output is UTF-8")
}

const CSV_HEADER: [&str; 14] = [
    "circuit_name",
    "pass_pipeline",
    "runtime_stretch",
    "gate_count_before",
    "gate_count_after",
    "physical_qubits_before",
    "physical_qubits_after",
    "runtime_ns_before",
    "runtime_ns_after",
    "delta_g",
    "delta_q",
    "delta_t",
    "verified",
    "note",
];

fn render_json(records: &[ComparisonRecord]) -> String {
    let mut out = serde_json::to_string_pretty(records).expect("records serialize to JSON");
    out.push('\n');
    out
}

/// Reads records back from [`render_report`]'s CSV output.
pub fn parse_csv_report(text: &str) -> Result<Vec<ComparisonRecord>, ReportError> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    Ok(reader.deserialize().collect::<Result<Vec<_>, _>>()?)
}

pub fn parse_json_report(text: &str) -> Result<Vec<ComparisonRecord>, ReportError> {
    Ok(serde_json::from_str(text)?)
}

/// One frontier point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FrontierRow {
    pub runtime_stretch: f64,
    pub code_distance: u32,
    pub factory_count: u64,
    pub total_physical_qubits: u64,
    pub runtime_ns: u64,
}

impl FrontierRow {
    pub fn new(runtime_stretch: f64, e: &PhysicalEstimate) -> FrontierRow {
        FrontierRow {
            runtime_stretch,
            code_distance: e.code_distance,
            factory_count: e.factory_count,
            total_physical_qubits: e.total_physical_qubits,
            runtime_ns: e.runtime_ns,
        }
    }
}

pub fn render_frontier(rows: &[FrontierRow], format: Format) -> String {
    match format {
        Format::Markdown => {
            let mut out = String::from("| stretch | code distance | factories | physical qubits | runtime (ns) |\n");
            out.push_str("|---:|---:|---:|---:|---:|\n");
            for r in rows {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} |",
                    r.runtime_stretch, r.code_distance, r.factory_count, r.total_physical_qubits, r.runtime_ns
                );
            }
            out
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            if rows.is_empty() {
                writer
                    .write_record(["runtime_stretch", "code_distance", "factory_count", "total_physical_qubits", "runtime_ns"])
                    .expect("writing to memory");
            }
            for r in rows {
                writer.serialize(r).expect("rows serialize to flat records");
            }
            String::from_utf8(writer.into_inner().expect("flushing to memory")).expect("CSV output is UTF-8")
        }
        Format::Json => {
            let mut out = serde_json::to_string_pretty(rows).expect("rows serialize to JSON");
            out.push('\n');
            out
        }
    }
}
