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

//! Estimator parameters from a JSON file, with per-field flag overrides.

use std::path::Path;

use ftqc_core::estimator::{EstimateError, EstimatorParams};

#[derive(Debug, thiserror::Error)]
pub enum ParamsError {
    #[error("cannot read parameter file {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid parameter file {path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("{0}")]
    Invalid(EstimateError),
}

macro_rules! overrides {
    ($($field:ident),* $(,)?) => {
        /// One optional flag per [`EstimatorParams`] field, named after it.
        #[derive(Clone, Debug, Default, clap::Args)]
        pub struct ParamOverrides {
            $(
                #[arg(long = stringify!($field), value_name = "VALUE")]
                pub $field: Option<f64>,
            )*
        }

        impl ParamOverrides {
            pub fn apply(&self, params: &mut EstimatorParams) {
                $(
                    if let Some(v) = self.$field {
                        params.$field = v;
                    }
                )*
            }
        }
    };
}

overrides!(
    physical_error_rate,
    threshold,
    crossing_prefactor,
    total_error_budget,
    cycle_time_per_distance,
    synthesis_a,
    synthesis_b,
    factory_qubits_coeff,
    factory_cycles_per_output,
    runtime_stretch,
);

/// Fields missing from the JSON keep their defaults; unknown fields are
/// rejected.
pub fn parse_params(json: &str, path: &str) -> Result<EstimatorParams, ParamsError> {
    serde_json::from_str(json).map_err(|source| ParamsError::Json { path: path.to_string(), source })
}

/// Defaults, then the file if given, then the overrides; the result is
/// validated.
pub fn load_params(file: Option<&Path>, overrides: &ParamOverrides) -> Result<EstimatorParams, ParamsError> {
    let mut params = match file {
        Some(path) => {
            let shown = path.display().to_string();
            let text = std::fs::read_to_string(path).map_err(|source| ParamsError::Io { path: shown.clone(), source })?;
            parse_params(&text, &shown)?
        }
        None => EstimatorParams::default(),
    };
    overrides.apply(&mut params);
    params.validate().map_err(ParamsError::Invalid)?;
    Ok(params)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_file_keeps_defaults() {
        let p = parse_params(r#"{"physical_error_rate": 0.0005}"#, "p.json").unwrap();
        assert_eq!(p.physical_error_rate, 0.0005);
        assert_eq!(p.threshold, EstimatorParams::default().threshold);
    }

    #[test]
    fn unknown_field_is_rejected() {
        assert!(parse_params(r#"{"physical_error": 0.1}"#, "p.json").is_err());
    }

    #[test]
    fn full_round_trip() {
        let d = EstimatorParams::default();
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(parse_params(&json, "p.json").unwrap(), d);
    }

    #[test]
    fn overrides_win_and_are_validated() {
        let o = ParamOverrides { runtime_stretch: Some(4.0), ..Default::default() };
        assert_eq!(load_params(None, &o).unwrap().runtime_stretch, 4.0);
        let bad = ParamOverrides { runtime_stretch: Some(0.5), ..Default::default() };
        assert!(matches!(load_params(None, &bad), Err(ParamsError::Invalid(_))));
    }
}
