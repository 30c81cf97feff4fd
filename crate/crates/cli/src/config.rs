use std::collections::BTreeMap;
use std::path::Path;

use knotrep_core::analysis::WordSample;
use knotrep_core::figure8::TOOL_VERSION;
use knotrep_core::io::write_json;
use knotrep_core::{Error, Result};
use serde::{Deserialize, Serialize};

/// Everything needed to reproduce a run. Recorded verbatim in each report.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seeds: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample: Option<WordSample>,
    pub verbosity: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
}

pub const MAX_M: usize = 16;
pub const MAX_SEEDS: usize = 10_000;
pub const MAX_WORD_LEN: usize = 64;

impl RunConfig {
    pub fn new(command: &str, verbosity: u8) -> Self {
        RunConfig { command: command.into(), verbosity, ..Default::default() }
    }

    pub fn input(mut self, key: &str, path: &Path) -> Self {
        self.inputs.insert(key.into(), path.display().to_string());
        self
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(m) = self.m {
            if m == 0 || m > MAX_M {
                return Err(Error::Invalid(format!("m must lie in 1..={MAX_M}, got {m}")));
            }
        }
        if let Some(seeds) = &self.seeds {
            if seeds.is_empty() || seeds.len() > MAX_SEEDS {
                return Err(Error::Invalid(format!("between 1 and {MAX_SEEDS} seeds required")));
            }
        }
        if let Some(tol) = self.tol {
            if !(tol > 0.0 && tol < 1.0) {
                return Err(Error::Invalid(format!("tolerance must lie in (0, 1), got {tol}")));
            }
        }
        if let Some(s) = self.sample {
            if s.max_len == 0 || s.max_len > MAX_WORD_LEN || s.l0 > 6 || s.count > 100_000 {
                return Err(Error::Invalid(format!(
                    "word sample needs 1 <= max-len <= {MAX_WORD_LEN}, l0 <= 6, count <= 100000"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
pub struct Report<'a, T: Serialize> {
    pub tool_version: &'static str,
    pub config: &'a RunConfig,
    pub passed: bool,
    pub result: &'a T,
}

pub fn write_report<T: Serialize>(path: &Path, config: &RunConfig, passed: bool, result: &T) -> Result<()> {
    write_json(path, &Report { tool_version: TOOL_VERSION, config, passed, result })
}
