//! Self-contained analysis report, JSON schema `dstab-report/1`. Verdict
//! fields are a deterministic function of (inputs, flags, seed); wall times
//! live in their own key so the rest of the document is byte-reproducible.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::criteria::verdict::StabilityVerdict;
use crate::linalg::eig::Spectrum;

#[derive(Debug, Clone, Serialize)]
pub struct EigenvalueOut {
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumOut {
    pub label: String,
    pub eigenvalues: Vec<EigenvalueOut>,
    pub residual: f64,
}

impl SpectrumOut {
    pub fn new(label: impl Into<String>, s: &Spectrum) -> Self {
        SpectrumOut {
            label: label.into(),
            eigenvalues: s
                .eigenvalues
                .iter()
                .map(|z| EigenvalueOut { re: z.re, im: z.im })
                .collect(),
            residual: s.residual,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CommandInfo {
    pub name: String,
    pub parameters: Value,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Timings {
    pub parse_ms: f64,
    pub analyze_ms: f64,
    pub total_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub input_digest: String,
    pub command: CommandInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<StabilityVerdict>,
    pub spectra: Vec<SpectrumOut>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate_path: Option<String>,
    pub timings: Timings,
}

impl AnalysisReport {
    pub fn new(command: &str, parameters: Value, input_digest: String) -> Self {
        AnalysisReport {
            schema: "dstab-report/1",
            tool_version: env!("CARGO_PKG_VERSION"),
            input_digest,
            command: CommandInfo {
                name: command.into(),
                parameters,
            },
            verdict: None,
            spectra: Vec::new(),
            results: Value::Null,
            certificate_path: None,
            timings: Timings::default(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}

/// Content digest of the raw input bytes (files plus canonical flag text).
pub fn input_digest(parts: &[&[u8]]) -> String {
    let mut hasher = Sha256::new();
    for p in parts {
        hasher.update(p);
        hasher.update([0u8]);
    }
    hex::encode(hasher.finalize())
}
