//! The output envelope: every invocation emits exactly one JSON document
//! carrying the effective flag values next to the result, so a saved output
//! is reproducible from its own metadata.

use serde::{Deserialize, Serialize};

pub const CLI_SCHEMA: &str = "deltakit/cli/v1";

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Envelope {
    #[serde(rename = "$schema")]
    pub schema: String,
    pub invocation: Invocation,
    pub result: serde_json::Value,
}

/// Effective invocation: positionals as given, flags after defaulting.
/// Absent fields did not apply to the subcommand at all.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Invocation {
    pub subcommand: String,
    #[serde(default)]
    pub args: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Only recorded under `--timings`; excluded from byte-stability.
    #[serde(rename = "elapsedMs", default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Invocation {
    pub fn new(subcommand: &str, args: Vec<String>) -> Self {
        Invocation {
            subcommand: subcommand.to_string(),
            args,
            truncation: None,
            outer: None,
            budget: None,
            mode: None,
            seed: None,
            elapsed_ms: None,
        }
    }

    pub fn truncation(mut self, d: usize) -> Self {
        self.truncation = Some(d);
        self
    }

    pub fn outer(mut self, n: usize) -> Self {
        self.outer = Some(n);
        self
    }

    pub fn budget(mut self, steps: u64) -> Self {
        self.budget = Some(steps);
        self
    }

    pub fn mode(mut self, mode: &str) -> Self {
        self.mode = Some(mode.to_string());
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}
