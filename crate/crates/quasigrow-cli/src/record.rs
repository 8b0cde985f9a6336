//! The JSON run record every subcommand emits in `--format json` / `--json`
//! mode: command name, echoed parameters, command-specific outputs. No
//! timestamps anywhere, so identical invocations serialize identically.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeMap;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub outputs: Value,
    pub tool_version: String,
    pub exact_mode: bool,
}

impl RunRecord {
    pub fn new(command: &str) -> RunRecord {
        RunRecord {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            outputs: Value::Null,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            exact_mode: true,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> RunRecord {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn outputs(mut self, outputs: Value) -> RunRecord {
        self.outputs = outputs;
        self
    }

    /// Deterministic rendering: struct field order plus sorted parameter keys.
    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("run records always serialize")
    }
}
