use std::io::Write;
use std::path::Path;

use anyhow::{Context as _, Result};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// One line of the append-only run ledger.
#[derive(Debug, Serialize)]
pub struct RunLedger {
    pub command: String,
    pub input_digest: String,
    pub parameters: Value,
    pub result_digest: String,
    pub counts: Value,
    pub runtime_ms: u128,
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Canonical text of a JSON value: object keys sorted, no whitespace.
pub fn canonical(v: &Value) -> String {
    // serde_json keeps object keys in a BTreeMap unless preserve_order is on
    serde_json::to_string(v).expect("JSON values serialize")
}

pub fn append(path: &Path, record: &RunLedger) -> Result<()> {
    let mut f = std::fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .with_context(|| format!("cannot open ledger {}", path.display()))?;
    let line = serde_json::to_string(record)?;
    writeln!(f, "{line}").with_context(|| format!("cannot write ledger {}", path.display()))
}
