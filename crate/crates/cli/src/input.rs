use std::path::Path;

use anyhow::{bail, Context as _, Result};
use serde_json::Value;
use twistlink_core::{parse_pd, DiagramError, PlanarDiagram};

/// One diagram from a file or a corpus line.
pub struct Entry {
    pub name: String,
    pub text: String,
    /// Line of the corpus file the entry came from.
    pub line: Option<usize>,
}

pub fn read(path: &Path) -> Result<Vec<u8>> {
    let bytes = std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    if bytes.iter().all(|b| b.is_ascii_whitespace()) {
        bail!("{}: empty input", path.display());
    }
    Ok(bytes)
}

pub fn is_corpus(path: &Path) -> bool {
    path.extension().is_some_and(|e| e == "jsonl")
}

/// A PD file holds one diagram; a `.jsonl` corpus holds one
/// `{"name": ..., "pd": ...}` object per line.
pub fn entries(path: &Path, bytes: &[u8]) -> Result<Vec<Entry>> {
    let text = std::str::from_utf8(bytes).with_context(|| format!("{}: not UTF-8", path.display()))?;
    if !is_corpus(path) {
        let name = path
            .file_stem()
            .map_or("diagram".into(), |s| s.to_string_lossy().into_owned());
        return Ok(vec![Entry {
            name,
            text: text.to_string(),
            line: None,
        }]);
    }
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let n = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let v: Value = serde_json::from_str(line).with_context(|| format!("{}:{n}: bad JSON", path.display()))?;
        let Some(pd) = v.get("pd").and_then(Value::as_str) else {
            bail!("{}:{n}: missing \"pd\" string", path.display());
        };
        let name = v
            .get("name")
            .and_then(Value::as_str)
            .map_or(format!("line {n}"), str::to_string);
        out.push(Entry {
            name,
            text: pd.to_string(),
            line: Some(n),
        });
    }
    if out.is_empty() {
        bail!("{}: corpus has no diagrams", path.display());
    }
    Ok(out)
}

/// 1-based line holding the `index`-th crossing token.
fn token_line(text: &str, index: usize) -> usize {
    let mut seen = 0;
    for (i, line) in text.lines().enumerate() {
        seen += line.matches('X').count();
        if seen > index {
            return i + 1;
        }
    }
    text.lines().count().max(1)
}

pub fn diagram(path: &Path, e: &Entry) -> Result<PlanarDiagram> {
    parse_pd(&e.text).map_err(|err| {
        let line = match (&err, e.line) {
            (_, Some(n)) => n,
            (DiagramError::Malformed { index, .. }, None) => token_line(&e.text, *index),
            _ => 1,
        };
        anyhow::anyhow!("{}:{line}: {err}", path.display())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn token_lines() {
        let text = "X[1,4,2,5]\nX[3,6,4,1]\n\nX[5,2,6]";
        assert_eq!(token_line(text, 0), 1);
        assert_eq!(token_line(text, 1), 2);
        assert_eq!(token_line(text, 2), 4);
    }
}
