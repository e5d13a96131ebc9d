//! Line-oriented `key = value` config text used by CLI configs, injection
//! specs and run manifests.
//!
//! Format: one `key = value` pair per line, `#` starts a comment to end of
//! line, blank lines ignored. Keys are dotted paths (`labor.r.m1`). Values
//! are kept verbatim (trimmed); typed accessors parse on demand.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum KvError {
    #[error("line {line}: expected `key = value`, got {text:?}")]
    BadLine { line: usize, text: String },
    #[error("missing required key {0:?}")]
    MissingKey(String),
    #[error("key {key:?}: cannot parse {value:?} as {wanted}")]
    BadValue {
        key: String,
        value: String,
        wanted: &'static str,
    },
}

/// An ordered key/value record. Serialization is sorted by key, so equal
/// maps render byte-identically.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KvMap {
    entries: BTreeMap<String, String>,
}

impl KvMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn parse(text: &str) -> Result<Self, KvError> {
        let mut entries = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(KvError::BadLine {
                    line: idx + 1,
                    text: raw.to_string(),
                });
            };
            entries.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(Self { entries })
    }

    pub fn set(&mut self, key: &str, value: impl ToString) {
        self.entries.insert(key.to_string(), value.to_string());
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn require(&self, key: &str) -> Result<&str, KvError> {
        self.get(key).ok_or_else(|| KvError::MissingKey(key.into()))
    }

    pub fn get_f64(&self, key: &str) -> Result<Option<f64>, KvError> {
        self.get(key)
            .map(|v| {
                v.parse::<f64>().map_err(|_| KvError::BadValue {
                    key: key.into(),
                    value: v.into(),
                    wanted: "f64",
                })
            })
            .transpose()
    }

    pub fn get_u64(&self, key: &str) -> Result<Option<u64>, KvError> {
        self.get(key)
            .map(|v| {
                v.parse::<u64>().map_err(|_| KvError::BadValue {
                    key: key.into(),
                    value: v.into(),
                    wanted: "u64",
                })
            })
            .transpose()
    }

    /// Comma-separated list value; empty string yields an empty list.
    pub fn get_list(&self, key: &str) -> Option<Vec<String>> {
        self.get(key).map(|v| {
            v.split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect()
        })
    }

    /// All keys under a dotted prefix, e.g. `prefix("demand.")` yields
    /// `(suffix, value)` pairs in key order.
    pub fn with_prefix<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = (&'a str, &'a str)> {
        self.entries.iter().filter_map(move |(k, v)| {
            k.strip_prefix(prefix).map(|rest| (rest, v.as_str()))
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            let _ = writeln!(out, "{k} = {v}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render_round_trip() {
        let text = "b = 2\na = 1\n# comment\nc.d = hello world\n";
        let kv = KvMap::parse(text).unwrap();
        assert_eq!(kv.get("a"), Some("1"));
        assert_eq!(kv.get("c.d"), Some("hello world"));
        assert_eq!(kv.render(), "a = 1\nb = 2\nc.d = hello world\n");
    }

    #[test]
    fn rejects_bare_line() {
        let err = KvMap::parse("just text\n").unwrap_err();
        assert!(matches!(err, KvError::BadLine { line: 1, .. }));
    }

    #[test]
    fn prefix_iteration() {
        let kv = KvMap::parse("demand.1 = 10\ndemand.2 = 20\nother = x\n").unwrap();
        let got: Vec<_> = kv.with_prefix("demand.").collect();
        assert_eq!(got, vec![("1", "10"), ("2", "20")]);
    }
}
