//! Structured text records emitted by the command-line front end: a single
//! self-describing key/value object per invocation, byte-stable across runs
//! for identical inputs.

use sha2::{Digest, Sha256};

/// One value in a report tree.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Str(String),
    Int(i128),
    Float(f64),
    Bool(bool),
    /// Exact quadratic-field or rational value, already rendered.
    Exact(String),
    List(Vec<Value>),
    Map(Vec<(String, Value)>),
}

impl Value {
    pub fn str(s: impl ToString) -> Value {
        Value::Str(s.to_string())
    }

    pub fn exact(s: impl ToString) -> Value {
        Value::Exact(s.to_string())
    }

    fn write(&self, out: &mut String, indent: usize) {
        match self {
            Value::Str(s) => {
                out.push_str(s);
                out.push('\n');
            }
            Value::Int(v) => {
                out.push_str(&v.to_string());
                out.push('\n');
            }
            Value::Float(v) => {
                // shortest round-trip form keeps records byte-stable
                out.push_str(&format!("{v:?}"));
                out.push('\n');
            }
            Value::Bool(v) => {
                out.push_str(if *v { "true" } else { "false" });
                out.push('\n');
            }
            Value::Exact(s) => {
                out.push_str("exact ");
                out.push_str(s);
                out.push('\n');
            }
            Value::List(items) => {
                out.push('\n');
                for item in items {
                    out.push_str(&"  ".repeat(indent + 1));
                    out.push_str("- ");
                    match item {
                        Value::List(_) | Value::Map(_) => {
                            // nested containers open their own block
                            item.write(out, indent + 1);
                        }
                        _ => item.write(out, indent + 1),
                    }
                }
            }
            Value::Map(fields) => {
                out.push('\n');
                for (key, val) in fields {
                    out.push_str(&"  ".repeat(indent + 1));
                    out.push_str(key);
                    out.push(':');
                    if !matches!(val, Value::List(_) | Value::Map(_)) {
                        out.push(' ');
                    }
                    val.write(out, indent + 1);
                }
            }
        }
    }
}

/// Top-level record for one CLI invocation.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub version: &'static str,
    /// "exact" or "float tol=<t>".
    pub mode: String,
    pub input_digest: Option<String>,
    pub results: Value,
    pub citations: Vec<String>,
}

impl Report {
    pub fn new(command: impl Into<String>, mode: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            version: env!("CARGO_PKG_VERSION"),
            mode: mode.into(),
            input_digest: None,
            results: Value::Map(Vec::new()),
            citations: Vec::new(),
        }
    }

    pub fn with_digest_of(mut self, bytes: &[u8]) -> Report {
        self.input_digest = Some(digest(bytes));
        self
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("distkit-report:\n");
        out.push_str(&format!("  command: {}\n", self.command));
        out.push_str(&format!("  version: {}\n", self.version));
        out.push_str(&format!("  mode: {}\n", self.mode));
        if let Some(d) = &self.input_digest {
            out.push_str(&format!("  input-digest: {d}\n"));
        }
        out.push_str("  results:");
        self.results.write(&mut out, 1);
        if !self.citations.is_empty() {
            out.push_str("  citations:");
            Value::List(
                self.citations
                    .iter()
                    .map(|c| Value::Str(c.clone()))
                    .collect(),
            )
            .write(&mut out, 1);
        }
        out
    }
}

pub fn digest(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    format!("sha256:{:x}", h.finalize())
}

/// Convenience constructors for the map-building style used by the CLI.
pub fn map(fields: Vec<(&str, Value)>) -> Value {
    Value::Map(fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
}

pub fn floats(vals: &[f64]) -> Value {
    Value::List(vals.iter().map(|&v| Value::Float(v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_is_stable_and_nested() {
        let mut r = Report::new("analyze x.pts", "float tol=1e-9");
        r.results = map(vec![
            ("cardinality", Value::Int(5)),
            ("classes", floats(&[1.0, 2.618033988749895])),
            (
                "nested",
                map(vec![("flag", Value::Bool(true)), ("tag", Value::str("ok"))]),
            ),
        ]);
        r.citations.push("somewhere".into());
        let a = r.render();
        let b = r.render();
        assert_eq!(a, b);
        assert!(a.contains("cardinality: 5"));
        assert!(a.contains("- 2.618033988749895"));
        assert!(a.contains("flag: true"));
        assert!(a.starts_with("distkit-report:\n"));
    }

    #[test]
    fn digest_is_prefixed_hex() {
        let d = digest(b"abc");
        assert!(d.starts_with("sha256:"));
        assert_eq!(d.len(), 7 + 64);
        assert_eq!(d, digest(b"abc"));
    }

    #[test]
    fn exact_values_render_tagged() {
        let mut r = Report::new("bounds", "exact");
        r.results = map(vec![("bound", Value::exact("5/4"))]);
        assert!(r.render().contains("bound: exact 5/4"));
    }
}
