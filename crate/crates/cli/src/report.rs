use std::fmt::{self, Display};

use kexchange_core::VertexSet;

/// Line-oriented `key value` report. Keys are stable; vertex ids are
/// printed 1-based like in the input files.
#[derive(Debug, Default)]
pub struct Report {
    lines: Vec<(String, String)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.push("command", command);
        r
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Display) -> &mut Self {
        self.lines.push((key.into(), value.to_string()));
        self
    }

    pub fn push_set(&mut self, key: impl Into<String>, s: &VertexSet) -> &mut Self {
        let ids: Vec<String> = s.iter().map(|v| (v + 1).to_string()).collect();
        self.push(key, ids.join(" "))
    }
}

impl Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.lines {
            if v.is_empty() {
                writeln!(f, "{k}")?;
            } else {
                writeln!(f, "{k} {v}")?;
            }
        }
        Ok(())
    }
}
