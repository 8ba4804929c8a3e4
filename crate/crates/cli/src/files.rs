use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use kexchange_core::io::{self, DimacsGraph, ParseError};
use kexchange_core::{Graph, VertexSet};

/// Parse errors get the file name prepended; I/O errors already carry it.
fn located(e: ParseError, what: &str, path: &Path) -> anyhow::Error {
    match e {
        ParseError::Io { .. } => e.into(),
        _ => anyhow::Error::new(e).context(format!("reading {what} {}", path.display())),
    }
}

pub fn graph(path: &Path) -> Result<DimacsGraph> {
    io::read_dimacs(path).map_err(|e| located(e, "graph", path))
}

pub fn set(path: &Path, g: &Graph) -> Result<VertexSet> {
    io::read_vertex_set(path, g.n()).map_err(|e| located(e, "vertex set", path))
}

pub fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

/// `<prefix>.<ext>`, keeping any dots already in the prefix.
pub fn with_ext(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}
