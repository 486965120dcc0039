//! On-disk formats: plain edge lists and tree-set JSONL files.
//!
//! Edge-list format: line 1 holds `n`, followed by n-1 lines `u v` with
//! 0-based labels and `u < v`. Tree-set files hold one JSON object per line:
//! `{"n":…, "edges":[[u,v],…], "code":"<hex>"}`.

use std::io::{self, BufRead, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_code, CanonicalCode};
use crate::tree::{Tree, TreeError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error("line {line}: {source}")]
    Json {
        line: usize,
        #[source]
        source: serde_json::Error,
    },
    #[error("line {line}: stored code does not match the edge list")]
    CodeMismatch { line: usize },
}

fn parse_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse { line, msg: msg.into() }
}

/// Reads a tree from the edge-list format. Trailing blank lines are
/// tolerated; anything else after the edges is an error.
pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Tree, FormatError> {
    let mut lines = reader.lines().enumerate();
    let (_, first) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let n: usize = first?
        .trim()
        .parse()
        .map_err(|_| parse_err(1, "expected the vertex count"))?;
    if n == 0 {
        return Err(parse_err(1, "vertex count must be at least 1"));
    }
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for (idx, line) in lines {
        let line = line?;
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if edges.len() == n - 1 {
            return Err(parse_err(line_no, "unexpected content after the edge list"));
        }
        let mut parts = trimmed.split_whitespace();
        let u: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| parse_err(line_no, "expected `u v`"))?;
        let v: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| parse_err(line_no, "expected `u v`"))?;
        if parts.next().is_some() {
            return Err(parse_err(line_no, "expected exactly two labels"));
        }
        if u >= v {
            return Err(parse_err(line_no, "edges must be written with u < v"));
        }
        edges.push((u, v));
    }
    Ok(Tree::from_edges(n, &edges)?)
}

pub fn write_edge_list<W: Write>(mut writer: W, tree: &Tree) -> io::Result<()> {
    writeln!(writer, "{}", tree.n())?;
    for &(u, v) in tree.edges() {
        writeln!(writer, "{u} {v}")?;
    }
    Ok(())
}

#[derive(Debug, Serialize, Deserialize)]
struct TreeSetRecord {
    n: usize,
    edges: Vec<(usize, usize)>,
    code: String,
}

/// Writes one JSONL record per tree.
pub fn write_tree_set<W: Write>(
    mut writer: W,
    items: &[(Tree, CanonicalCode)],
) -> Result<(), FormatError> {
    for (tree, code) in items {
        let record = TreeSetRecord {
            n: tree.n(),
            edges: tree.edges().to_vec(),
            code: code.to_hex(),
        };
        serde_json::to_writer(&mut writer, &record)
            .map_err(|source| FormatError::Json { line: 0, source })?;
        writeln!(writer)?;
    }
    Ok(())
}

/// Reads a tree-set JSONL file, revalidating each tree and its stored code.
pub fn read_tree_set<R: BufRead>(reader: R) -> Result<Vec<(Tree, CanonicalCode)>, FormatError> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let record: TreeSetRecord = serde_json::from_str(&line)
            .map_err(|source| FormatError::Json { line: line_no, source })?;
        let tree = Tree::from_edges(record.n, &record.edges)?;
        let code = canonical_code(&tree);
        let stored = CanonicalCode::from_hex(&record.code)
            .map_err(|e| parse_err(line_no, e.to_string()))?;
        if stored != code {
            return Err(FormatError::CodeMismatch { line: line_no });
        }
        out.push((tree, code));
    }
    Ok(out)
}
