//! Text formats.
//!
//! Hypergraph file: a header line `n r`, then one edge per line as
//! space-separated 1-based vertex ids. Lines starting with `#` are comments
//! and blank lines are ignored. Edge order is significant: certificates
//! refer to edges by their 1-based position in the file.
//!
//! Certificate file: `path` or `cycle`, then the vertex ids, then the edge
//! indices, one line each.

use std::fmt::Write as _;

use thiserror::Error;

use crate::certificate::{BergeCertificate, CertificateKind};
use crate::hypergraph::{Hypergraph, HypergraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    SyntaxError { line: usize, message: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: HypergraphError,
    },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match *self {
            ParseError::SyntaxError { line, .. } | ParseError::Invalid { line, .. } => line,
        }
    }
}

fn syntax<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError::SyntaxError {
        line,
        message: message.into(),
    })
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_numbers(line: usize, text: &str) -> Result<Vec<usize>, ParseError> {
    text.split_whitespace()
        .map(|tok| match tok.parse::<usize>() {
            Ok(v) => Ok(v),
            Err(_) => syntax(line, format!("'{tok}' is not a non-negative integer")),
        })
        .collect()
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = match lines.next() {
        Some(h) => h,
        None => return syntax(1, "missing header line 'n r'"),
    };
    let nums = parse_numbers(header_line, header)?;
    let [n, r] = nums[..] else {
        return syntax(header_line, "header must be exactly 'n r'");
    };

    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    for (line, body) in lines {
        edges.push(parse_numbers(line, body)?);
        edge_lines.push(line);
    }
    Hypergraph::new(n, r, edges).map_err(|source| {
        let line = source.edge().map_or(header_line, |e| edge_lines[e - 1]);
        let line = match source {
            HypergraphError::VertexOutOfRange { .. } => {
                first_line_with_bad_vertex(text, &edge_lines, n).unwrap_or(line)
            }
            _ => line,
        };
        ParseError::Invalid { line, source }
    })
}

fn first_line_with_bad_vertex(text: &str, edge_lines: &[usize], n: usize) -> Option<usize> {
    let all: Vec<&str> = text.lines().collect();
    edge_lines.iter().copied().find(|&l| {
        all[l - 1]
            .split_whitespace()
            .filter_map(|t| t.parse::<usize>().ok())
            .any(|v| v == 0 || v > n)
    })
}

/// Writes `h` with its edges in stored order; comments go first.
pub fn write_hypergraph(h: &Hypergraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "{} {}", h.n(), h.r());
    for e in h.edges() {
        out.push_str(&join(e));
        out.push('\n');
    }
    out
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn write_certificate(c: &BergeCertificate) -> String {
    format!("{}\n{}\n{}\n", c.kind, join(&c.vertices), join(&c.edges))
}

/// Parses a certificate file. Comment lines are skipped; the edge line may
/// be absent for a one-vertex path. Token counts must match the kind.
pub fn parse_certificate(text: &str) -> Result<BergeCertificate, ParseError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.starts_with('#'))
        .collect();
    let mut it = lines.into_iter().skip_while(|(_, l)| l.is_empty());
    let (kind_line, kind_text) = match it.next() {
        Some(k) => k,
        None => return syntax(1, "missing certificate kind"),
    };
    let kind = match kind_text {
        "path" => CertificateKind::Path,
        "cycle" => CertificateKind::Cycle,
        other => {
            return syntax(
                kind_line,
                format!("expected 'path' or 'cycle', found '{other}'"),
            )
        }
    };
    let (vertex_line, vertex_text) = it.next().unwrap_or((kind_line + 1, ""));
    let vertices = parse_numbers(vertex_line, vertex_text)?;
    if vertices.is_empty() {
        return syntax(vertex_line, "certificate lists no vertices");
    }
    let (edge_line, edge_text) = it.next().unwrap_or((vertex_line + 1, ""));
    let edges = parse_numbers(edge_line, edge_text)?;
    if let Some((line, extra)) = it.find(|(_, l)| !l.is_empty()) {
        return syntax(line, format!("unexpected trailing content '{extra}'"));
    }
    let expected = match kind {
        CertificateKind::Path => vertices.len() - 1,
        CertificateKind::Cycle => vertices.len(),
    };
    if edges.len() != expected {
        return syntax(
            edge_line,
            format!(
                "a {kind} with {} vertices needs {expected} edge indices, found {}",
                vertices.len(),
                edges.len()
            ),
        );
    }
    Ok(BergeCertificate {
        kind,
        vertices,
        edges,
    })
}

/// Comment line recording a special pair, as written by the generator.
pub fn special_pair_comment(x: usize, y: usize) -> String {
    format!("special pair: {x} {y}")
}

/// Reads back a special pair comment, if present.
pub fn parse_special_pair(text: &str) -> Option<(usize, usize)> {
    text.lines().find_map(|l| {
        let rest = l
            .trim()
            .strip_prefix('#')?
            .trim()
            .strip_prefix("special pair:")?;
        let nums: Vec<usize> = rest
            .split_whitespace()
            .filter_map(|t| t.parse().ok())
            .collect();
        match nums[..] {
            [x, y] => Some((x, y)),
            _ => None,
        }
    })
}
