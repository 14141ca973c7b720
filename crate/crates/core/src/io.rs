//! Graph file formats: DIMACS edge format (1-based) and a plain edge list
//! (0-based). Both translate to internal 0-based ids at this boundary.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dimacs,
    EdgeList,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing 'p edge <n> <m>' header")]
    MissingHeader,
    #[error("line {line}: edge before the 'p' header")]
    EdgeBeforeHeader { line: usize },
    #[error("line {line}: duplicate 'p' header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: cannot parse '{content}'")]
    BadLine { line: usize, content: String },
    #[error("line {line}: vertex {v} out of range (n = {n})")]
    VertexOutOfRange { line: usize, v: i64, n: usize },
    #[error("line {line}: self-loop at vertex {v}")]
    SelfLoop { line: usize, v: usize },
}

/// Parsed graph plus non-fatal irregularities (e.g. an edge-count mismatch).
#[derive(Debug)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<ParsedGraph, ParseError> {
    match format {
        GraphFormat::Dimacs => parse_dimacs(text),
        GraphFormat::EdgeList => parse_edgelist(text),
    }
}

fn parse_dimacs(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut graph: Option<Graph> = None;
    let mut warnings = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let bad = || ParseError::BadLine {
            line,
            content: raw.to_string(),
        };
        let mut tok = trimmed.split_ascii_whitespace();
        match tok.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(ParseError::DuplicateHeader { line });
                }
                if tok.next() != Some("edge") {
                    return Err(bad());
                }
                let n: usize = tok.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                let m: usize = tok.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                if tok.next().is_some() {
                    return Err(bad());
                }
                header = Some((n, m));
                graph = Some(Graph::new(n));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(ParseError::EdgeBeforeHeader { line });
                };
                let u: i64 = tok.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                let v: i64 = tok.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                if tok.next().is_some() {
                    return Err(bad());
                }
                for &id in &[u, v] {
                    if id < 1 || id > n as i64 {
                        return Err(ParseError::VertexOutOfRange { line, v: id, n });
                    }
                }
                if u == v {
                    return Err(ParseError::SelfLoop {
                        line,
                        v: u as usize - 1,
                    });
                }
                graph
                    .as_mut()
                    .expect("header parsed")
                    .add_edge(u as usize - 1, v as usize - 1);
            }
            _ => return Err(bad()),
        }
    }
    let Some((_, declared_m)) = header else {
        return Err(ParseError::MissingHeader);
    };
    let graph = graph.expect("header parsed");
    if graph.edge_count() != declared_m {
        warnings.push(format!(
            "header declares {declared_m} edges, found {} unique edges",
            graph.edge_count()
        ));
    }
    Ok(ParsedGraph { graph, warnings })
}

fn parse_edgelist(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut graph: Option<Graph> = None;
    let mut warnings = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let bad = || ParseError::BadLine {
            line,
            content: raw.to_string(),
        };
        let fields: Vec<&str> = trimmed.split_ascii_whitespace().collect();
        if fields.len() != 2 {
            return Err(bad());
        }
        let a: i64 = fields[0].parse().map_err(|_| bad())?;
        let b: i64 = fields[1].parse().map_err(|_| bad())?;
        match header {
            None => {
                if a < 0 || b < 0 {
                    return Err(bad());
                }
                header = Some((a as usize, b as usize));
                graph = Some(Graph::new(a as usize));
            }
            Some((n, _)) => {
                for &id in &[a, b] {
                    if id < 0 || id >= n as i64 {
                        return Err(ParseError::VertexOutOfRange { line, v: id, n });
                    }
                }
                if a == b {
                    return Err(ParseError::SelfLoop {
                        line,
                        v: a as usize,
                    });
                }
                graph
                    .as_mut()
                    .expect("header parsed")
                    .add_edge(a as usize, b as usize);
            }
        }
    }
    let Some((_, declared_m)) = header else {
        return Err(ParseError::MissingHeader);
    };
    let graph = graph.expect("header parsed");
    if graph.edge_count() != declared_m {
        warnings.push(format!(
            "header declares {declared_m} edges, found {} unique edges",
            graph.edge_count()
        ));
    }
    Ok(ParsedGraph { graph, warnings })
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    let mut out = String::new();
    match format {
        GraphFormat::Dimacs => {
            out.push_str(&format!("p edge {} {}\n", g.n(), g.edge_count()));
            for (u, v) in g.edges() {
                out.push_str(&format!("e {} {}\n", u + 1, v + 1));
            }
        }
        GraphFormat::EdgeList => {
            out.push_str(&format!("{} {}\n", g.n(), g.edge_count()));
            for (u, v) in g.edges() {
                out.push_str(&format!("{u} {v}\n"));
            }
        }
    }
    out
}
