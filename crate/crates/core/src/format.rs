//! Line-oriented text formats for graphs, marked graphs and vertex maps.
//!
//! ```text
//! c optional comment
//! p graph 3 2
//! e 0 1
//! e 1 2
//! a 0
//! ```

use std::fmt::Write as _;

use crate::embed::EmbeddingMap;
use crate::error::{Error, Result};
use crate::graph::{Graph, MarkedGraph, Vertex};

/// Non-empty, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t: Vec<&str> = l.split_whitespace().collect();
        match t.first() {
            None => None,
            Some(&"c") => None,
            Some(_) => Some((i + 1, t)),
        }
    })
}

pub(crate) fn parse_num(line: usize, tok: Option<&&str>, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("{what} `{tok}` is not a non-negative integer")))
}

pub(crate) fn expect_arity(line: usize, toks: &[&str], n: usize) -> Result<()> {
    if toks.len() != n {
        return Err(Error::parse(
            line,
            format!("`{}` lines take {} fields, found {}", toks[0], n - 1, toks.len() - 1),
        ));
    }
    Ok(())
}

/// Values of `key=<n>` header tokens, in the order of `keys`.
pub(crate) fn header_params(line: usize, toks: &[&str], keys: &[&str]) -> Result<Vec<usize>> {
    keys.iter()
        .map(|key| {
            let val = toks
                .iter()
                .find_map(|t| t.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
                .ok_or_else(|| Error::parse(line, format!("missing `{key}=` in header")))?;
            val.parse()
                .map_err(|_| Error::parse(line, format!("bad value for `{key}`")))
        })
        .collect()
}

pub fn parse_marked_graph(text: &str) -> Result<MarkedGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut marks = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (line, t) in content_lines(text) {
        match t[0] {
            "p" => {
                if header.is_some() {
                    return Err(Error::parse(line, "second header line"));
                }
                if t.get(1) != Some(&"graph") {
                    return Err(Error::parse(line, "expected `p graph <n> <m>`"));
                }
                expect_arity(line, &t, 4)?;
                header = Some((parse_num(line, t.get(2), "n")?, parse_num(line, t.get(3), "m")?));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| Error::parse(line, "edge before header"))?;
                expect_arity(line, &t, 3)?;
                let u = parse_num(line, t.get(1), "endpoint")?;
                let v = parse_num(line, t.get(2), "endpoint")?;
                if u >= n || v >= n {
                    return Err(Error::parse(line, format!("endpoint out of range for n = {n}")));
                }
                if u == v {
                    return Err(Error::parse(line, format!("loop at {u}")));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(Error::parse(line, format!("duplicate edge {u} {v}")));
                }
                edges.push((u, v));
            }
            "a" => {
                let (n, _) = header.ok_or_else(|| Error::parse(line, "mark before header"))?;
                expect_arity(line, &t, 2)?;
                let v = parse_num(line, t.get(1), "vertex")?;
                if v >= n {
                    return Err(Error::parse(line, format!("mark {v} out of range for n = {n}")));
                }
                marks.push(v);
            }
            other => return Err(Error::parse(line, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(0, "missing `p graph` header"))?;
    if edges.len() != m {
        return Err(Error::parse(0, format!("header declares {m} edges, found {}", edges.len())));
    }
    marks.sort_unstable();
    if marks.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::parse(0, "vertex marked twice"));
    }
    MarkedGraph::new(Graph::from_edges(n, edges)?, &marks)
}

/// Parses a graph file; mark lines are rejected.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let g = parse_marked_graph(text)?;
    if g.num_marked() > 0 {
        return Err(Error::input("plain graph file contains mark lines"));
    }
    Ok(g.into_graph())
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.m());
    writeln!(out, "p graph {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

pub fn write_marked_graph(g: &MarkedGraph) -> String {
    let mut out = write_graph(g.graph());
    for v in g.marked_vertices() {
        writeln!(out, "a {v}").unwrap();
    }
    out
}

/// One `m <pattern> <host>` line per pattern vertex, ascending.
pub fn write_map(m: &EmbeddingMap) -> String {
    let mut out = String::new();
    for (p, h) in m.map.iter().enumerate() {
        writeln!(out, "m {p} {h}").unwrap();
    }
    out
}

/// Parses a map file. Every pattern vertex `0..n` must appear exactly once.
pub fn parse_map(text: &str, respect_marks: bool) -> Result<EmbeddingMap> {
    let mut pairs: Vec<(Vertex, Vertex)> = Vec::new();
    for (line, t) in content_lines(text) {
        if t[0] != "m" {
            return Err(Error::parse(line, format!("unknown line type `{}`", t[0])));
        }
        expect_arity(line, &t, 3)?;
        pairs.push((parse_num(line, t.get(1), "pattern vertex")?, parse_num(line, t.get(2), "host vertex")?));
    }
    pairs.sort_unstable();
    for (i, &(p, _)) in pairs.iter().enumerate() {
        if p != i {
            return Err(Error::input(format!("map is not defined on pattern vertex {i}")));
        }
    }
    Ok(EmbeddingMap::new(pairs.into_iter().map(|(_, h)| h).collect(), respect_marks))
}
