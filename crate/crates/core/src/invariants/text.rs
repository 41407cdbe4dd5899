//! Text format for invariant certificates. The header names the kind and
//! the certified value; the body is `v <vertex> <colour>` for colourings,
//! `v <vertex>` for cliques and `m <pattern> <host>` for maps out of `B_k`.
//!
//! ```text
//! p coloring 3
//! v 0 0
//! v 1 1
//! v 2 2
//! ```

use std::fmt::Write as _;

use super::Certificate;
use crate::embed::EmbeddingMap;
use crate::error::{Error, Result};
use crate::format::{content_lines, expect_arity, parse_num, write_map};
use crate::graph::Vertex;

fn kind(c: &Certificate) -> &'static str {
    match c {
        Certificate::Coloring(_) => "coloring",
        Certificate::Clique(_) => "clique",
        Certificate::Embedding(_) => "embedding",
        Certificate::Homomorphism(_) => "homomorphism",
    }
}

pub fn write_certificate(value: usize, c: &Certificate) -> String {
    let mut out = format!("p {} {value}\n", kind(c));
    match c {
        Certificate::Coloring(colors) => {
            for (v, col) in colors.iter().enumerate() {
                writeln!(out, "v {v} {col}").unwrap();
            }
        }
        Certificate::Clique(vs) => {
            for v in vs {
                writeln!(out, "v {v}").unwrap();
            }
        }
        Certificate::Embedding(m) => out.push_str(&write_map(m)),
        Certificate::Homomorphism(m) => out.push_str(&write_map(&EmbeddingMap::new(m.clone(), false))),
    }
    out
}

/// Values indexed by the first field, which must cover `0..len` exactly once.
fn dense(pairs: Vec<(usize, Vertex)>, what: &str) -> Result<Vec<Vertex>> {
    let mut pairs = pairs;
    pairs.sort_unstable();
    for (i, &(p, _)) in pairs.iter().enumerate() {
        if p != i {
            return Err(Error::input(format!("{what} is not defined on {i} exactly once")));
        }
    }
    Ok(pairs.into_iter().map(|(_, x)| x).collect())
}

/// Parses a certificate file into `(value, certificate)`.
pub fn parse_certificate(text: &str) -> Result<(usize, Certificate)> {
    let mut lines = content_lines(text);
    let (line, head) = lines.next().ok_or_else(|| Error::parse(0, "empty input"))?;
    if head[0] != "p" || head.len() != 3 {
        return Err(Error::parse(line, "expected `p <kind> <value>`"));
    }
    let value = parse_num(line, head.get(2), "value")?;
    let (tag, arity) = match head[1] {
        "coloring" => ("v", 3),
        "clique" => ("v", 2),
        "embedding" | "homomorphism" => ("m", 3),
        other => return Err(Error::parse(line, format!("unknown certificate kind `{other}`"))),
    };
    let mut singles = Vec::new();
    let mut pairs = Vec::new();
    for (line, t) in lines {
        if t[0] != tag {
            return Err(Error::parse(line, format!("unknown line type `{}`", t[0])));
        }
        expect_arity(line, &t, arity)?;
        let a = parse_num(line, t.get(1), "vertex")?;
        if arity == 2 {
            singles.push(a);
        } else {
            pairs.push((a, parse_num(line, t.get(2), "value")?));
        }
    }
    let c = match head[1] {
        "coloring" => Certificate::Coloring(dense(pairs, "colouring")?),
        "clique" => Certificate::Clique(singles),
        "embedding" => Certificate::Embedding(EmbeddingMap::new(dense(pairs, "map")?, false)),
        _ => Certificate::Homomorphism(dense(pairs, "map")?),
    };
    Ok((value, c))
}
