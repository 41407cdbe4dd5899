//! Multicovers, skewers, homomorphs, clique-multicovers and clique
//! embeddings: validators that pinpoint the violated condition, the greedy
//! multicover extraction, and text formats.

use std::fmt::{self, Write as _};

use crate::embed::{verify_embedding, EmbeddingMap};
use crate::error::{Error, Result};
use crate::format::{content_lines, header_params, parse_num};
use crate::graph::{membership, Graph, MarkedGraph, Vertex};
use crate::invariants::{chromatic_number, Budget};

/// Default largest index set listed when enumerating all-skew subsets.
pub const DEFAULT_SKEW_SUBSET_CAP: usize = 6;

/// `({x_i}, {N_i}, C)` over an ascending index list; `x[p]` and `n_sets[p]`
/// belong to index `indices[p]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Multicover {
    pub indices: Vec<usize>,
    pub x: Vec<Vertex>,
    pub n_sets: Vec<Vec<Vertex>>,
    pub c: Vec<Vertex>,
}

impl Multicover {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skewer {
    pub y: Vec<Vertex>,
    pub z: Vertex,
}

/// One map per index of the multicover, from the pattern into the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorph {
    pub maps: Vec<Vec<Vertex>>,
}

/// One level `(X_i, N_{1,i}..N_{i,i}, W_i)` of a clique-multicover.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliqueLevel {
    pub x: Vec<Vertex>,
    /// `n[h]` is `N_{h+1,i}`.
    pub n: Vec<Vec<Vertex>>,
    pub w: Vec<Vertex>,
}

/// `(W_0, X_1, N_{1,1}, W_1, …)` with `W_0 = V(G)` left implicit.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SCliqueMulticover {
    pub s: usize,
    pub levels: Vec<CliqueLevel>,
}

impl SCliqueMulticover {
    /// `N_{i,j}` with 1-based indices.
    pub fn cover(&self, i: usize, j: usize) -> &[Vertex] {
        &self.levels[j - 1].n[i - 1]
    }
}

/// An `({N_i}, W)`-embedding of `B̈_k`: one map per index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueEmbedding {
    pub maps: Vec<Vec<Vertex>>,
}

/// The first condition found to fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Shape(String),
    OutOfRange(Vertex),
    /// A vertex is used by two parts that must be disjoint.
    Overlap(Vertex),
    /// `x_i` (or `X_i`) misses a vertex it must be complete to.
    NotComplete { index: usize, vertex: Vertex },
    /// `x_i` (or `X_i`) sees a vertex it must be anticomplete to.
    NotAnticomplete { index: usize, vertex: Vertex },
    /// A vertex of `C` (or `W_j`) has no neighbour in the cover set.
    NotCovered { index: usize, vertex: Vertex },
    /// `x_j` sees a vertex of an earlier `N_i`.
    NotIndependent { index: usize, vertex: Vertex },
    NotInSet { index: usize, vertex: Vertex, set: &'static str },
    NotAdjacent { index: usize, u: Vertex, v: Vertex },
    NotClique { index: usize },
    NotNested { i: usize, j: usize, vertex: Vertex },
    MissingEdge { index: usize, u: Vertex, v: Vertex },
    Disagree { index: usize, vertex: Vertex },
    NotEmbedding { index: usize, reason: String },
    MarkedImageNotIndependent(Vertex, Vertex),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape(s) => write!(f, "malformed structure: {s}"),
            Violation::OutOfRange(v) => write!(f, "vertex {v} out of range"),
            Violation::Overlap(v) => write!(f, "vertex {v} lies in two parts"),
            Violation::NotComplete { index, vertex } => {
                write!(f, "index {index}: apex not adjacent to {vertex}")
            }
            Violation::NotAnticomplete { index, vertex } => {
                write!(f, "index {index}: apex adjacent to {vertex}")
            }
            Violation::NotCovered { index, vertex } => {
                write!(f, "index {index}: {vertex} has no neighbour in the cover set")
            }
            Violation::NotIndependent { index, vertex } => {
                write!(f, "index {index}: apex adjacent to earlier cover vertex {vertex}")
            }
            Violation::NotInSet { index, vertex, set } => {
                write!(f, "index {index}: {vertex} not in {set}")
            }
            Violation::NotAdjacent { index, u, v } => {
                write!(f, "index {index}: {u} and {v} not adjacent")
            }
            Violation::NotClique { index } => write!(f, "index {index}: apex set is not a clique of the stated size"),
            Violation::NotNested { i, j, vertex } => {
                write!(f, "cover ({i},{j}): {vertex} not in the previous cover set")
            }
            Violation::MissingEdge { index, u, v } => {
                write!(f, "index {index}: pattern edge {u}-{v} not mapped to an edge")
            }
            Violation::Disagree { index, vertex } => {
                write!(f, "index {index}: maps disagree on unmarked vertex {vertex}")
            }
            Violation::NotEmbedding { index, reason } => write!(f, "index {index}: {reason}"),
            Violation::MarkedImageNotIndependent(u, v) => {
                write!(f, "marked images {u} and {v} are adjacent")
            }
        }
    }
}

type Check = std::result::Result<(), Violation>;

fn in_range(g: &Graph, vs: &[Vertex]) -> Check {
    match vs.iter().find(|&&v| v >= g.n()) {
        Some(&v) => Err(Violation::OutOfRange(v)),
        None => Ok(()),
    }
}

fn disjoint<'a>(n: usize, parts: impl Iterator<Item = &'a [Vertex]>) -> Check {
    let mut used = vec![false; n];
    for part in parts {
        for &v in part {
            if std::mem::replace(&mut used[v], true) {
                return Err(Violation::Overlap(v));
            }
        }
    }
    Ok(())
}

fn first_uncovered(g: &Graph, cover: &[bool], targets: &[Vertex]) -> Option<Vertex> {
    targets
        .iter()
        .copied()
        .find(|&v| !g.neighbors(v).iter().any(|&w| cover[w]))
}

/// Checks every condition of a multicover, plus the independence condition
/// when `independent` is set.
pub fn validate_multicover(g: &Graph, mc: &Multicover, independent: bool) -> Check {
    let l = mc.indices.len();
    if mc.x.len() != l || mc.n_sets.len() != l {
        return Err(Violation::Shape("index, apex and cover lists differ in length".into()));
    }
    if mc.indices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Violation::Shape("indices not strictly ascending".into()));
    }
    in_range(g, &mc.x)?;
    in_range(g, &mc.c)?;
    for s in &mc.n_sets {
        in_range(g, s)?;
    }
    disjoint(
        g.n(),
        mc.x.iter()
            .map(std::slice::from_ref)
            .chain(mc.n_sets.iter().map(|s| s.as_slice()))
            .chain(std::iter::once(mc.c.as_slice())),
    )?;
    for p in 0..l {
        let (i, x) = (mc.indices[p], mc.x[p]);
        if let Some(&v) = mc.n_sets[p].iter().find(|&&v| !g.has_edge(x, v)) {
            return Err(Violation::NotComplete { index: i, vertex: v });
        }
        let later = mc.x[p + 1..]
            .iter()
            .chain(mc.n_sets[p + 1..].iter().flatten())
            .chain(&mc.c);
        if let Some(&v) = later.into_iter().find(|&&v| g.has_edge(x, v)) {
            return Err(Violation::NotAnticomplete { index: i, vertex: v });
        }
        let cover = membership(g.n(), &mc.n_sets[p]);
        if let Some(v) = first_uncovered(g, &cover, &mc.c) {
            return Err(Violation::NotCovered { index: i, vertex: v });
        }
        if independent {
            if let Some(&v) = mc.n_sets[..p].iter().flatten().find(|&&v| g.has_edge(x, v)) {
                return Err(Violation::NotIndependent { index: i, vertex: v });
            }
        }
    }
    Ok(())
}

/// `y_p` must lie in `N_p ∩ N(z) ∩ N(x_q)` for all `q >= p`, with `z ∈ C`.
pub fn validate_skewer(g: &Graph, mc: &Multicover, sk: &Skewer) -> Check {
    if sk.y.len() != mc.len() {
        return Err(Violation::Shape("one skewer vertex per index expected".into()));
    }
    in_range(g, &sk.y)?;
    in_range(g, &[sk.z])?;
    if !mc.c.contains(&sk.z) {
        return Err(Violation::NotInSet { index: 0, vertex: sk.z, set: "C" });
    }
    for p in 0..mc.len() {
        let (i, y) = (mc.indices[p], sk.y[p]);
        if !mc.n_sets[p].contains(&y) {
            return Err(Violation::NotInSet { index: i, vertex: y, set: "N_i" });
        }
        if !g.has_edge(y, sk.z) {
            return Err(Violation::NotAdjacent { index: i, u: y, v: sk.z });
        }
        if let Some(&x) = mc.x[p..].iter().find(|&&x| !g.has_edge(y, x)) {
            return Err(Violation::NotAdjacent { index: i, u: y, v: x });
        }
    }
    Ok(())
}

/// Validates a homomorph of `pattern` and returns its root, sorted.
pub fn validate_homomorph(
    g: &Graph,
    mc: &Multicover,
    pattern: &MarkedGraph,
    hm: &Homomorph,
) -> std::result::Result<Vec<Vertex>, Violation> {
    if hm.maps.len() != mc.len() {
        return Err(Violation::Shape("one map per index expected".into()));
    }
    let in_c = membership(g.n(), &mc.c);
    let mut root = Vec::new();
    for (p, phi) in hm.maps.iter().enumerate() {
        let i = mc.indices[p];
        if phi.len() != pattern.n() {
            return Err(Violation::Shape(format!("map {i} is not total")));
        }
        in_range(g, phi)?;
        if let Some((u, v)) = pattern.graph().edges().find(|&(u, v)| !g.has_edge(phi[u], phi[v])) {
            return Err(Violation::MissingEdge { index: i, u, v });
        }
        let in_n = membership(g.n(), &mc.n_sets[p]);
        for v in 0..pattern.n() {
            let img = phi[v];
            if pattern.is_marked(v) {
                if !in_n[img] {
                    return Err(Violation::NotInSet { index: i, vertex: img, set: "N_i" });
                }
                if let Some(&x) = mc.x[p..].iter().find(|&&x| !g.has_edge(img, x)) {
                    return Err(Violation::NotAdjacent { index: i, u: img, v: x });
                }
                root.push(img);
            } else {
                if !in_c[img] {
                    return Err(Violation::NotInSet { index: i, vertex: img, set: "C" });
                }
                if p > 0 && hm.maps[0][v] != img {
                    return Err(Violation::Disagree { index: i, vertex: v });
                }
            }
        }
    }
    root.sort_unstable();
    root.dedup();
    Ok(root)
}

/// Status of one index pair of a clique-multicover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairLabel {
    pub i: usize,
    pub j: usize,
    pub independent: bool,
    pub skew: bool,
}

impl PairLabel {
    pub fn label(&self) -> &'static str {
        match (self.independent, self.skew) {
            (true, true) => "independent+skew",
            (true, false) => "independent",
            (false, true) => "skew",
            (false, false) => "neither",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueMulticoverReport {
    pub pairs: Vec<PairLabel>,
    pub tidy: bool,
    /// All-skew index sets (1-based) of size at most the cap, in
    /// lexicographic order.
    pub skew_subsets: Vec<Vec<usize>>,
    /// Set when some listed subset of the cap size extends to a larger one.
    pub skew_subsets_truncated: bool,
}

fn check_level_shapes(cm: &SCliqueMulticover, n: usize) -> Check {
    for (idx, lvl) in cm.levels.iter().enumerate() {
        if lvl.n.len() != idx + 1 {
            return Err(Violation::Shape(format!("level {} needs {} cover sets", idx + 1, idx + 1)));
        }
        for v in lvl.x.iter().chain(lvl.n.iter().flatten()).chain(&lvl.w) {
            if *v >= n {
                return Err(Violation::OutOfRange(*v));
            }
        }
    }
    Ok(())
}

/// Checks the clique-multicover conditions and classifies index pairs.
pub fn validate_clique_multicover(
    g: &Graph,
    cm: &SCliqueMulticover,
    subset_cap: usize,
) -> std::result::Result<CliqueMulticoverReport, Violation> {
    check_level_shapes(cm, g.n())?;
    let l = cm.levels.len();
    let mut prev_w = vec![true; g.n()];
    for (idx, lvl) in cm.levels.iter().enumerate() {
        let i = idx + 1;
        if lvl.x.len() != cm.s || !g.is_clique(&lvl.x) || {
            let mut s = lvl.x.clone();
            s.sort_unstable();
            s.windows(2).any(|w| w[0] == w[1])
        } {
            return Err(Violation::NotClique { index: i });
        }
        for &x in &lvl.x {
            if let Some(&v) = lvl.n[idx].iter().find(|&&v| !g.has_edge(x, v)) {
                return Err(Violation::NotComplete { index: i, vertex: v });
            }
            if let Some(&v) = lvl.w.iter().find(|&&v| g.has_edge(x, v)) {
                return Err(Violation::NotAnticomplete { index: i, vertex: v });
            }
        }
        for &v in lvl.x.iter().chain(&lvl.n[idx]).chain(&lvl.w) {
            if !prev_w[v] {
                return Err(Violation::NotInSet { index: i, vertex: v, set: "W_{i-1}" });
            }
        }
        prev_w = membership(g.n(), &lvl.w);
    }
    for i in 1..=l {
        for j in i + 1..=l {
            let outer = membership(g.n(), cm.cover(i, j - 1));
            if let Some(&v) = cm.cover(i, j).iter().find(|&&v| !outer[v]) {
                return Err(Violation::NotNested { i, j, vertex: v });
            }
            let cover = membership(g.n(), cm.cover(i, j));
            if let Some(v) = first_uncovered(g, &cover, &cm.levels[j - 1].w) {
                return Err(Violation::NotCovered { index: j, vertex: v });
            }
        }
    }
    let mut pairs = Vec::new();
    for i in 1..=l {
        for j in i + 1..=l {
            let nij = cm.cover(i, j);
            let xj = &cm.levels[j - 1].x;
            let independent = xj.iter().any(|&x| nij.iter().all(|&v| !g.has_edge(x, v)));
            let complete = xj.iter().all(|&x| nij.iter().all(|&v| g.has_edge(x, v)));
            let inner = membership(g.n(), nij);
            let wj = &cm.levels[j - 1].w;
            let dropped_clear = cm
                .cover(i, j - 1)
                .iter()
                .filter(|&&v| !inner[v])
                .all(|&v| wj.iter().all(|&w| !g.has_edge(v, w)));
            pairs.push(PairLabel {
                i,
                j,
                independent,
                skew: complete && dropped_clear,
            });
        }
    }
    let tidy = pairs.iter().all(|p| p.independent || p.skew);
    let skew = |i: usize, j: usize| pairs.iter().any(|p| p.i == i && p.j == j && p.skew);
    let mut skew_subsets = Vec::new();
    let mut truncated = false;
    let mut stack: Vec<Vec<usize>> = (1..=l).rev().map(|i| vec![i]).collect();
    while let Some(set) = stack.pop() {
        let last = *set.last().unwrap();
        let ext: Vec<usize> = (last + 1..=l).filter(|&j| set.iter().all(|&i| skew(i, j))).collect();
        if set.len() == subset_cap {
            truncated |= !ext.is_empty();
        } else {
            for &j in ext.iter().rev() {
                let mut next = set.clone();
                next.push(j);
                stack.push(next);
            }
        }
        skew_subsets.push(set);
    }
    Ok(CliqueMulticoverReport {
        pairs,
        tidy,
        skew_subsets,
        skew_subsets_truncated: truncated,
    })
}

/// Checks an `({N_i}, W)`-embedding of `pattern` (normally `B̈_k`).
pub fn validate_clique_embedding(
    g: &Graph,
    pattern: &MarkedGraph,
    family: &CliqueEmbedding,
    n_sets: &[Vec<Vertex>],
    w: &[Vertex],
) -> Check {
    if family.maps.is_empty() || family.maps.len() != n_sets.len() {
        return Err(Violation::Shape("one non-empty map per cover set expected".into()));
    }
    in_range(g, w)?;
    for s in n_sets {
        in_range(g, s)?;
    }
    disjoint(g.n(), n_sets.iter().map(|s| s.as_slice()).chain(std::iter::once(w)))?;
    let host = MarkedGraph::unmarked(g.clone());
    let in_w = membership(g.n(), w);
    let mut marked_images = Vec::new();
    for (p, phi) in family.maps.iter().enumerate() {
        let index = p + 1;
        if phi.len() != pattern.n() {
            return Err(Violation::Shape(format!("map {index} is not total")));
        }
        in_range(g, phi)?;
        let plain = MarkedGraph::unmarked(pattern.graph().clone());
        if let Err(e) = verify_embedding(&plain, &host, &EmbeddingMap::new(phi.clone(), false)) {
            return Err(Violation::NotEmbedding {
                index,
                reason: e.to_string(),
            });
        }
        let in_n = membership(g.n(), &n_sets[p]);
        for v in 0..pattern.n() {
            let img = phi[v];
            if pattern.is_marked(v) {
                if !in_n[img] {
                    return Err(Violation::NotInSet { index, vertex: img, set: "N_i" });
                }
                marked_images.push(img);
            } else {
                if !in_w[img] {
                    return Err(Violation::NotInSet { index, vertex: img, set: "W" });
                }
                if family.maps[0][v] != img {
                    return Err(Violation::Disagree { index, vertex: v });
                }
            }
        }
    }
    marked_images.sort_unstable();
    marked_images.dedup();
    for (a, &u) in marked_images.iter().enumerate() {
        if let Some(&v) = marked_images[a + 1..].iter().find(|&&v| g.has_edge(u, v)) {
            return Err(Violation::MarkedImageNotIndependent(u, v));
        }
    }
    Ok(())
}

/// `N¹(X)`: vertices outside `X` complete to it. `N²(X)`: vertices outside
/// `N¹(X)`, anticomplete to `X`, with a neighbour in `N¹(X)`.
pub fn clique_shells(g: &Graph, x: &[Vertex]) -> Result<(Vec<Vertex>, Vec<Vertex>)> {
    g.check_vertices(x)?;
    if !g.is_clique(x) {
        return Err(Error::input("shell centre is not a clique"));
    }
    shells_within(g, x, None)
}

/// Shells inside the induced subgraph on `within` (all of `g` when `None`).
fn shells_within(g: &Graph, x: &[Vertex], within: Option<&[bool]>) -> Result<(Vec<Vertex>, Vec<Vertex>)> {
    let inside = |v: Vertex| within.is_none_or(|w| w[v]);
    let in_x = membership(g.n(), x);
    let mut hits = vec![0usize; g.n()];
    for &v in x {
        for &w in g.neighbors(v) {
            if inside(w) {
                hits[w] += 1;
            }
        }
    }
    let n1: Vec<Vertex> = (0..g.n())
        .filter(|&v| !in_x[v] && inside(v) && hits[v] == x.len() && !x.is_empty())
        .collect();
    let in_n1 = membership(g.n(), &n1);
    let n2: Vec<Vertex> = (0..g.n())
        .filter(|&v| {
            inside(v)
                && !in_n1[v]
                && !in_x[v]
                && hits[v] == 0
                && g.neighbors(v).iter().any(|&w| in_n1[w])
        })
        .collect();
    Ok((n1, n2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selector {
    /// The apex whose second neighbourhood has the largest χ.
    MaxChiN2,
    MinId,
}

/// Repeatedly picks an apex `x`, takes `N = N(x)` and recurses into the
/// second neighbourhood. Only apexes with a non-empty second neighbourhood
/// are eligible, so the output can be shorter than `target_len`.
pub fn extract_multicover(g: &Graph, target_len: usize, selector: Selector, budget: Budget) -> Multicover {
    let mut current: Vec<Vertex> = (0..g.n()).collect();
    let mut mc = Multicover::default();
    while mc.len() < target_len {
        let within = membership(g.n(), &current);
        let mut best: Option<(usize, Vertex, Vec<Vertex>, Vec<Vertex>)> = None;
        for &x in &current {
            let (n1, n2) = shells_within(g, &[x], Some(&within)).expect("singletons are cliques");
            if n2.is_empty() {
                continue;
            }
            let score = match selector {
                Selector::MinId => 0,
                Selector::MaxChiN2 => chromatic_number(&g.induced(&n2), budget).value,
            };
            if best.as_ref().is_none_or(|b| score > b.0) {
                best = Some((score, x, n1, n2));
            }
            if selector == Selector::MinId {
                break;
            }
        }
        let Some((_, x, n1, n2)) = best else { break };
        mc.indices.push(mc.len() + 1);
        mc.x.push(x);
        mc.n_sets.push(n1);
        current = n2;
    }
    mc.c = if mc.is_empty() { (0..g.n()).collect() } else { current };
    mc
}

fn push_set(out: &mut String, head: &str, vs: &[Vertex]) {
    out.push_str(head);
    for v in vs {
        write!(out, " {v}").unwrap();
    }
    out.push('\n');
}

pub fn write_multicover(mc: &Multicover) -> String {
    let mut out = String::from("p multicover\n");
    push_set(&mut out, "I:", &mc.indices);
    for p in 0..mc.len() {
        writeln!(out, "x {} {}", mc.indices[p], mc.x[p]).unwrap();
    }
    for p in 0..mc.len() {
        push_set(&mut out, &format!("N {}", mc.indices[p]), &mc.n_sets[p]);
    }
    push_set(&mut out, "C", &mc.c);
    out
}

fn nums(line: usize, toks: &[&str]) -> Result<Vec<usize>> {
    toks.iter().map(|t| parse_num(line, Some(t), "vertex")).collect()
}

pub fn parse_multicover(text: &str) -> Result<Multicover> {
    let mut mc = Multicover::default();
    let mut x = std::collections::BTreeMap::new();
    let mut n = std::collections::BTreeMap::new();
    let mut saw_header = false;
    for (line, t) in content_lines(text) {
        match t[0] {
            "p" if t.get(1) == Some(&"multicover") => saw_header = true,
            "I:" => mc.indices = nums(line, &t[1..])?,
            "x" => {
                if t.len() != 3 {
                    return Err(Error::parse(line, "expected `x <index> <vertex>`"));
                }
                x.insert(parse_num(line, t.get(1), "index")?, parse_num(line, t.get(2), "vertex")?);
            }
            "N" => {
                n.insert(parse_num(line, t.get(1), "index")?, nums(line, &t[2..])?);
            }
            "C" => mc.c = nums(line, &t[1..])?,
            other => return Err(Error::parse(line, format!("unknown line type `{other}`"))),
        }
    }
    if !saw_header {
        return Err(Error::parse(0, "missing `p multicover` header"));
    }
    for &i in &mc.indices {
        mc.x.push(*x.get(&i).ok_or_else(|| Error::input(format!("no apex for index {i}")))?);
        mc.n_sets.push(n.get(&i).cloned().unwrap_or_default());
    }
    if x.len() != mc.indices.len() || n.keys().any(|i| !mc.indices.contains(i)) {
        return Err(Error::input("apex or cover lines for undeclared indices"));
    }
    Ok(mc)
}

pub fn write_skewer(mc: &Multicover, sk: &Skewer) -> String {
    let mut out = String::new();
    for (p, y) in sk.y.iter().enumerate() {
        writeln!(out, "y {} {}", mc.indices[p], y).unwrap();
    }
    writeln!(out, "z {}", sk.z).unwrap();
    out
}

pub fn parse_skewer(text: &str, mc: &Multicover) -> Result<Skewer> {
    let mut y = std::collections::BTreeMap::new();
    let mut z = None;
    for (line, t) in content_lines(text) {
        match t[0] {
            "y" if t.len() == 3 => {
                y.insert(parse_num(line, t.get(1), "index")?, parse_num(line, t.get(2), "vertex")?);
            }
            "z" if t.len() == 2 => z = Some(parse_num(line, t.get(1), "vertex")?),
            _ => return Err(Error::parse(line, "expected `y <index> <vertex>` or `z <vertex>`")),
        }
    }
    let ys = mc
        .indices
        .iter()
        .map(|i| y.get(i).copied().ok_or_else(|| Error::input(format!("no skewer vertex for index {i}"))))
        .collect::<Result<_>>()?;
    Ok(Skewer {
        y: ys,
        z: z.ok_or_else(|| Error::input("missing `z` line"))?,
    })
}

pub fn write_clique_multicover(cm: &SCliqueMulticover) -> String {
    let mut out = format!("p clique-multicover s={} l={}\n", cm.s, cm.levels.len());
    for (idx, lvl) in cm.levels.iter().enumerate() {
        let i = idx + 1;
        push_set(&mut out, &format!("X {i}"), &lvl.x);
        for (h, set) in lvl.n.iter().enumerate() {
            push_set(&mut out, &format!("N {} {i}", h + 1), set);
        }
        push_set(&mut out, &format!("W {i}"), &lvl.w);
    }
    out
}

pub fn parse_clique_multicover(text: &str) -> Result<SCliqueMulticover> {
    let mut cm = SCliqueMulticover::default();
    let mut header = false;
    for (line, t) in content_lines(text) {
        match t[0] {
            "p" if t.get(1) == Some(&"clique-multicover") => {
                let [s, l] = header_params(line, &t, &["s", "l"])?[..] else { unreachable!() };
                cm.s = s;
                cm.levels = (0..l)
                    .map(|i| CliqueLevel {
                        n: vec![Vec::new(); i + 1],
                        ..Default::default()
                    })
                    .collect();
                header = true;
            }
            "X" | "W" | "N" if header => {
                let i = parse_num(line, t.get(1), "index")?;
                let (level, rest) = if t[0] == "N" {
                    (parse_num(line, t.get(2), "index")?, 3)
                } else {
                    (i, 2)
                };
                if level == 0 || level > cm.levels.len() || (t[0] == "N" && (i == 0 || i > level)) {
                    return Err(Error::parse(line, "index out of range"));
                }
                let vs = nums(line, &t[rest..])?;
                let lvl = &mut cm.levels[level - 1];
                match t[0] {
                    "X" => lvl.x = vs,
                    "W" => lvl.w = vs,
                    _ => lvl.n[i - 1] = vs,
                }
            }
            other => return Err(Error::parse(line, format!("unexpected line `{other}`"))),
        }
    }
    if !header {
        return Err(Error::parse(0, "missing `p clique-multicover` header"));
    }
    Ok(cm)
}
