//! Region intersection models over a host graph, the partition-or-model
//! algorithm, and validators for everything it emits.

mod algorithm;
mod certificate;
pub mod generate;

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::format::{content_lines, expect_arity, parse_num};
use crate::graph::{Graph, Vertex};

pub use algorithm::{asdim_partition, control_oracle, partition_or_model, AsdimOutcome, Outcome};
pub use certificate::{
    minor_certificate, parse_certificate, validate_disjoint_partition, validate_partition, validate_t_model,
    write_disjoint_partition, write_partition, write_t_model, AnyCertificate, DisjointPartitionCertificate,
    ModelViolation, PartitionCertificate, PartitionViolation, TModelCertificate,
};

/// `mu[v]` is the region of `g`-vertex `v`: a sorted set of `h`-vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionModel {
    pub g: Graph,
    pub h: Graph,
    pub mu: Vec<Vec<Vertex>>,
}

impl RegionModel {
    /// Derives `g` from the regions. Regions are sorted and deduplicated but
    /// not checked for connectivity; see [`validate_region_model`].
    pub fn from_regions(h: Graph, mut mu: Vec<Vec<Vertex>>) -> Result<Self> {
        for r in &mut mu {
            r.sort_unstable();
            r.dedup();
            h.check_vertices(r)?;
        }
        let g = intersect(h.n(), &mu);
        Ok(RegionModel { g, h, mu })
    }

    /// The canonical model of `g` itself: the host is the 1-subdivision of
    /// `g` (vertex `n + e` subdivides the `e`-th edge) and `μ(v)` is `v` with
    /// the subdivision vertices of its edges. For `t >= 3` the host has a
    /// `K_t` minor exactly when `g` does.
    pub fn identity(g: Graph) -> Self {
        let n = g.n();
        let mut mu: Vec<Vec<Vertex>> = (0..n).map(|v| vec![v]).collect();
        let mut host_edges = Vec::with_capacity(2 * g.m());
        for (e, (u, v)) in g.edges().enumerate() {
            mu[u].push(n + e);
            mu[v].push(n + e);
            host_edges.push((u, n + e));
            host_edges.push((v, n + e));
        }
        let h = Graph::from_edges(n + g.m(), host_edges).expect("subdivision edges are simple");
        RegionModel { g, h, mu }
    }

    /// `Σ|μ(v)|`, the size measure the algorithm is linear in.
    pub fn size(&self) -> usize {
        self.mu.iter().map(Vec::len).sum()
    }

    /// The model restricted to `s`, with `g`-vertices renumbered in the
    /// order of `s`.
    pub fn restrict(&self, s: &[Vertex]) -> Result<RegionModel> {
        self.g.check_vertices(s)?;
        Ok(RegionModel {
            g: self.g.induced(s),
            h: self.h.clone(),
            mu: s.iter().map(|&v| self.mu[v].clone()).collect(),
        })
    }
}

/// Intersection graph of sorted regions, without connectivity checks.
fn intersect(nh: usize, mu: &[Vec<Vertex>]) -> Graph {
    let mut by_h: Vec<Vec<Vertex>> = vec![Vec::new(); nh];
    for (v, r) in mu.iter().enumerate() {
        for &x in r {
            by_h[x].push(v);
        }
    }
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); mu.len()];
    for owners in &by_h {
        for (a, &u) in owners.iter().enumerate() {
            for &v in &owners[a + 1..] {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    Graph::from_adjacency(adj)
}

/// Connected components of `h[set]`; `set` must be sorted.
pub(crate) fn set_components(h: &Graph, set: &[Vertex]) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; set.len()];
    let mut out = Vec::new();
    for start in 0..set.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![set[start]];
        let mut head = 0;
        while head < comp.len() {
            let x = comp[head];
            head += 1;
            for &y in h.neighbors(x) {
                if let Ok(p) = set.binary_search(&y) {
                    if !seen[p] {
                        seen[p] = true;
                        comp.push(y);
                    }
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegionViolation {
    /// `mu` does not have one region per `g`-vertex.
    RegionCount { expected: usize, found: usize },
    EmptyRegion(Vertex),
    HostVertexOutOfRange { vertex: Vertex, host_vertex: Vertex },
    Disconnected { vertex: Vertex, components: Vec<Vec<Vertex>> },
    /// `uv` is an edge of `g` but the regions are disjoint.
    MissingIntersection(Vertex, Vertex),
    /// The regions meet at the host vertex but `uv` is not an edge.
    UnexpectedIntersection { u: Vertex, v: Vertex, host_vertex: Vertex },
}

impl fmt::Display for RegionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegionViolation::RegionCount { expected, found } => {
                write!(f, "expected {expected} regions, found {found}")
            }
            RegionViolation::EmptyRegion(v) => write!(f, "region of {v} is empty"),
            RegionViolation::HostVertexOutOfRange { vertex, host_vertex } => {
                write!(f, "region of {vertex} names host vertex {host_vertex}, which does not exist")
            }
            RegionViolation::Disconnected { vertex, components } => {
                write!(f, "region of {vertex} is disconnected:")?;
                for c in components {
                    write!(f, " {c:?}")?;
                }
                Ok(())
            }
            RegionViolation::MissingIntersection(u, v) => {
                write!(f, "{u}-{v} is an edge but the regions are disjoint")
            }
            RegionViolation::UnexpectedIntersection { u, v, host_vertex } => {
                write!(f, "regions of {u} and {v} share host vertex {host_vertex} but {u}-{v} is not an edge")
            }
        }
    }
}

/// Checks non-emptiness and connectivity of every region and that regions
/// meet exactly on the edges of `g`.
pub fn validate_region_model(rm: &RegionModel) -> std::result::Result<(), RegionViolation> {
    if rm.mu.len() != rm.g.n() {
        return Err(RegionViolation::RegionCount {
            expected: rm.g.n(),
            found: rm.mu.len(),
        });
    }
    let mut sorted = Vec::with_capacity(rm.mu.len());
    for (v, r) in rm.mu.iter().enumerate() {
        if r.is_empty() {
            return Err(RegionViolation::EmptyRegion(v));
        }
        if let Some(&x) = r.iter().find(|&&x| x >= rm.h.n()) {
            return Err(RegionViolation::HostVertexOutOfRange { vertex: v, host_vertex: x });
        }
        let mut r = r.clone();
        r.sort_unstable();
        r.dedup();
        let comps = set_components(&rm.h, &r);
        if comps.len() > 1 {
            return Err(RegionViolation::Disconnected {
                vertex: v,
                components: comps,
            });
        }
        sorted.push(r);
    }
    let derived = intersect(rm.h.n(), &sorted);
    if let Some((u, v)) = derived.edges().find(|&(u, v)| !rm.g.has_edge(u, v)) {
        let host_vertex = *sorted[u].iter().find(|x| sorted[v].binary_search(x).is_ok()).unwrap();
        return Err(RegionViolation::UnexpectedIntersection { u, v, host_vertex });
    }
    if let Some((u, v)) = rm.g.edges().find(|&(u, v)| !derived.has_edge(u, v)) {
        return Err(RegionViolation::MissingIntersection(u, v));
    }
    Ok(())
}

/// The intersection graph of connected regions over `h`.
pub fn intersection_graph(h: &Graph, mu: &[Vec<Vertex>]) -> Result<Graph> {
    let mut sorted = Vec::with_capacity(mu.len());
    for (v, r) in mu.iter().enumerate() {
        h.check_vertices(r)?;
        let mut r = r.clone();
        r.sort_unstable();
        r.dedup();
        if set_components(h, &r).len() > 1 {
            return Err(Error::input(format!("region of {v} is not connected")));
        }
        sorted.push(r);
    }
    Ok(intersect(h.n(), &sorted))
}

pub fn write_region_model(rm: &RegionModel) -> String {
    let mut out = format!("p region {} {} {}\n", rm.g.n(), rm.h.n(), rm.h.m());
    for (u, v) in rm.h.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    for (v, r) in rm.mu.iter().enumerate() {
        for x in r {
            writeln!(out, "r {v} {x}").unwrap();
        }
    }
    out
}

/// Parses a region model; `g` is derived from the regions.
pub fn parse_region_model(text: &str) -> Result<RegionModel> {
    let mut lines = content_lines(text);
    let (line, head) = lines.next().ok_or_else(|| Error::parse(0, "empty input"))?;
    if head.len() != 5 || head[0] != "p" || head[1] != "region" {
        return Err(Error::parse(line, "expected `p region <nG> <nH> <mH>`"));
    }
    let ng = parse_num(line, head.get(2), "g-vertex count")?;
    let nh = parse_num(line, head.get(3), "host vertex count")?;
    let mh = parse_num(line, head.get(4), "host edge count")?;
    let mut edges = Vec::with_capacity(mh);
    let mut mu = vec![Vec::new(); ng];
    for (line, t) in lines {
        match t[0] {
            "e" => {
                expect_arity(line, &t, 3)?;
                edges.push((parse_num(line, t.get(1), "vertex")?, parse_num(line, t.get(2), "vertex")?));
            }
            "r" => {
                expect_arity(line, &t, 3)?;
                let v = parse_num(line, t.get(1), "g-vertex")?;
                let x = parse_num(line, t.get(2), "host vertex")?;
                if v >= ng {
                    return Err(Error::parse(line, format!("g-vertex {v} out of range")));
                }
                if x >= nh {
                    return Err(Error::parse(line, format!("host vertex {x} out of range")));
                }
                mu[v].push(x);
            }
            other => return Err(Error::parse(line, format!("unknown line type `{other}`"))),
        }
    }
    if edges.len() != mh {
        return Err(Error::input(format!("header promises {mh} host edges, found {}", edges.len())));
    }
    let h = Graph::from_edges(nh, edges)?;
    RegionModel::from_regions(h, mu)
}
