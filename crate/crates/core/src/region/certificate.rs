use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::format::{content_lines, header_params, parse_num};
use crate::graph::{ball, delta_components, membership, CenterFinder, Graph, Vertex};

use super::RegionModel;

/// `(x_j, T_j)` pairs anchored at `(S, γ)`; `T_j` sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TModelCertificate {
    pub t: usize,
    pub gamma: usize,
    pub s: Vec<Vertex>,
    pub pairs: Vec<(Vertex, Vec<Vertex>)>,
}

/// A partition of `s` whose classes have δ-components of radius at most `rho`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionCertificate {
    pub delta: usize,
    pub rho: usize,
    pub max_classes: usize,
    pub s: Vec<Vertex>,
    pub classes: Vec<Vec<Vertex>>,
}

/// Families of sets partitioning `V(g)`; sets within a family are pairwise
/// more than `delta` apart and each has radius at most `radius`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointPartitionCertificate {
    pub delta: usize,
    pub radius: usize,
    pub max_families: usize,
    pub families: Vec<Vec<Vec<Vertex>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelViolation {
    WrongCount { expected: usize, found: usize },
    EmptySet(usize),
    HostVertexOutOfRange(Vertex),
    Overlap { host_vertex: Vertex, first: usize, second: usize },
    Disconnected(usize),
    NotAdjacent(usize, usize),
    /// `x_j` is not a vertex of `g`.
    AnchorOutOfRange(usize),
    AnchorNotInS(usize),
    /// `μ(N^γ[x_j])` contains a host vertex outside `T_j`.
    Escapes { index: usize, vertex: Vertex, host_vertex: Vertex },
}

impl fmt::Display for ModelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelViolation::WrongCount { expected, found } => write!(f, "expected {expected} sets, found {found}"),
            ModelViolation::EmptySet(j) => write!(f, "set {j} is empty"),
            ModelViolation::HostVertexOutOfRange(x) => write!(f, "host vertex {x} out of range"),
            ModelViolation::Overlap { host_vertex, first, second } => {
                write!(f, "sets {first} and {second} share host vertex {host_vertex}")
            }
            ModelViolation::Disconnected(j) => write!(f, "set {j} is not connected"),
            ModelViolation::NotAdjacent(a, b) => write!(f, "sets {a} and {b} are not adjacent"),
            ModelViolation::AnchorOutOfRange(j) => write!(f, "anchor of set {j} is not a vertex"),
            ModelViolation::AnchorNotInS(j) => write!(f, "anchor of set {j} is not in S"),
            ModelViolation::Escapes { index, vertex, host_vertex } => write!(
                f,
                "set {index}: region of {vertex}, near the anchor, reaches host vertex {host_vertex} outside the set"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionViolation {
    TooManyClasses { found: usize, bound: usize },
    EmptyClass(usize),
    OutOfRange(Vertex),
    Overlap(Vertex),
    NotInS(Vertex),
    Uncovered(Vertex),
    /// A δ-component (or a set) with no center within the bound.
    RadiusExceeded { class: usize, component: Vec<Vertex>, bound: usize },
    /// Two sets of one family within distance δ.
    TooClose { family: usize, u: Vertex, v: Vertex },
}

impl fmt::Display for PartitionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionViolation::TooManyClasses { found, bound } => write!(f, "{found} classes exceed the bound {bound}"),
            PartitionViolation::EmptyClass(c) => write!(f, "class {c} is empty"),
            PartitionViolation::OutOfRange(v) => write!(f, "vertex {v} out of range"),
            PartitionViolation::Overlap(v) => write!(f, "vertex {v} appears twice"),
            PartitionViolation::NotInS(v) => write!(f, "vertex {v} is not in S"),
            PartitionViolation::Uncovered(v) => write!(f, "vertex {v} is not covered"),
            PartitionViolation::RadiusExceeded { class, component, bound } => {
                write!(f, "class {class}: {component:?} has radius above {bound}")
            }
            PartitionViolation::TooClose { family, u, v } => {
                write!(f, "family {family}: {u} and {v} lie in different sets within distance delta")
            }
        }
    }
}

type ModelCheck = std::result::Result<(), ModelViolation>;

/// `sets` is a `K_t` minor model in `h`: non-empty, disjoint, connected and
/// pairwise adjacent.
pub(crate) fn check_minor(h: &Graph, sets: &[&[Vertex]]) -> ModelCheck {
    let t = sets.len();
    let mut owner = vec![usize::MAX; h.n()];
    for (j, set) in sets.iter().enumerate() {
        if set.is_empty() {
            return Err(ModelViolation::EmptySet(j + 1));
        }
        for &x in *set {
            if x >= h.n() {
                return Err(ModelViolation::HostVertexOutOfRange(x));
            }
            if owner[x] != usize::MAX {
                return Err(ModelViolation::Overlap {
                    host_vertex: x,
                    first: owner[x] + 1,
                    second: j + 1,
                });
            }
            owner[x] = j;
        }
    }
    let mut adjacent = vec![false; t * t];
    for (j, set) in sets.iter().enumerate() {
        let mut reached = 1;
        let mut stack = vec![set[0]];
        let mut seen = std::collections::HashSet::from([set[0]]);
        while let Some(x) = stack.pop() {
            for &y in h.neighbors(x) {
                match owner[y] {
                    o if o == j => {
                        if seen.insert(y) {
                            reached += 1;
                            stack.push(y);
                        }
                    }
                    usize::MAX => {}
                    o => adjacent[j * t + o] = true,
                }
            }
        }
        if reached != set.len() {
            return Err(ModelViolation::Disconnected(j + 1));
        }
    }
    for a in 0..t {
        for b in a + 1..t {
            if !adjacent[a * t + b] {
                return Err(ModelViolation::NotAdjacent(a + 1, b + 1));
            }
        }
    }
    Ok(())
}

/// The branch sets form a `K_t` minor model in `h`.
pub fn minor_certificate(h: &Graph, tm: &TModelCertificate) -> ModelCheck {
    if tm.pairs.len() != tm.t {
        return Err(ModelViolation::WrongCount {
            expected: tm.t,
            found: tm.pairs.len(),
        });
    }
    let sets: Vec<&[Vertex]> = tm.pairs.iter().map(|(_, s)| s.as_slice()).collect();
    check_minor(h, &sets)
}

/// The minor conditions plus `x_j ∈ S` and `μ(N^γ[x_j]) ⊆ T_j`, with the
/// neighbourhood taken in `rm.g`.
pub fn validate_t_model(rm: &RegionModel, tm: &TModelCertificate) -> ModelCheck {
    minor_certificate(&rm.h, tm)?;
    let in_s = membership(rm.g.n(), &tm.s.iter().copied().filter(|&v| v < rm.g.n()).collect::<Vec<_>>());
    let mut mark = vec![0u32; rm.g.n()];
    for (j, (x, set)) in tm.pairs.iter().enumerate() {
        if *x >= rm.g.n() || *x >= rm.mu.len() {
            return Err(ModelViolation::AnchorOutOfRange(j + 1));
        }
        if !in_s[*x] {
            return Err(ModelViolation::AnchorNotInS(j + 1));
        }
        for (v, _) in ball(&rm.g, &[*x], tm.gamma, &mut mark, j as u32 + 1) {
            if let Some(&y) = rm.mu.get(v).into_iter().flatten().find(|y| set.binary_search(y).is_err()) {
                return Err(ModelViolation::Escapes {
                    index: j + 1,
                    vertex: v,
                    host_vertex: y,
                });
            }
        }
    }
    Ok(())
}

type PartitionCheck = std::result::Result<(), PartitionViolation>;

/// Each vertex of `universe` (all of `g` when `None`) exactly once, and
/// nothing else.
fn check_cover<'a>(g: &Graph, universe: Option<&[Vertex]>, sets: impl Iterator<Item = &'a [Vertex]>) -> PartitionCheck {
    let allowed = match universe {
        Some(s) => {
            if let Some(&v) = s.iter().find(|&&v| v >= g.n()) {
                return Err(PartitionViolation::OutOfRange(v));
            }
            membership(g.n(), s)
        }
        None => vec![true; g.n()],
    };
    let mut seen = vec![false; g.n()];
    for set in sets {
        for &v in set {
            if v >= g.n() {
                return Err(PartitionViolation::OutOfRange(v));
            }
            if !allowed[v] {
                return Err(PartitionViolation::NotInS(v));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(PartitionViolation::Overlap(v));
            }
        }
    }
    match (0..g.n()).find(|&v| allowed[v] && !seen[v]) {
        Some(v) => Err(PartitionViolation::Uncovered(v)),
        None => Ok(()),
    }
}

/// Partition of `cert.s`, class count within the bound, and every
/// δ-component of every class within radius `rho` in `g`.
pub fn validate_partition(g: &Graph, cert: &PartitionCertificate) -> PartitionCheck {
    if cert.classes.len() > cert.max_classes {
        return Err(PartitionViolation::TooManyClasses {
            found: cert.classes.len(),
            bound: cert.max_classes,
        });
    }
    if let Some(c) = cert.classes.iter().position(Vec::is_empty) {
        return Err(PartitionViolation::EmptyClass(c + 1));
    }
    check_cover(g, Some(&cert.s), cert.classes.iter().map(|c| c.as_slice()))?;
    if cert.delta == 0 {
        // every 0-component is a single vertex
        return Ok(());
    }
    let mut finder = CenterFinder::new(g.n());
    for (c, class) in cert.classes.iter().enumerate() {
        let comps = delta_components(g, class, cert.delta).expect("vertices checked above");
        for comp in comps.sets {
            if finder.find(g, &comp, cert.rho).is_none() {
                return Err(PartitionViolation::RadiusExceeded {
                    class: c + 1,
                    component: comp,
                    bound: cert.rho,
                });
            }
        }
    }
    Ok(())
}

/// Families partition `V(g)`, each family is δ-disjoint, and every set has
/// radius at most `cert.radius`.
pub fn validate_disjoint_partition(g: &Graph, cert: &DisjointPartitionCertificate) -> PartitionCheck {
    if cert.families.len() > cert.max_families {
        return Err(PartitionViolation::TooManyClasses {
            found: cert.families.len(),
            bound: cert.max_families,
        });
    }
    for (f, fam) in cert.families.iter().enumerate() {
        if fam.iter().any(Vec::is_empty) {
            return Err(PartitionViolation::EmptyClass(f + 1));
        }
    }
    check_cover(g, None, cert.families.iter().flatten().map(|s| s.as_slice()))?;
    let mut set_of = vec![usize::MAX; g.n()];
    let mut finder = CenterFinder::new(g.n());
    for (f, fam) in cert.families.iter().enumerate() {
        for (i, set) in fam.iter().enumerate() {
            for &v in set {
                set_of[v] = i;
            }
            if finder.find(g, set, cert.radius).is_none() {
                return Err(PartitionViolation::RadiusExceeded {
                    class: f + 1,
                    component: set.clone(),
                    bound: cert.radius,
                });
            }
        }
        if cert.delta > 0 {
            let all: Vec<Vertex> = fam.iter().flatten().copied().collect();
            let comps = delta_components(g, &all, cert.delta).expect("vertices checked above");
            for comp in comps.sets {
                if let Some(&w) = comp.iter().find(|&&w| set_of[w] != set_of[comp[0]]) {
                    return Err(PartitionViolation::TooClose {
                        family: f + 1,
                        u: comp[0],
                        v: w,
                    });
                }
            }
        }
    }
    Ok(())
}

fn push_list(out: &mut String, head: &str, vs: &[Vertex]) {
    out.push_str(head);
    for v in vs {
        write!(out, " {v}").unwrap();
    }
    out.push('\n');
}

pub fn write_partition(cert: &PartitionCertificate) -> String {
    let mut out = format!(
        "p partition delta={} rho={} bound={}\n",
        cert.delta, cert.rho, cert.max_classes
    );
    push_list(&mut out, "S:", &cert.s);
    for (c, class) in cert.classes.iter().enumerate() {
        push_list(&mut out, &format!("class {}:", c + 1), class);
    }
    out
}

/// One `class <i>:` line per set; sets of one family share the index.
pub fn write_disjoint_partition(cert: &DisjointPartitionCertificate) -> String {
    let mut out = format!(
        "p disjoint-partition delta={} radius={} bound={}\n",
        cert.delta, cert.radius, cert.max_families
    );
    for (f, fam) in cert.families.iter().enumerate() {
        for set in fam {
            push_list(&mut out, &format!("class {}:", f + 1), set);
        }
    }
    out
}

pub fn write_t_model(cert: &TModelCertificate) -> String {
    let mut out = format!("p model t={} gamma={}\n", cert.t, cert.gamma);
    push_list(&mut out, "S:", &cert.s);
    for (j, (x, set)) in cert.pairs.iter().enumerate() {
        push_list(&mut out, &format!("model {}: x={x} T=", j + 1), set);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyCertificate {
    Partition(PartitionCertificate),
    Disjoint(DisjointPartitionCertificate),
    Model(TModelCertificate),
}

fn labelled_index(line: usize, tok: Option<&&str>) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, "missing index"))?;
    let idx = tok
        .strip_suffix(':')
        .ok_or_else(|| Error::parse(line, "expected `<index>:`"))?;
    match idx.parse() {
        Ok(i) if i > 0 => Ok(i),
        _ => Err(Error::parse(line, format!("bad index `{idx}`"))),
    }
}

fn vertex_list(line: usize, toks: &[&str]) -> Result<Vec<Vertex>> {
    toks.iter().map(|t| parse_num(line, Some(t), "vertex")).collect()
}

/// Parses any of the three certificate formats, dispatching on the header.
pub fn parse_certificate(text: &str) -> Result<AnyCertificate> {
    let mut lines = content_lines(text);
    let (line, head) = lines.next().ok_or_else(|| Error::parse(0, "empty certificate"))?;
    if head[0] != "p" || head.len() < 2 {
        return Err(Error::parse(line, "expected a `p` header"));
    }
    let kind = head[1];
    let mut s = Vec::new();
    let mut blocks: Vec<(usize, Option<Vertex>, Vec<Vertex>)> = Vec::new();
    for (line, t) in lines {
        match t[0] {
            "S:" => s = vertex_list(line, &t[1..])?,
            "class" => blocks.push((labelled_index(line, t.get(1))?, None, vertex_list(line, &t[2..])?)),
            "model" => {
                let j = labelled_index(line, t.get(1))?;
                let x = t
                    .get(2)
                    .and_then(|x| x.strip_prefix("x="))
                    .ok_or_else(|| Error::parse(line, "expected `x=<vertex>`"))?;
                let x = parse_num(line, Some(&x), "anchor")?;
                if t.get(3) != Some(&"T=") {
                    return Err(Error::parse(line, "expected `T=`"));
                }
                blocks.push((j, Some(x), vertex_list(line, &t[4..])?));
            }
            other => return Err(Error::parse(line, format!("unexpected line `{other}`"))),
        }
    }
    let grouped = |blocks: &[(usize, Option<Vertex>, Vec<Vertex>)]| -> Result<Vec<Vec<Vec<Vertex>>>> {
        let count = blocks.iter().map(|b| b.0).max().unwrap_or(0);
        let mut out = vec![Vec::new(); count];
        for (i, _, vs) in blocks {
            out[i - 1].push(vs.clone());
        }
        Ok(out)
    };
    match kind {
        "partition" => {
            let [delta, rho, bound] = header_params(line, &head, &["delta", "rho", "bound"])?[..] else {
                unreachable!()
            };
            let g = grouped(&blocks)?;
            if g.iter().any(|c| c.len() != 1) {
                return Err(Error::input("each class index must appear exactly once"));
            }
            Ok(AnyCertificate::Partition(PartitionCertificate {
                delta,
                rho,
                max_classes: bound,
                s,
                classes: g.into_iter().map(|mut c| c.pop().unwrap()).collect(),
            }))
        }
        "disjoint-partition" => {
            let [delta, radius, bound] = header_params(line, &head, &["delta", "radius", "bound"])?[..] else {
                unreachable!()
            };
            Ok(AnyCertificate::Disjoint(DisjointPartitionCertificate {
                delta,
                radius,
                max_families: bound,
                families: grouped(&blocks)?,
            }))
        }
        "model" => {
            let [t, gamma] = header_params(line, &head, &["t", "gamma"])?[..] else {
                unreachable!()
            };
            let mut pairs = vec![None; blocks.len()];
            for (j, x, set) in blocks {
                let slot = pairs
                    .get_mut(j - 1)
                    .ok_or_else(|| Error::input(format!("model index {j} out of sequence")))?;
                if slot.is_some() {
                    return Err(Error::input(format!("model index {j} repeated")));
                }
                let mut set = set;
                set.sort_unstable();
                *slot = Some((x.unwrap(), set));
            }
            Ok(AnyCertificate::Model(TModelCertificate {
                t,
                gamma,
                s,
                pairs: pairs.into_iter().map(Option::unwrap).collect(),
            }))
        }
        other => Err(Error::parse(line, format!("unknown certificate kind `{other}`"))),
    }
}
