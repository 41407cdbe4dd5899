//! Brute-force oracles shared by the integration tests and the acceptance
//! suite. Everything here is deliberately naive and independent of the
//! library's search code.
#![allow(dead_code)]

pub mod planted;
pub mod region;

use burling_core::graph::{Graph, MarkedGraph, Vertex};

/// Enumerates every injective map and checks the induced-embedding
/// conditions directly.
pub fn exists_injective_embedding(pattern: &MarkedGraph, host: &MarkedGraph, respect_marks: bool) -> bool {
    let (p, h) = (pattern.graph(), host.graph());
    if p.n() > h.n() {
        return false;
    }
    let mut map = Vec::with_capacity(p.n());
    let mut used = vec![false; h.n()];
    fn rec(
        p: &MarkedGraph,
        h: &MarkedGraph,
        marks: bool,
        map: &mut Vec<Vertex>,
        used: &mut [bool],
    ) -> bool {
        if map.len() == p.n() {
            return full_check(p, h, marks, map);
        }
        for x in 0..h.n() {
            if !used[x] {
                used[x] = true;
                map.push(x);
                let ok = rec(p, h, marks, map, used);
                map.pop();
                used[x] = false;
                if ok {
                    return true;
                }
            }
        }
        false
    }
    rec(pattern, host, respect_marks, &mut map, &mut used)
}

fn full_check(p: &MarkedGraph, h: &MarkedGraph, marks: bool, map: &[Vertex]) -> bool {
    for u in 0..p.n() {
        if marks && p.is_marked(u) != h.is_marked(map[u]) {
            return false;
        }
        for v in u + 1..p.n() {
            if p.graph().has_edge(u, v) != h.graph().has_edge(map[u], map[v]) {
                return false;
            }
        }
    }
    true
}

/// Any map at all, edge-preserving.
pub fn exists_homomorphism(pattern: &Graph, host: &Graph) -> bool {
    if pattern.n() == 0 {
        return true;
    }
    if host.n() == 0 {
        return false;
    }
    let mut map = vec![0usize; pattern.n()];
    loop {
        if pattern.edges().all(|(u, v)| host.has_edge(map[u], map[v])) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == map.len() {
                return false;
            }
            map[i] += 1;
            if map[i] < host.n() {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

fn independent_masks(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut adj = vec![0u32; n];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    (0u32..1 << n)
        .map(|s| (0..n).all(|v| s & (1 << v) == 0 || adj[v] & s == 0))
        .collect()
}

/// χ by dynamic programming over vertex subsets; `n <= 16`.
pub fn chromatic_by_subsets(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16);
    let ind = independent_masks(g);
    let full = (1usize << n) - 1;
    let mut chi = vec![usize::MAX; 1 << n];
    chi[0] = 0;
    for s in 1..=full {
        let low = s & s.wrapping_neg();
        // subsets of s containing its lowest vertex
        let rest = s ^ low;
        let mut t = rest;
        loop {
            let part = t | low;
            if ind[part] && chi[s ^ part] != usize::MAX {
                chi[s] = chi[s].min(chi[s ^ part] + 1);
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & rest;
        }
    }
    chi[full]
}

/// Whether some map `V -> 0..k` is a proper colouring, by enumeration.
pub fn k_colorable_by_enumeration(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut c = vec![0usize; n];
    loop {
        if g.edges().all(|(u, v)| c[u] != c[v]) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            c[i] += 1;
            if c[i] < k {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

/// `k`-colourability by plain backtracking in vertex order.
pub fn k_colorable_backtrack(g: &Graph, k: usize) -> bool {
    fn rec(g: &Graph, k: usize, c: &mut Vec<usize>) -> bool {
        let v = c.len();
        if v == g.n() {
            return true;
        }
        // unused colours are interchangeable, so try only the first of them
        let fresh = c.iter().copied().max().map_or(0, |m| m + 1);
        for col in 0..k.min(fresh + 1) {
            if g.neighbors(v).iter().all(|&u| u >= v || c[u] != col) {
                c.push(col);
                if rec(g, k, c) {
                    return true;
                }
                c.pop();
            }
        }
        false
    }
    rec(g, k, &mut Vec::with_capacity(g.n()))
}

/// ω by checking every subset; `n <= 16`.
pub fn clique_by_subsets(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16);
    let mut best = 0;
    for s in 0u32..1 << n {
        let vs: Vec<Vertex> = (0..n).filter(|&v| s & (1 << v) != 0).collect();
        if vs.len() > best && g.is_clique(&vs) {
            best = vs.len();
        }
    }
    best
}

/// All-pairs distances by Floyd–Warshall; unreachable pairs are huge.
pub fn all_distances(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for v in 0..n {
        d[v][v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}
