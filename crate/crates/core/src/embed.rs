//! Induced (marked) subgraph embeddings: a verifier and a deterministic
//! backtracking search with an explicit expansion budget.

use crate::graph::{MarkedGraph, Vertex};

/// Default number of candidate extensions a search may examine.
pub const DEFAULT_SEARCH_BUDGET: u64 = 100_000_000;

/// Injective pattern→host vertex map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingMap {
    pub map: Vec<Vertex>,
    pub respect_marks: bool,
}

impl EmbeddingMap {
    pub fn new(map: Vec<Vertex>, respect_marks: bool) -> Self {
        EmbeddingMap { map, respect_marks }
    }

    pub fn identity(n: usize, respect_marks: bool) -> Self {
        EmbeddingMap::new((0..n).collect(), respect_marks)
    }

    /// `other ∘ self`: first apply `self`, then `other`.
    pub fn then(&self, other: &EmbeddingMap) -> EmbeddingMap {
        EmbeddingMap::new(
            self.map.iter().map(|&v| other.map[v]).collect(),
            self.respect_marks && other.respect_marks,
        )
    }
}

/// Result of a bounded exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    /// The search space was exhausted: no solution exists.
    NotFound,
    /// The expansion budget ran out before the search finished.
    BudgetExhausted,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

/// Why a claimed embedding is not one.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EmbeddingFailure {
    #[error("map has {found} entries but the pattern has {expected} vertices")]
    NotTotal { expected: usize, found: usize },
    #[error("pattern vertex {vertex} maps outside the host")]
    OutOfRange { vertex: Vertex },
    #[error("pattern vertices {0} and {1} share an image")]
    NotInjective(Vertex, Vertex),
    #[error("pattern edge {0}-{1} is not a host edge")]
    MissingEdge(Vertex, Vertex),
    #[error("pattern non-edge {0}-{1} maps onto a host edge")]
    ExtraEdge(Vertex, Vertex),
    #[error("mark of pattern vertex {0} differs from its image")]
    MarkMismatch(Vertex),
}

/// Checks that `m` is an induced embedding of `pattern` in `host`,
/// mark-preserving in both directions when `m.respect_marks` is set.
///
/// Runs in time linear in the pattern edges plus the host degrees of the
/// image, so it is usable for hosts with tens of thousands of vertices.
pub fn verify_embedding(
    pattern: &MarkedGraph,
    host: &MarkedGraph,
    m: &EmbeddingMap,
) -> Result<(), EmbeddingFailure> {
    let p = pattern.graph();
    let h = host.graph();
    if m.map.len() != p.n() {
        return Err(EmbeddingFailure::NotTotal {
            expected: p.n(),
            found: m.map.len(),
        });
    }
    let mut preimage = vec![usize::MAX; h.n()];
    for (v, &img) in m.map.iter().enumerate() {
        if img >= h.n() {
            return Err(EmbeddingFailure::OutOfRange { vertex: v });
        }
        if preimage[img] != usize::MAX {
            return Err(EmbeddingFailure::NotInjective(preimage[img], v));
        }
        preimage[img] = v;
        if m.respect_marks && pattern.is_marked(v) != host.is_marked(img) {
            return Err(EmbeddingFailure::MarkMismatch(v));
        }
    }
    for (u, v) in p.edges() {
        if !h.has_edge(m.map[u], m.map[v]) {
            return Err(EmbeddingFailure::MissingEdge(u, v));
        }
    }
    for (u, &img) in m.map.iter().enumerate() {
        for &w in h.neighbors(img) {
            let pw = preimage[w];
            if pw != usize::MAX && !p.has_edge(u, pw) {
                return Err(EmbeddingFailure::ExtraEdge(u.min(pw), u.max(pw)));
            }
        }
    }
    Ok(())
}

/// Order in which pattern vertices are assigned: start from a maximum-degree
/// vertex, then repeatedly take the vertex with the most already-ordered
/// neighbours (ties: larger degree, then smaller id).
fn search_order(pattern: &MarkedGraph) -> Vec<Vertex> {
    let g = pattern.graph();
    let n = g.n();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| {
                (links[a], g.degree(a))
                    .cmp(&(links[b], g.degree(b)))
                    .then(b.cmp(&a))
            })
            .expect("an unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for &w in g.neighbors(next) {
            links[w] += 1;
        }
    }
    order
}

/// Searches for an induced embedding of `pattern` into `host`. The result is
/// deterministic: candidates are always tried in ascending host id.
pub fn find_embedding(
    pattern: &MarkedGraph,
    host: &MarkedGraph,
    respect_marks: bool,
    budget: u64,
) -> SearchOutcome<EmbeddingMap> {
    let p = pattern.graph();
    let h = host.graph();
    let n = p.n();
    if n == 0 {
        return SearchOutcome::Found(EmbeddingMap::new(Vec::new(), respect_marks));
    }
    if n > h.n() || p.m() > h.m() {
        return SearchOutcome::NotFound;
    }
    if respect_marks && pattern.num_marked() > host.num_marked() {
        return SearchOutcome::NotFound;
    }
    let order = search_order(pattern);
    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // Earlier-ordered neighbours of each ordered vertex.
    let back: Vec<Vec<Vertex>> = order
        .iter()
        .map(|&u| {
            p.neighbors(u)
                .iter()
                .copied()
                .filter(|&w| position[w] < position[u])
                .collect()
        })
        .collect();

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; h.n()];
    let mut spent = 0u64;
    // candidate lists per depth and the next index to try
    let mut cands: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut cursor = vec![0usize; n];

    let gen = |depth: usize, image: &[Vertex], out: &mut Vec<Vertex>| {
        out.clear();
        let anchors = &back[depth];
        if anchors.is_empty() {
            out.extend(0..h.n());
        } else {
            let pivot = anchors
                .iter()
                .map(|&w| image[w])
                .min_by_key(|&x| (h.degree(x), x))
                .unwrap();
            out.extend_from_slice(h.neighbors(pivot));
        }
    };

    let mut depth = 0;
    gen(0, &image, &mut cands[0]);
    cursor[0] = 0;
    loop {
        let u = order[depth];
        let mut advanced = false;
        while cursor[depth] < cands[depth].len() {
            let c = cands[depth][cursor[depth]];
            cursor[depth] += 1;
            spent += 1;
            if spent > budget {
                return SearchOutcome::BudgetExhausted;
            }
            if used[c] || h.degree(c) < p.degree(u) {
                continue;
            }
            if respect_marks && pattern.is_marked(u) != host.is_marked(c) {
                continue;
            }
            let anchors = &back[depth];
            if !anchors.iter().all(|&w| h.has_edge(image[w], c)) {
                continue;
            }
            let used_nbrs = h.neighbors(c).iter().filter(|&&x| used[x]).count();
            if used_nbrs != anchors.len() {
                continue;
            }
            image[u] = c;
            used[c] = true;
            advanced = true;
            break;
        }
        if advanced {
            if depth + 1 == n {
                return SearchOutcome::Found(EmbeddingMap::new(image, respect_marks));
            }
            depth += 1;
            gen(depth, &image, &mut cands[depth]);
            cursor[depth] = 0;
        } else {
            if depth == 0 {
                return SearchOutcome::NotFound;
            }
            depth -= 1;
            let prev = order[depth];
            used[image[prev]] = false;
            image[prev] = usize::MAX;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn plain(g: Graph) -> MarkedGraph {
        MarkedGraph::unmarked(g)
    }

    #[test]
    fn identity_verifies() {
        let g = plain(Graph::petersen());
        assert_eq!(
            verify_embedding(&g, &g, &EmbeddingMap::identity(10, true)),
            Ok(())
        );
    }

    #[test]
    fn edge_into_triangle() {
        let e = plain(Graph::path(2));
        let t = plain(Graph::complete(3));
        for (a, b) in [(0, 1), (2, 0), (1, 2)] {
            let m = EmbeddingMap::new(vec![a, b], false);
            assert_eq!(verify_embedding(&e, &t, &m), Ok(()));
        }
    }

    #[test]
    fn non_edge_into_edge() {
        let ne = plain(Graph::empty(2));
        let e = plain(Graph::path(2));
        let m = EmbeddingMap::new(vec![0, 1], false);
        assert_eq!(
            verify_embedding(&ne, &e, &m),
            Err(EmbeddingFailure::ExtraEdge(0, 1))
        );
        let short = EmbeddingMap::new(vec![0], false);
        assert!(matches!(
            verify_embedding(&ne, &e, &short),
            Err(EmbeddingFailure::NotTotal { .. })
        ));
    }

    #[test]
    fn odd_cycle_not_in_bipartite() {
        let c5 = plain(Graph::cycle(5));
        let host = plain(Graph::complete_bipartite(4, 4));
        assert_eq!(
            find_embedding(&c5, &host, false, DEFAULT_SEARCH_BUDGET),
            SearchOutcome::NotFound
        );
    }

    #[test]
    fn marked_vertex_needs_marked_host() {
        let single = MarkedGraph::new(Graph::empty(1), &[0]).unwrap();
        let host = plain(Graph::cycle(5));
        assert_eq!(
            find_embedding(&single, &host, true, 1000),
            SearchOutcome::NotFound
        );
        assert!(find_embedding(&single, &host, false, 1000).is_found());
    }

    #[test]
    fn budget_is_reported() {
        let p = plain(Graph::cycle(7));
        let h = plain(Graph::petersen());
        assert_eq!(find_embedding(&p, &h, false, 3), SearchOutcome::BudgetExhausted);
    }

    #[test]
    fn c5_in_petersen() {
        let p = plain(Graph::cycle(5));
        let h = plain(Graph::petersen());
        let m = find_embedding(&p, &h, false, DEFAULT_SEARCH_BUDGET)
            .found()
            .unwrap();
        assert_eq!(verify_embedding(&p, &h, &m), Ok(()));
    }
}
