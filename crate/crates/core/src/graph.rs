//! Simple undirected graphs, marked graphs and the distance/relation
//! primitives shared by every other module.
//!
//! Vertices are dense `0..n` indices. Neighbour lists are kept sorted so
//! adjacency tests are binary searches and serialized output is canonical.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A finite simple graph stored as sorted adjacency lists.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, parallel edges and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::input(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::input(format!("duplicate edge {{{u}, {}}}", w[0])));
            }
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    /// Wraps adjacency lists produced by a construction that guarantees a
    /// simple symmetric graph. Lists are sorted here.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<Vertex>>) -> Self {
        let mut m = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            debug_assert!(list.windows(2).all(|w| w[0] < w[1]));
            m += list.len();
        }
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(u, l)| l.iter().all(|&v| v != u && adj[v].binary_search(&u).is_ok())));
        Graph { adj, m: m / 2 }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn check_vertices(&self, vs: &[Vertex]) -> Result<()> {
        vs.iter().try_for_each(|&v| self.check_vertex(v))
    }

    /// Subgraph induced on `vs`; vertex `vs[i]` becomes vertex `i`.
    pub fn induced(&self, vs: &[Vertex]) -> Graph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vs.iter().enumerate() {
            local[v] = i;
        }
        let adj = vs
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (local[w] != usize::MAX).then_some(local[w]))
                    .collect()
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    pub fn is_independent_set(&self, set: &[Vertex]) -> bool {
        let inside = membership(self.n(), set);
        set.iter()
            .all(|&v| self.adj[v].iter().all(|&w| !inside[w]))
    }

    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        set.iter().enumerate().all(|(i, &u)| {
            set[i + 1..]
                .iter()
                .all(|&v| u != v && self.has_edge(u, v))
        })
    }

    /// Some triangle `[a, b, c]` with `a < b < c`, if one exists.
    pub fn find_triangle(&self) -> Option<[Vertex; 3]> {
        for (u, v) in self.edges() {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        let mut t = [u, v, a[i]];
                        t.sort_unstable();
                        return Some(t);
                    }
                }
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn complete(n: usize) -> Graph {
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u).collect())
            .collect();
        Graph::from_adjacency(adj)
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
            .expect("complete bipartite graph is simple")
    }

    /// `w × h` grid; vertex `(x, y)` has id `y * w + x`.
    pub fn grid(w: usize, h: usize) -> Graph {
        let mut edges = Vec::new();
        for y in 0..h {
            for x in 0..w {
                let v = y * w + x;
                if x + 1 < w {
                    edges.push((v, v + 1));
                }
                if y + 1 < h {
                    edges.push((v, v + w));
                }
            }
        }
        Graph::from_edges(w * h, edges).expect("grid is simple")
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).expect("Petersen graph is simple")
    }
}

pub(crate) fn membership(n: usize, set: &[Vertex]) -> Vec<bool> {
    let mut inside = vec![false; n];
    for &v in set {
        inside[v] = true;
    }
    inside
}

/// A graph together with a distinguished independent set of marked vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkedGraph {
    graph: Graph,
    marked: Vec<bool>,
}

impl MarkedGraph {
    pub fn new(graph: Graph, marked: &[Vertex]) -> Result<Self> {
        graph.check_vertices(marked)?;
        let flags = membership(graph.n(), marked);
        Self::from_flags(graph, flags)
    }

    pub fn from_flags(graph: Graph, marked: Vec<bool>) -> Result<Self> {
        if marked.len() != graph.n() {
            return Err(Error::input("mark vector length differs from vertex count"));
        }
        for (u, v) in graph.edges() {
            if marked[u] && marked[v] {
                return Err(Error::input(format!(
                    "marked vertices {u} and {v} are adjacent"
                )));
            }
        }
        Ok(MarkedGraph { graph, marked })
    }

    pub(crate) fn from_parts_unchecked(graph: Graph, marked: Vec<bool>) -> Self {
        debug_assert!(graph.edges().all(|(u, v)| !(marked[u] && marked[v])));
        MarkedGraph { graph, marked }
    }

    /// The graph with no marked vertices.
    pub fn unmarked(graph: Graph) -> Self {
        let n = graph.n();
        MarkedGraph {
            graph,
            marked: vec![false; n],
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn is_marked(&self, v: Vertex) -> bool {
        self.marked[v]
    }

    pub fn mark_flags(&self) -> &[bool] {
        &self.marked
    }

    pub fn marked_vertices(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&v| self.marked[v]).collect()
    }

    pub fn unmarked_vertices(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&v| !self.marked[v]).collect()
    }

    pub fn num_marked(&self) -> usize {
        self.marked.iter().filter(|&&m| m).count()
    }

    /// Smallest marked vertex.
    pub fn first_marked(&self) -> Option<Vertex> {
        self.marked.iter().position(|&m| m)
    }
}

/// Disjoint vertex sets, each carrying a class label.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexSetFamily {
    pub sets: Vec<Vec<Vertex>>,
    pub labels: Vec<usize>,
}

impl VertexSetFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn is_disjoint(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.sets.iter().flatten().all(|v| seen.insert(*v))
    }
}

/// Shortest-path distances from `source`, truncated at `cap`; vertices not
/// reached within the cap are `None`.
pub fn bfs_distances(g: &Graph, source: Vertex, cap: Option<usize>) -> Result<Vec<Option<usize>>> {
    g.check_vertex(source)?;
    let mut dist = vec![None; g.n()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        if cap.is_some_and(|c| d >= c) {
            continue;
        }
        for &w in g.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    Ok(dist)
}

/// Vertices within distance `cap` of any source, listed in BFS order with
/// their distances. Runs in time proportional to the explored ball.
pub(crate) fn ball(g: &Graph, sources: &[Vertex], cap: usize, mark: &mut [u32], stamp: u32) -> Vec<(Vertex, usize)> {
    let mut out = Vec::new();
    for &s in sources {
        if mark[s] != stamp {
            mark[s] = stamp;
            out.push((s, 0));
        }
    }
    let mut head = 0;
    while head < out.len() {
        let (v, d) = out[head];
        head += 1;
        if d >= cap {
            continue;
        }
        for &w in g.neighbors(v) {
            if mark[w] != stamp {
                mark[w] = stamp;
                out.push((w, d + 1));
            }
        }
    }
    out
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Splits `u` into its δ-components: the classes of the closure of the
/// relation "at distance at most δ".
///
/// A multi-source BFS from `u` truncated at depth δ labels every vertex with
/// a nearest source; two sources are joined whenever an edge between their
/// cells closes a walk of length at most δ. This is exact and linear in the
/// size of the explored neighbourhood.
pub fn delta_components(g: &Graph, u: &[Vertex], delta: usize) -> Result<VertexSetFamily> {
    g.check_vertices(u)?;
    if delta == 0 {
        return Err(Error::input("delta must be positive"));
    }
    let mut members: Vec<Vertex> = u.to_vec();
    members.sort_unstable();
    members.dedup();
    let k = members.len();
    let mut label = vec![usize::MAX; g.n()];
    let mut dist = vec![0usize; g.n()];
    let mut queue = VecDeque::new();
    for (i, &v) in members.iter().enumerate() {
        label[v] = i;
        queue.push_back(v);
    }
    let mut uf = UnionFind::new(k);
    while let Some(v) = queue.pop_front() {
        let d = dist[v];
        for &w in g.neighbors(v) {
            if label[w] == usize::MAX {
                if d < delta {
                    label[w] = label[v];
                    dist[w] = d + 1;
                    queue.push_back(w);
                }
            } else if label[w] != label[v] && d + 1 + dist[w] <= delta {
                uf.union(label[v], label[w]);
            }
        }
    }
    let mut by_root: Vec<Vec<Vertex>> = vec![Vec::new(); k];
    for (i, &v) in members.iter().enumerate() {
        let r = uf.find(i);
        by_root[r].push(v);
    }
    let sets: Vec<Vec<Vertex>> = by_root.into_iter().filter(|s| !s.is_empty()).collect();
    let labels = (0..sets.len()).collect();
    Ok(VertexSetFamily { sets, labels })
}

/// Radius of `s`: minimum over all centers `x ∈ V(g)` of the largest distance
/// from `x` to a member of `s`. `None` stands for an infinite radius.
pub fn radius(g: &Graph, s: &[Vertex]) -> Result<Option<usize>> {
    g.check_vertices(s)?;
    if s.is_empty() {
        return Err(Error::input("radius of an empty set"));
    }
    let mut best: Option<usize> = None;
    for x in 0..g.n() {
        let dist = bfs_distances(g, x, best)?;
        let ecc = s.iter().map(|&y| dist[y]).try_fold(0usize, |acc, d| d.map(|d| acc.max(d)));
        if let Some(e) = ecc {
            if best.is_none_or(|b| e < b) {
                best = Some(e);
            }
        }
    }
    Ok(best)
}

/// Whether some center reaches every vertex of `s` within `rho`; returns the
/// smallest such center found in BFS order from `s[0]`.
pub fn center_within(g: &Graph, s: &[Vertex], rho: usize) -> Result<Option<Vertex>> {
    g.check_vertices(s)?;
    if s.is_empty() {
        return Err(Error::input("radius of an empty set"));
    }
    Ok(CenterFinder::new(g.n()).find(g, s, rho))
}

/// Reusable scratch for repeated [`center_within`] queries on one graph.
pub(crate) struct CenterFinder {
    mark: Vec<u32>,
    stamp: u32,
    inside: Vec<bool>,
}

impl CenterFinder {
    pub(crate) fn new(n: usize) -> Self {
        CenterFinder {
            mark: vec![0; n],
            stamp: 0,
            inside: vec![false; n],
        }
    }

    /// `s` must be non-empty and in range.
    pub(crate) fn find(&mut self, g: &Graph, s: &[Vertex], rho: usize) -> Option<Vertex> {
        let mut target = 0;
        for &v in s {
            if !std::mem::replace(&mut self.inside[v], true) {
                target += 1;
            }
        }
        self.stamp += 1;
        let candidates = ball(g, &s[..1], rho, &mut self.mark, self.stamp);
        let mut found = None;
        for &(x, _) in &candidates {
            self.stamp += 1;
            let reach = ball(g, &[x], rho, &mut self.mark, self.stamp);
            if reach.iter().filter(|&&(v, _)| self.inside[v]).count() == target {
                found = Some(x);
                break;
            }
        }
        for &v in s {
            self.inside[v] = false;
        }
        found
    }
}

/// The three independent relations between a set `x` and a disjoint set `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Relations {
    /// Every vertex of `x` is adjacent to every vertex of `y`.
    pub complete: bool,
    /// No edge between `x` and `y`.
    pub anticomplete: bool,
    /// Every vertex of `y` has a neighbour in `x`.
    pub covers: bool,
}

pub fn relation_predicates(g: &Graph, x: &[Vertex], y: &[Vertex]) -> Result<Relations> {
    g.check_vertices(x)?;
    g.check_vertices(y)?;
    let in_x = membership(g.n(), x);
    if let Some(&v) = y.iter().find(|&&v| in_x[v]) {
        return Err(Error::input(format!("vertex {v} lies in both sets")));
    }
    let mut complete = true;
    let mut anticomplete = true;
    let mut covers = true;
    for &w in y {
        let hits = g.neighbors(w).iter().filter(|&&z| in_x[z]).count();
        if hits > 0 {
            anticomplete = false;
        } else {
            covers = false;
        }
        if hits < x.len() {
            complete = false;
        }
    }
    Ok(Relations {
        complete,
        anticomplete,
        covers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_distances() {
        let g = Graph::path(3);
        let d = bfs_distances(&g, 0, None).unwrap();
        assert_eq!(d, vec![Some(0), Some(1), Some(2)]);
        let d = bfs_distances(&g, 1, Some(0)).unwrap();
        assert_eq!(d, vec![None, Some(0), None]);
        assert!(bfs_distances(&g, 3, None).is_err());
    }

    #[test]
    fn cycle_distances() {
        let g = Graph::cycle(5);
        for s in 0..5 {
            let mut d: Vec<usize> = bfs_distances(&g, s, None)
                .unwrap()
                .into_iter()
                .map(Option::unwrap)
                .collect();
            d.sort_unstable();
            assert_eq!(d, vec![0, 1, 1, 2, 2]);
        }
    }

    #[test]
    fn delta_components_on_path() {
        let g = Graph::path(10);
        assert_eq!(delta_components(&g, &[4], 1).unwrap().len(), 1);
        assert_eq!(delta_components(&g, &[0, 9], 3).unwrap().len(), 2);
        let fam = delta_components(&g, &[0, 4, 9], 5).unwrap();
        assert_eq!(fam.sets, vec![vec![0, 4, 9]]);
        assert_eq!(delta_components(&g, &[0, 4, 9], 4).unwrap().len(), 2);
    }

    #[test]
    fn radius_examples() {
        let p3 = Graph::path(3);
        assert_eq!(radius(&p3, &[1]).unwrap(), Some(0));
        assert_eq!(radius(&p3, &[0, 2]).unwrap(), Some(1));
        let c5 = Graph::cycle(5);
        assert_eq!(radius(&c5, &[0, 1, 2, 3, 4]).unwrap(), Some(2));
        assert!(radius(&c5, &[]).is_err());
        let two = Graph::empty(2);
        assert_eq!(radius(&two, &[0, 1]).unwrap(), None);
        assert_eq!(center_within(&p3, &[0, 2], 1).unwrap(), Some(1));
        assert_eq!(center_within(&p3, &[0, 2], 0).unwrap(), None);
    }

    #[test]
    fn relations() {
        let star = Graph::complete_bipartite(1, 3);
        let r = relation_predicates(&star, &[0], &[1, 2, 3]).unwrap();
        assert!(r.complete && r.covers && !r.anticomplete);
        let iso = Graph::empty(2);
        let r = relation_predicates(&iso, &[0], &[1]).unwrap();
        assert!(r.anticomplete && !r.covers && !r.complete);
        let c5 = Graph::cycle(5);
        let r = relation_predicates(&c5, &[0], &[2, 3]).unwrap();
        assert!(r.anticomplete && !r.covers);
        assert!(relation_predicates(&c5, &[0, 1], &[1]).is_err());
    }

    #[test]
    fn parser_level_rejections() {
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(1, 3)]).is_err());
        let g = Graph::path(3);
        assert!(MarkedGraph::new(g.clone(), &[0, 1]).is_err());
        assert!(MarkedGraph::new(g, &[0, 2]).is_ok());
    }

    #[test]
    fn triangles() {
        assert!(Graph::cycle(5).is_triangle_free());
        assert_eq!(Graph::complete(4).find_triangle(), Some([0, 1, 2]));
        assert!(Graph::petersen().is_triangle_free());
    }
}
