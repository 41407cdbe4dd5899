//! Seeded random marked graphs for property tests and the acceptance suite.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, MarkedGraph};

/// A random marked graph on `n` vertices with edge probability `p`. When
/// `triangle_free` is set, edges closing a triangle are skipped. Marks are
/// a random independent set containing at least one vertex when `n > 0`.
pub fn random_marked_graph<R: Rng>(rng: &mut R, n: usize, p: f64, triangle_free: bool) -> MarkedGraph {
    let mut adj = vec![Vec::new(); n];
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    for (u, v) in pairs {
        if !rng.gen_bool(p) {
            continue;
        }
        if triangle_free && adj[u].iter().any(|w: &usize| adj[v].contains(w)) {
            continue;
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    let graph = Graph::from_adjacency(adj);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut marked = vec![false; n];
    for (i, &v) in order.iter().enumerate() {
        let free = graph.neighbors(v).iter().all(|&w| !marked[w]);
        if free && (i == 0 || rng.gen_bool(0.5)) {
            marked[v] = true;
        }
    }
    MarkedGraph::from_parts_unchecked(graph, marked)
}

/// A random simple graph on `n` vertices with edge probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let kept: Vec<_> = edges.into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, kept).expect("generated pairs are simple")
}
