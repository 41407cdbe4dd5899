//! Seeded instance generators for region models.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, Vertex};

use super::RegionModel;

/// Uniform random recursive tree on `n` vertices.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let edges = (1..n).map(|v| (rng.gen_range(0..v), v));
    Graph::from_edges(n, edges.collect::<Vec<_>>()).expect("tree edges are simple")
}

/// A connected set of up to `size` host vertices grown from `seed` by
/// repeatedly adding a random frontier vertex.
pub fn random_connected_set<R: Rng>(rng: &mut R, h: &Graph, seed: Vertex, size: usize) -> Vec<Vertex> {
    let mut set = vec![seed];
    let mut frontier: Vec<Vertex> = h.neighbors(seed).to_vec();
    while set.len() < size && !frontier.is_empty() {
        let x = frontier.swap_remove(rng.gen_range(0..frontier.len()));
        if set.contains(&x) {
            continue;
        }
        set.push(x);
        frontier.extend(h.neighbors(x).iter().filter(|y| !set.contains(y)));
    }
    set.sort_unstable();
    set
}

/// `count` random connected regions of size `1..=max_size` over `h`.
pub fn random_regions<R: Rng>(rng: &mut R, h: Graph, count: usize, max_size: usize) -> RegionModel {
    assert!(h.n() > 0, "regions need a non-empty host");
    let mu = (0..count)
        .map(|_| {
            let seed = rng.gen_range(0..h.n());
            let size = rng.gen_range(1..=max_size.max(1));
            random_connected_set(rng, &h, seed, size)
        })
        .collect();
    RegionModel::from_regions(h, mu).expect("regions lie in the host")
}

/// Every host vertex as a singleton region, plus `extra` random connected
/// regions of size `1..=max_size`; the identity part keeps `g` as
/// connected as `h`.
pub fn covering_regions<R: Rng>(rng: &mut R, h: Graph, extra: usize, max_size: usize) -> RegionModel {
    let mut mu: Vec<Vec<Vertex>> = (0..h.n()).map(|v| vec![v]).collect();
    for _ in 0..extra {
        let seed = rng.gen_range(0..h.n());
        let size = rng.gen_range(1..=max_size.max(1));
        mu.push(random_connected_set(rng, &h, seed, size));
    }
    RegionModel::from_regions(h, mu).expect("regions lie in the host")
}

/// `K_t` with every edge subdivided by `1..=max_sub` new vertices, host
/// vertices relabelled at random; the first `t` vertices before relabelling
/// are the branch vertices. Returns the host and the branch vertices.
pub fn planted_minor_host<R: Rng>(rng: &mut R, t: usize, max_sub: usize) -> (Graph, Vec<Vertex>) {
    let mut edges = Vec::new();
    let mut n = t;
    for a in 0..t {
        for b in a + 1..t {
            let len = rng.gen_range(1..=max_sub.max(1));
            let mut prev = a;
            for _ in 0..len {
                edges.push((prev, n));
                prev = n;
                n += 1;
            }
            edges.push((prev, b));
        }
    }
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = edges.into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    let g = Graph::from_edges(n, edges).expect("subdivision edges are simple");
    (g, perm[..t].to_vec())
}

/// Three-dimensional `w × h × d` grid.
pub fn grid3(w: usize, h: usize, d: usize) -> Graph {
    let id = |x: usize, y: usize, z: usize| (z * h + y) * w + x;
    let mut edges = Vec::new();
    for z in 0..d {
        for y in 0..h {
            for x in 0..w {
                if x + 1 < w {
                    edges.push((id(x, y, z), id(x + 1, y, z)));
                }
                if y + 1 < h {
                    edges.push((id(x, y, z), id(x, y + 1, z)));
                }
                if z + 1 < d {
                    edges.push((id(x, y, z), id(x, y, z + 1)));
                }
            }
        }
    }
    Graph::from_edges(w * h * d, edges).expect("grid edges are simple")
}
