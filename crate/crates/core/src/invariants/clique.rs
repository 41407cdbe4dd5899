//! Maximum clique by branch and bound with a greedy colouring bound.

use crate::graph::{Graph, Vertex};

pub(crate) struct CliqueSearch<'a> {
    g: &'a Graph,
    best: Vec<Vertex>,
    current: Vec<Vertex>,
    target: Option<usize>,
    spent: u64,
    budget: u64,
    exhausted: bool,
}

impl<'a> CliqueSearch<'a> {
    /// Sequential colouring of `cands`; returns them reordered by colour
    /// together with each prefix's colour bound.
    fn color_bound(&self, cands: &[Vertex]) -> (Vec<Vertex>, Vec<usize>) {
        let mut classes: Vec<Vec<Vertex>> = Vec::new();
        for &v in cands {
            match classes
                .iter_mut()
                .find(|cls| cls.iter().all(|&w| !self.g.has_edge(v, w)))
            {
                Some(cls) => cls.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut order = Vec::with_capacity(cands.len());
        let mut bound = Vec::with_capacity(cands.len());
        for (c, cls) in classes.into_iter().enumerate() {
            for v in cls {
                order.push(v);
                bound.push(c + 1);
            }
        }
        (order, bound)
    }

    fn done(&self) -> bool {
        self.exhausted || self.target.is_some_and(|t| self.best.len() >= t)
    }

    fn expand(&mut self, cands: Vec<Vertex>) {
        let (order, bound) = self.color_bound(&cands);
        for i in (0..order.len()).rev() {
            if self.done() || self.current.len() + bound[i] <= self.best.len() {
                return;
            }
            self.spent += 1;
            if self.spent > self.budget {
                self.exhausted = true;
                return;
            }
            let v = order[i];
            self.current.push(v);
            let next: Vec<Vertex> = order[..i]
                .iter()
                .copied()
                .filter(|&w| self.g.has_edge(v, w))
                .collect();
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
        }
    }
}

/// A maximum clique (sorted), and whether the search completed. With a
/// `target`, the search stops as soon as a clique of that size is found.
pub(crate) fn max_clique(g: &Graph, target: Option<usize>, budget: u64) -> (Vec<Vertex>, bool) {
    let mut verts: Vec<Vertex> = (0..g.n()).collect();
    verts.sort_by(|&a, &b| g.degree(a).cmp(&g.degree(b)).then(b.cmp(&a)));
    let mut s = CliqueSearch {
        g,
        best: Vec::new(),
        current: Vec::new(),
        target,
        spent: 0,
        budget,
        exhausted: false,
    };
    s.expand(verts);
    let mut best = s.best;
    best.sort_unstable();
    (best, !s.exhausted)
}
