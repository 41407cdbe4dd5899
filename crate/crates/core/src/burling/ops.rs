//! The four marked-graph operations and the vertex layouts they produce.
//!
//! Every operation keeps (a relabelling of) its first argument as a prefix
//! and appends one block per anchor, anchors taken in ascending id. The
//! [`Layout`] records where each piece landed so that embeddings between
//! results of the same operation can be assembled mechanically.

use crate::error::{Error, Result};
use crate::graph::{Graph, MarkedGraph, Vertex};

/// Where the pieces of `op(outer, inner)` sit in the result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    /// Result id of each outer vertex that survives.
    pub base: Vec<Option<Vertex>>,
    /// Start of the inner copy attached to each anchor.
    pub copy_offset: Vec<Option<Vertex>>,
    /// The extra vertex attached to each anchor (`Ext`, `Dup`).
    pub bridge: Vec<Option<Vertex>>,
    pub inner_n: usize,
    pub n: usize,
}

impl Layout {
    pub fn base_of(&self, v: Vertex) -> Result<Vertex> {
        self.base
            .get(v)
            .copied()
            .flatten()
            .ok_or_else(|| Error::Internal(format!("vertex {v} has no base image")))
    }

    pub fn copy_of(&self, anchor: Vertex, x: Vertex) -> Result<Vertex> {
        match self.copy_offset.get(anchor).copied().flatten() {
            Some(off) if x < self.inner_n => Ok(off + x),
            _ => Err(Error::Internal(format!(
                "no copy vertex {x} at anchor {anchor}"
            ))),
        }
    }

    pub fn bridge_of(&self, anchor: Vertex) -> Result<Vertex> {
        self.bridge
            .get(anchor)
            .copied()
            .flatten()
            .ok_or_else(|| Error::Internal(format!("anchor {anchor} has no bridge")))
    }

    pub fn anchors(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.copy_offset
            .iter()
            .enumerate()
            .filter_map(|(a, o)| o.map(|_| a))
    }
}

/// Result of an operation together with its layout.
#[derive(Clone, Debug)]
pub struct Composite {
    pub graph: MarkedGraph,
    pub layout: Layout,
}

pub(crate) struct Builder {
    adj: Vec<Vec<Vertex>>,
    marked: Vec<bool>,
}

impl Builder {
    pub(crate) fn with_capacity(n: usize) -> Self {
        Builder {
            adj: Vec::with_capacity(n),
            marked: Vec::with_capacity(n),
        }
    }

    pub(crate) fn add_vertex(&mut self, marked: bool) -> Vertex {
        self.adj.push(Vec::new());
        self.marked.push(marked);
        self.adj.len() - 1
    }

    /// Appends a copy of `g`, marks included, and returns its offset.
    pub(crate) fn add_copy(&mut self, g: &MarkedGraph) -> Vertex {
        let off = self.adj.len();
        for v in 0..g.n() {
            self.adj
                .push(g.graph().neighbors(v).iter().map(|&w| w + off).collect());
            self.marked.push(g.is_marked(v));
        }
        off
    }

    pub(crate) fn add_edge(&mut self, u: Vertex, v: Vertex) {
        self.adj[u].push(v);
        self.adj[v].push(u);
    }

    pub(crate) fn len(&self) -> usize {
        self.adj.len()
    }

    pub(crate) fn finish(self) -> MarkedGraph {
        MarkedGraph::from_parts_unchecked(Graph::from_adjacency(self.adj), self.marked)
    }
}

fn empty_layout(outer_n: usize, inner_n: usize) -> Layout {
    Layout {
        base: vec![None; outer_n],
        copy_offset: vec![None; outer_n],
        bridge: vec![None; outer_n],
        inner_n,
        n: 0,
    }
}

/// Copies `g` verbatim as the prefix, or only its unmarked part.
fn place_outer(b: &mut Builder, layout: &mut Layout, g: &MarkedGraph, keep_marked: bool) {
    for v in 0..g.n() {
        if keep_marked || !g.is_marked(v) {
            layout.base[v] = Some(b.add_vertex(g.is_marked(v)));
        }
    }
    for (u, v) in g.graph().edges() {
        if let (Some(x), Some(y)) = (layout.base[u], layout.base[v]) {
            b.add_edge(x, y);
        }
    }
}

fn substitute(g: &MarkedGraph, h: &MarkedGraph, keep_marked: bool) -> Composite {
    let marks = g.marked_vertices();
    let mut b = Builder::with_capacity(g.n() + marks.len() * h.n());
    let mut layout = empty_layout(g.n(), h.n());
    place_outer(&mut b, &mut layout, g, keep_marked);
    let h_marks = h.marked_vertices();
    for &a in &marks {
        let off = b.add_copy(h);
        layout.copy_offset[a] = Some(off);
        for &w in g.graph().neighbors(a) {
            let w = layout.base[w].expect("neighbours of a mark are unmarked");
            for &x in &h_marks {
                b.add_edge(w, off + x);
            }
        }
    }
    layout.n = b.len();
    Composite {
        graph: b.finish(),
        layout,
    }
}

/// `Sub(g, h)`: every mark of `g` is replaced by a copy of `h` whose marks
/// are joined to the mark's neighbourhood.
pub fn sub(g: &MarkedGraph, h: &MarkedGraph) -> Composite {
    substitute(g, h, false)
}

/// `Sub*(g, h)`: like [`sub`] but the marks of `g` stay (still marked).
pub fn sub_star(g: &MarkedGraph, h: &MarkedGraph) -> Composite {
    substitute(g, h, true)
}

/// `Ext(g, h)`: each mark `a` of `g` gets a copy of `h` plus a vertex joined
/// to `N(a)` and to the copy's marks.
pub fn ext(g: &MarkedGraph, h: &MarkedGraph) -> Composite {
    let marks = g.marked_vertices();
    let mut b = Builder::with_capacity(g.n() + marks.len() * (h.n() + 1));
    let mut layout = empty_layout(g.n(), h.n());
    place_outer(&mut b, &mut layout, g, true);
    let h_marks = h.marked_vertices();
    for &a in &marks {
        let off = b.add_copy(h);
        let bridge = b.add_vertex(false);
        layout.copy_offset[a] = Some(off);
        layout.bridge[a] = Some(bridge);
        for &w in g.graph().neighbors(a) {
            b.add_edge(w, bridge);
        }
        for &x in &h_marks {
            b.add_edge(bridge, off + x);
        }
    }
    layout.n = b.len();
    Composite {
        graph: b.finish(),
        layout,
    }
}

/// `Dup(g, pivot)`: `g`, a second copy of `g`, and a vertex joined to the
/// pivot's neighbourhood and to the second copy's marks.
pub fn dup(g: &MarkedGraph, pivot: Vertex) -> Result<Composite> {
    g.graph().check_vertex(pivot)?;
    if !g.is_marked(pivot) {
        return Err(Error::input(format!("pivot {pivot} is not marked")));
    }
    let mut b = Builder::with_capacity(2 * g.n() + 1);
    let mut layout = empty_layout(g.n(), g.n());
    place_outer(&mut b, &mut layout, g, true);
    let off = b.add_copy(g);
    let bridge = b.add_vertex(false);
    layout.copy_offset[pivot] = Some(off);
    layout.bridge[pivot] = Some(bridge);
    for &w in g.graph().neighbors(pivot) {
        b.add_edge(w, bridge);
    }
    for x in g.marked_vertices() {
        b.add_edge(bridge, off + x);
    }
    layout.n = b.len();
    Ok(Composite {
        graph: b.finish(),
        layout,
    })
}

pub fn op_sub(g: &MarkedGraph, h: &MarkedGraph) -> MarkedGraph {
    sub(g, h).graph
}

pub fn op_sub_star(g: &MarkedGraph, h: &MarkedGraph) -> MarkedGraph {
    sub_star(g, h).graph
}

pub fn op_ext(g: &MarkedGraph, h: &MarkedGraph) -> MarkedGraph {
    ext(g, h).graph
}

pub fn op_dup(g: &MarkedGraph, pivot: Vertex) -> Result<MarkedGraph> {
    Ok(dup(g, pivot)?.graph)
}

/// Transports a vertex map along an operation: given `outer: G -> G'` and
/// `inner: H -> H'`, maps `op(G, H)` (laid out by `src`) into `op(G', H')`
/// (laid out by `dst`). Both operations must be the same kind, and `outer`
/// must send anchors to anchors.
pub fn lift(src: &Layout, dst: &Layout, outer: &[Vertex], inner: &[Vertex]) -> Result<Vec<Vertex>> {
    let mut out = vec![usize::MAX; src.n];
    for (v, slot) in src.base.iter().enumerate() {
        if let Some(id) = *slot {
            out[id] = dst.base_of(outer[v])?;
        }
    }
    for a in src.anchors() {
        for x in 0..src.inner_n {
            out[src.copy_of(a, x)?] = dst.copy_of(outer[a], inner[x])?;
        }
        if let Some(id) = src.bridge[a] {
            out[id] = dst.bridge_of(outer[a])?;
        }
    }
    if out.contains(&usize::MAX) {
        return Err(Error::Internal("lift left a vertex unmapped".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> MarkedGraph {
        MarkedGraph::new(Graph::path(2), &[0]).unwrap()
    }

    #[test]
    fn ext_of_edge_and_point_is_p4() {
        let p = MarkedGraph::new(Graph::empty(1), &[0]).unwrap();
        let e = op_ext(&b2(), &p);
        // a=0, b=1, copy of the point=2, bridge=3
        assert_eq!(e.n(), 4);
        let edges: Vec<_> = e.graph().edges().collect();
        assert_eq!(edges, vec![(0, 1), (1, 3), (2, 3)]);
        assert_eq!(e.marked_vertices(), vec![0, 2]);
    }

    #[test]
    fn sub_with_no_marks_keeps_unmarked_part() {
        let g = MarkedGraph::unmarked(Graph::path(3));
        let s = op_sub(&g, &b2());
        assert_eq!(s.n(), 3);
        assert_eq!(s.graph().m(), 2);
        assert_eq!(s.num_marked(), 0);
    }

    #[test]
    fn dup_rejects_unmarked_pivot() {
        assert!(op_dup(&b2(), 1).is_err());
        assert_eq!(op_dup(&b2(), 0).unwrap().n(), 5);
    }
}
