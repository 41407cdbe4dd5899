//! The three Burling sequences and their size recurrences.

use super::ops::{self, Builder, Composite};
use crate::embed::EmbeddingMap;
use crate::error::{Error, PredictedSize, Result};
use crate::graph::{Graph, MarkedGraph, Vertex};

/// Constructions refuse to allocate more vertices than this by default.
pub const DEFAULT_VERTEX_CAP: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BurlingVariant {
    /// Burling's original sequence.
    Original,
    /// The sequence closed under `Ext`.
    Prime,
    /// The sequence built by repeated `Dup`.
    Ddot,
}

/// `(vertices, marks)` of every member up to `k`; `None` past `u128`.
fn size_table(variant: BurlingVariant, k: usize) -> Vec<Option<(u128, u128)>> {
    let mut out = Vec::with_capacity(k);
    let mut cur = match variant {
        BurlingVariant::Original => Some((1u128, 1u128)),
        BurlingVariant::Prime | BurlingVariant::Ddot => Some((2, 1)),
    };
    for j in 1..=k {
        out.push(cur);
        cur = cur.and_then(|(n, a)| match variant {
            // B_1 -> B_2 is not an instance of the recurrence.
            BurlingVariant::Original if j == 1 => Some((2, 1)),
            BurlingVariant::Original => {
                let per_copy = n.checked_add(a.checked_mul(2)?)?;
                let n2 = (n - a).checked_add(a.checked_mul(per_copy)?)?;
                Some((n2, a.checked_mul(a)?.checked_mul(2)?))
            }
            BurlingVariant::Prime => {
                let n2 = n.checked_add(a.checked_mul(n.checked_add(1)?)?)?;
                Some((n2, a.checked_mul(a.checked_add(1)?)?))
            }
            BurlingVariant::Ddot => Some((n.checked_mul(2)?.checked_add(1)?, a.checked_mul(2)?)),
        });
    }
    out
}

/// Predicted `|V|` of the `k`-th member, from the closed recurrences.
pub fn predicted_size(variant: BurlingVariant, k: usize) -> PredictedSize {
    PredictedSize(size_table(variant, k.max(1))[k.max(1) - 1].map(|(n, _)| n))
}

/// Predicted number of marked vertices of the `k`-th member.
pub fn predicted_marks(variant: BurlingVariant, k: usize) -> Option<u128> {
    size_table(variant, k.max(1))[k.max(1) - 1].map(|(_, a)| a)
}

fn check_cap(variant: BurlingVariant, k: usize, cap: u128) -> Result<()> {
    if k == 0 {
        return Err(Error::input("sequence index must be at least 1"));
    }
    let predicted = predicted_size(variant, k);
    match predicted.0 {
        Some(n) if n <= cap => Ok(()),
        _ => Err(Error::TooLarge { predicted, cap }),
    }
}

pub fn b1() -> MarkedGraph {
    MarkedGraph::new(Graph::empty(1), &[0]).expect("single vertex")
}

/// The marked pendant edge: vertex 0 is the mark, vertex 1 its neighbour.
pub fn b2() -> MarkedGraph {
    MarkedGraph::new(Graph::path(2), &[0]).expect("edge")
}

/// Vertex layout of `B_{k+1}` relative to `B_k`.
#[derive(Clone, Debug)]
pub struct OriginalStep {
    /// New id of each unmarked vertex of `B_k`.
    pub base: Vec<Option<Vertex>>,
    /// Start of the copy `B^a` for each mark `a`; its attached pairs follow.
    pub block: Vec<Option<Vertex>>,
    /// Position of each mark of `B_k` among the marks, ascending.
    pub mark_rank: Vec<Option<usize>>,
    pub prev_n: usize,
}

impl OriginalStep {
    pub fn copy_of(&self, anchor: Vertex, x: Vertex) -> Vertex {
        self.block[anchor].expect("anchor is a mark") + x
    }

    /// `(b, c)` attached to the copy of mark `v` inside block `anchor`.
    pub fn pair_of(&self, anchor: Vertex, v: Vertex) -> (Vertex, Vertex) {
        let r = self.mark_rank[v].expect("pair index is a mark");
        let b = self.block[anchor].expect("anchor is a mark") + self.prev_n + 2 * r;
        (b, b + 1)
    }
}

/// One step of the original recurrence, with the layout.
pub fn original_step(bk: &MarkedGraph) -> (MarkedGraph, OriginalStep) {
    let g = bk.graph();
    let n = bk.n();
    let marks = bk.marked_vertices();
    let mut mark_rank = vec![None; n];
    for (r, &v) in marks.iter().enumerate() {
        mark_rank[v] = Some(r);
    }
    let mut b = Builder::with_capacity(n - marks.len() + marks.len() * (n + 2 * marks.len()));
    let mut base = vec![None; n];
    for v in 0..n {
        if !bk.is_marked(v) {
            base[v] = Some(b.add_vertex(false));
        }
    }
    for (u, v) in g.edges() {
        if let (Some(x), Some(y)) = (base[u], base[v]) {
            b.add_edge(x, y);
        }
    }
    let mut block = vec![None; n];
    for &a in &marks {
        let off = b.add_copy(bk);
        block[a] = Some(off);
        for &v in &marks {
            let bv = b.add_vertex(false);
            let cv = b.add_vertex(true);
            for &w in g.neighbors(v) {
                b.add_edge(off + w, bv);
            }
            b.add_edge(bv, cv);
            for &w in g.neighbors(a) {
                let w = base[w].expect("neighbours of a mark are unmarked");
                b.add_edge(w, off + v);
                b.add_edge(w, cv);
            }
        }
    }
    let step = OriginalStep {
        base,
        block,
        mark_rank,
        prev_n: n,
    };
    (b.finish(), step)
}

/// `B_k` with the default vertex cap.
pub fn burling(k: usize) -> Result<MarkedGraph> {
    burling_capped(k, DEFAULT_VERTEX_CAP)
}

pub fn burling_capped(k: usize, cap: u128) -> Result<MarkedGraph> {
    check_cap(BurlingVariant::Original, k, cap)?;
    if k == 1 {
        return Ok(b1());
    }
    let mut g = b2();
    for _ in 2..k {
        g = original_step(&g).0;
    }
    Ok(g)
}

/// `B′_k` with the default vertex cap.
pub fn burling_prime(k: usize) -> Result<MarkedGraph> {
    burling_prime_capped(k, DEFAULT_VERTEX_CAP)
}

pub fn burling_prime_capped(k: usize, cap: u128) -> Result<MarkedGraph> {
    check_cap(BurlingVariant::Prime, k, cap)?;
    let mut g = b2();
    for _ in 1..k {
        g = ops::op_ext(&g, &g);
    }
    Ok(g)
}

/// `B′_1, …, B′_k`, each the prefix of the next.
pub fn burling_prime_chain(k: usize, cap: u128) -> Result<Vec<Composite>> {
    check_cap(BurlingVariant::Prime, k, cap)?;
    let mut out: Vec<Composite> = Vec::with_capacity(k);
    let first = b2();
    out.push(Composite {
        layout: ops::Layout {
            base: (0..2).map(Some).collect(),
            copy_offset: vec![None; 2],
            bridge: vec![None; 2],
            inner_n: 0,
            n: 2,
        },
        graph: first,
    });
    for _ in 1..k {
        let prev = &out.last().unwrap().graph;
        let next = ops::ext(prev, prev);
        out.push(next);
    }
    Ok(out)
}

/// Everything produced while building `B̈_1, …, B̈_k`.
#[derive(Clone, Debug)]
pub struct DdotArtifacts {
    pub graphs: Vec<MarkedGraph>,
    /// `pivots[i]` is the mark of `graphs[i]` duplicated to get `graphs[i+1]`.
    pub pivots: Vec<Vertex>,
    /// The round boundaries `m_1, m_2, …` that do not exceed `k`.
    pub m_sequence: Vec<usize>,
    /// `prime_embeddings[r-1]` embeds `B′_r` into `graphs[m_r - 1]`, for
    /// every completed round.
    pub prime_embeddings: Vec<EmbeddingMap>,
}

/// The round boundaries `m_1..m_count`, `None` once they overflow.
pub fn ddot_m_sequence(count: usize) -> Vec<Option<u128>> {
    let mut out = Vec::with_capacity(count);
    let mut m = Some(1u128);
    for r in 1..=count {
        out.push(m);
        let marks = predicted_marks(BurlingVariant::Prime, r);
        m = m.zip(marks).and_then(|(m, a)| m.checked_add(a));
    }
    out
}

/// `B̈_1..B̈_k`. Each round `r` duplicates, in turn, the images of the marks
/// of `B′_r`, which turns the embedding of `B′_r` into one of `B′_{r+1}`.
pub fn burling_ddot(k: usize, cap: u128) -> Result<DdotArtifacts> {
    check_cap(BurlingVariant::Ddot, k, cap)?;
    let mut graphs = vec![b2()];
    let mut pivots = Vec::new();
    let mut m_sequence = vec![1usize];
    let mut prime = b2();
    let mut phi: Vec<Vertex> = vec![0, 1];
    let mut prime_embeddings = vec![EmbeddingMap::new(phi.clone(), true)];

    while graphs.len() < k {
        let marks = prime.marked_vertices();
        let mut dup_layouts = Vec::with_capacity(marks.len());
        for &a in &marks {
            if graphs.len() == k {
                break;
            }
            let pivot = phi[a];
            let next = ops::dup(graphs.last().unwrap(), pivot)?;
            pivots.push(pivot);
            graphs.push(next.graph);
            dup_layouts.push(next.layout);
        }
        if dup_layouts.len() < marks.len() {
            break;
        }
        m_sequence.push(graphs.len());
        let step = ops::ext(&prime, &prime);
        let mut next_phi = vec![usize::MAX; step.layout.n];
        for v in 0..prime.n() {
            next_phi[step.layout.base_of(v)?] = phi[v];
        }
        for (&a, dl) in marks.iter().zip(&dup_layouts) {
            let pivot = phi[a];
            for h in 0..prime.n() {
                next_phi[step.layout.copy_of(a, h)?] = dl.copy_of(pivot, phi[h])?;
            }
            next_phi[step.layout.bridge_of(a)?] = dl.bridge_of(pivot)?;
        }
        prime = step.graph;
        phi = next_phi;
        prime_embeddings.push(EmbeddingMap::new(phi.clone(), true));
    }
    Ok(DdotArtifacts {
        graphs,
        pivots,
        m_sequence,
        prime_embeddings,
    })
}

/// Dispatches on the variant with the given vertex cap.
pub fn generate_capped(variant: BurlingVariant, k: usize, cap: u128) -> Result<MarkedGraph> {
    match variant {
        BurlingVariant::Original => burling_capped(k, cap),
        BurlingVariant::Prime => burling_prime_capped(k, cap),
        BurlingVariant::Ddot => Ok(burling_ddot(k, cap)?.graphs.pop().unwrap()),
    }
}

pub fn generate(variant: BurlingVariant, k: usize) -> Result<MarkedGraph> {
    generate_capped(variant, k, DEFAULT_VERTEX_CAP)
}

/// The map `B_k -> B_{k+1}` sending each mark to the smallest mark of its
/// copy and every other vertex to itself.
pub fn original_increasing_map(bk: &MarkedGraph, step: &OriginalStep) -> Vec<Vertex> {
    let first = bk.first_marked().expect("B_k has a mark");
    (0..bk.n())
        .map(|v| match step.base[v] {
            Some(id) => id,
            None => step.copy_of(v, first),
        })
        .collect()
}
