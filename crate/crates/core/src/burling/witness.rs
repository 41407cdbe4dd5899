//! Explicit embeddings for the containment relations between the sequences
//! and operations. Each builder returns `(pattern, host, map)` where the map
//! is assembled from operation layouts, never found by search.

use super::ops::{self, Composite, Layout};
use super::sequences::{
    self, b1, b2, burling_ddot, original_increasing_map, original_step, BurlingVariant,
};
use crate::embed::EmbeddingMap;
use crate::error::{Error, PredictedSize, Result};
use crate::graph::{MarkedGraph, Vertex};

/// Vertex cap applied to every graph a witness builder constructs.
pub const DEFAULT_WITNESS_CAP: u128 = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LemmaId {
    /// `B_{k+1} = Sub(B_k, Ext(B_k, B_1))`.
    SubExt,
    /// `Ext(G, H) ⊆ Sub(Ext(G, B_1), H)` when `H` has a mark.
    ExtIntoSub,
    /// `Sub*(B_2, K) ⊆ Ext(B_2, Ext(B_2, K))`.
    SubStarBase,
    /// `Sub*(Ext(G, H), K) ⊆ Ext(Sub*(G, K), Sub*(H, K))`.
    SubStarExt,
    /// `Sub*(B′_m, B′_n) ⊆ B′_{m+n+1}`.
    SubStarPrime,
    /// `B̈_k ⊆ B′_k`.
    DdotInPrime,
    /// `B′_k ⊆ B̈_ℓ` with `ℓ = m_k`.
    PrimeInDdot,
    /// `B′_k ⊆ B_{2k}`.
    PrimeInOriginal,
    /// `B_{k+1} ⊆ B′_{3·2^{k−1}−2}`.
    OriginalInPrime,
}

impl LemmaId {
    pub const ALL: [LemmaId; 9] = [
        LemmaId::SubExt,
        LemmaId::ExtIntoSub,
        LemmaId::SubStarBase,
        LemmaId::SubStarExt,
        LemmaId::SubStarPrime,
        LemmaId::DdotInPrime,
        LemmaId::PrimeInDdot,
        LemmaId::PrimeInOriginal,
        LemmaId::OriginalInPrime,
    ];

    /// Parses the numbering used on the command line (`3.1`, `2.1i`, …).
    pub fn parse(s: &str) -> Result<LemmaId> {
        Ok(match s {
            "3.1" => LemmaId::SubExt,
            "3.2" => LemmaId::ExtIntoSub,
            "3.3" => LemmaId::SubStarBase,
            "3.4" => LemmaId::SubStarExt,
            "3.5" | "3.6" => LemmaId::SubStarPrime,
            "3.7iii" => LemmaId::DdotInPrime,
            "3.7iv" => LemmaId::PrimeInDdot,
            "2.1i" => LemmaId::PrimeInOriginal,
            "2.1ii" => LemmaId::OriginalInPrime,
            other => return Err(Error::input(format!("unknown lemma id `{other}`"))),
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::SubExt => "3.1",
            LemmaId::ExtIntoSub => "3.2",
            LemmaId::SubStarBase => "3.3",
            LemmaId::SubStarExt => "3.4",
            LemmaId::SubStarPrime => "3.6",
            LemmaId::DdotInPrime => "3.7iii",
            LemmaId::PrimeInDdot => "3.7iv",
            LemmaId::PrimeInOriginal => "2.1i",
            LemmaId::OriginalInPrime => "2.1ii",
        }
    }
}

/// An explicit embedding of `pattern` into `host`.
#[derive(Clone, Debug)]
pub struct Witness {
    pub pattern: MarkedGraph,
    pub host: MarkedGraph,
    pub map: EmbeddingMap,
}

fn witness(pattern: MarkedGraph, host: MarkedGraph, map: Vec<Vertex>) -> Witness {
    Witness {
        pattern,
        host,
        map: EmbeddingMap::new(map, true),
    }
}

fn compose(first: &[Vertex], second: &[Vertex]) -> Vec<Vertex> {
    first.iter().map(|&v| second[v]).collect()
}

fn guard(variant: BurlingVariant, k: usize, cap: u128) -> Result<()> {
    let predicted = sequences::predicted_size(variant, k);
    match predicted.0 {
        Some(n) if n <= cap => Ok(()),
        _ => Err(Error::TooLarge { predicted, cap }),
    }
}

fn guard_count(count: Option<u128>, cap: u128) -> Result<()> {
    match count {
        Some(n) if n <= cap => Ok(()),
        _ => Err(Error::TooLarge {
            predicted: PredictedSize(count),
            cap,
        }),
    }
}

/// Map from `Sub(B_k, Ext(B_k, B_1))` onto the directly built `B_{k+1}`.
/// It is a bijection; returns the composite, the direct graph and the map.
fn sub_ext_bijection(bk: &MarkedGraph) -> Result<(Composite, MarkedGraph, Vec<Vertex>)> {
    let e = ops::ext(bk, &b1());
    let s = ops::sub(bk, &e.graph);
    let (direct, step) = original_step(bk);
    let mut map = vec![usize::MAX; s.layout.n];
    for v in bk.unmarked_vertices() {
        map[s.layout.base_of(v)?] = step.base[v].expect("unmarked vertex survives");
    }
    let marks = bk.marked_vertices();
    for &a in &marks {
        for u in 0..bk.n() {
            map[s.layout.copy_of(a, e.layout.base_of(u)?)?] = step.copy_of(a, u);
        }
        for &v in &marks {
            let (bv, cv) = step.pair_of(a, v);
            map[s.layout.copy_of(a, e.layout.copy_of(v, 0)?)?] = cv;
            map[s.layout.copy_of(a, e.layout.bridge_of(v)?)?] = bv;
        }
    }
    if map.contains(&usize::MAX) || s.layout.n != direct.n() {
        return Err(Error::Internal("substitution bijection incomplete".into()));
    }
    Ok((s, direct, map))
}

fn invert(map: &[Vertex]) -> Vec<Vertex> {
    let mut inv = vec![0; map.len()];
    for (v, &w) in map.iter().enumerate() {
        inv[w] = v;
    }
    inv
}

pub fn sub_ext_witness(k: usize, cap: u128) -> Result<Witness> {
    if k < 2 {
        return Err(Error::input("the substitution identity needs k >= 2"));
    }
    guard(BurlingVariant::Original, k + 1, cap)?;
    let bk = sequences::burling_capped(k, cap)?;
    let (s, direct, map) = sub_ext_bijection(&bk)?;
    Ok(witness(s.graph, direct, map))
}

/// Embedding of `Ext(g, h)` into `Sub(Ext(g, B_1), h)`.
fn ext_into_sub_map(g: &MarkedGraph, h: &MarkedGraph) -> Result<(Composite, Composite, Vec<Vertex>)> {
    let h0 = h
        .first_marked()
        .ok_or_else(|| Error::input("the inner graph needs a marked vertex"))?;
    let x = ops::ext(g, h);
    let e = ops::ext(g, &b1());
    let s = ops::sub(&e.graph, h);
    let mut map = vec![usize::MAX; x.layout.n];
    for v in 0..g.n() {
        let ev = e.layout.base_of(v)?;
        map[x.layout.base_of(v)?] = if g.is_marked(v) {
            s.layout.copy_of(ev, h0)?
        } else {
            s.layout.base_of(ev)?
        };
    }
    for a in g.marked_vertices() {
        let c = e.layout.copy_of(a, 0)?;
        for y in 0..h.n() {
            map[x.layout.copy_of(a, y)?] = s.layout.copy_of(c, y)?;
        }
        map[x.layout.bridge_of(a)?] = s.layout.base_of(e.layout.bridge_of(a)?)?;
    }
    Ok((x, s, map))
}

pub fn ext_into_sub_witness(g: &MarkedGraph, h: &MarkedGraph) -> Result<Witness> {
    let (x, s, map) = ext_into_sub_map(g, h)?;
    Ok(witness(x.graph, s.graph, map))
}

/// Embedding of `Sub*(B_2, k)` into `Ext(B_2, Ext(B_2, k))`; also returns
/// the inner `Ext(B_2, k)` so callers can lift further.
fn sub_star_base_map(k: &MarkedGraph) -> (Composite, Composite, Composite, Vec<Vertex>) {
    let base = b2();
    let p = ops::sub_star(&base, k);
    let inner = ops::ext(&base, k);
    let outer = ops::ext(&base, &inner.graph);
    let (a, b) = (0, 1);
    let lay = &outer.layout;
    let mut map = vec![usize::MAX; p.layout.n];
    map[p.layout.base[a].unwrap()] = lay.copy_offset[a].unwrap() + inner.layout.base[a].unwrap();
    map[p.layout.base[b].unwrap()] = lay.bridge[a].unwrap();
    for x in 0..k.n() {
        map[p.layout.copy_offset[a].unwrap() + x] =
            lay.copy_offset[a].unwrap() + inner.layout.copy_offset[a].unwrap() + x;
    }
    (p, inner, outer, map)
}

pub fn sub_star_base_witness(k: &MarkedGraph) -> Result<Witness> {
    let (p, _, outer, map) = sub_star_base_map(k);
    Ok(witness(p.graph, outer.graph, map))
}

/// Embedding of `Sub*(Ext(g, h), k)` into `Ext(Sub*(g, k), Sub*(h, k))`.
fn sub_star_ext_map(
    g: &MarkedGraph,
    h: &MarkedGraph,
    k: &MarkedGraph,
) -> Result<(Composite, Composite, Vec<Vertex>)> {
    let x = ops::ext(g, h);
    let p = ops::sub_star(&x.graph, k);
    let s1 = ops::sub_star(g, k);
    let s2 = ops::sub_star(h, k);
    let o = ops::ext(&s1.graph, &s2.graph);
    let mut map = vec![usize::MAX; p.layout.n];
    for v in 0..g.n() {
        map[p.layout.base_of(x.layout.base_of(v)?)?] = o.layout.base_of(s1.layout.base_of(v)?)?;
    }
    for a in g.marked_vertices() {
        let anchor = s1.layout.base_of(a)?;
        for y in 0..h.n() {
            map[p.layout.base_of(x.layout.copy_of(a, y)?)?] =
                o.layout.copy_of(anchor, s2.layout.base_of(y)?)?;
        }
        map[p.layout.base_of(x.layout.bridge_of(a)?)?] = o.layout.bridge_of(anchor)?;
        let xa = x.layout.base_of(a)?;
        for z in 0..k.n() {
            map[p.layout.copy_of(xa, z)?] = o.layout.base_of(s1.layout.copy_of(a, z)?)?;
        }
        for v in h.marked_vertices() {
            let xv = x.layout.copy_of(a, v)?;
            for z in 0..k.n() {
                map[p.layout.copy_of(xv, z)?] = o.layout.copy_of(anchor, s2.layout.copy_of(v, z)?)?;
            }
        }
    }
    Ok((p, o, map))
}

pub fn sub_star_ext_witness(g: &MarkedGraph, h: &MarkedGraph, k: &MarkedGraph) -> Result<Witness> {
    let (p, o, map) = sub_star_ext_map(g, h, k)?;
    Ok(witness(p.graph, o.graph, map))
}

/// `B′_1..B′_top` with each member's layout over its predecessor.
struct PrimeChain {
    members: Vec<Composite>,
}

impl PrimeChain {
    fn new(top: usize, cap: u128) -> Result<Self> {
        guard(BurlingVariant::Prime, top, cap)?;
        Ok(PrimeChain {
            members: sequences::burling_prime_chain(top, cap)?,
        })
    }

    fn graph(&self, j: usize) -> &MarkedGraph {
        &self.members[j - 1].graph
    }

    /// Layout of `B′_{j+1}` as `Ext(B′_j, B′_j)`.
    fn step(&self, j: usize) -> &Layout {
        &self.members[j].layout
    }

    /// `B′_i` is literally the prefix of `B′_j` for `i <= j`.
    fn prefix(&self, i: usize) -> Vec<Vertex> {
        (0..self.graph(i).n()).collect()
    }
}

/// Embedding of `Sub*(B′_m, B′_n)` into `B′_{m+n+1}`, by induction on `m`.
fn sub_star_prime_map(chain: &PrimeChain, m: usize, n: usize) -> Result<(Composite, Vec<Vertex>)> {
    if m == 1 {
        let (p, inner, outer, first) = sub_star_base_map(chain.graph(n));
        // Ext(B_2, B′_n) into Ext(B′_n, B′_n) = B′_{n+1}
        let inner_map = lift(&inner.layout, chain.step(n), &chain.prefix(1), &chain.prefix(n))?;
        // Ext(B_2, Ext(B_2, B′_n)) into Ext(B′_{n+1}, B′_{n+1}) = B′_{n+2}
        let outer_map = lift(&outer.layout, chain.step(n + 1), &chain.prefix(1), &inner_map)?;
        return Ok((p, compose(&first, &outer_map)));
    }
    let (_, ih) = sub_star_prime_map(chain, m - 1, n)?;
    let prev = chain.graph(m - 1);
    let (p, o, first) = sub_star_ext_map(prev, prev, chain.graph(n))?;
    let second = lift(&o.layout, chain.step(m + n), &ih, &ih)?;
    Ok((p, compose(&first, &second)))
}

fn lift(src: &Layout, dst: &Layout, outer: &[Vertex], inner: &[Vertex]) -> Result<Vec<Vertex>> {
    ops::lift(src, dst, outer, inner)
}

pub fn sub_star_prime_witness(m: usize, n: usize, cap: u128) -> Result<Witness> {
    if m == 0 || n == 0 {
        return Err(Error::input("sequence indices start at 1"));
    }
    let chain = PrimeChain::new(m + n + 1, cap)?;
    let (p, map) = sub_star_prime_map(&chain, m, n)?;
    let host = chain.members.into_iter().last().unwrap().graph;
    Ok(witness(p.graph, host, map))
}

/// Map from `Dup(g, pivot)` into `Ext(g, g)`.
fn dup_into_ext(dup: &Layout, ext: &Layout, n: usize, pivot: Vertex) -> Result<Vec<Vertex>> {
    let mut map = vec![usize::MAX; dup.n];
    for v in 0..n {
        map[dup.base_of(v)?] = ext.base_of(v)?;
        map[dup.copy_of(pivot, v)?] = ext.copy_of(pivot, v)?;
    }
    map[dup.bridge_of(pivot)?] = ext.bridge_of(pivot)?;
    Ok(map)
}

pub fn ddot_in_prime_witness(k: usize, cap: u128) -> Result<Witness> {
    if k == 0 {
        return Err(Error::input("sequence indices start at 1"));
    }
    guard(BurlingVariant::Prime, k, cap)?;
    let art = burling_ddot(k, cap)?;
    let chain = PrimeChain::new(k, cap)?;
    let mut psi: Vec<Vertex> = (0..2).collect();
    for j in 1..k {
        let g = &art.graphs[j - 1];
        let pivot = art.pivots[j - 1];
        let d = ops::dup(g, pivot)?;
        let e = ops::ext(g, g);
        let into_ext = dup_into_ext(&d.layout, &e.layout, g.n(), pivot)?;
        let lifted = lift(&e.layout, chain.step(j), &psi, &psi)?;
        psi = compose(&into_ext, &lifted);
    }
    let pattern = art.graphs.into_iter().last().unwrap();
    let host = chain.members.into_iter().last().unwrap().graph;
    Ok(witness(pattern, host, psi))
}

pub fn prime_in_ddot_witness(k: usize, cap: u128) -> Result<Witness> {
    if k == 0 {
        return Err(Error::input("sequence indices start at 1"));
    }
    let ell = sequences::ddot_m_sequence(k)[k - 1];
    let ell_usize = ell.and_then(|l| usize::try_from(l).ok());
    let host_size = ell_usize.and_then(|l| sequences::predicted_size(BurlingVariant::Ddot, l).0);
    guard_count(host_size, cap)?;
    let ell = ell_usize.unwrap();
    let art = burling_ddot(ell, cap)?;
    let map = art
        .prime_embeddings
        .get(k - 1)
        .ok_or_else(|| Error::Internal("round embedding missing".into()))?
        .map
        .clone();
    let pattern = sequences::burling_prime_capped(k, cap)?;
    let host = art.graphs.into_iter().last().unwrap();
    Ok(witness(pattern, host, map))
}

/// Embeds `B′_k` into `B_{2k}`; returns the chain of original graphs used.
pub fn prime_in_original_witness(k: usize, cap: u128) -> Result<Witness> {
    if k == 0 {
        return Err(Error::input("sequence indices start at 1"));
    }
    guard(BurlingVariant::Original, 2 * k, cap)?;
    let chain = PrimeChain::new(k, cap)?;
    // originals[i] = B_{i+1}
    let mut originals = vec![b1(), b2()];
    let mut phi: Vec<Vertex> = vec![0, 1];
    for j in 1..k {
        let prime = chain.graph(j);
        // B_{2j} -> B_{2j+1} -> B_{2j+2}, keeping the first step's layout
        let b2j = originals[2 * j - 1].clone();
        let (_, step_odd) = original_step(&b2j);
        let (s_even, b_odd, to_odd) = sub_ext_bijection(&b2j)?;
        let increasing = original_increasing_map(&b2j, &step_odd);
        let (s_top, b_top, to_top) = sub_ext_bijection(&b_odd)?;
        let e_odd = ops::ext(&b_odd, &b1());

        // Ext(B′_j, B_1) -> Ext(B_{2j}, B_1) -> Sub(B_{2j}, Ext(B_{2j}, B_1)) -> B_{2j+1}
        let ext_prime = ops::ext(prime, &b1());
        let ext_even = ops::ext(&b2j, &b1());
        let to_ext_even = lift(&ext_prime.layout, &ext_even.layout, &phi, &[0])?;
        let anchor = b2j.first_marked().expect("B_k has a mark");
        let into_sub: Vec<Vertex> = (0..ext_even.layout.n)
            .map(|x| s_even.layout.copy_of(anchor, x))
            .collect::<Result<_>>()?;
        let psi1 = compose(&compose(&to_ext_even, &into_sub), &to_odd);

        // B′_j -> B_{2j} -> B_{2j+1} -> Ext(B_{2j+1}, B_1)
        let chi1: Vec<Vertex> = phi
            .iter()
            .map(|&v| e_odd.layout.base_of(increasing[v]))
            .collect::<Result<_>>()?;

        let (_, sub_layout, first) = {
            let (x, s, m) = ext_into_sub_map(prime, prime)?;
            (x, s.layout, m)
        };
        let second = lift(&sub_layout, &s_top.layout, &psi1, &chi1)?;
        phi = compose(&compose(&first, &second), &to_top);
        originals.push(b_odd);
        originals.push(b_top);
    }
    let pattern = chain.members.into_iter().last().unwrap().graph;
    let host = originals.swap_remove(2 * k - 1);
    Ok(witness(pattern, host, phi))
}

/// Embeds `B_{k+1}` into `B′_{3·2^{k−1}−2}`.
pub fn original_in_prime_witness(k: usize, cap: u128) -> Result<Witness> {
    if k == 0 {
        return Err(Error::input("sequence indices start at 1"));
    }
    if k > 60 {
        return Err(Error::TooLarge {
            predicted: PredictedSize(None),
            cap,
        });
    }
    let top = 3 * (1usize << (k - 1)) - 2;
    guard(BurlingVariant::Prime, top, cap)?;
    guard(BurlingVariant::Original, k + 1, cap)?;
    // B_2 = B′_1
    let mut bj = b2();
    let mut phi: Vec<Vertex> = vec![0, 1];
    let mut p = 1usize;
    for _ in 2..=k {
        let chain = PrimeChain::new(2 * p + 2, cap)?;
        let (s, direct, to_direct) = sub_ext_bijection(&bj)?;
        let back = invert(&to_direct);
        // Ext(B_j, B_1) -> Ext(B′_p, B′_p) = B′_{p+1}
        let e = ops::ext(&bj, &b1());
        let landing = chain.graph(p).first_marked().expect("B′ has a mark");
        let eps = lift(&e.layout, chain.step(p), &phi, &[landing])?;
        let target = ops::sub(chain.graph(p), chain.graph(p + 1));
        let into_sub = lift(&s.layout, &target.layout, &phi, &eps)?;
        let star = ops::sub_star(chain.graph(p), chain.graph(p + 1));
        let to_star = sub_into_sub_star(&target.layout, &star.layout)?;
        let (_, to_prime) = sub_star_prime_map(&chain, p, p + 1)?;
        phi = compose(&compose(&compose(&back, &into_sub), &to_star), &to_prime);
        bj = direct;
        p = 2 * p + 2;
    }
    let host = sequences::burling_prime_capped(top, cap)?;
    Ok(witness(bj, host, phi))
}

/// `Sub(g, h) ⊆ Sub*(g, h)` on matching layouts.
fn sub_into_sub_star(sub: &Layout, star: &Layout) -> Result<Vec<Vertex>> {
    let mut map = vec![usize::MAX; sub.n];
    for (v, slot) in sub.base.iter().enumerate() {
        if let Some(id) = *slot {
            map[id] = star.base_of(v)?;
        }
    }
    for a in sub.anchors() {
        for x in 0..sub.inner_n {
            map[sub.copy_of(a, x)?] = star.copy_of(a, x)?;
        }
    }
    Ok(map)
}

pub fn sub_into_sub_star_witness(g: &MarkedGraph, h: &MarkedGraph) -> Result<Witness> {
    let s = ops::sub(g, h);
    let t = ops::sub_star(g, h);
    let map = sub_into_sub_star(&s.layout, &t.layout)?;
    Ok(witness(s.graph, t.graph, map))
}

/// `Dup(g, pivot) ⊆ Ext(g, g)`.
pub fn dup_into_ext_witness(g: &MarkedGraph, pivot: Vertex) -> Result<Witness> {
    let d = ops::dup(g, pivot)?;
    let e = ops::ext(g, g);
    let map = dup_into_ext(&d.layout, &e.layout, g.n(), pivot)?;
    Ok(witness(d.graph, e.graph, map))
}

/// `B_k ⊆ B_{k+1}` via the smallest mark of each copy.
pub fn original_increasing_witness(k: usize, cap: u128) -> Result<Witness> {
    guard(BurlingVariant::Original, k + 1, cap)?;
    let bk = sequences::burling_capped(k, cap)?;
    if k == 1 {
        return Ok(witness(bk, b2(), vec![0]));
    }
    let (next, step) = original_step(&bk);
    let map = original_increasing_map(&bk, &step);
    Ok(witness(bk, next, map))
}

/// Parameters for [`witness_lemma`]. Graph-valued lemmas take their
/// arguments from the graph fields.
#[derive(Clone, Debug, Default)]
pub struct LemmaParams {
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub g: Option<MarkedGraph>,
    pub h: Option<MarkedGraph>,
    pub inner: Option<MarkedGraph>,
    pub cap: Option<u128>,
}

fn need<T: Clone>(v: &Option<T>, what: &str) -> Result<T> {
    v.clone()
        .ok_or_else(|| Error::input(format!("missing parameter `{what}`")))
}

/// Builds the witness for one containment relation.
pub fn witness_lemma(id: LemmaId, params: &LemmaParams) -> Result<Witness> {
    let cap = params.cap.unwrap_or(DEFAULT_WITNESS_CAP);
    match id {
        LemmaId::SubExt => sub_ext_witness(need(&params.k, "k")?, cap),
        LemmaId::ExtIntoSub => ext_into_sub_witness(&need(&params.g, "g")?, &need(&params.h, "h")?),
        LemmaId::SubStarBase => sub_star_base_witness(&need(&params.inner, "inner")?),
        LemmaId::SubStarExt => sub_star_ext_witness(
            &need(&params.g, "g")?,
            &need(&params.h, "h")?,
            &need(&params.inner, "inner")?,
        ),
        LemmaId::SubStarPrime => sub_star_prime_witness(need(&params.m, "m")?, need(&params.n, "n")?, cap),
        LemmaId::DdotInPrime => ddot_in_prime_witness(need(&params.k, "k")?, cap),
        LemmaId::PrimeInDdot => prime_in_ddot_witness(need(&params.k, "k")?, cap),
        LemmaId::PrimeInOriginal => prime_in_original_witness(need(&params.k, "k")?, cap),
        LemmaId::OriginalInPrime => original_in_prime_witness(need(&params.k, "k")?, cap),
    }
}
