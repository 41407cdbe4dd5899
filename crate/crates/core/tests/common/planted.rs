//! Planted multicovers, skewers and clique-multicovers, and single-point
//! mutations with the violation each one must produce.

use burling_core::burling::burling_prime;
use burling_core::covers::{
    validate_clique_multicover, validate_homomorph, validate_multicover, validate_skewer, CliqueLevel, Homomorph,
    Multicover, SCliqueMulticover, Skewer, Violation,
};
use burling_core::graph::{Graph, Vertex};
use rand::seq::SliceRandom;
use rand::Rng;

/// Mutable edge set that becomes a [`Graph`] at the end.
pub struct Edges {
    pub n: usize,
    adj: Vec<Vec<bool>>,
}

impl Edges {
    pub fn new(n: usize) -> Self {
        Edges {
            n,
            adj: vec![vec![false; n]; n],
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut e = Edges::new(g.n());
        for (u, v) in g.edges() {
            e.set(u, v, true);
        }
        e
    }

    pub fn set(&mut self, u: Vertex, v: Vertex, on: bool) {
        if u != v {
            self.adj[u][v] = on;
            self.adj[v][u] = on;
        }
    }

    pub fn has(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u][v]
    }

    pub fn graph(&self) -> Graph {
        let edges: Vec<_> = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.adj[u][v])
            .collect();
        Graph::from_edges(self.n, edges).unwrap()
    }
}

fn take(next: &mut usize, k: usize) -> Vec<Vertex> {
    let out = (*next..*next + k).collect();
    *next += k;
    out
}

/// A valid multicover on disjoint blocks; with `skewer` set a skewer is
/// planted too, which requires the non-independent variant.
pub fn planted_multicover<R: Rng>(
    rng: &mut R,
    independent: bool,
    skewer: bool,
) -> (Graph, Multicover, Option<Skewer>) {
    assert!(!(independent && skewer));
    let l = rng.gen_range(1..=4);
    let mut next = 0;
    let mut mc = Multicover::default();
    let mut idx = 0;
    for _ in 0..l {
        idx += rng.gen_range(1..=2);
        mc.indices.push(idx);
        mc.x.push(take(&mut next, 1)[0]);
        let k = rng.gen_range(1..=3);
        mc.n_sets.push(take(&mut next, k));
    }
    let cn = rng.gen_range(1..=4);
    mc.c = take(&mut next, cn);
    let extra = rng.gen_range(0..=3);
    let n = next + extra;
    let mut e = Edges::new(n);
    // owner[v] = (kind, position): 0 apex, 1 cover set, 2 C, 3 outside
    let mut owner = vec![(3usize, usize::MAX); n];
    for p in 0..l {
        owner[mc.x[p]] = (0, p);
        for &v in &mc.n_sets[p] {
            owner[v] = (1, p);
        }
    }
    for &c in &mc.c {
        owner[c] = (2, l);
    }
    let forbidden = |u: Vertex, v: Vertex| {
        let check = |a: Vertex, b: Vertex| {
            let (ka, pa) = owner[a];
            let (kb, pb) = owner[b];
            ka == 0 && ((kb == 0 && pb > pa) || (kb == 1 && pb > pa) || kb == 2 || (independent && kb == 1 && pb < pa))
        };
        check(u, v) || check(v, u)
    };
    for p in 0..l {
        for &v in &mc.n_sets[p] {
            e.set(mc.x[p], v, true);
        }
        for &c in &mc.c {
            let &v = mc.n_sets[p].choose(rng).unwrap();
            e.set(c, v, true);
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if !forbidden(u, v) && rng.gen_bool(0.15) {
                e.set(u, v, true);
            }
        }
    }
    let sk = skewer.then(|| {
        let z = *mc.c.choose(rng).unwrap();
        let y: Vec<Vertex> = mc.n_sets.iter().map(|s| *s.choose(rng).unwrap()).collect();
        for p in 0..l {
            e.set(y[p], z, true);
            for q in p..l {
                e.set(y[p], mc.x[q], true);
            }
        }
        Skewer { y, z }
    });
    (e.graph(), mc, sk)
}

/// A valid s-clique-multicover on disjoint blocks.
pub fn planted_clique_multicover<R: Rng>(rng: &mut R) -> (Graph, SCliqueMulticover) {
    let l = rng.gen_range(1..=4);
    let s = rng.gen_range(1..=3);
    let mut next = 0;
    let mut xs = Vec::new();
    let mut ns = Vec::new();
    for _ in 0..l {
        xs.push(take(&mut next, s));
        let k = rng.gen_range(2..=4);
        ns.push(take(&mut next, k));
    }
    let wn = rng.gen_range(1..=4);
    let last = take(&mut next, wn);
    let extra = rng.gen_range(0..=3);
    let n = next + extra;
    // level of each vertex's block: X_i and N_{i,i} are at level i, the
    // final block at l+1, extras at 0
    let mut level = vec![0usize; n];
    let mut is_x = vec![false; n];
    for i in 0..l {
        for &v in &xs[i] {
            level[v] = i + 1;
            is_x[v] = true;
        }
        for &v in &ns[i] {
            level[v] = i + 1;
        }
    }
    for &v in &last {
        level[v] = l + 1;
    }
    // W_i: every block above level i
    let w = |i: usize| -> Vec<Vertex> { (0..n).filter(|&v| level[v] > i).collect() };
    let mut e = Edges::new(n);
    let forbidden = |u: Vertex, v: Vertex| {
        (is_x[u] && level[v] > level[u]) || (is_x[v] && level[u] > level[v])
    };
    for i in 0..l {
        for (a, &u) in xs[i].iter().enumerate() {
            for &v in &xs[i][a + 1..] {
                e.set(u, v, true);
            }
            for &v in &ns[i] {
                e.set(u, v, true);
            }
        }
    }
    let mut levels: Vec<CliqueLevel> = (0..l)
        .map(|i| CliqueLevel {
            x: xs[i].clone(),
            n: vec![Vec::new(); i + 1],
            w: w(i + 1),
        })
        .collect();
    for i in 0..l {
        levels[i].n[i] = ns[i].clone();
        for j in i + 1..l {
            let prev = levels[j - 1].n[i].clone();
            let keep = rng.gen_range(1..=prev.len());
            let mut sub: Vec<Vertex> = prev.choose_multiple(rng, keep).copied().collect();
            sub.sort_unstable();
            for &wv in &levels[j].w {
                let &v = sub.choose(rng).unwrap();
                e.set(wv, v, true);
            }
            levels[j].n[i] = sub;
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if !forbidden(u, v) && rng.gen_bool(0.1) {
                e.set(u, v, true);
            }
        }
    }
    (e.graph(), SCliqueMulticover { s, levels })
}

/// Result of one mutation round: what was mutated and whether the
/// validator answered with exactly the expected violation.
pub struct Round {
    pub what: String,
    pub expected: Violation,
    pub got: Result<(), Violation>,
}

impl Round {
    pub fn ok(&self) -> bool {
        self.got.as_ref().err() == Some(&self.expected)
    }
}

pub fn mutate_multicover<R: Rng>(rng: &mut R) -> Round {
    let independent = rng.gen_bool(0.5);
    let (g, mut mc, _) = planted_multicover(rng, independent, false);
    assert_eq!(validate_multicover(&g, &mc, independent), Ok(()), "planted multicover invalid");
    let mut e = Edges::from_graph(&g);
    let l = mc.len();
    let p = rng.gen_range(0..l);
    let i = mc.indices[p];
    let kinds = if independent && p > 0 { 6 } else { 5 };
    let (what, expected) = match rng.gen_range(0..kinds) {
        0 => {
            let &v = mc.n_sets[p].choose(rng).unwrap();
            e.set(mc.x[p], v, false);
            ("drop apex-cover edge", Violation::NotComplete { index: i, vertex: v })
        }
        1 => {
            let later: Vec<Vertex> = mc.x[p + 1..]
                .iter()
                .chain(mc.n_sets[p + 1..].iter().flatten())
                .chain(&mc.c)
                .copied()
                .collect();
            let &w = later.choose(rng).unwrap();
            e.set(mc.x[p], w, true);
            ("apex sees a later vertex", Violation::NotAnticomplete { index: i, vertex: w })
        }
        2 => {
            let &c = mc.c.choose(rng).unwrap();
            for &v in &mc.n_sets[p] {
                e.set(c, v, false);
            }
            ("uncover a vertex of C", Violation::NotCovered { index: i, vertex: c })
        }
        3 => {
            let &v = mc.n_sets[p].choose(rng).unwrap();
            mc.c.push(v);
            ("vertex in two parts", Violation::Overlap(v))
        }
        4 => {
            let bad = g.n() + rng.gen_range(0..3);
            mc.c.push(bad);
            ("vertex out of range", Violation::OutOfRange(bad))
        }
        _ => {
            let q = rng.gen_range(0..p);
            let &v = mc.n_sets[q].choose(rng).unwrap();
            e.set(mc.x[p], v, true);
            ("apex sees an earlier cover", Violation::NotIndependent { index: i, vertex: v })
        }
    };
    let g = e.graph();
    Round {
        what: what.into(),
        expected,
        got: validate_multicover(&g, &mc, independent),
    }
}

pub fn mutate_skewer<R: Rng>(rng: &mut R) -> Round {
    let (g, mc, sk) = planted_multicover(rng, false, true);
    let mut sk = sk.unwrap();
    assert_eq!(validate_multicover(&g, &mc, false), Ok(()), "planted multicover invalid");
    assert_eq!(validate_skewer(&g, &mc, &sk), Ok(()), "planted skewer invalid");
    let mut e = Edges::from_graph(&g);
    let l = mc.len();
    let p = rng.gen_range(0..l);
    let i = mc.indices[p];
    let (what, expected) = match rng.gen_range(0..4) {
        0 => {
            let outside: Vec<Vertex> = (0..g.n()).filter(|v| !mc.c.contains(v)).collect();
            let &z = outside.choose(rng).unwrap();
            sk.z = z;
            ("z outside C", Violation::NotInSet { index: 0, vertex: z, set: "C" })
        }
        1 => {
            let outside: Vec<Vertex> = (0..g.n()).filter(|v| !mc.n_sets[p].contains(v)).collect();
            let &y = outside.choose(rng).unwrap();
            sk.y[p] = y;
            ("y outside its cover", Violation::NotInSet { index: i, vertex: y, set: "N_i" })
        }
        2 => {
            e.set(sk.y[p], sk.z, false);
            ("drop y-z edge", Violation::NotAdjacent { index: i, u: sk.y[p], v: sk.z })
        }
        _ => {
            let q = rng.gen_range(p..l);
            e.set(sk.y[p], mc.x[q], false);
            ("drop y-apex edge", Violation::NotAdjacent { index: i, u: sk.y[p], v: mc.x[q] })
        }
    };
    let g = e.graph();
    Round {
        what: what.into(),
        expected,
        got: validate_skewer(&g, &mc, &sk),
    }
}

pub fn mutate_clique_multicover<R: Rng>(rng: &mut R) -> Round {
    let (g, mut cm) = planted_clique_multicover(rng);
    assert!(validate_clique_multicover(&g, &cm, 6).is_ok(), "planted clique-multicover invalid");
    let mut e = Edges::from_graph(&g);
    let l = cm.levels.len();
    let idx = rng.gen_range(0..l);
    let i = idx + 1;
    let kinds = if l >= 2 { 6 } else { 4 };
    let (what, expected) = match rng.gen_range(0..kinds) {
        0 => {
            if cm.s >= 2 {
                let x = cm.levels[idx].x.clone();
                e.set(x[0], x[1], false);
            } else {
                let v = cm.levels[idx].n[idx][0];
                cm.levels[idx].x.push(v);
            }
            ("break the clique", Violation::NotClique { index: i })
        }
        1 => {
            let &x = cm.levels[idx].x.choose(rng).unwrap();
            let &v = cm.levels[idx].n[idx].choose(rng).unwrap();
            e.set(x, v, false);
            ("drop clique-cover edge", Violation::NotComplete { index: i, vertex: v })
        }
        2 => {
            let &x = cm.levels[idx].x.choose(rng).unwrap();
            let Some(&w) = cm.levels[idx].w.choose(rng) else {
                let bad = g.n();
                cm.levels[idx].w.push(bad);
                return finish(&e, cm, "vertex out of range", Violation::OutOfRange(bad));
            };
            e.set(x, w, true);
            ("clique sees W_i", Violation::NotAnticomplete { index: i, vertex: w })
        }
        3 => {
            // a vertex outside W_{i-1} but not adjacent to X_i
            let prev: &[Vertex] = if idx == 0 { &[] } else { &cm.levels[idx - 1].w };
            let cands: Vec<Vertex> = (0..g.n())
                .filter(|&v| idx > 0 && !prev.contains(&v) && cm.levels[idx].x.iter().all(|&x| !e.has(x, v)))
                .collect();
            match cands.choose(rng) {
                Some(&v) => {
                    cm.levels[idx].w.push(v);
                    ("W_i escapes W_{i-1}", Violation::NotInSet { index: i, vertex: v, set: "W_{i-1}" })
                }
                None => {
                    let bad = g.n();
                    cm.levels[idx].w.push(bad);
                    ("vertex out of range", Violation::OutOfRange(bad))
                }
            }
        }
        4 => {
            // N_{i,j} gains a vertex of N_{i,i} outside N_{i,j-1}, or of W_j
            let i0 = rng.gen_range(0..l - 1);
            let j = rng.gen_range(i0 + 1..l);
            let outer = cm.levels[j - 1].n[i0].clone();
            let cands: Vec<Vertex> = (0..g.n()).filter(|v| !outer.contains(v)).collect();
            let &v = cands.choose(rng).unwrap();
            cm.levels[j].n[i0].push(v);
            (
                "break nesting",
                Violation::NotNested {
                    i: i0 + 1,
                    j: j + 1,
                    vertex: v,
                },
            )
        }
        _ => {
            let i0 = rng.gen_range(0..l - 1);
            let &w = cm.levels[i0 + 1].w.choose(rng).unwrap();
            for &v in &cm.levels[i0].n[i0] {
                e.set(w, v, false);
            }
            ("uncover a vertex of W_j", Violation::NotCovered { index: i0 + 2, vertex: w })
        }
    };
    finish(&e, cm, what, expected)
}

fn finish(e: &Edges, cm: SCliqueMulticover, what: &str, expected: Violation) -> Round {
    Round {
        what: what.into(),
        expected,
        got: validate_clique_multicover(&e.graph(), &cm, 6).map(|_| ()),
    }
}

/// A candidate skewer of a (possibly invalid) planted instance: planted,
/// perturbed or random.
pub fn candidate_skewer<R: Rng>(rng: &mut R, g: &Graph, mc: &Multicover, planted: &Skewer) -> Skewer {
    let mut sk = planted.clone();
    match rng.gen_range(0..3) {
        0 => {}
        1 => {
            let p = rng.gen_range(0..sk.y.len());
            sk.y[p] = rng.gen_range(0..g.n());
        }
        _ => {
            sk.z = rng.gen_range(0..g.n());
            for y in &mut sk.y {
                *y = rng.gen_range(0..g.n());
            }
        }
    }
    if rng.gen_bool(0.2) && !mc.c.is_empty() {
        sk.z = mc.c[0];
    }
    sk
}

/// Checks that the skewer validator and the homomorph validator for `B′_1`
/// agree on `sk` read as a homomorph, and that the root is the set of `y`s.
pub fn skewer_homomorph_agree(g: &Graph, mc: &Multicover, sk: &Skewer) -> bool {
    let pattern = burling_prime(1).unwrap();
    let marked = pattern.first_marked().unwrap();
    let maps = sk
        .y
        .iter()
        .map(|&y| {
            let mut phi = vec![sk.z; 2];
            phi[marked] = y;
            phi
        })
        .collect();
    let hm = Homomorph { maps };
    let a = validate_skewer(g, mc, sk).is_ok();
    match validate_homomorph(g, mc, &pattern, &hm) {
        Ok(root) => {
            let mut ys = sk.y.clone();
            ys.sort_unstable();
            ys.dedup();
            a && root == ys
        }
        Err(_) => !a,
    }
}
