//! Graph homomorphism search with bitset domains and forward checking.

use crate::embed::SearchOutcome;
use crate::graph::{Graph, Vertex};

/// True when `map` sends every edge of `pattern` to an edge of `host`.
pub fn is_homomorphism(pattern: &Graph, host: &Graph, map: &[Vertex]) -> bool {
    map.len() == pattern.n()
        && map.iter().all(|&h| h < host.n())
        && pattern.edges().all(|(u, v)| host.has_edge(map[u], map[v]))
}

struct Bits {
    words: usize,
}

impl Bits {
    fn full(&self, n: usize) -> Vec<u64> {
        let mut v = vec![u64::MAX; self.words];
        let extra = self.words * 64 - n;
        if extra > 0 {
            v[self.words - 1] >>= extra;
        }
        v
    }

    fn row(&self, host: &Graph, h: Vertex) -> Vec<u64> {
        let mut v = vec![0u64; self.words];
        for &w in host.neighbors(h) {
            v[w / 64] |= 1 << (w % 64);
        }
        v
    }
}

fn count(d: &[u64]) -> u32 {
    d.iter().map(|w| w.count_ones()).sum()
}

struct Search<'a> {
    pattern: &'a Graph,
    rows: Vec<Vec<u64>>,
    domains: Vec<Vec<u64>>,
    image: Vec<Option<Vertex>>,
    trail: Vec<(Vertex, Vec<u64>)>,
    spent: u64,
    budget: u64,
}

enum Step {
    Done,
    Fail,
    OutOfBudget,
}

impl<'a> Search<'a> {
    fn pick(&self) -> Option<Vertex> {
        (0..self.pattern.n())
            .filter(|&u| self.image[u].is_none())
            .min_by(|&a, &b| {
                count(&self.domains[a])
                    .cmp(&count(&self.domains[b]))
                    .then(self.pattern.degree(b).cmp(&self.pattern.degree(a)))
                    .then(a.cmp(&b))
            })
    }

    fn run(&mut self, remaining: usize) -> Step {
        if remaining == 0 {
            return Step::Done;
        }
        let u = self.pick().expect("an unassigned vertex remains");
        let dom = self.domains[u].clone();
        for (wi, &word) in dom.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let h = wi * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                self.spent += 1;
                if self.spent > self.budget {
                    return Step::OutOfBudget;
                }
                let mark = self.trail.len();
                let mut ok = true;
                for &w in self.pattern.neighbors(u) {
                    if self.image[w].is_some() {
                        continue;
                    }
                    let old = self.domains[w].clone();
                    let mut empty = true;
                    for (d, r) in self.domains[w].iter_mut().zip(&self.rows[h]) {
                        *d &= r;
                        empty &= *d == 0;
                    }
                    self.trail.push((w, old));
                    if empty {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    self.image[u] = Some(h);
                    match self.run(remaining - 1) {
                        Step::Done => return Step::Done,
                        Step::OutOfBudget => return Step::OutOfBudget,
                        Step::Fail => {}
                    }
                    self.image[u] = None;
                }
                while self.trail.len() > mark {
                    let (w, old) = self.trail.pop().unwrap();
                    self.domains[w] = old;
                }
            }
        }
        Step::Fail
    }
}

/// Searches for a homomorphism `pattern -> host` within `budget` candidate
/// assignments. Deterministic: candidates are tried in ascending host id.
pub fn find_homomorphism(pattern: &Graph, host: &Graph, budget: u64) -> SearchOutcome<Vec<Vertex>> {
    if pattern.n() == 0 {
        return SearchOutcome::Found(Vec::new());
    }
    if host.n() == 0 || (pattern.m() > 0 && host.m() == 0) {
        return SearchOutcome::NotFound;
    }
    let bits = Bits {
        words: host.n().div_ceil(64),
    };
    let rows: Vec<Vec<u64>> = (0..host.n()).map(|h| bits.row(host, h)).collect();
    let mut non_isolated = vec![0u64; bits.words];
    for h in 0..host.n() {
        if host.degree(h) > 0 {
            non_isolated[h / 64] |= 1 << (h % 64);
        }
    }
    let domains = (0..pattern.n())
        .map(|u| {
            if pattern.degree(u) > 0 {
                non_isolated.clone()
            } else {
                bits.full(host.n())
            }
        })
        .collect();
    let mut s = Search {
        pattern,
        rows,
        domains,
        image: vec![None; pattern.n()],
        trail: Vec::new(),
        spent: 0,
        budget,
    };
    match s.run(pattern.n()) {
        Step::Done => SearchOutcome::Found(s.image.into_iter().map(|h| h.unwrap()).collect()),
        Step::Fail => SearchOutcome::NotFound,
        Step::OutOfBudget => SearchOutcome::BudgetExhausted,
    }
}
