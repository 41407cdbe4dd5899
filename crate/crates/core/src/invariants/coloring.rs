//! Exact vertex colouring by saturation-ordered backtracking.

use crate::embed::SearchOutcome;
use crate::graph::{Graph, Vertex};

const UNCOLORED: usize = usize::MAX;

/// True when `colors` is a proper colouring of `g` using colours `< k`.
pub fn is_proper_coloring(g: &Graph, colors: &[usize], k: usize) -> bool {
    colors.len() == g.n()
        && colors.iter().all(|&c| c < k)
        && g.edges().all(|(u, v)| colors[u] != colors[v])
}

/// Number of distinct colours used.
pub fn colors_used(colors: &[usize]) -> usize {
    colors.iter().copied().max().map_or(0, |c| c + 1)
}

/// Greedy DSATUR colouring: an upper bound, no backtracking.
pub fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors = vec![UNCOLORED; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut sat = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == UNCOLORED)
            .max_by(|&a, &b| (sat[a], g.degree(a)).cmp(&(sat[b], g.degree(b))).then(b.cmp(&a)))
            .unwrap();
        let c = (0..).find(|&c| !seen[v].get(c).copied().unwrap_or(false)).unwrap();
        colors[v] = c;
        for &w in g.neighbors(v) {
            let s = &mut seen[w];
            if s.len() <= c {
                s.resize(c + 1, false);
            }
            if !s[c] {
                s[c] = true;
                sat[w] += 1;
            }
        }
    }
    colors
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<usize>,
    /// `blocked[v * k + c]`: coloured neighbours of `v` with colour `c`.
    blocked: Vec<u32>,
    available: Vec<u64>,
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
        let mut best: Option<(u32, usize, Vertex)> = None;
        for v in 0..self.g.n() {
            if self.colors[v] != UNCOLORED {
                continue;
            }
            let free = self.available[v].count_ones();
            let key = (free, self.g.degree(v));
            match best {
                None => best = Some((free, key.1, v)),
                Some((f, d, _)) if free < f || (free == f && key.1 > d) => best = Some((free, key.1, v)),
                _ => {}
            }
        }
        best.map(|(_, _, v)| v)
    }

    fn assign(&mut self, v: Vertex, c: usize) -> bool {
        self.colors[v] = c;
        let mut ok = true;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.blocked[w * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.available[w] &= !(1u64 << c);
                if self.colors[w] == UNCOLORED && self.available[w] == 0 {
                    ok = false;
                }
            }
        }
        ok
    }

    fn unassign(&mut self, v: Vertex, c: usize) {
        self.colors[v] = UNCOLORED;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.blocked[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.available[w] |= 1u64 << c;
            }
        }
    }

    fn run(&mut self, remaining: usize, used: usize) -> Step {
        if remaining == 0 {
            return Step::Done;
        }
        let v = self.pick().expect("an uncoloured vertex remains");
        let mut mask = self.available[v];
        // colours beyond the first unused one are interchangeable
        let limit = (used + 1).min(self.k);
        mask &= if limit >= 64 { u64::MAX } else { (1u64 << limit) - 1 };
        while mask != 0 {
            let c = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            self.spent += 1;
            if self.spent > self.budget {
                return Step::OutOfBudget;
            }
            if self.assign(v, c) {
                match self.run(remaining - 1, used.max(c + 1)) {
                    Step::Done => return Step::Done,
                    Step::OutOfBudget => return Step::OutOfBudget,
                    Step::Fail => {}
                }
            }
            self.unassign(v, c);
        }
        Step::Fail
    }
}

/// Decides `k`-colourability exactly, within `budget` colour assignments.
/// `spent` accumulates the work done.
pub fn k_coloring(g: &Graph, k: usize, budget: u64, spent: &mut u64) -> SearchOutcome<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return SearchOutcome::Found(Vec::new());
    }
    if k == 0 {
        return SearchOutcome::NotFound;
    }
    assert!(k <= 64, "colour classes are tracked in 64-bit masks");
    let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let mut s = Search {
        g,
        k,
        colors: vec![UNCOLORED; n],
        blocked: vec![0; n * k],
        available: vec![full; n],
        spent: 0,
        budget: budget.saturating_sub(*spent),
    };
    let out = match s.run(n, 0) {
        Step::Done => SearchOutcome::Found(s.colors.clone()),
        Step::Fail => SearchOutcome::NotFound,
        Step::OutOfBudget => SearchOutcome::BudgetExhausted,
    };
    *spent += s.spent;
    out
}
