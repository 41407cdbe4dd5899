//! Exact χ, ω, β and γ at desk scale, with certificates, plus the
//! clique-or-Burling decision procedure.

mod clique;
pub mod coloring;
pub mod homomorphism;
mod text;

use crate::burling::sequences::{burling_capped, DEFAULT_VERTEX_CAP};
use crate::embed::{find_embedding, EmbeddingMap, SearchOutcome, DEFAULT_SEARCH_BUDGET};
use crate::error::{Error, Result};
use crate::graph::{Graph, MarkedGraph, Vertex};

pub use coloring::{is_proper_coloring, k_coloring};
pub use homomorphism::{find_homomorphism, is_homomorphism};
pub use text::{parse_certificate, write_certificate};

/// Default β/γ cap; `B_5` (309 vertices) is opt-in.
pub const DEFAULT_KMAX: usize = 4;
/// Largest pattern index the β/γ searches accept.
pub const MAX_KMAX: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exactness {
    Exact,
    /// The value reached the caller's cap; the true value may be larger.
    LowerBoundCapped,
    /// A search ran out of budget; `value` is a proven bound only.
    BudgetExhausted,
}

impl Exactness {
    pub fn label(self) -> &'static str {
        match self {
            Exactness::Exact => "exact",
            Exactness::LowerBoundCapped => "lower-bound-capped",
            Exactness::BudgetExhausted => "budget-exhausted",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Proper colouring, one colour per vertex.
    Coloring(Vec<usize>),
    Clique(Vec<Vertex>),
    /// Induced embedding of `B_value` into the graph.
    Embedding(EmbeddingMap),
    /// Homomorphism from `B_value` into the graph.
    Homomorphism(Vec<Vertex>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub value: usize,
    pub exactness: Exactness,
    /// Best proven lower bound; equals `value` unless the budget ran out
    /// during a χ computation, where `value` is the best upper bound.
    pub lower_bound: usize,
    pub certificate: Option<Certificate>,
}

impl InvariantReport {
    pub fn is_exact(&self) -> bool {
        self.exactness == Exactness::Exact
    }
}

/// Work limit shared by the invariant searches.
#[derive(Clone, Copy, Debug)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_SEARCH_BUDGET)
    }
}

pub fn clique_number(g: &Graph, budget: Budget) -> InvariantReport {
    let (clique, complete) = clique::max_clique(g, None, budget.0);
    InvariantReport {
        value: clique.len(),
        exactness: if complete {
            Exactness::Exact
        } else {
            Exactness::BudgetExhausted
        },
        lower_bound: clique.len(),
        certificate: Some(Certificate::Clique(clique)),
    }
}

/// Exact χ: a DSATUR upper bound is lowered one colour at a time until
/// the exact search refutes the next step or the clique bound is met.
pub fn chromatic_number(g: &Graph, budget: Budget) -> InvariantReport {
    let omega = clique_number(g, budget);
    let lower = omega.value;
    let mut best = coloring::dsatur_greedy(g);
    let mut value = coloring::colors_used(&best);
    let mut spent = 0u64;
    let mut exactness = Exactness::Exact;
    while value > lower {
        match k_coloring(g, value - 1, budget.0, &mut spent) {
            SearchOutcome::Found(c) => {
                best = c;
                value -= 1;
            }
            SearchOutcome::NotFound => break,
            SearchOutcome::BudgetExhausted => {
                exactness = Exactness::BudgetExhausted;
                break;
            }
        }
    }
    InvariantReport {
        value,
        exactness,
        lower_bound: if exactness == Exactness::Exact { value } else { lower },
        certificate: Some(Certificate::Coloring(best)),
    }
}

fn check_kmax(kmax: usize) -> Result<()> {
    if kmax == 0 || kmax > MAX_KMAX {
        return Err(Error::input(format!("kmax must be in 1..={MAX_KMAX}, got {kmax}")));
    }
    Ok(())
}

/// Shared driver for β and γ: the largest `k <= kmax` for which `found`
/// succeeds on `B_k`, assuming success is downward closed.
fn ladder<F>(g: &Graph, kmax: usize, mut found: F) -> Result<InvariantReport>
where
    F: FnMut(&MarkedGraph) -> SearchOutcome<Certificate>,
{
    check_kmax(kmax)?;
    let mut report = InvariantReport {
        value: 0,
        exactness: Exactness::Exact,
        lower_bound: 0,
        certificate: None,
    };
    if g.n() == 0 {
        return Ok(report);
    }
    for k in 1..=kmax {
        let pattern = burling_capped(k, DEFAULT_VERTEX_CAP)?;
        match found(&pattern) {
            SearchOutcome::Found(c) => {
                report.value = k;
                report.lower_bound = k;
                report.certificate = Some(c);
                if k == kmax {
                    report.exactness = Exactness::LowerBoundCapped;
                }
            }
            SearchOutcome::NotFound => break,
            SearchOutcome::BudgetExhausted => {
                report.exactness = Exactness::BudgetExhausted;
                break;
            }
        }
    }
    Ok(report)
}

/// β: largest `k <= kmax` with `B_k` an induced subgraph (marks ignored).
pub fn beta(g: &Graph, kmax: usize, budget: Budget) -> Result<InvariantReport> {
    let host = MarkedGraph::unmarked(g.clone());
    ladder(g, kmax, |p| {
        let plain = MarkedGraph::unmarked(p.graph().clone());
        match find_embedding(&plain, &host, false, budget.0) {
            SearchOutcome::Found(m) => SearchOutcome::Found(Certificate::Embedding(m)),
            SearchOutcome::NotFound => SearchOutcome::NotFound,
            SearchOutcome::BudgetExhausted => SearchOutcome::BudgetExhausted,
        }
    })
}

/// γ: largest `k <= kmax` with a homomorphism `B_k -> g`.
pub fn gamma(g: &Graph, kmax: usize, budget: Budget) -> Result<InvariantReport> {
    ladder(g, kmax, |p| match find_homomorphism(p.graph(), g, budget.0) {
        SearchOutcome::Found(m) => SearchOutcome::Found(Certificate::Homomorphism(m)),
        SearchOutcome::NotFound => SearchOutcome::NotFound,
        SearchOutcome::BudgetExhausted => SearchOutcome::BudgetExhausted,
    })
}

/// Outcome of the clique-or-Burling search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    /// A `(k+1)`-clique, sorted.
    Clique(Vec<Vertex>),
    /// An induced copy of `B_{k+1}`.
    Burling(EmbeddingMap),
    NoWitness,
    BudgetExhausted,
}

/// Looks for a `(k+1)`-clique, then for an induced `B_{k+1}`. Either one
/// certifies `χ(g) > k`.
pub fn promise_color_decide(g: &Graph, k: usize, budget: Budget) -> Result<Decision> {
    if k == 0 || k + 1 > MAX_KMAX {
        return Err(Error::input(format!("k must be in 1..={}, got {k}", MAX_KMAX - 1)));
    }
    let (clique, complete) = clique::max_clique(g, Some(k + 1), budget.0);
    if clique.len() > k {
        return Ok(Decision::Clique(clique[..k + 1].to_vec()));
    }
    let pattern = MarkedGraph::unmarked(burling_capped(k + 1, DEFAULT_VERTEX_CAP)?.into_graph());
    let host = MarkedGraph::unmarked(g.clone());
    Ok(match find_embedding(&pattern, &host, false, budget.0) {
        SearchOutcome::Found(m) => Decision::Burling(m),
        SearchOutcome::NotFound if complete => Decision::NoWitness,
        _ => Decision::BudgetExhausted,
    })
}

/// Re-checks a decision's certificate against `g`.
pub fn validate_decision(g: &Graph, k: usize, d: &Decision) -> Result<bool> {
    Ok(match d {
        Decision::Clique(c) => c.len() == k + 1 && g.check_vertices(c).is_ok() && g.is_clique(c),
        Decision::Burling(m) => {
            let pattern = MarkedGraph::unmarked(burling_capped(k + 1, DEFAULT_VERTEX_CAP)?.into_graph());
            crate::embed::verify_embedding(&pattern, &MarkedGraph::unmarked(g.clone()), m).is_ok()
        }
        Decision::NoWitness | Decision::BudgetExhausted => true,
    })
}

/// Re-checks the certificate carried by a report.
pub fn validate_report(g: &Graph, report: &InvariantReport) -> Result<bool> {
    match &report.certificate {
        None => Ok(report.value == 0),
        Some(c) => check_certificate(g, report.value, c),
    }
}

/// Checks that `c` certifies `value`: a proper `value`-colouring, a
/// `value`-clique, or an induced embedding or homomorphism of `B_value`.
pub fn check_certificate(g: &Graph, value: usize, c: &Certificate) -> Result<bool> {
    Ok(match c {
        Certificate::Coloring(c) => is_proper_coloring(g, c, value),
        Certificate::Clique(c) => c.len() == value && g.check_vertices(c).is_ok() && g.is_clique(c),
        Certificate::Embedding(m) => {
            if value == 0 {
                return Ok(m.map.is_empty());
            }
            let p = MarkedGraph::unmarked(burling_capped(value, DEFAULT_VERTEX_CAP)?.into_graph());
            crate::embed::verify_embedding(&p, &MarkedGraph::unmarked(g.clone()), m).is_ok()
        }
        Certificate::Homomorphism(m) => {
            if value == 0 {
                return Ok(m.is_empty());
            }
            let p = burling_capped(value, DEFAULT_VERTEX_CAP)?;
            is_homomorphism(p.graph(), g, m)
        }
    })
}

/// The certificate a decision carries, with the value it certifies.
pub fn decision_certificate(k: usize, d: &Decision) -> Option<(usize, Certificate)> {
    match d {
        Decision::Clique(c) => Some((k + 1, Certificate::Clique(c.clone()))),
        Decision::Burling(m) => Some((k + 1, Certificate::Embedding(m.clone()))),
        Decision::NoWitness | Decision::BudgetExhausted => None,
    }
}
