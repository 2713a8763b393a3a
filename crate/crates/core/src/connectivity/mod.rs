//! Punctured graphs, twins and the connectivity audits over basis relations.

mod corollary;
mod flow;
mod iuw;
mod smallcut;

pub use corollary::{corollary_audits, maximal_cliques, C1Stats, C3Stats, CorollaryAudit};
pub use flow::{
    cut_search_size, edge_connectivity, enumerate_min_cuts, local_edge_connectivity, local_vertex_connectivity,
    vertex_connectivity, MinCut, CUT_ENUMERATION_BUDGET,
};
pub use iuw::{iuw_decompose, w_empty_audit, IuwDecomposition, Vacuity, WEmptyAudit};
pub use smallcut::{
    ball_deletion_audit, exceptional_graph, small_cut_theorems_audit, spread_cut_check, BallStep, Exception,
    SmallCutAudit,
};

pub use crate::graph::{
    components, is_complete_multipartite, is_connected, k211_free, local_clique_structure, twins, Twins,
};

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Hypothesis, Result};
use crate::graph::{is_connected_without, Graph};
use crate::scheme::{relation_graph, SchemeDescriptor};

/// The four conditions, each computed by its own search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EquivalenceAudit {
    pub exists_a_connected: bool,
    pub forall_a_connected: bool,
    pub h_prime_connected: bool,
    pub twin_free: bool,
    pub equivalent: bool,
}

/// Relation graph of a symmetric scheme, rejected unless connected.
pub(crate) fn connected_relation_graph(scheme: &SchemeDescriptor, i: usize) -> Result<Graph> {
    let g = relation_graph(scheme, i)?;
    if !is_connected(&g) {
        return Err(Error::HypothesisViolation(Hypothesis::Disconnected));
    }
    Ok(g)
}

pub fn equivalence_audit(scheme: &SchemeDescriptor, i: usize) -> Result<EquivalenceAudit> {
    let g = connected_relation_graph(scheme, i)?;
    if is_complete_multipartite(&g) {
        return Err(Error::HypothesisViolation(Hypothesis::CompleteMultipartite));
    }
    let punctured: Vec<bool> = (0..g.n())
        .map(|a| is_connected_without(&g, &g.closed_neighborhood(a)))
        .collect();
    let exists_a_connected = punctured.iter().any(|&c| c);
    let forall_a_connected = punctured.iter().all(|&c| c);
    let h_prime_connected = crate::diagram::distribution_diagram(scheme, i)?.h_prime_connected();
    let twin_free = twins(&g).pairs.is_empty();
    let equivalent = exists_a_connected == forall_a_connected
        && forall_a_connected == h_prime_connected
        && h_prime_connected == twin_free;
    Ok(EquivalenceAudit {
        exists_a_connected,
        forall_a_connected,
        h_prime_connected,
        twin_free,
        equivalent,
    })
}

/// Exact `num / den` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        let g = num.gcd(&den).max(1);
        Self {
            num: num / g,
            den: den / g,
        }
    }

    /// `x >= self`, compared exactly.
    pub fn le_int(self, x: u64) -> bool {
        (x as u128) * (self.den as u128) >= self.num as u128
    }
}

/// `v_1 |X| / (2(|X| - 1))`.
pub fn godsil_bound(valency: u64, n: u64) -> Ratio {
    Ratio::new(valency * n, 2 * (n - 1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutReport {
    pub kappa: usize,
    pub lambda: usize,
    /// The graph is complete; `kappa` is `n - 1` by convention.
    pub complete: bool,
    /// Every minimum vertex cut, when the search fits the budget. Whether
    /// they are all neighborhoods is recorded, not asserted.
    pub min_cuts: Option<Vec<MinCut>>,
    pub all_cuts_are_neighborhoods: Option<bool>,
    pub godsil_bound: Ratio,
    pub whitney_ok: bool,
    pub godsil_ok: bool,
    /// `kappa = lambda = v_1`.
    pub conjecture_ok: bool,
}

impl CutReport {
    pub fn ok(&self) -> bool {
        self.whitney_ok && self.godsil_ok && self.conjecture_ok
    }
}

/// Connectivity numbers and the inequalities relating them, for a connected
/// regular graph.
pub fn cut_report(g: &Graph, enumeration_budget: u128) -> Result<CutReport> {
    let kappa = vertex_connectivity(g)?;
    let lambda = edge_connectivity(g)?;
    let valency = g
        .regular_degree()
        .ok_or_else(|| Error::Malformed("cut report needs a regular graph".into()))?;
    let min_cuts = (cut_search_size(g.n(), kappa) <= enumeration_budget).then(|| flow::min_cuts_of_size(g, kappa));
    let all_cuts_are_neighborhoods = min_cuts
        .as_ref()
        .map(|cuts| cuts.iter().all(|c| c.neighborhood_of.is_some()));
    let godsil_bound = godsil_bound(valency as u64, g.n() as u64);
    Ok(CutReport {
        kappa,
        lambda,
        complete: g.is_complete(),
        whitney_ok: kappa <= lambda && lambda <= valency,
        godsil_ok: godsil_bound.le_int(lambda as u64),
        conjecture_ok: kappa == valency && lambda == valency,
        min_cuts,
        all_cuts_are_neighborhoods,
        godsil_bound,
    })
}
