//! Tolerances, seeds and caps shared by every audit. Reports embed the
//! values they ran with.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditConfig {
    /// Seed for the sampled clique-free deletion audit.
    pub seed: u64,
    /// Deletion sets inside `a^⊥` are enumerated exhaustively up to this
    /// valency.
    pub c1_exhaustive_max_valency: usize,
    /// Random large deletion sets drawn per relation above that valency.
    pub c1_samples: usize,
    /// Largest number of small deletion sets checked one by one; beyond
    /// it, sets smaller than the vertex connectivity are certified by it.
    pub c1_direct_budget: u128,
    /// Maximal cliques examined per relation.
    pub clique_cap: usize,
    /// Minimum cuts are listed in reports only when `C(n, kappa)` is at
    /// most this.
    pub cut_enumeration_budget: u128,
    /// Checks quantified over all vertex pairs and basepoints run up to
    /// this many vertices.
    pub exhaustive_pair_max_v: usize,
    /// Eigenvalue grouping tolerance, relative to `max(1, ||A||)`.
    pub eigen_tolerance: f64,
    /// Entrywise tolerance for equal idempotent columns.
    pub column_tolerance: f64,
    /// Residual bound for `QP = vI`, vanishing `Q` row sums and the
    /// `P`/`Q` duality.
    pub identity_tolerance: f64,
    /// Distance of each `trace(E_j)` from an integer.
    pub trace_tolerance: f64,
}

impl Default for AuditConfig {
    fn default() -> Self {
        Self {
            seed: 0x5EED,
            c1_exhaustive_max_valency: 12,
            c1_samples: 200,
            c1_direct_budget: 200_000,
            clique_cap: 100_000,
            cut_enumeration_budget: 300_000,
            exhaustive_pair_max_v: 64,
            eigen_tolerance: 1e-9,
            column_tolerance: 1e-8,
            identity_tolerance: 1e-8,
            trace_tolerance: 1e-6,
        }
    }
}
