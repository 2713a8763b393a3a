//! Deletions that never disconnect a connected basis relation: open
//! neighborhoods (at most one non-singleton component survives), subsets of
//! `a^⊥` that miss part of `Γ(a)`, and cliques.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::catalog::binomial;
use crate::config::AuditConfig;
use crate::graph::{components, is_connected_without, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct C1Stats {
    /// Every admissible subset of every `a^⊥` was checked.
    pub exhaustive: bool,
    pub sets_checked: u64,
    /// Sets smaller than the vertex connectivity, accepted without a search.
    pub certified_by_kappa: u64,
    /// Random larger sets drawn with the configured seed.
    pub sampled: u64,
    /// Basepoint and deletion set that disconnected the graph.
    pub witness: Option<(usize, Vec<usize>)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct C3Stats {
    pub cliques_checked: u64,
    /// The clique cap stopped enumeration early.
    pub truncated: bool,
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryAudit {
    #[serde(rename = "C1_ok")]
    pub c1_ok: bool,
    #[serde(rename = "C2_ok")]
    pub c2_ok: bool,
    #[serde(rename = "C3_ok")]
    pub c3_ok: bool,
    pub c1: C1Stats,
    /// Basepoint whose open neighborhood left two non-singleton components.
    pub c2_witness: Option<usize>,
    pub c3: C3Stats,
}

/// Runs all three deletion audits on a connected graph with vertex
/// connectivity `kappa`.
pub fn corollary_audits(g: &Graph, kappa: usize, cfg: &AuditConfig) -> CorollaryAudit {
    let c2_witness = (0..g.n()).find(|&a| components(g, g.neighbors(a)).iter().filter(|c| c.len() >= 2).count() > 1);
    let c1 = c1_audit(g, kappa, cfg);
    let c3 = c3_audit(g, cfg.clique_cap);
    CorollaryAudit {
        c1_ok: c1.witness.is_none(),
        c2_ok: c2_witness.is_none(),
        c3_ok: c3.witness.is_none(),
        c1,
        c2_witness,
        c3,
    }
}

fn closed_list(g: &Graph, a: usize) -> Vec<usize> {
    let mut l = vec![a];
    l.extend(g.neighbors(a).iter());
    l
}

fn c1_audit(g: &Graph, kappa: usize, cfg: &AuditConfig) -> C1Stats {
    let n = g.n();
    let v1 = g.min_degree();
    let mut stats = C1Stats {
        exhaustive: false,
        sets_checked: 0,
        certified_by_kappa: 0,
        sampled: 0,
        witness: None,
    };
    let check = |a: usize, set: Vec<usize>, stats: &mut C1Stats| {
        stats.sets_checked += 1;
        if stats.witness.is_none() && !is_connected_without(g, &VertexSet::from_iter(n, set.iter().copied())) {
            stats.witness = Some((a, set));
        }
    };

    if v1 <= cfg.c1_exhaustive_max_valency {
        stats.exhaustive = true;
        for a in 0..n {
            let closed = closed_list(g, a);
            // bit 0 is `a`; the remaining bits are the neighbors
            let all_neighbors = ((1u32 << closed.len()) - 1) & !1;
            for mask in 0u32..1 << closed.len() {
                if mask & all_neighbors == all_neighbors {
                    continue;
                }
                let set = (0..closed.len())
                    .filter(|&b| mask >> b & 1 == 1)
                    .map(|b| closed[b])
                    .collect();
                check(a, set, &mut stats);
            }
        }
        return stats;
    }

    let per_basepoint: Vec<u128> = (0..=3).map(|s| binomial(v1 + 1, s)).collect();
    let direct_all = n as u128 * per_basepoint.iter().sum::<u128>() <= cfg.c1_direct_budget;
    for s in 1..=3usize {
        if !direct_all && s < kappa {
            stats.certified_by_kappa += (n as u128 * per_basepoint[s]) as u64;
            continue;
        }
        for a in 0..n {
            let closed = closed_list(g, a);
            for set in crate::catalog::k_subsets(closed.len(), s) {
                check(a, set.into_iter().map(|b| closed[b]).collect(), &mut stats);
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    if v1 >= 4 {
        for _ in 0..cfg.c1_samples {
            let a = rng.random_range(0..n);
            let closed = closed_list(g, a);
            // one neighbor is spared, leaving Γ(a) uncovered
            let spared = rng.random_range(1..closed.len());
            let pool: Vec<usize> = closed
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != spared)
                .map(|(_, &x)| x)
                .collect();
            let size = rng.random_range(4..=pool.len());
            let mut set: Vec<usize> = sample(&mut rng, pool.len(), size)
                .into_iter()
                .map(|k| pool[k])
                .collect();
            set.sort_unstable();
            stats.sampled += 1;
            check(a, set, &mut stats);
        }
    }
    stats
}

/// Maximal cliques by pivoting Bron-Kerbosch, in a fixed order; stops after
/// `cap` cliques. Returns whether the cap was hit.
pub fn maximal_cliques(g: &Graph, cap: usize, mut visit: impl FnMut(&[usize])) -> bool {
    fn expand(
        g: &Graph,
        r: &mut Vec<usize>,
        mut p: VertexSet,
        mut x: VertexSet,
        left: &mut usize,
        visit: &mut dyn FnMut(&[usize]),
    ) -> bool {
        if p.is_empty() {
            if x.is_empty() {
                if *left == 0 {
                    return false;
                }
                *left -= 1;
                visit(r);
            }
            return true;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .max_by_key(|&u| (p.intersection_count(g.neighbors(u)), std::cmp::Reverse(u)))
            .expect("p is nonempty");
        let candidates: Vec<usize> = p.masked_iter(&p, g.neighbors(pivot)).collect();
        for v in candidates {
            let mut np = p.clone();
            np.intersect_with(g.neighbors(v));
            let mut nx = x.clone();
            nx.intersect_with(g.neighbors(v));
            r.push(v);
            let go_on = expand(g, r, np, nx, left, visit);
            r.pop();
            if !go_on {
                return false;
            }
            p.remove(v);
            x.insert(v);
        }
        true
    }
    let mut left = cap;
    let finished = expand(
        g,
        &mut Vec::new(),
        VertexSet::full(g.n()),
        VertexSet::new(g.n()),
        &mut left,
        &mut visit,
    );
    !finished
}

fn c3_audit(g: &Graph, cap: usize) -> C3Stats {
    let mut stats = C3Stats {
        cliques_checked: 0,
        truncated: false,
        witness: None,
    };
    stats.truncated = maximal_cliques(g, cap, |clique| {
        stats.cliques_checked += 1;
        if stats.witness.is_none() && !is_connected_without(g, &VertexSet::from_iter(g.n(), clique.iter().copied())) {
            let mut c = clique.to_vec();
            c.sort_unstable();
            stats.witness = Some(c);
        }
    });
    stats
}
