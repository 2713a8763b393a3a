//! The `Ĩ / Ũ / W̃` split of `H' = H \ {0, i}` and the vertex sets it induces
//! around a basepoint.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::diagram::distribution_diagram;
use crate::error::Result;
use crate::graph::{components, twins, Graph};
use crate::scheme::SchemeDescriptor;

use super::connected_relation_graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IuwDecomposition {
    pub class: usize,
    pub basepoint: usize,
    /// `H'` is connected; every set below is then empty.
    pub h_prime_connected: bool,
    pub i_tilde: Vec<usize>,
    pub u_tilde: Vec<usize>,
    pub w_tilde: Vec<usize>,
    pub i_a: Vec<usize>,
    pub u_a: Vec<usize>,
    pub w_a: Vec<usize>,
    /// Component index in `Γ \ a^⊥` for each vertex, `None` on `a^⊥`.
    pub component_map: Vec<Option<usize>>,
}

/// Classes `j` other than `0` and `i` with `p_ii^j = p_ii^0`: exactly the
/// relations joining twins.
fn twin_classes(scheme: &SchemeDescriptor, i: usize) -> Vec<usize> {
    let full = scheme.p(i, i, 0);
    (1..=scheme.d())
        .filter(|&j| j != i && scheme.p(i, i, j) == full)
        .collect()
}

struct Split {
    h_prime_connected: bool,
    i_tilde: Vec<usize>,
    u_tilde: Vec<usize>,
    w_tilde: Vec<usize>,
    h_components: Vec<Vec<usize>>,
}

fn split(scheme: &SchemeDescriptor, i: usize) -> Result<Split> {
    let diagram = distribution_diagram(scheme, i)?;
    let h_components = diagram.h_prime_components();
    if h_components.len() <= 1 {
        return Ok(Split {
            h_prime_connected: true,
            i_tilde: Vec::new(),
            u_tilde: Vec::new(),
            w_tilde: Vec::new(),
            h_components,
        });
    }
    let i_tilde = twin_classes(scheme, i);
    let weight = |c: &Vec<usize>| c.iter().map(|&j| scheme.valency(j)).sum::<u64>();
    // least weight, then lexicographically least index set
    let u_tilde = h_components
        .iter()
        .filter(|c| c.len() >= 2)
        .min_by(|a, b| weight(a).cmp(&weight(b)).then_with(|| a.cmp(b)))
        .cloned()
        .unwrap_or_default();
    let w_tilde = h_components
        .iter()
        .flatten()
        .copied()
        .filter(|j| !i_tilde.contains(j) && !u_tilde.contains(j))
        .collect::<Vec<_>>();
    let mut w_tilde = w_tilde;
    w_tilde.sort_unstable();
    Ok(Split {
        h_prime_connected: false,
        i_tilde,
        u_tilde,
        w_tilde,
        h_components,
    })
}

fn preimage(scheme: &SchemeDescriptor, a: usize, classes: &[usize]) -> Vec<usize> {
    (0..scheme.v())
        .filter(|&x| classes.contains(&scheme.table().class(a, x)))
        .collect()
}

fn component_map(g: &Graph, a: usize) -> Vec<Option<usize>> {
    let mut map = vec![None; g.n()];
    for (c, comp) in components(g, &g.closed_neighborhood(a)).iter().enumerate() {
        for &x in comp {
            map[x] = Some(c);
        }
    }
    map
}

pub fn iuw_decompose(scheme: &SchemeDescriptor, i: usize, a: usize) -> Result<IuwDecomposition> {
    let g = connected_relation_graph(scheme, i)?;
    let s = split(scheme, i)?;
    Ok(IuwDecomposition {
        class: i,
        basepoint: a,
        h_prime_connected: s.h_prime_connected,
        i_a: preimage(scheme, a, &s.i_tilde),
        u_a: preimage(scheme, a, &s.u_tilde),
        w_a: preimage(scheme, a, &s.w_tilde),
        i_tilde: s.i_tilde,
        u_tilde: s.u_tilde,
        w_tilde: s.w_tilde,
        component_map: component_map(&g, a),
    })
}

/// How a conditional statement was discharged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Vacuity {
    /// The hypothesis never held.
    Vacuous,
    Holds,
    Fails,
    /// Not run at this size.
    Skipped,
}

impl Vacuity {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Vacuity::Holds
        } else {
            Vacuity::Fails
        }
    }

    pub fn ok(self) -> bool {
        self != Vacuity::Fails
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WEmptyAudit {
    /// `H'` is disconnected, so the decomposition is non-trivial.
    pub applicable: bool,
    pub i_tilde: Vec<usize>,
    pub u_tilde: Vec<usize>,
    pub w_tilde: Vec<usize>,
    pub w_empty: bool,
    /// Twin pairs are exactly the pairs whose class lies in `Ĩ`.
    pub twins_match_i_tilde: bool,
    /// `|I_a|`, `|U_a|`, `|W_a|` do not depend on `a`.
    pub sizes_basepoint_independent: bool,
    /// No component of `Γ \ a^⊥` meets two `H'` components, for every `a`.
    pub components_respect_h_prime: Vacuity,
    /// Vertices in distinct components of `Γ \ a^⊥` share neighbors only
    /// inside `Γ(a)`.
    pub common_neighbors_inside_gamma_a: Vacuity,
    /// With `W̃` nonempty, every `u` in `U_x` is at distance two from `x`.
    pub u_at_distance_two: Vacuity,
    /// `W_a ∩ I_b = ∅` for every `b` in `U_a`.
    pub w_avoids_twins_of_u: Vacuity,
    pub ok: bool,
}

pub fn w_empty_audit(scheme: &SchemeDescriptor, i: usize, exhaustive_max_v: usize) -> Result<WEmptyAudit> {
    let g = connected_relation_graph(scheme, i)?;
    let s = split(scheme, i)?;
    let n = g.n();
    let table = scheme.table();

    let twin_set = twin_classes(scheme, i);
    let pairs = twins(&g).pairs;
    let by_class: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| twin_set.contains(&table.class(a, b)))
        .collect();
    let twins_match_i_tilde = pairs == by_class;

    let sizes = |a: usize| {
        let count = |cls: &[usize]| (0..n).filter(|&x| cls.contains(&table.class(a, x))).count();
        (count(&s.i_tilde), count(&s.u_tilde), count(&s.w_tilde))
    };
    let first = sizes(0);
    let sizes_basepoint_independent = (1..n).all(|a| sizes(a) == first);

    let mut audit = WEmptyAudit {
        applicable: !s.h_prime_connected,
        w_empty: s.w_tilde.is_empty(),
        i_tilde: s.i_tilde.clone(),
        u_tilde: s.u_tilde.clone(),
        w_tilde: s.w_tilde.clone(),
        twins_match_i_tilde,
        sizes_basepoint_independent,
        components_respect_h_prime: Vacuity::Vacuous,
        common_neighbors_inside_gamma_a: Vacuity::Vacuous,
        u_at_distance_two: Vacuity::Vacuous,
        w_avoids_twins_of_u: Vacuity::Vacuous,
        ok: false,
    };

    if audit.applicable {
        let mut h_owner = vec![usize::MAX; scheme.d() + 1];
        for (c, comp) in s.h_components.iter().enumerate() {
            for &j in comp {
                h_owner[j] = c;
            }
        }
        let mut respects = true;
        for a in 0..n {
            for comp in components(&g, &g.closed_neighborhood(a)) {
                let owner = h_owner[table.class(a, comp[0])];
                respects &= comp.iter().all(|&x| h_owner[table.class(a, x)] == owner);
            }
        }
        audit.components_respect_h_prime = Vacuity::from_bool(respects);
    }

    audit.common_neighbors_inside_gamma_a = if n > exhaustive_max_v {
        Vacuity::Skipped
    } else {
        let mut ok = true;
        let mut disconnected_somewhere = false;
        for a in 0..n {
            let map = component_map(&g, a);
            for x in 0..n {
                for y in x + 1..n {
                    if let (Some(cx), Some(cy)) = (map[x], map[y]) {
                        if cx != cy {
                            disconnected_somewhere = true;
                            let mut common = g.neighbors(x).clone();
                            common.intersect_with(g.neighbors(y));
                            ok &= common.is_subset(g.neighbors(a));
                        }
                    }
                }
            }
        }
        if disconnected_somewhere {
            Vacuity::from_bool(ok)
        } else {
            Vacuity::Vacuous
        }
    };

    if audit.applicable && !audit.w_empty {
        let dist_ok = (0..n).all(|x| {
            let d = g.distances(x);
            preimage(scheme, x, &s.u_tilde).iter().all(|&u| d[u] == 2)
        });
        audit.u_at_distance_two = Vacuity::from_bool(dist_ok);
        let avoid_ok = (0..n).all(|a| {
            let w_a = VertexSet::from_iter(n, preimage(scheme, a, &s.w_tilde));
            preimage(scheme, a, &s.u_tilde)
                .iter()
                .all(|&b| preimage(scheme, b, &s.i_tilde).iter().all(|&x| !w_a.contains(x)))
        });
        audit.w_avoids_twins_of_u = Vacuity::from_bool(avoid_ok);
    }

    audit.ok = audit.w_empty
        && audit.twins_match_i_tilde
        && audit.sizes_basepoint_independent
        && audit.components_respect_h_prime.ok()
        && audit.common_neighbors_inside_gamma_a.ok()
        && audit.u_at_distance_two.ok()
        && audit.w_avoids_twins_of_u.ok();
    Ok(audit)
}
