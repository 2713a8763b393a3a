//! Small disconnecting sets: size-two cuts, diameter-two bounds, the four
//! exceptional graphs, ball deletion and spread-out cuts.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::diagram::distribution_diagram;
use crate::error::{Error, Hypothesis, Result};
use crate::graph::{components, is_complete_multipartite, is_connected_without, Graph, INF};
use crate::scheme::SchemeDescriptor;

use super::connected_relation_graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Exception {
    C4,
    C5,
    K33,
    Petersen,
}

impl Exception {
    pub const ALL: [Exception; 4] = [Exception::C4, Exception::C5, Exception::K33, Exception::Petersen];

    pub fn graph(self) -> Graph {
        match self {
            Exception::C4 => Graph::cycle(4),
            Exception::C5 => Graph::cycle(5),
            Exception::K33 => Graph::complete_multipartite(&[3, 3]),
            Exception::Petersen => Graph::petersen(),
        }
    }

    /// `(n, valency, girth)`.
    fn fingerprint(self) -> (usize, usize, usize) {
        match self {
            Exception::C4 => (4, 2, 4),
            Exception::C5 => (5, 2, 5),
            Exception::K33 => (6, 3, 4),
            Exception::Petersen => (10, 3, 5),
        }
    }
}

/// Backtracking isomorphism test; only used on graphs of at most ten
/// vertices.
fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, taken: &mut Vec<bool>) -> bool {
        let x = map.len();
        if x == g.n() {
            return true;
        }
        for y in 0..h.n() {
            if taken[y] || g.degree(x) != h.degree(y) {
                continue;
            }
            if (0..x).all(|u| g.adjacent(u, x) == h.adjacent(map[u], y)) {
                map.push(y);
                taken[y] = true;
                if extend(g, h, map, taken) {
                    return true;
                }
                taken[y] = false;
                map.pop();
            }
        }
        false
    }
    extend(g, h, &mut Vec::new(), &mut vec![false; h.n()])
}

/// Which of `C4`, `C5`, `K33`, Petersen the graph is, if any.
pub fn exceptional_graph(g: &Graph) -> Option<Exception> {
    let shape = (g.n(), g.regular_degree()?, g.girth()?);
    Exception::ALL
        .into_iter()
        .find(|e| e.fingerprint() == shape && isomorphic(g, &e.graph()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmallCutAudit {
    pub kappa: usize,
    pub diameter: Option<u32>,
    pub is_cycle: bool,
    /// `kappa = 2` forces a polygon.
    pub tcut2_ok: bool,
    /// Diameter two and `|X| > v_1(t - 1) + 2` with `t < v_1` force
    /// `kappa >= t + 1`.
    pub tdiam2_ok: bool,
    /// Values of `t` whose hypothesis held.
    pub tdiam2_tested: Vec<usize>,
    /// Recorded only: whether the hypothesis also holds at `t = v_1`.
    pub tdiam2_t_equals_valency: Option<bool>,
    /// Diameter two and `kappa <= 3` force one of the four exceptions.
    pub tcut3_ok: bool,
    pub exception: Option<Exception>,
}

impl SmallCutAudit {
    pub fn ok(&self) -> bool {
        self.tcut2_ok && self.tdiam2_ok && self.tcut3_ok
    }
}

/// Audits a connected regular graph with known vertex connectivity.
pub fn small_cut_theorems_audit(g: &Graph, kappa: usize) -> SmallCutAudit {
    let diameter = g.diameter();
    let v1 = g.min_degree();
    let n = g.n();
    let is_cycle = g.is_cycle();
    let exception = exceptional_graph(g);
    let mut audit = SmallCutAudit {
        kappa,
        diameter,
        is_cycle,
        tcut2_ok: kappa != 2 || is_cycle,
        tdiam2_ok: true,
        tdiam2_tested: Vec::new(),
        tdiam2_t_equals_valency: None,
        tcut3_ok: true,
        exception,
    };
    if diameter == Some(2) {
        for t in 1..v1 {
            if n > v1 * (t - 1) + 2 {
                audit.tdiam2_tested.push(t);
                audit.tdiam2_ok &= kappa > t;
            }
        }
        audit.tdiam2_t_equals_valency = Some(v1 >= 1 && n > v1 * (v1 - 1) + 2);
        audit.tcut3_ok = kappa >= 4 || exception.is_some();
    }
    audit
}

/// One radius of the ball-deletion audit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BallStep {
    pub t: u32,
    /// `H \ B_{H,t}(0)` is connected (empty counts as connected).
    pub h_rest_connected: bool,
    /// Basepoints `a` for which `Γ \ B_{Γ,t}(a)` is disconnected.
    pub disconnected_basepoints: usize,
    /// Disconnection with a connected diagram remainder forces `D <= 2t`.
    pub part_b_ok: bool,
    /// Vertices cut off from every farthest vertex lie within `2t` of `a`.
    pub part_a_ok: bool,
}

pub fn ball_deletion_audit(scheme: &SchemeDescriptor, i: usize, t: u32) -> Result<BallStep> {
    let g = connected_relation_graph(scheme, i)?;
    if is_complete_multipartite(&g) {
        return Err(Error::HypothesisViolation(Hypothesis::CompleteMultipartite));
    }
    let diagram = distribution_diagram(scheme, i)?;
    let big_d = diagram.diameter();
    let ball = diagram.ball(t);
    let h_rest_connected = diagram.components_without(&ball).len() <= 1;
    let level = |a: usize, x: usize| diagram.level(scheme.table().class(a, x)).unwrap_or(u32::MAX);
    let n = g.n();
    let mut step = BallStep {
        t,
        h_rest_connected,
        disconnected_basepoints: 0,
        part_b_ok: true,
        part_a_ok: true,
    };
    for a in 0..n {
        let deleted = VertexSet::from_iter(n, (0..n).filter(|&x| level(a, x) <= t));
        let comps = components(&g, &deleted);
        if comps.len() <= 1 {
            continue;
        }
        step.disconnected_basepoints += 1;
        if h_rest_connected && big_d > 2 * t {
            step.part_b_ok = false;
        }
        let mut owner = vec![usize::MAX; n];
        for (c, comp) in comps.iter().enumerate() {
            for &x in comp {
                owner[x] = c;
            }
        }
        let far: Vec<usize> = (0..n).filter(|&b| level(a, b) == big_d).collect();
        for &b in &far {
            for x in 0..n {
                if owner[x] != usize::MAX && owner[x] != owner[b] && level(a, x) > 2 * t {
                    step.part_a_ok = false;
                }
            }
        }
    }
    Ok(step)
}

/// Largest cycle length accepted by [`spread_cut_check`].
pub const SPREAD_GIRTH_CAP: usize = 8;

/// Connectivity of `Γ \ T` when distance-two pairs lie on short cycles and
/// `T` is spread out; the preconditions are verified first.
pub fn spread_cut_check(g: &Graph, t: &[usize], cycle_len: usize) -> Result<bool> {
    if cycle_len > SPREAD_GIRTH_CAP {
        return Err(Error::PreconditionUnverifiable(format!(
            "cycle length {cycle_len} exceeds the search cap {SPREAD_GIRTH_CAP}"
        )));
    }
    let dist = g.distance_matrix();
    for x in 0..g.n() {
        for z in x + 1..g.n() {
            if dist[x][z] == 2 && shortest_cycle_through(g, x, z).is_none_or(|len| len > cycle_len) {
                return Err(Error::PreconditionUnverifiable(format!(
                    "vertices {x} and {z} lie on no common cycle of length at most {cycle_len}"
                )));
            }
        }
    }
    for (k, &y) in t.iter().enumerate() {
        for &y2 in &t[k + 1..] {
            if dist[y][y2] != INF && (dist[y][y2] as usize) < cycle_len + 1 {
                return Err(Error::PreconditionUnverifiable(format!(
                    "deleted vertices {y} and {y2} are at distance {} < {}",
                    dist[y][y2],
                    cycle_len + 1
                )));
            }
        }
    }
    Ok(is_connected_without(g, &VertexSet::from_iter(g.n(), t.iter().copied())))
}

/// Length of a shortest cycle through distinct `x` and `z`: the least total
/// length of two internally disjoint `x`-`z` paths, by two rounds of
/// min-cost augmentation on the vertex-split digraph.
fn shortest_cycle_through(g: &Graph, x: usize, z: usize) -> Option<usize> {
    struct Arc {
        to: usize,
        cap: i32,
        cost: i32,
    }
    let n = g.n();
    let mut arcs: Vec<Arc> = Vec::new();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
    let add = |arcs: &mut Vec<Arc>, out: &mut Vec<Vec<usize>>, from: usize, to: usize, cap: i32, cost: i32| {
        out[from].push(arcs.len());
        arcs.push(Arc { to, cap, cost });
        out[to].push(arcs.len());
        arcs.push(Arc {
            to: from,
            cap: 0,
            cost: -cost,
        });
    };
    // in(v) = 2v, out(v) = 2v + 1
    for v in 0..n {
        let cap = if v == x || v == z { 2 } else { 1 };
        add(&mut arcs, &mut out, 2 * v, 2 * v + 1, cap, 0);
        for w in g.neighbors(v).iter() {
            add(&mut arcs, &mut out, 2 * v + 1, 2 * w, 1, 1);
        }
    }
    let (src, sink) = (2 * x + 1, 2 * z);
    let mut total = 0i32;
    for _ in 0..2 {
        let mut dist = vec![i32::MAX; 2 * n];
        let mut via = vec![usize::MAX; 2 * n];
        dist[src] = 0;
        for _ in 0..2 * n {
            let mut changed = false;
            for u in 0..2 * n {
                if dist[u] == i32::MAX {
                    continue;
                }
                for &e in &out[u] {
                    let a = &arcs[e];
                    if a.cap > 0 && dist[u] + a.cost < dist[a.to] {
                        dist[a.to] = dist[u] + a.cost;
                        via[a.to] = e;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        if dist[sink] == i32::MAX {
            return None;
        }
        total += dist[sink];
        let mut v = sink;
        while v != src {
            let e = via[v];
            arcs[e].cap -= 1;
            arcs[e ^ 1].cap += 1;
            v = arcs[e ^ 1].to;
        }
    }
    Some(total as usize)
}
