//! Exact vertex and edge connectivity by unit-capacity augmenting paths.
//!
//! Every local flow is capped: once it reaches the best value found so far it
//! cannot lower the minimum, so augmentation stops there.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::catalog::binomial;
use crate::error::{Error, Result};
use crate::graph::{is_connected, is_connected_without, Graph};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    In,
    Out,
}

/// Internally vertex-disjoint `s`-`t` paths for non-adjacent `s`, `t`,
/// counted up to `cap`.
pub fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    debug_assert!(s != t && !g.adjacent(s, t));
    let n = g.n();
    let mut flow_out = vec![VertexSet::new(n); n];
    let mut pred: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    let mut value = 0;
    // paths of length two need no search
    for c in g.neighbors(s).masked_iter(g.neighbors(t), &VertexSet::new(n)) {
        if value == cap {
            return value;
        }
        flow_out[s].insert(c);
        flow_out[c].insert(t);
        pred[c] = Some(s);
        used[c] = true;
        value += 1;
    }
    // node (u, side) is indexed 2u + side
    let idx = |u: usize, side: Side| 2 * u + (side == Side::Out) as usize;
    let mut parent: Vec<usize> = vec![usize::MAX; 2 * n];
    while value < cap {
        let mut fresh_in = VertexSet::full(n);
        fresh_in.remove(s);
        let mut seen_out = VertexSet::new(n);
        seen_out.insert(s);
        let mut queue = vec![(s, Side::Out)];
        let mut head = 0;
        let mut found = false;
        'bfs: while head < queue.len() {
            let (u, side) = queue[head];
            head += 1;
            match side {
                Side::Out => {
                    let next: Vec<usize> = g.neighbors(u).masked_iter(&fresh_in, &flow_out[u]).collect();
                    for w in next {
                        fresh_in.remove(w);
                        parent[idx(w, Side::In)] = idx(u, Side::Out);
                        if w == t {
                            found = true;
                            break 'bfs;
                        }
                        queue.push((w, Side::In));
                    }
                    if u != s && used[u] && fresh_in.remove(u) {
                        parent[idx(u, Side::In)] = idx(u, Side::Out);
                        queue.push((u, Side::In));
                    }
                }
                Side::In => {
                    let (w, ws) = if used[u] {
                        (pred[u].expect("used vertex has a predecessor"), Side::Out)
                    } else {
                        (u, Side::Out)
                    };
                    debug_assert!(ws == Side::Out);
                    if seen_out.insert(w) {
                        parent[idx(w, Side::Out)] = idx(u, Side::In);
                        queue.push((w, Side::Out));
                    }
                }
            }
        }
        if !found {
            break;
        }
        // walk back from (t, In), applying each residual step
        let mut node = idx(t, Side::In);
        let mut steps = Vec::new();
        while node != idx(s, Side::Out) {
            let p = parent[node];
            steps.push((p, node));
            node = p;
        }
        for &(from, to) in steps.iter().rev() {
            let (u, us) = (from / 2, from % 2 == 1);
            let (w, ws) = (to / 2, to % 2 == 1);
            match (us, ws) {
                // (u, Out) -> (w, In): push along u -> w
                (true, false) if u != w => {
                    flow_out[u].insert(w);
                    if w != t {
                        pred[w] = Some(u);
                    }
                }
                // (u, Out) -> (u, In): cancel the internal arc
                (true, false) => used[u] = false,
                // (u, In) -> (u, Out): use the internal arc
                (false, true) if u == w => used[u] = true,
                // (u, In) -> (w, Out): cancel w -> u
                (false, true) => {
                    flow_out[w].remove(u);
                    if pred[u] == Some(w) {
                        pred[u] = None;
                    }
                }
                _ => unreachable!("residual arcs alternate sides"),
            }
        }
        value += 1;
    }
    value
}

/// Edge-disjoint `s`-`t` paths, counted up to `cap`.
pub fn local_edge_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let n = g.n();
    // sat[u] holds w when the arc u -> w carries flow
    let mut sat = vec![VertexSet::new(n); n];
    let mut value = 0;
    if g.adjacent(s, t) && cap > 0 {
        sat[s].insert(t);
        value += 1;
    }
    for c in g.neighbors(s).masked_iter(g.neighbors(t), &VertexSet::new(n)) {
        if value >= cap {
            return value;
        }
        sat[s].insert(c);
        sat[c].insert(t);
        value += 1;
    }
    let mut parent = vec![usize::MAX; n];
    while value < cap {
        let mut fresh = VertexSet::full(n);
        fresh.remove(s);
        let mut queue = vec![s];
        let mut head = 0;
        let mut found = false;
        'bfs: while head < queue.len() {
            let u = queue[head];
            head += 1;
            let next: Vec<usize> = g.neighbors(u).masked_iter(&fresh, &sat[u]).collect();
            for w in next {
                fresh.remove(w);
                parent[w] = u;
                if w == t {
                    found = true;
                    break 'bfs;
                }
                queue.push(w);
            }
        }
        if !found {
            break;
        }
        let mut w = t;
        while w != s {
            let u = parent[w];
            if !sat[w].remove(u) {
                sat[u].insert(w);
            }
            w = u;
        }
        value += 1;
    }
    value
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::Malformed("connectivity needs at least two vertices".into()));
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Exact vertex connectivity; `n - 1` for complete graphs.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    require_connected(g)?;
    if g.is_complete() {
        return Ok(g.n() - 1);
    }
    let n = g.n();
    let v = (0..n).min_by_key(|&x| (g.degree(x), x)).expect("n >= 2");
    let mut best = g.degree(v);
    let closed = g.closed_neighborhood(v);
    for w in (0..n).filter(|&w| !closed.contains(w)) {
        best = best.min(local_vertex_connectivity(g, v, w, best));
    }
    let nbrs = g.neighbors(v).to_vec();
    for (k, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[k + 1..] {
            if !g.adjacent(x, y) {
                best = best.min(local_vertex_connectivity(g, x, y, best));
            }
        }
    }
    Ok(best)
}

/// Exact edge connectivity.
pub fn edge_connectivity(g: &Graph) -> Result<usize> {
    require_connected(g)?;
    let mut best = g.min_degree();
    for t in 1..g.n() {
        best = best.min(local_edge_connectivity(g, 0, t, best));
    }
    Ok(best)
}

/// A minimum vertex cut and the vertex whose neighborhood it is, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinCut {
    pub vertices: Vec<usize>,
    pub neighborhood_of: Option<usize>,
}

/// Upper bound on subsets examined by [`enumerate_min_cuts`] when a caller
/// wants a cheap answer.
pub const CUT_ENUMERATION_BUDGET: u128 = 300_000;

/// All vertex subsets of size `kappa` whose deletion disconnects `g`.
/// Requires `kappa <= cap_size <= 3`, or `kappa <= cap_size` with
/// `n <= 64`.
pub fn enumerate_min_cuts(g: &Graph, cap_size: usize) -> Result<Vec<MinCut>> {
    let kappa = vertex_connectivity(g)?;
    if kappa > cap_size {
        return Err(Error::CapExceeded(format!(
            "vertex connectivity {kappa} exceeds cut size cap {cap_size}"
        )));
    }
    if cap_size > 3 && g.n() > 64 {
        return Err(Error::CapExceeded(format!(
            "cut size cap {cap_size} needs n <= 64 (n = {})",
            g.n()
        )));
    }
    Ok(min_cuts_of_size(g, kappa))
}

/// Exhaustive search over `k`-subsets in lexicographic order.
pub(crate) fn min_cuts_of_size(g: &Graph, k: usize) -> Vec<MinCut> {
    let n = g.n();
    let mut out = Vec::new();
    if k + 2 > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        let set = VertexSet::from_iter(n, cur.iter().copied());
        if !is_connected_without(g, &set) {
            let neighborhood_of = (0..n).find(|&a| g.neighbors(a) == &set);
            out.push(MinCut {
                vertices: cur.clone(),
                neighborhood_of,
            });
        }
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Number of subsets [`enumerate_min_cuts`] would examine.
pub fn cut_search_size(n: usize, kappa: usize) -> u128 {
    binomial(n, kappa)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Smallest disconnecting set size, by brute force over all subsets.
    fn brute_kappa(g: &Graph) -> usize {
        let n = g.n();
        if g.is_complete() {
            return n - 1;
        }
        (0..n)
            .find(|&k| !min_cuts_of_size(g, k).is_empty())
            .expect("non-complete graphs have a cut")
    }

    /// Smallest edge cut, by brute force over all bipartitions.
    fn brute_lambda(g: &Graph) -> usize {
        let n = g.n();
        let edges = g.edges();
        (1u64..1 << (n - 1))
            .map(|mask| {
                edges
                    .iter()
                    .filter(|&&(a, b)| ((mask >> a) & 1) != ((mask >> b) & 1))
                    .count()
            })
            .min()
            .unwrap()
    }

    #[test]
    fn named_graphs() {
        for (g, k, l) in [
            (Graph::cycle(5), 2, 2),
            (Graph::petersen(), 3, 3),
            (Graph::complete_multipartite(&[3, 3]), 3, 3),
            (Graph::complete(5), 4, 4),
            (Graph::path(4), 1, 1),
            (Graph::hypercube(4), 4, 4),
        ] {
            assert_eq!(vertex_connectivity(&g).unwrap(), k);
            assert_eq!(edge_connectivity(&g).unwrap(), l);
            assert_eq!(brute_kappa(&g), k);
            assert_eq!(brute_lambda(&g), l);
        }
    }

    #[test]
    fn bowtie_and_barbell_against_brute_force() {
        // two triangles sharing a vertex; two K4 joined by one edge
        let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let mut e: Vec<(usize, usize)> = Vec::new();
        for base in [0, 4] {
            for a in 0..4 {
                for b in a + 1..4 {
                    e.push((base + a, base + b));
                }
            }
        }
        e.push((3, 4));
        let barbell = Graph::from_edges(8, e).unwrap();
        for g in [bowtie, barbell] {
            assert_eq!(vertex_connectivity(&g).unwrap(), brute_kappa(&g));
            assert_eq!(edge_connectivity(&g).unwrap(), brute_lambda(&g));
        }
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(vertex_connectivity(&g), Err(Error::Disconnected)));
        assert!(matches!(edge_connectivity(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn min_cut_examples() {
        let c5 = enumerate_min_cuts(&Graph::cycle(5), 2).unwrap();
        assert_eq!(c5.len(), 5);
        assert!(c5.iter().all(|c| c.neighborhood_of.is_some()));
        let pet = enumerate_min_cuts(&Graph::petersen(), 3).unwrap();
        assert_eq!(pet.len(), 10);
        assert!(pet.iter().all(|c| c.neighborhood_of.is_some()));
        let k33 = enumerate_min_cuts(&Graph::complete_multipartite(&[3, 3]), 3).unwrap();
        assert!(k33.iter().any(|c| c.vertices == vec![0, 1, 2]));
        assert!(k33.iter().any(|c| c.vertices == vec![3, 4, 5]));
        assert!(k33.iter().all(|c| c.neighborhood_of.is_some()));
        assert!(matches!(
            enumerate_min_cuts(&Graph::petersen(), 2),
            Err(Error::CapExceeded(_))
        ));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = Graph> {
            (4usize..=9).prop_flat_map(|n| {
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                    let mut edges = Vec::new();
                    let mut it = bits.into_iter();
                    for a in 0..n {
                        for b in a + 1..n {
                            if it.next().unwrap() {
                                edges.push((a, b));
                            }
                        }
                    }
                    Graph::from_edges(n, edges).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn flows_match_brute_force(g in arb_graph()) {
                prop_assume!(is_connected(&g));
                let k = vertex_connectivity(&g).unwrap();
                let l = edge_connectivity(&g).unwrap();
                prop_assert_eq!(k, brute_kappa(&g));
                prop_assert_eq!(l, brute_lambda(&g));
                prop_assert!(k <= l && l <= g.min_degree());
            }
        }
    }
}
