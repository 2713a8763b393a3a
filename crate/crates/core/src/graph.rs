//! Undirected simple graphs with bitset adjacency rows.
//!
//! Vertex deletion is never applied in place: every traversal takes a
//! `deleted` mask, so a single `Graph` value is shared by all audits.

use std::collections::HashMap;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Distance value for unreachable vertices.
pub const INF: u32 = u32::MAX;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edge_count())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![VertexSet::new(n); n],
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Self::empty(n);
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Malformed(format!("edge ({a}, {b}) out of range for n = {n}")));
            }
            if a == b {
                return Err(Error::Malformed(format!("self-loop at {a}")));
            }
            g.adj[a].insert(b);
            g.adj[b].insert(a);
        }
        Ok(g)
    }

    /// Builds a graph from a 0/1 matrix; the matrix must be symmetric with a
    /// zero diagonal.
    pub fn from_matrix(rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.len();
        let mut g = Self::empty(n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Malformed(format!(
                    "row {a} has length {} (expected {n})",
                    row.len()
                )));
            }
            for (b, &e) in row.iter().enumerate() {
                match e {
                    0 => {}
                    1 if a == b => return Err(Error::Malformed(format!("self-loop at {a}"))),
                    1 => {
                        if rows[b][a] != 1 {
                            return Err(Error::Malformed(format!("asymmetric entry ({a}, {b})")));
                        }
                        g.adj[a].insert(b);
                    }
                    other => return Err(Error::Malformed(format!("entry {other} at ({a}, {b})"))),
                }
            }
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle needs n >= 3")
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).expect("valid")
    }

    /// Complete multipartite graph with the given part sizes, vertices
    /// numbered part by part.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let n = parts.iter().sum();
        let mut owner = Vec::with_capacity(n);
        for (p, &size) in parts.iter().enumerate() {
            owner.extend(std::iter::repeat_n(p, size));
        }
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        let edges: Vec<_> = edges.filter(|&(a, b)| owner[a] != owner[b]).collect();
        Self::from_edges(n, edges).expect("valid")
    }

    /// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edges(10, edges).expect("valid")
    }

    pub fn hypercube(dim: u32) -> Self {
        let n = 1usize << dim;
        let edges = (0..n).flat_map(|x| (0..dim).map(move |b| (x, x ^ (1 << b))));
        let edges: Vec<_> = edges.filter(|&(a, b)| a < b).collect();
        Self::from_edges(n, edges).expect("valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::count).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| self.adj[a].iter().filter(move |&b| b > a).map(move |b| (a, b)))
            .collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        (0..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<_> = (0..self.n).map(|v| self.degree(v)).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    /// Closed neighborhood `{v} ∪ Γ(v)`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// BFS distances from `src` in the graph with `deleted` removed.
    /// Deleted or unreachable vertices get [`INF`].
    pub fn distances_avoiding(&self, src: usize, deleted: &VertexSet) -> Vec<u32> {
        let mut dist = vec![INF; self.n];
        if deleted.contains(src) {
            return dist;
        }
        let mut seen = deleted.clone();
        seen.insert(src);
        dist[src] = 0;
        let mut frontier = vec![src];
        let mut level = 0;
        while !frontier.is_empty() {
            level += 1;
            let mut next = Vec::new();
            for &v in &frontier {
                for w in self.adj[v].iter() {
                    if seen.insert(w) {
                        dist[w] = level;
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        dist
    }

    pub fn distances(&self, src: usize) -> Vec<u32> {
        self.distances_avoiding(src, &VertexSet::new(self.n))
    }

    /// Full distance matrix, row-major.
    pub fn distance_matrix(&self) -> Vec<Vec<u32>> {
        (0..self.n).map(|v| self.distances(v)).collect()
    }

    /// Diameter, or `None` when disconnected.
    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0;
        for v in 0..self.n {
            let m = *self.distances(v).iter().max().unwrap_or(&0);
            if m == INF {
                return None;
            }
            best = best.max(m);
        }
        Some(best)
    }

    /// Set of vertices reachable from `src` without entering `deleted`.
    pub fn reach(&self, src: usize, deleted: &VertexSet) -> VertexSet {
        let mut comp = VertexSet::new(self.n);
        if deleted.contains(src) {
            return comp;
        }
        comp.insert(src);
        let mut frontier = comp.clone();
        loop {
            let mut next = VertexSet::new(self.n);
            for v in frontier.iter() {
                next.union_with(&self.adj[v]);
            }
            next.difference_with(&comp);
            next.difference_with(deleted);
            if next.is_empty() {
                return comp;
            }
            comp.union_with(&next);
            frontier = next;
        }
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![INF; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.adj[v].iter() {
                    if dist[w] == INF {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = (dist[v] + dist[w] + 1) as usize;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Connected, 2-regular: the graph is a polygon.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.regular_degree() == Some(2) && is_connected(self)
    }
}

/// Components of the graph with `deleted` removed, each sorted, ordered by
/// least vertex.
pub fn components(graph: &Graph, deleted: &VertexSet) -> Vec<Vec<usize>> {
    let mut remaining = deleted.complement();
    let mut out = Vec::new();
    while let Some(seed) = remaining.first() {
        let comp = graph.reach(seed, deleted);
        remaining.difference_with(&comp);
        out.push(comp.to_vec());
    }
    out
}

/// Connectivity of `graph \ deleted`. A graph with no live vertices counts as
/// connected.
pub fn is_connected_without(graph: &Graph, deleted: &VertexSet) -> bool {
    let alive = deleted.complement();
    match alive.first() {
        None => true,
        Some(seed) => graph.reach(seed, deleted).count() == alive.count(),
    }
}

pub fn is_connected(graph: &Graph) -> bool {
    is_connected_without(graph, &VertexSet::new(graph.n()))
}

/// Twin data: distinct vertices with identical open neighborhoods.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Twins {
    /// Unordered pairs `(a, b)` with `a < b`, lexicographic.
    pub pairs: Vec<(usize, usize)>,
    /// Twin classes of size at least two, ordered by least member.
    pub classes: Vec<Vec<usize>>,
}

pub fn twins(graph: &Graph) -> Twins {
    let mut groups: HashMap<&VertexSet, Vec<usize>> = HashMap::new();
    for v in 0..graph.n() {
        groups.entry(graph.neighbors(v)).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = groups.into_values().filter(|c| c.len() > 1).collect();
    classes.sort();
    let mut pairs = Vec::new();
    for c in &classes {
        for (i, &a) in c.iter().enumerate() {
            for &b in &c[i + 1..] {
                pairs.push((a, b));
            }
        }
    }
    pairs.sort_unstable();
    Twins { pairs, classes }
}

/// Any two non-adjacent vertices are twins.
pub fn is_complete_multipartite(graph: &Graph) -> bool {
    (0..graph.n()).all(|x| (x + 1..graph.n()).all(|y| graph.adjacent(x, y) || graph.neighbors(x) == graph.neighbors(y)))
}

/// Per-vertex sizes of the cliques partitioning each open neighborhood, or
/// `None` when some neighborhood is not a disjoint union of cliques (that is,
/// the graph has an induced `K_{2,1,1}`).
pub fn local_clique_structure(graph: &Graph) -> Option<Vec<Vec<usize>>> {
    let mut out = Vec::with_capacity(graph.n());
    for x in 0..graph.n() {
        let nbhd = graph.neighbors(x);
        let mut unassigned = nbhd.clone();
        let mut sizes = Vec::new();
        while let Some(y) = unassigned.first() {
            let mut clique = graph.neighbors(y).clone();
            clique.intersect_with(nbhd);
            clique.insert(y);
            for z in clique.iter() {
                let mut cz = graph.neighbors(z).clone();
                cz.intersect_with(nbhd);
                cz.insert(z);
                if cz != clique {
                    return None;
                }
            }
            unassigned.difference_with(&clique);
            sizes.push(clique.count());
        }
        sizes.sort_unstable();
        out.push(sizes);
    }
    Some(out)
}

pub fn k211_free(graph: &Graph) -> bool {
    local_clique_structure(graph).is_some()
}
