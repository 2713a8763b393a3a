//! Unweighted distribution diagrams and the metric facts they carry.
//!
//! `H_i` lives on the class indices `{0..d}`; `j ~ k` iff
//! `p_ij^k + p_ik^j > 0`. Loops are recorded but every traversal ignores
//! them.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::bitset::VertexSet;
use crate::error::{Error, Pair, Result};
use crate::graph::{Graph, INF};
use crate::scheme::{relation_graph, SchemeDescriptor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    class: usize,
    adj: Vec<Vec<usize>>,
    loops: Vec<bool>,
    levels: Vec<Option<u32>>,
    level_sets: Vec<Vec<usize>>,
}

pub fn distribution_diagram(scheme: &SchemeDescriptor, i: usize) -> Result<Diagram> {
    if i == 0 {
        return Err(Error::IdentityClassRequested);
    }
    if i > scheme.d() {
        return Err(Error::ClassOutOfRange(i));
    }
    if !scheme.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let w = scheme.d() + 1;
    let mut adj = vec![Vec::new(); w];
    let mut loops = vec![false; w];
    for j in 0..w {
        for k in 0..w {
            if scheme.p(i, j, k) + scheme.p(i, k, j) > 0 {
                if j == k {
                    loops[j] = true;
                } else {
                    adj[j].push(k);
                }
            }
        }
    }
    let levels = bfs(&adj, &vec![false; w]);
    let depth = levels.iter().flatten().max().copied().unwrap_or(0);
    let mut level_sets = vec![Vec::new(); depth as usize + 1];
    for (j, l) in levels.iter().enumerate() {
        if let Some(l) = l {
            level_sets[*l as usize].push(j);
        }
    }
    Ok(Diagram {
        class: i,
        adj,
        loops,
        levels,
        level_sets,
    })
}

fn bfs(adj: &[Vec<usize>], removed: &[bool]) -> Vec<Option<u32>> {
    let mut levels = vec![None; adj.len()];
    if removed[0] {
        return levels;
    }
    levels[0] = Some(0);
    let mut queue = VecDeque::from([0]);
    while let Some(j) = queue.pop_front() {
        let next = levels[j].map(|l| l + 1);
        for &k in &adj[j] {
            if levels[k].is_none() && !removed[k] {
                levels[k] = next;
                queue.push_back(k);
            }
        }
    }
    levels
}

impl Diagram {
    pub fn class(&self) -> usize {
        self.class
    }

    pub fn d(&self) -> usize {
        self.adj.len() - 1
    }

    pub fn adjacent(&self, j: usize, k: usize) -> bool {
        if j == k {
            self.loops[j]
        } else {
            self.adj[j].contains(&k)
        }
    }

    /// Loopless neighbors, ascending.
    pub fn neighbors(&self, j: usize) -> &[usize] {
        &self.adj[j]
    }

    pub fn has_loop(&self, j: usize) -> bool {
        self.loops[j]
    }

    /// `d_H(0, j)`, or `None` when `j` is unreachable.
    pub fn level(&self, j: usize) -> Option<u32> {
        self.levels[j]
    }

    pub fn levels(&self) -> &[Option<u32>] {
        &self.levels
    }

    /// `I_h` for `h = 0..=D`.
    pub fn level_sets(&self) -> &[Vec<usize>] {
        &self.level_sets
    }

    /// Largest finite level.
    pub fn diameter(&self) -> u32 {
        (self.level_sets.len() - 1) as u32
    }

    pub fn all_reachable(&self) -> bool {
        self.levels.iter().all(Option::is_some)
    }

    /// Components of the loopless diagram with `removed` vertices dropped,
    /// each sorted, ordered by least member.
    pub fn components_without(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let w = self.adj.len();
        let mut gone = vec![false; w];
        for &r in removed {
            gone[r] = true;
        }
        let mut out = Vec::new();
        for seed in 0..w {
            if gone[seed] {
                continue;
            }
            let mut comp = vec![seed];
            gone[seed] = true;
            let mut head = 0;
            while head < comp.len() {
                let j = comp[head];
                head += 1;
                for &k in &self.adj[j] {
                    if !gone[k] {
                        gone[k] = true;
                        comp.push(k);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Components of `H' = H \ {0, i}`.
    pub fn h_prime_components(&self) -> Vec<Vec<usize>> {
        self.components_without(&[0, self.class])
    }

    /// `H'` is connected; the empty `H'` counts as connected.
    pub fn h_prime_connected(&self) -> bool {
        self.h_prime_components().len() <= 1
    }

    /// `B_{H,t}(0)`.
    pub fn ball(&self, t: u32) -> Vec<usize> {
        (0..self.adj.len())
            .filter(|&j| self.levels[j].is_some_and(|l| l <= t))
            .collect()
    }

    /// The relation generates a distance-regular ordering: the diagram is a
    /// path with one class on each level `0..=d`.
    pub fn is_p_polynomial_generator(&self) -> bool {
        self.all_reachable() && self.level_sets.iter().all(|s| s.len() == 1)
    }

    /// Graphviz text; vertices `0..d`, loops included.
    pub fn to_dot(&self) -> String {
        let mut s = format!("graph H{} {{\n", self.class);
        for j in 0..self.adj.len() {
            let _ = writeln!(s, "  {j};");
        }
        for j in 0..self.adj.len() {
            if self.loops[j] {
                let _ = writeln!(s, "  {j} -- {j};");
            }
            for &k in self.adj[j].iter().filter(|&&k| k > j) {
                let _ = writeln!(s, "  {j} -- {k};");
            }
        }
        s.push_str("}\n");
        s
    }
}

/// `phi_a` images of a walk in `Gamma_i`.
pub fn project_walk(scheme: &SchemeDescriptor, i: usize, a: usize, walk: &[usize]) -> Result<Vec<usize>> {
    let t = scheme.table();
    for (step, w) in walk.windows(2).enumerate() {
        if t.class(w[0], w[1]) != i {
            return Err(Error::NotAWalk(step));
        }
    }
    Ok(walk.iter().map(|&x| t.class(a, x)).collect())
}

/// A `Gamma_i`-walk starting at `b` whose projection from `a` is
/// `class_walk`; least-index choice at every step.
pub fn lift_walk(scheme: &SchemeDescriptor, i: usize, a: usize, b: usize, class_walk: &[usize]) -> Result<Vec<usize>> {
    let t = scheme.table();
    match class_walk.first() {
        Some(&c) if c == t.class(a, b) => {}
        _ => return Err(Error::LiftImpossible(0)),
    }
    let mut out = vec![b];
    for (step, &target) in class_walk.iter().enumerate().skip(1) {
        let x = *out.last().expect("nonempty");
        let next = (0..scheme.v())
            .find(|&y| t.class(x, y) == i && t.class(a, y) == target)
            .ok_or(Error::LiftImpossible(step))?;
        out.push(next);
    }
    Ok(out)
}

/// Outcome of an exhaustive check, with the first offending pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Check {
    pub ok: bool,
    pub witness: Option<Pair>,
}

impl Check {
    pub const PASS: Check = Check {
        ok: true,
        witness: None,
    };

    pub fn fail(p: Pair) -> Check {
        Check {
            ok: false,
            witness: Some(p),
        }
    }
}

/// `d_Gamma(a, b) = d_H(0, class(a, b))` for every ordered pair.
pub fn geodesic_correspondence_check(scheme: &SchemeDescriptor, i: usize) -> Result<Check> {
    let diagram = distribution_diagram(scheme, i)?;
    let graph = relation_graph(scheme, i)?;
    let t = scheme.table();
    for a in 0..scheme.v() {
        let dist = graph.distances(a);
        for (b, &db) in dist.iter().enumerate() {
            let expected = diagram.level(t.class(a, b)).unwrap_or(INF);
            if db != expected {
                return Ok(Check::fail(Pair(a, b)));
            }
        }
    }
    Ok(Check::PASS)
}

/// `c(target) = sum over j in I_{h-1} of p_{i j}^{target}`, with `i` the
/// diagram class. `None` for class 0 and unreachable classes.
pub fn c_of(scheme: &SchemeDescriptor, diagram: &Diagram, target: usize) -> Option<u64> {
    let h = diagram.level(target)?;
    if h == 0 {
        return None;
    }
    let s = diagram.class();
    Some(
        diagram.level_sets()[h as usize - 1]
            .iter()
            .map(|&j| scheme.p(s, j, target))
            .sum(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodesicData {
    pub c_values: Vec<Option<u64>>,
    pub unique_geodesic_classes: Vec<usize>,
}

pub fn geodesic_data(scheme: &SchemeDescriptor, diagram: &Diagram) -> GeodesicData {
    let c_values: Vec<Option<u64>> = (0..=diagram.d()).map(|j| c_of(scheme, diagram, j)).collect();
    let unique_geodesic_classes = (0..=diagram.d()).filter(|&j| c_values[j] == Some(1)).collect();
    GeodesicData {
        c_values,
        unique_geodesic_classes,
    }
}

/// Monotonicity of `c` along diagram geodesics from 0, and `c(i) = 1`
/// propagating back to every class on a geodesic to `i`. The witness is the
/// offending diagram edge `(j, k)` with `k` one level above `j`.
pub fn c_monotone_check(scheme: &SchemeDescriptor, diagram: &Diagram) -> Check {
    let data = geodesic_data(scheme, diagram);
    if c_of(scheme, diagram, diagram.class()) != Some(1) {
        return Check::fail(Pair(0, diagram.class()));
    }
    for j in 1..=diagram.d() {
        let Some(lj) = diagram.level(j) else { continue };
        for &k in diagram.neighbors(j) {
            if diagram.level(k) != Some(lj + 1) {
                continue;
            }
            let (cj, ck) = (data.c_values[j], data.c_values[k]);
            if cj > ck || (ck == Some(1) && cj != Some(1)) {
                return Check::fail(Pair(j, k));
            }
        }
    }
    Check::PASS
}

/// Number of geodesics from 0 to each class in the loopless diagram.
pub fn diagram_geodesic_counts(diagram: &Diagram) -> Vec<u64> {
    let mut count = vec![0u64; diagram.d() + 1];
    count[0] = 1;
    for level in diagram.level_sets().iter().skip(1) {
        for &k in level {
            let lk = diagram.level(k).expect("on a level");
            count[k] = diagram
                .neighbors(k)
                .iter()
                .filter(|&&j| diagram.level(j) == Some(lk - 1))
                .map(|&j| count[j])
                .fold(0u64, u64::saturating_add);
        }
    }
    count
}

/// `[a, b] = {x : d(a,x) + d(x,b) = d(a,b)}`.
pub fn interval(graph: &Graph, a: usize, b: usize) -> Result<VertexSet> {
    let da = graph.distances(a);
    if da[b] == INF {
        return Err(Error::DisconnectedPair(a, b));
    }
    let db = graph.distances(b);
    Ok(interval_from(&da, &db, b))
}

fn interval_from(da: &[u32], db: &[u32], b: usize) -> VertexSet {
    VertexSet::from_iter(
        da.len(),
        (0..da.len()).filter(|&x| da[x] != INF && db[x] != INF && da[x] + db[x] == da[b]),
    )
}

/// For every class `j` with `c(j) = 1`: a unique diagram geodesic from 0 to
/// `j`, and `|[a, b]| = d(a, b) + 1` for every `(a, b)` in `R_j`.
pub fn unique_geodesic_check(scheme: &SchemeDescriptor, i: usize) -> Result<Check> {
    let diagram = distribution_diagram(scheme, i)?;
    let graph = relation_graph(scheme, i)?;
    let data = geodesic_data(scheme, &diagram);
    if data.unique_geodesic_classes.is_empty() {
        return Ok(Check::PASS);
    }
    let counts = diagram_geodesic_counts(&diagram);
    if let Some(&j) = data.unique_geodesic_classes.iter().find(|&&j| counts[j] != 1) {
        return Ok(Check::fail(Pair(0, j)));
    }
    let mut unique = vec![false; diagram.d() + 1];
    for &j in &data.unique_geodesic_classes {
        unique[j] = true;
    }
    let dist = graph.distance_matrix();
    let t = scheme.table();
    for a in 0..scheme.v() {
        for b in 0..scheme.v() {
            if unique[t.class(a, b)] && interval_from(&dist[a], &dist[b], b).count() != dist[a][b] as usize + 1 {
                return Ok(Check::fail(Pair(a, b)));
            }
        }
    }
    Ok(Check::PASS)
}

/// Nearest members of `T` for one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proximity {
    /// Every `y` in `T` with no strictly closer member of `T`, ascending.
    pub proximal: Vec<usize>,
    /// The strict minimizer, when there is exactly one.
    pub only: Option<usize>,
}

pub fn proximal_partition(graph: &Graph, t: &[usize]) -> Vec<Proximity> {
    let dists: Vec<Vec<u32>> = t.iter().map(|&y| graph.distances(y)).collect();
    (0..graph.n())
        .map(|x| {
            let best = dists.iter().map(|d| d[x]).min().unwrap_or(INF);
            let mut proximal: Vec<usize> = t
                .iter()
                .zip(&dists)
                .filter(|(_, d)| d[x] == best)
                .map(|(&y, _)| y)
                .collect();
            proximal.sort_unstable();
            proximal.dedup();
            let only = (proximal.len() == 1).then(|| proximal[0]);
            Proximity { proximal, only }
        })
        .collect()
}
