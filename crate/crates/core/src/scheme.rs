//! Relation tables, intersection numbers and validated scheme descriptors.
//!
//! The class matrix is the only stored state. Intersection numbers, basis
//! graphs and everything downstream are recomputed from it, and a
//! [`SchemeDescriptor`] can only be obtained through [`validate_scheme`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Pair, Result};
use crate::graph::Graph;

/// A `v x v` matrix of class indices in `0..=d`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationTable {
    v: usize,
    d: usize,
    classes: Vec<u32>,
    symmetric: bool,
    transpose: Vec<usize>,
}

impl RelationTable {
    /// Checks the partition axioms: square shape, identity class 0, every
    /// class used, and closure under transpose.
    pub fn new(classes: Vec<Vec<u32>>) -> Result<Self> {
        let v = classes.len();
        if v == 0 {
            return Err(Error::Malformed("empty table".into()));
        }
        for (a, row) in classes.iter().enumerate() {
            if row.len() != v {
                return Err(Error::Malformed(format!(
                    "row {a} has length {} (expected {v})",
                    row.len()
                )));
            }
        }
        let d = classes.iter().flatten().copied().max().unwrap_or(0) as usize;
        Self::with_d(classes.concat(), v, d)
    }

    /// As [`RelationTable::new`], with the class count given explicitly
    /// (used by the JSON loader, where `d` is part of the contract).
    pub fn with_d(flat: Vec<u32>, v: usize, d: usize) -> Result<Self> {
        if flat.len() != v * v {
            return Err(Error::Malformed(format!(
                "expected {} entries, found {}",
                v * v,
                flat.len()
            )));
        }
        if let Some(pos) = flat.iter().position(|&c| c as usize > d) {
            return Err(Error::Malformed(format!(
                "class {} at ({}, {}) exceeds d = {d}",
                flat[pos],
                pos / v,
                pos % v
            )));
        }
        for a in 0..v {
            for b in 0..v {
                let c = flat[a * v + b];
                if (a == b) != (c == 0) {
                    return Err(Error::NotAPartition(format!(
                        "entry ({a}, {b}) has class {c}; class 0 must be exactly the diagonal"
                    )));
                }
            }
        }
        let mut seen = vec![false; d + 1];
        for &c in &flat {
            seen[c as usize] = true;
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::NotAPartition(format!("class {missing} is empty")));
        }

        let mut transpose: Vec<Option<(usize, Pair)>> = vec![None; d + 1];
        for a in 0..v {
            for b in 0..v {
                let i = flat[a * v + b] as usize;
                let it = flat[b * v + a] as usize;
                match transpose[i] {
                    None => transpose[i] = Some((it, Pair(a, b))),
                    Some((prev, first)) if prev != it => {
                        return Err(Error::NotClosedUnderTranspose {
                            class: i,
                            first,
                            second: Pair(a, b),
                        })
                    }
                    Some(_) => {}
                }
            }
        }
        let transpose: Vec<usize> = transpose.into_iter().map(|t| t.expect("class used").0).collect();
        let symmetric = transpose.iter().enumerate().all(|(i, &t)| i == t);
        Ok(Self {
            v,
            d,
            classes: flat,
            symmetric,
            transpose,
        })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn d(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn class(&self, a: usize, b: usize) -> usize {
        self.classes[a * self.v + b] as usize
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// The map `i -> i'` with `R_i^T = R_{i'}`.
    pub fn transpose_map(&self) -> &[usize] {
        &self.transpose
    }

    pub fn row(&self, a: usize) -> &[u32] {
        &self.classes[a * self.v..(a + 1) * self.v]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.classes.chunks(self.v).map(<[u32]>::to_vec).collect()
    }

    /// Subconstituent `R_i(a)`.
    pub fn subconstituent(&self, a: usize, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(a)
            .iter()
            .enumerate()
            .filter(move |(_, &c)| c as usize == i)
            .map(|(b, _)| b)
    }

    /// Relabels classes through `map` (old index -> new index).
    pub fn relabel(&self, map: &[usize]) -> Result<Self> {
        let flat = self.classes.iter().map(|&c| map[c as usize] as u32).collect();
        let d = map.iter().copied().max().unwrap_or(0);
        Self::with_d(flat, self.v, d)
    }
}

/// Exact intersection numbers `p[i][j][k]` and valencies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionTensor {
    d: usize,
    p: Vec<u64>,
    valencies: Vec<u64>,
}

impl IntersectionTensor {
    #[inline]
    pub fn p(&self, i: usize, j: usize, k: usize) -> u64 {
        let w = self.d + 1;
        self.p[(i * w + j) * w + k]
    }

    pub fn valency(&self, i: usize) -> u64 {
        self.valencies[i]
    }

    pub fn valencies(&self) -> &[u64] {
        &self.valencies
    }

    pub fn d(&self) -> usize {
        self.d
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeDescriptor {
    pub name: String,
    table: RelationTable,
    tensor: IntersectionTensor,
}

impl SchemeDescriptor {
    pub fn table(&self) -> &RelationTable {
        &self.table
    }

    pub fn tensor(&self) -> &IntersectionTensor {
        &self.tensor
    }

    pub fn is_symmetric(&self) -> bool {
        self.table.symmetric
    }

    pub fn v(&self) -> usize {
        self.table.v
    }

    pub fn d(&self) -> usize {
        self.table.d
    }

    pub fn p(&self, i: usize, j: usize, k: usize) -> u64 {
        self.tensor.p(i, j, k)
    }

    pub fn valency(&self, i: usize) -> u64 {
        self.tensor.valency(i)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// Validates the scheme axioms by exhaustive triple counting and returns the
/// descriptor with its intersection tensor.
pub fn validate_scheme(table: RelationTable, name: impl Into<String>) -> Result<SchemeDescriptor> {
    let v = table.v;
    let w = table.d + 1;
    let mut p: Vec<Option<u64>> = vec![None; w * w * w];
    // representative pair of each class k, first seen
    let mut rep: Vec<Option<Pair>> = vec![None; w];
    let mut counts = vec![0u64; w * w];
    for a in 0..v {
        let row_a = table.row(a);
        for b in 0..v {
            let k = table.class(a, b);
            counts.iter_mut().for_each(|c| *c = 0);
            for c in 0..v {
                let i = row_a[c] as usize;
                let j = table.classes[c * v + b] as usize;
                counts[i * w + j] += 1;
            }
            match rep[k] {
                None => {
                    rep[k] = Some(Pair(a, b));
                    for ij in 0..w * w {
                        p[ij * w + k] = Some(counts[ij]);
                    }
                }
                Some(first) => {
                    for ij in 0..w * w {
                        let expected = p[ij * w + k].expect("filled with rep");
                        if counts[ij] != expected {
                            return Err(Error::NonConstantIntersection {
                                i: ij / w,
                                j: ij % w,
                                k,
                                pair_a: first,
                                count_a: expected,
                                pair_b: Pair(a, b),
                                count_b: counts[ij],
                            });
                        }
                    }
                }
            }
        }
    }
    let p: Vec<u64> = p.into_iter().map(|x| x.expect("every class has a pair")).collect();
    for i in 0..w {
        for j in 0..i {
            for k in 0..w {
                if p[(i * w + j) * w + k] != p[(j * w + i) * w + k] {
                    return Err(Error::NotCommutative { i, j, k });
                }
            }
        }
    }
    let valencies = (0..w).map(|i| p[(i * w + table.transpose[i]) * w]).collect();
    Ok(SchemeDescriptor {
        name: name.into(),
        table,
        tensor: IntersectionTensor { d: w - 1, p, valencies },
    })
}

/// Merges each class with its transpose. Symmetric input is returned
/// unchanged; the merged table is re-validated.
pub fn symmetrize(scheme: &SchemeDescriptor) -> Result<SchemeDescriptor> {
    if scheme.is_symmetric() {
        return Ok(scheme.clone());
    }
    let t = scheme.table.transpose_map();
    // classes numbered by the least member of each orbit {i, i'}
    let mut map = vec![usize::MAX; t.len()];
    let mut next = 0;
    for i in 0..t.len() {
        if map[i] == usize::MAX {
            map[i] = next;
            map[t[i]] = next;
            next += 1;
        }
    }
    let table = scheme.table.relabel(&map)?;
    validate_scheme(table, scheme.name.clone())
}

/// The undirected basis graph `(X, R_i)` of a symmetric scheme.
pub fn relation_graph(scheme: &SchemeDescriptor, i: usize) -> Result<Graph> {
    if i == 0 {
        return Err(Error::IdentityClassRequested);
    }
    if i > scheme.d() {
        return Err(Error::ClassOutOfRange(i));
    }
    if !scheme.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let v = scheme.v();
    let mut edges = Vec::new();
    for a in 0..v {
        for b in a + 1..v {
            if scheme.table.class(a, b) == i {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(v, edges)
}

/// Scheme file contents: `{"name", "v", "d", "classes"}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SchemeFile {
    pub name: String,
    pub v: usize,
    pub d: usize,
    pub classes: Vec<Vec<u32>>,
}

impl SchemeFile {
    pub fn from_descriptor(s: &SchemeDescriptor) -> Self {
        Self {
            name: s.name.clone(),
            v: s.v(),
            d: s.d(),
            classes: s.table.to_rows(),
        }
    }

    pub fn into_descriptor(self) -> Result<SchemeDescriptor> {
        if self.classes.len() != self.v {
            return Err(Error::Malformed(format!(
                "v = {} but classes has {} rows",
                self.v,
                self.classes.len()
            )));
        }
        if let Some((a, row)) = self.classes.iter().enumerate().find(|(_, r)| r.len() != self.v) {
            return Err(Error::Malformed(format!(
                "row {a} has length {} (expected {})",
                row.len(),
                self.v
            )));
        }
        let table = RelationTable::with_d(self.classes.concat(), self.v, self.d)?;
        validate_scheme(table, self.name)
    }
}
