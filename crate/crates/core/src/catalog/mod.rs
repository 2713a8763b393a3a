//! Built-in scheme families and the acceptance catalog.
//!
//! Generators emit classes in the natural order of the family parameter
//! (Hamming distance, `k - |x ∩ y|`, cyclic distance); [`scheme_from_drg`]
//! emits path-distance order. Nothing downstream reorders classes.

mod groups;
mod io;

pub use groups::{Group, GroupTable, GROUP_CHECK_CAP};
pub use io::{load_group_table, load_scheme, save_scheme};

use crate::error::{Error, Result};
use crate::graph::{Graph, INF};
use crate::scheme::{validate_scheme, RelationTable, SchemeDescriptor};

/// Largest vertex count any generator will produce.
pub const SIZE_CAP: usize = 4096;

fn check_cap(v: u128, what: &str) -> Result<usize> {
    if v > SIZE_CAP as u128 {
        return Err(Error::SizeCap(format!("{what} has {v} vertices (cap {SIZE_CAP})")));
    }
    Ok(v as usize)
}

pub fn gen_hamming(n: usize, q: usize) -> Result<SchemeDescriptor> {
    if n < 1 || q < 2 {
        return Err(Error::Malformed(format!("H({n},{q}) needs n >= 1 and q >= 2")));
    }
    let v = check_cap(
        (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX),
        &format!("H({n},{q})"),
    )?;
    let digits: Vec<Vec<usize>> = (0..v)
        .map(|mut x| {
            (0..n)
                .map(|_| {
                    let dgt = x % q;
                    x /= q;
                    dgt
                })
                .collect()
        })
        .collect();
    let rows = (0..v)
        .map(|x| {
            (0..v)
                .map(|y| digits[x].iter().zip(&digits[y]).filter(|(a, b)| a != b).count() as u32)
                .collect()
        })
        .collect();
    validate_scheme(RelationTable::new(rows)?, format!("H({n},{q})"))
}

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u128;
    for i in 0..k {
        match acc.checked_mul((n - i) as u128) {
            Some(x) => acc = x / (i + 1) as u128,
            None => return u128::MAX,
        }
    }
    acc
}

/// k-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

pub fn gen_johnson(vs: usize, k: usize) -> Result<SchemeDescriptor> {
    if k < 1 || 2 * k > vs {
        return Err(Error::Malformed(format!("J({vs},{k}) needs 1 <= k <= v/2")));
    }
    check_cap(binomial(vs, k), &format!("J({vs},{k})"))?;
    let subsets = k_subsets(vs, k);
    let meet = |x: &[usize], y: &[usize]| {
        let (mut i, mut j, mut m) = (0, 0, 0);
        while i < x.len() && j < y.len() {
            match x[i].cmp(&y[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    m += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        m
    };
    let rows = subsets
        .iter()
        .map(|x| subsets.iter().map(|y| (k - meet(x, y)) as u32).collect())
        .collect();
    validate_scheme(RelationTable::new(rows)?, format!("J({vs},{k})"))
}

pub fn gen_cyclic(n: usize) -> Result<SchemeDescriptor> {
    if n < 3 {
        return Err(Error::Malformed(format!("cyclic scheme needs n >= 3, got {n}")));
    }
    check_cap(n as u128, &format!("C{n}"))?;
    let rows = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let d = x.abs_diff(y);
                    d.min(n - d) as u32
                })
                .collect()
        })
        .collect();
    validate_scheme(RelationTable::new(rows)?, format!("C{n}"))
}

/// Conjugacy-class scheme: `(a, b)` in the class of `a b^{-1}`.
pub fn gen_conjugacy(table: &GroupTable) -> Result<SchemeDescriptor> {
    let group = table.check()?;
    let n = group.order();
    let mut owner = vec![0u32; n];
    for (c, class) in group.conjugacy_classes().iter().enumerate() {
        for &x in class {
            owner[x] = c as u32;
        }
    }
    let rows = (0..n)
        .map(|a| (0..n).map(|b| owner[group.mul(a, group.inverse(b))]).collect())
        .collect();
    validate_scheme(RelationTable::new(rows)?, format!("group of order {n}"))
}

/// Distance partition of a connected graph, validated as a scheme; succeeds
/// exactly for distance-regular graphs.
pub fn scheme_from_drg(graph: &Graph) -> Result<SchemeDescriptor> {
    let dist = graph.distance_matrix();
    if dist.iter().flatten().any(|&x| x == INF) {
        return Err(Error::Disconnected);
    }
    let rows: Vec<Vec<u32>> = dist;
    let table = RelationTable::new(rows)?;
    validate_scheme(table, "distance scheme").map_err(|e| match e {
        Error::NonConstantIntersection { pair_b, .. } => Error::NotDistanceRegular(pair_b),
        other => other,
    })
}

/// A family member, as written in manifests and on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Hamming { n: usize, q: usize },
    Johnson { v: usize, k: usize },
    Cyclic { n: usize },
    Conjugacy { label: String, table: GroupTable },
    FromDrg { label: String, graph: Graph },
}

impl Family {
    /// Parses `hamming N Q`, `johnson V K`, `cyclic N`,
    /// `group s3|d4|q8|zN` and `drg petersen|k33|cubeN|cycleN`.
    pub fn parse<S: AsRef<str>>(words: &[S]) -> Result<Self> {
        let words: Vec<&str> = words.iter().map(AsRef::as_ref).collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("expected a non-negative integer, found {s:?}")))
        };
        let arity = |n: usize| {
            if words.len() != n + 1 {
                Err(Error::Parse(format!("family {:?} takes {n} argument(s)", words[0])))
            } else {
                Ok(())
            }
        };
        match words.first().copied() {
            Some("hamming") => {
                arity(2)?;
                Ok(Family::Hamming {
                    n: num(words[1])?,
                    q: num(words[2])?,
                })
            }
            Some("johnson") => {
                arity(2)?;
                Ok(Family::Johnson {
                    v: num(words[1])?,
                    k: num(words[2])?,
                })
            }
            Some("cyclic") => {
                arity(1)?;
                Ok(Family::Cyclic { n: num(words[1])? })
            }
            Some("group") => {
                arity(1)?;
                let label = words[1].to_ascii_lowercase();
                let table = match label.as_str() {
                    "s3" => GroupTable::s3(),
                    "d4" => GroupTable::d4(),
                    "q8" => GroupTable::q8(),
                    z if z.starts_with('z') => GroupTable::cyclic(num(&z[1..])?),
                    other => return Err(Error::Parse(format!("unknown group {other:?}"))),
                };
                Ok(Family::Conjugacy { label, table })
            }
            Some("drg") => {
                arity(1)?;
                let label = words[1].to_ascii_lowercase();
                let graph = match label.as_str() {
                    "petersen" => Graph::petersen(),
                    "k33" => Graph::complete_multipartite(&[3, 3]),
                    c if c.starts_with("cube") => Graph::hypercube(num(&c[4..])? as u32),
                    c if c.starts_with("cycle") => {
                        let n = num(&c[5..])?;
                        if n < 3 {
                            return Err(Error::Parse("cycle needs n >= 3".into()));
                        }
                        Graph::cycle(n)
                    }
                    other => return Err(Error::Parse(format!("unknown graph {other:?}"))),
                };
                Ok(Family::FromDrg { label, graph })
            }
            Some(other) => Err(Error::Parse(format!("unknown family {other:?}"))),
            None => Err(Error::Parse("empty family description".into())),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Family::Hamming { n, q } => format!("H({n},{q})"),
            Family::Johnson { v, k } => format!("J({v},{k})"),
            Family::Cyclic { n } => format!("C{n}"),
            Family::Conjugacy { label, .. } => label.to_ascii_uppercase(),
            Family::FromDrg { label, .. } => match label.as_str() {
                "petersen" => "Petersen".to_string(),
                "k33" => "K33".to_string(),
                other => other.to_string(),
            },
        }
    }

    pub fn build(&self) -> Result<SchemeDescriptor> {
        let s = match self {
            Family::Hamming { n, q } => gen_hamming(*n, *q)?,
            Family::Johnson { v, k } => gen_johnson(*v, *k)?,
            Family::Cyclic { n } => gen_cyclic(*n)?,
            Family::Conjugacy { table, .. } => gen_conjugacy(table)?,
            Family::FromDrg { graph, .. } => scheme_from_drg(graph)?,
        };
        Ok(s.with_name(self.name()))
    }
}

/// Largest `C(v, k)` admitted for Johnson members of the built-in catalog.
pub const JOHNSON_CATALOG_CAP: u128 = 300;
/// Complete graphs `J(v, 1)` are only catalogued up to this `v`.
pub const JOHNSON_K1_MAX: usize = 12;

/// The built-in acceptance catalog, in canonical order.
pub fn builtin_catalog() -> Vec<Family> {
    let mut out = Vec::new();
    out.extend((3..=12).map(|n| Family::Cyclic { n }));
    out.extend((1..=6).map(|n| Family::Hamming { n, q: 2 }));
    out.extend((3..=5).map(|q| Family::Hamming { n: 2, q }));
    for k in 1.. {
        if binomial(2 * k, k) > JOHNSON_CATALOG_CAP {
            break;
        }
        for v in 2 * k.. {
            if binomial(v, k) > JOHNSON_CATALOG_CAP || (k == 1 && v > JOHNSON_K1_MAX) {
                break;
            }
            out.push(Family::Johnson { v, k });
        }
    }
    for g in ["s3", "d4", "q8"] {
        out.push(Family::parse(&["group", g]).expect("builtin"));
    }
    for n in 2..=8 {
        out.push(Family::parse(&["group", &format!("z{n}")]).expect("builtin"));
    }
    out.push(Family::parse(&["drg", "petersen"]).expect("builtin"));
    out.push(Family::parse(&["drg", "k33"]).expect("builtin"));
    out
}
