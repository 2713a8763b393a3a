//! Finite groups given by multiplication tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest group whose associativity is checked exhaustively.
pub const GROUP_CHECK_CAP: usize = 256;

/// File form: `{"v": int, "mul": [[int; v]; v]}`, with `mul[a][b] = a*b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupTable {
    pub v: usize,
    pub mul: Vec<Vec<usize>>,
}

/// A checked group: identity and inverses resolved.
#[derive(Debug, Clone)]
pub struct Group {
    mul: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl Group {
    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Conjugacy classes; the identity class first, the rest ordered by
    /// least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut owner = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = vec![vec![self.identity]];
        owner[self.identity] = 0;
        for g in 0..n {
            if owner[g] != usize::MAX {
                continue;
            }
            let mut class: Vec<usize> = (0..n).map(|h| self.mul(self.mul(h, g), self.inverse(h))).collect();
            class.sort_unstable();
            class.dedup();
            for &x in &class {
                owner[x] = classes.len();
            }
            classes.push(class);
        }
        classes
    }
}

impl GroupTable {
    /// Checks closure, identity, inverses and (exhaustively) associativity.
    pub fn check(&self) -> Result<Group> {
        let n = self.v;
        if n == 0 || self.mul.len() != n || self.mul.iter().any(|r| r.len() != n) {
            return Err(Error::NotAGroup(format!("table is not {n} x {n}")));
        }
        if n > GROUP_CHECK_CAP {
            return Err(Error::SizeCap(format!("group order {n} exceeds {GROUP_CHECK_CAP}")));
        }
        if let Some((a, b)) = pairs(n).find(|&(a, b)| self.mul[a][b] >= n) {
            return Err(Error::NotAGroup(format!(
                "{a}*{b} = {} is out of range",
                self.mul[a][b]
            )));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| self.mul[e][x] == x && self.mul[x][e] == x))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| self.mul[a][b] == identity && self.mul[b][a] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))?;
            inverse.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul[a][b];
                for c in 0..n {
                    if self.mul[ab][c] != self.mul[a][self.mul[b][c]] {
                        return Err(Error::NotAGroup(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                    }
                }
            }
        }
        Ok(Group {
            mul: self.mul.clone(),
            identity,
            inverse,
        })
    }

    pub fn cyclic(n: usize) -> Self {
        Self {
            v: n,
            mul: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
        }
    }

    /// The symmetric group on three points.
    pub fn s3() -> Self {
        Self::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]])
    }

    /// Symmetries of the square, order 8.
    pub fn d4() -> Self {
        Self::from_permutations(&[vec![1, 2, 3, 0], vec![0, 3, 2, 1]])
    }

    /// The quaternion group `{±1, ±i, ±j, ±k}`.
    pub fn q8() -> Self {
        // element 2*u + s encodes (-1)^s * unit u, units 1, i, j, k
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (1, 0), (2, 0), (3, 0)],
            [(1, 0), (0, 1), (3, 0), (2, 1)],
            [(2, 0), (3, 1), (0, 1), (1, 0)],
            [(3, 0), (2, 0), (1, 1), (0, 1)],
        ];
        let mul = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (u, s) = UNIT[a / 2][b / 2];
                        2 * u + (s + a % 2 + b % 2) % 2
                    })
                    .collect()
            })
            .collect();
        Self { v: 8, mul }
    }

    /// Closes a set of permutations under composition. Elements are sorted
    /// lexicographically, so the identity is element 0.
    pub fn from_permutations(gens: &[Vec<usize>]) -> Self {
        let deg = gens[0].len();
        let mut elems: Vec<Vec<usize>> = vec![(0..deg).collect()];
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let h: Vec<usize> = elems[i].iter().map(|&x| g[x]).collect();
                if !elems.contains(&h) {
                    elems.push(h);
                }
            }
            i += 1;
        }
        elems.sort();
        let index = |p: &Vec<usize>| elems.iter().position(|q| q == p).expect("closed");
        // (a*b)(x) = a(b(x))
        let mul = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| index(&b.iter().map(|&x| a[x]).collect()))
                    .collect()
            })
            .collect();
        Self { v: elems.len(), mul }
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}
