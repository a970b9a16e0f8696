//! Matroids on at most 16 elements, from matrices or explicit basis lists.

pub mod catalog;
mod matrix;
mod subset;

pub use matrix::{Matrix, MatrixJson, RationalMatrix};
pub use subset::{Subset, MAX_GROUND};

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("bad shape: {0}")]
    Shape(String),
    #[error("matrix has rank {rank}, expected full row rank {rows}")]
    RankDeficient { rank: usize, rows: usize },
    #[error("ground set of size {0} exceeds the limit of 16")]
    TooLarge(usize),
    #[error("not a matroid: {0}")]
    NotMatroid(String),
    #[error("invalid subset {subset:?} for rank {r} on {n} elements")]
    InvalidSubset { subset: Vec<usize>, r: usize, n: usize },
}

/// A matroid given by its bases, with a precomputed rank function.
#[derive(Clone, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    r: usize,
    bases: BTreeSet<Subset>,
    rank: Vec<u8>,
}

impl Matroid {
    /// Validates sizes and the basis exchange axiom.
    pub fn from_bases(
        n: usize,
        r: usize,
        bases: impl IntoIterator<Item = Subset>,
    ) -> Result<Matroid, MatroidError> {
        if n > MAX_GROUND {
            return Err(MatroidError::TooLarge(n));
        }
        if r > n {
            return Err(MatroidError::NotMatroid(format!("rank {r} exceeds n = {n}")));
        }
        let bases: BTreeSet<Subset> = bases.into_iter().collect();
        if bases.is_empty() {
            return Err(MatroidError::NotMatroid("no bases".into()));
        }
        let full = Subset::full(n);
        for b in &bases {
            if b.len() != r || !b.is_subset_of(full) {
                return Err(MatroidError::NotMatroid(format!("{b} is not an {r}-subset of [{n}]")));
            }
        }
        for b1 in &bases {
            for b2 in &bases {
                for i in b1.difference(*b2).elems() {
                    let ok = b2
                        .difference(*b1)
                        .elems()
                        .any(|j| bases.contains(&b1.without(i).with(j)));
                    if !ok {
                        return Err(MatroidError::NotMatroid(format!(
                            "exchange fails for {b1}, {b2} at {i}"
                        )));
                    }
                }
            }
        }
        let rank = rank_table(n, &bases);
        Ok(Matroid { n, r, bases, rank })
    }

    /// From lists of 1-based elements.
    pub fn from_basis_lists(n: usize, r: usize, lists: &[Vec<usize>]) -> Result<Matroid, MatroidError> {
        let mut bases = Vec::with_capacity(lists.len());
        for l in lists {
            if l.iter().any(|&e| e == 0 || e > n) {
                return Err(MatroidError::InvalidSubset {
                    subset: l.clone(),
                    r,
                    n,
                });
            }
            let s = Subset::from_elems(l.iter().copied());
            if s.len() != l.len() {
                return Err(MatroidError::NotMatroid(format!("repeated element in {l:?}")));
            }
            bases.push(s);
        }
        Matroid::from_bases(n, r, bases)
    }

    pub fn uniform(r: usize, n: usize) -> Result<Matroid, MatroidError> {
        if n > MAX_GROUND {
            return Err(MatroidError::TooLarge(n));
        }
        Matroid::from_bases(n, r, Subset::all_of_size(n, r))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Bases in lexicographic order.
    pub fn bases(&self) -> impl Iterator<Item = Subset> + '_ {
        self.bases.iter().copied()
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        self.bases.contains(&s)
    }

    pub fn rank_of(&self, s: Subset) -> usize {
        self.rank[s.bits() as usize] as usize
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.rank_of(s) == s.len()
    }

    pub fn is_uniform(&self) -> bool {
        self.bases.len() == Subset::all_of_size(self.n, self.r).len()
    }

    /// Greedy scan of `perm` (1-based elements), keeping independent additions.
    pub fn lex_first_basis(&self, perm: &[usize]) -> Subset {
        let mut kept = Subset::EMPTY;
        for &e in perm {
            let next = kept.with(e);
            if self.is_independent(next) {
                kept = next;
            }
        }
        kept
    }

    /// Pairs of bases differing in exactly one element.
    pub fn exchange_edges(&self) -> Vec<(Subset, Subset)> {
        let bases: Vec<Subset> = self.bases().collect();
        let mut out = Vec::new();
        for (k, &a) in bases.iter().enumerate() {
            for &b in &bases[k + 1..] {
                if a.intersection(b).len() + 1 == self.r {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Connected components, each sorted, listed by smallest element.
    ///
    /// Two elements are connected when some basis exchange swaps one for the
    /// other; with a fixed basis these are the fundamental circuits.
    pub fn components(&self) -> Vec<Subset> {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let b = *self.bases.iter().next().expect("nonempty");
        for e in Subset::full(self.n).difference(b).elems() {
            for f in b.elems() {
                if self.is_basis(b.without(f).with(e)) {
                    let (x, y) = (find(&mut parent, e), find(&mut parent, f));
                    parent[x] = y;
                }
            }
        }
        let mut comps: Vec<Subset> = Vec::new();
        let mut root_of: Vec<Option<usize>> = vec![None; self.n + 1];
        for e in 1..=self.n {
            let root = find(&mut parent, e);
            match root_of[root] {
                Some(k) => comps[k] = comps[k].with(e),
                None => {
                    root_of[root] = Some(comps.len());
                    comps.push(Subset::singleton(e));
                }
            }
        }
        comps
    }

    /// The restriction to a union of components, relabelled onto `1..=|c|`.
    pub fn restrict_to_component(&self, c: Subset) -> Matroid {
        let elems = c.to_vec();
        let relabel = |s: Subset| {
            Subset::from_elems(
                elems
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| s.contains(e))
                    .map(|(k, _)| k + 1),
            )
        };
        let bases: BTreeSet<Subset> = self.bases().map(|b| relabel(b.intersection(c))).collect();
        let r = bases.iter().next().expect("nonempty").len();
        Matroid::from_bases(elems.len(), r, bases).expect("restriction to a component is a matroid")
    }

    pub fn to_json(&self) -> MatroidJson {
        MatroidJson {
            n: self.n,
            r: self.r,
            bases: self.bases().map(Subset::to_vec).collect(),
        }
    }

    pub fn from_json(json: &MatroidJson) -> Result<Matroid, MatroidError> {
        Matroid::from_basis_lists(json.n, json.r, &json.bases)
    }
}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Matroid(n={}, r={}, bases={:?})", self.n, self.r, self.bases)
    }
}

/// `rank[S]` for every subset `S`, from the independent sets.
fn rank_table(n: usize, bases: &BTreeSet<Subset>) -> Vec<u8> {
    let size = 1usize << n;
    let mut indep = vec![false; size];
    for b in bases {
        // Enumerate submasks of b.
        let mut s = b.bits();
        loop {
            indep[s as usize] = true;
            if s == 0 {
                break;
            }
            s = (s - 1) & b.bits();
        }
    }
    let mut rank = vec![0u8; size];
    for s in 1..size {
        rank[s] = if indep[s] {
            s.count_ones() as u8
        } else {
            let mut best = 0;
            let mut bits = s;
            while bits != 0 {
                let low = bits & bits.wrapping_neg();
                best = best.max(rank[s & !low]);
                bits &= bits - 1;
            }
            best
        };
    }
    rank
}

/// `{"n": n, "r": r, "bases": [[sorted ints], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidJson {
    pub n: usize,
    pub r: usize,
    pub bases: Vec<Vec<usize>>,
}

/// The column matroid of a full-row-rank matrix.
pub fn matroid_of_matrix<S: Scalar>(v: &Matrix<S>) -> Result<Matroid, MatroidError> {
    let (r, n) = (v.rows(), v.cols());
    if n > MAX_GROUND {
        return Err(MatroidError::TooLarge(n));
    }
    if r > n {
        return Err(MatroidError::Shape(format!("{r} rows exceed {n} columns")));
    }
    let rank = v.rank();
    if rank < r {
        return Err(MatroidError::RankDeficient { rank, rows: r });
    }
    let bases: Vec<Subset> = Subset::all_of_size(n, r)
        .into_par_iter()
        .filter(|&s| !v.minor(s).is_zero())
        .collect();
    Matroid::from_bases(n, r, bases)
}
