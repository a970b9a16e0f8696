use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::LocalizeError;
use crate::exactpoly::{PolyJson, Polynomial, VarSpace};
use crate::matroid::Subset;

/// A polynomial in `t` at every `r`-subset of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkmTuple {
    space: VarSpace,
    values: BTreeMap<Subset, Polynomial<BigInt>>,
}

/// A failed divisibility test `f_B - f_{B - i + j}` modulo `t_j - t_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GkmViolation {
    pub basis: Vec<usize>,
    pub other: Vec<usize>,
    pub i: usize,
    pub j: usize,
}

impl GkmTuple {
    /// Requires a value at every `r`-subset, each free of `u`.
    pub fn new(space: VarSpace, values: BTreeMap<Subset, Polynomial<BigInt>>) -> Result<Self, LocalizeError> {
        let all = Subset::all_of_size(space.n, space.r);
        if values.len() != all.len() || all.iter().any(|b| !values.contains_key(b)) {
            return Err(LocalizeError::IncompleteTuple);
        }
        if values.values().any(|p| p.involves_u() || p.space() != space) {
            return Err(LocalizeError::IncompleteTuple);
        }
        Ok(GkmTuple { space, values })
    }

    pub fn from_fn(space: VarSpace, mut f: impl FnMut(Subset) -> Polynomial<BigInt>) -> Self {
        let values = Subset::all_of_size(space.n, space.r)
            .into_iter()
            .map(|b| (b, f(b)))
            .collect();
        GkmTuple { space, values }
    }

    pub fn constant(space: VarSpace, p: Polynomial<BigInt>) -> Self {
        Self::from_fn(space, |_| p.clone())
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn get(&self, b: Subset) -> &Polynomial<BigInt> {
        &self.values[&b]
    }

    /// Replaces one entry; the subset must be an `r`-subset.
    pub fn set(&mut self, b: Subset, p: Polynomial<BigInt>) {
        assert!(self.values.contains_key(&b), "{b} is not an r-subset");
        self.values.insert(b, p);
    }

    pub fn iter(&self) -> impl Iterator<Item = (Subset, &Polynomial<BigInt>)> + '_ {
        self.values.iter().map(|(&b, p)| (b, p))
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(Polynomial::is_zero)
    }

    pub fn to_json(&self) -> GkmTupleJson {
        GkmTupleJson(
            self.iter()
                .map(|(b, p)| GkmEntryJson {
                    basis: b.to_vec(),
                    value: p.to_json(),
                })
                .collect(),
        )
    }

    pub fn from_json(json: &GkmTupleJson, space: VarSpace) -> Result<Self, LocalizeError> {
        let mut values = BTreeMap::new();
        for e in &json.0 {
            if e.basis.len() != space.r || e.basis.iter().any(|&x| x == 0 || x > space.n) {
                return Err(LocalizeError::InvalidSubset {
                    subset: e.basis.clone(),
                    r: space.r,
                    n: space.n,
                });
            }
            let b = Subset::from_elems(e.basis.iter().copied());
            values.insert(b, Polynomial::from_json(&e.value, space)?);
        }
        Self::new(space, values)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GkmEntryJson {
    pub basis: Vec<usize>,
    pub value: PolyJson,
}

/// `[{"basis": [...], "value": <polynomial>}, ...]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GkmTupleJson(pub Vec<GkmEntryJson>);

/// Every adjacent pair whose difference fails to vanish at `t_j = t_i`.
pub fn gkm_check(f: &GkmTuple) -> Vec<GkmViolation> {
    let n = f.space.n;
    let mut out = Vec::new();
    for (b, fb) in f.iter() {
        for i in b.elems() {
            for j in Subset::full(n).difference(b).elems() {
                let other = b.without(i).with(j);
                if other < b {
                    continue;
                }
                if !(fb - f.get(other)).identify_t(j, i).is_zero() {
                    out.push(GkmViolation {
                        basis: b.to_vec(),
                        other: other.to_vec(),
                        i,
                        j,
                    });
                }
            }
        }
    }
    out
}
