use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{schur_in_u, Partition, SymError};
use crate::exactpoly::{PolyError, PolyJson, Polynomial, VarSpace};
use crate::scalar::Scalar;

/// `sum_lam q_lam(t) s_lam(u_1..u_r)` with the `q_lam` free of `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion<C: Scalar> {
    space: VarSpace,
    terms: BTreeMap<Partition, Polynomial<C>>,
}

impl<C: Scalar> SchurExpansion<C> {
    pub fn zero(space: VarSpace) -> Self {
        SchurExpansion {
            space,
            terms: BTreeMap::new(),
        }
    }

    /// Panics if a coefficient involves `u` or a partition has more than `r` parts.
    pub fn from_terms(space: VarSpace, terms: impl IntoIterator<Item = (Partition, Polynomial<C>)>) -> Self {
        let mut e = Self::zero(space);
        for (p, q) in terms {
            e.add_term(p, q);
        }
        e
    }

    pub fn add_term(&mut self, lam: Partition, q: Polynomial<C>) {
        assert!(lam.len() <= self.space.r, "partition {lam} has more than r parts");
        assert!(!q.involves_u(), "coefficients must be free of u");
        assert_eq!(q.space(), self.space, "coefficient space");
        let entry = self
            .terms
            .entry(lam.clone())
            .or_insert_with(|| Polynomial::zero(self.space));
        *entry = &*entry + &q;
        if entry.is_zero() {
            self.terms.remove(&lam);
        }
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Polynomial<C>> {
        &self.terms
    }

    pub fn coeff(&self, lam: &Partition) -> Polynomial<C> {
        self.terms
            .get(lam)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.space))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `sum q_lam s_lam(u)` as a polynomial.
    pub fn evaluate(&self) -> Polynomial<C> {
        let mut acc = Polynomial::zero(self.space);
        for (lam, q) in &self.terms {
            acc = &acc + &(q * &schur_in_u(lam, self.space));
        }
        acc
    }

    /// Transposes every Schur index, keeping the `t` coefficients.
    pub fn omega_transpose(&self) -> Result<Self, SymError> {
        let mut out = Self::zero(self.space);
        for (lam, q) in &self.terms {
            if lam.largest() as usize > self.space.r {
                return Err(SymError::TransposeOverflow {
                    partition: lam.clone(),
                    r: self.space.r,
                });
            }
            out.add_term(lam.transpose(), q.clone());
        }
        Ok(out)
    }

    pub fn to_json(&self) -> SchurExpansionJson {
        SchurExpansionJson(
            self.terms
                .iter()
                .map(|(p, q)| SchurTermJson {
                    partition: p.clone(),
                    coeff: q.to_json(),
                })
                .collect(),
        )
    }

    pub fn from_json(json: &SchurExpansionJson, space: VarSpace) -> Result<Self, SymError> {
        let mut e = Self::zero(space);
        for term in &json.0 {
            let q = Polynomial::from_json(&term.coeff, space)?;
            if q.involves_u() {
                return Err(SymError::Poly(PolyError::Json("coefficient involves u".into())));
            }
            if term.partition.len() > space.r {
                return Err(SymError::TooManyParts {
                    partition: term.partition.clone(),
                    r: space.r,
                });
            }
            e.add_term(term.partition.clone(), q);
        }
        Ok(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurTermJson {
    pub partition: Partition,
    pub coeff: PolyJson,
}

/// `[{"partition": [...], "coeff": <polynomial>}, ...]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SchurExpansionJson(pub Vec<SchurTermJson>);

/// Expands a `u`-symmetric polynomial in the Schur basis of `u`.
///
/// Repeatedly peels off the lexicographically largest `u`-exponent, which
/// for a symmetric polynomial is a partition whose Schur polynomial has
/// that monomial as its leading term with coefficient one.
pub fn schur_expand<C: Scalar>(p: &Polynomial<C>) -> Result<SchurExpansion<C>, SymError> {
    if !p.is_symmetric_in_u() {
        return Err(SymError::NotSymmetric);
    }
    let space = p.space();
    let mut rest = p.clone();
    let mut out = SchurExpansion::zero(space);
    while !rest.is_zero() {
        let groups = rest.by_u_exponent();
        let (exp, q) = groups.into_iter().next_back().expect("nonzero");
        let lam = Partition::new(exp).map_err(|_| SymError::NotSymmetric)?;
        rest = &rest - &(&q * &schur_in_u(&lam, space));
        out.add_term(lam, q);
    }
    Ok(out)
}
