//! Matrix Schubert (factorial Schur) expansions, lifting GKM tuples to
//! ambient classes, and the restriction conventions tying them together.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactpoly::{PolyError, Polynomial, VarSpace};
use crate::localize::{gkm_check, GkmTuple};
use crate::matroid::Subset;
use crate::scalar::Sign;
use crate::symfunc::{
    factorial_schur, schur_expand, schur_in_u, Partition, SchurExpansion, SchurExpansionJson,
    SchurTermJson, SymError,
};
use crate::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplitError {
    #[error("expansion has terms outside the box; cannot lift")]
    OverflowNonEmpty,
    #[error("tuple is not in the span of Schubert classes: {0}")]
    NotInSpan(String),
    #[error("no sign convention makes every Schubert tuple valid at ({r},{n})")]
    NoConsistentConvention { r: usize, n: usize },
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `u_k -> eps_u * t_{b_k}` at `x_B`, and `eps_t` on every `t` inside
/// factorial Schur polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RestrictionConvention {
    pub eps_u: Sign,
    pub eps_t: Sign,
}

impl RestrictionConvention {
    pub fn with_t_sign(eps_t: Sign) -> Self {
        RestrictionConvention {
            eps_u: Sign::Minus,
            eps_t,
        }
    }

    pub fn to_json(&self) -> ConventionJson {
        ConventionJson {
            eps_u: self.eps_u.as_i64(),
            eps_t: self.eps_t.as_i64(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConventionJson {
    pub eps_u: i64,
    pub eps_t: i64,
}

impl TryFrom<ConventionJson> for RestrictionConvention {
    type Error = String;

    fn try_from(j: ConventionJson) -> Result<Self, String> {
        let s = |v: i64| Sign::from_i64(v).ok_or_else(|| format!("sign must be +1 or -1, got {v}"));
        Ok(RestrictionConvention {
            eps_u: s(j.eps_u)?,
            eps_t: s(j.eps_t)?,
        })
    }
}

/// `sum q_lam [X_lam] + overflow` with `lam` in the `r x (n-r)` box and the
/// overflow holding Schur terms whose first part exceeds `n - r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertExpansion {
    pub space: VarSpace,
    pub coefficients: BTreeMap<Partition, Poly>,
    pub overflow: SchurExpansion<BigInt>,
    pub convention: RestrictionConvention,
}

impl SchubertExpansion {
    pub fn coeff(&self, lam: &Partition) -> Poly {
        self.coefficients
            .get(lam)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.space))
    }

    fn add(&mut self, lam: Partition, q: Poly) {
        let e = self
            .coefficients
            .entry(lam.clone())
            .or_insert_with(|| Polynomial::zero(self.space));
        *e = &*e + &q;
        if e.is_zero() {
            self.coefficients.remove(&lam);
        }
    }

    pub fn to_json(&self) -> SchubertExpansionJson {
        SchubertExpansionJson {
            coefficients: self
                .coefficients
                .iter()
                .map(|(p, q)| SchurTermJson {
                    partition: p.clone(),
                    coeff: q.to_json(),
                })
                .collect(),
            overflow: self.overflow.to_json().0,
            convention: self.convention.to_json(),
        }
    }

    pub fn from_json(j: &SchubertExpansionJson, space: VarSpace) -> Result<Self, SplitError> {
        let convention = RestrictionConvention::try_from(j.convention)
            .map_err(|e| SplitError::Poly(PolyError::Json(e)))?;
        let mut out = SchubertExpansion {
            space,
            coefficients: BTreeMap::new(),
            overflow: SchurExpansion::from_json(&SchurExpansionJson(j.overflow.clone()), space)?,
            convention,
        };
        for t in &j.coefficients {
            if !t.partition.fits(space.r, (space.n - space.r) as u32) {
                return Err(SymError::ShapeOutOfBox {
                    partition: t.partition.clone(),
                    r: space.r,
                    n: space.n,
                }
                .into());
            }
            out.add(t.partition.clone(), Polynomial::from_json(&t.coeff, space)?);
        }
        Ok(out)
    }
}

/// `{"coefficients": [...], "overflow": [...], "convention": {...}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertExpansionJson {
    pub coefficients: Vec<SchurTermJson>,
    pub overflow: Vec<SchurTermJson>,
    pub convention: ConventionJson,
}

struct FactorialCache {
    space: VarSpace,
    sign: Sign,
    map: HashMap<Partition, Poly>,
}

impl FactorialCache {
    fn new(space: VarSpace, sign: Sign) -> Self {
        FactorialCache {
            space,
            sign,
            map: HashMap::new(),
        }
    }

    fn get(&mut self, lam: &Partition) -> Result<&Poly, SplitError> {
        if !self.map.contains_key(lam) {
            let f = factorial_schur(lam, self.space, self.sign)?;
            self.map.insert(lam.clone(), f);
        }
        Ok(&self.map[lam])
    }
}

/// Expands a `u`-symmetric class in factorial Schur polynomials.
///
/// Works down the `u`-degree: the top part is Schur expanded, and each term
/// is removed either as `q * factorial_schur(lam)` (whose top part is
/// `s_lam(u)`) or, outside the box, banked as overflow.
pub fn factorial_expand(c: &Poly, t_sign: Sign) -> Result<SchubertExpansion, SplitError> {
    if !c.is_symmetric_in_u() {
        return Err(SymError::NotSymmetric.into());
    }
    let space = c.space();
    let width = (space.n - space.r) as u32;
    let mut cache = FactorialCache::new(space, t_sign);
    let mut out = SchubertExpansion {
        space,
        coefficients: BTreeMap::new(),
        overflow: SchurExpansion::zero(space),
        convention: RestrictionConvention::with_t_sign(t_sign),
    };
    let mut rest = c.clone();
    while !rest.is_zero() {
        let d = rest.u_degree();
        let top = schur_expand(&rest.u_homogeneous_part(d))?;
        for (lam, q) in top.terms() {
            if lam.largest() <= width {
                let f = cache.get(lam)?;
                rest = &rest - &(q * f);
                out.add(lam.clone(), q.clone());
            } else {
                rest = &rest - &(q * &schur_in_u(lam, space));
                out.overflow.add_term(lam.clone(), q.clone());
            }
        }
    }
    Ok(out)
}

/// `sum q_lam * factorial_schur(lam)`.
pub fn lift(e: &SchubertExpansion) -> Result<Poly, SplitError> {
    if !e.overflow.is_zero() {
        return Err(SplitError::OverflowNonEmpty);
    }
    let mut cache = FactorialCache::new(e.space, e.convention.eps_t);
    let mut acc = Polynomial::zero(e.space);
    for (lam, q) in &e.coefficients {
        let f = cache.get(lam)?;
        acc = &acc + &(q * f);
    }
    Ok(acc)
}

/// Substitutes `u_k -> eps_u * t_{b_k}` with `B` ascending.
pub fn restrict_ambient(c: &Poly, b: Subset, conv: RestrictionConvention) -> Poly {
    let space = c.space();
    let bs = b.to_vec();
    assert_eq!(bs.len(), space.r, "restriction needs an r-subset");
    let images: Vec<(usize, Sign)> = (0..space.nvars())
        .map(|idx| {
            if idx < space.r {
                (space.t_index(bs[idx]), conv.eps_u)
            } else {
                (idx, Sign::Plus)
            }
        })
        .collect();
    c.relabel(space, &images)
}

pub fn tuple_of_ambient(c: &Poly, conv: RestrictionConvention) -> GkmTuple {
    let space = c.space();
    let values = Subset::all_of_size(space.n, space.r)
        .into_par_iter()
        .map(|b| (b, restrict_ambient(c, b, conv)))
        .collect();
    GkmTuple::new(space, values).expect("every subset present")
}

/// The restrictions of the matrix Schubert class `[X_lam]`.
pub fn schubert_tuple(lam: &Partition, space: VarSpace, conv: RestrictionConvention) -> Result<GkmTuple, SplitError> {
    Ok(tuple_of_ambient(&factorial_schur(lam, space, conv.eps_t)?, conv))
}

/// Why a candidate `eps_t` was accepted or rejected.
#[derive(Clone, Debug, Serialize)]
pub struct ConventionTrial {
    pub eps_t: i64,
    pub gkm_ok: bool,
    /// Number of bases where the divisor class `(1)` restricts to zero.
    pub divisor_zeros: usize,
}

impl ConventionTrial {
    pub fn accepted(&self) -> bool {
        self.gkm_ok && self.divisor_zeros == 1
    }
}

pub fn convention_trials(r: usize, n: usize) -> Result<Vec<ConventionTrial>, SplitError> {
    let space = VarSpace::new(r, n)?;
    let width = (n - r) as u32;
    let mut out = Vec::new();
    for eps_t in [Sign::Minus, Sign::Plus] {
        let conv = RestrictionConvention::with_t_sign(eps_t);
        let mut gkm_ok = true;
        for lam in Partition::in_box(r, width) {
            if !gkm_check(&schubert_tuple(&lam, space, conv)?).is_empty() {
                gkm_ok = false;
                break;
            }
        }
        let divisor_zeros = if width == 0 {
            0
        } else {
            let d = schubert_tuple(&Partition::new(vec![1]).expect("valid"), space, conv)?;
            d.iter().filter(|(_, p)| p.is_zero()).count()
        };
        out.push(ConventionTrial {
            eps_t: eps_t.as_i64(),
            gkm_ok,
            divisor_zeros,
        });
    }
    Ok(out)
}

/// Picks `eps_t` so that Schubert tuples satisfy GKM and the divisor class
/// vanishes at exactly one fixed point. Ties fall back to the `(2,4)` choice.
pub fn resolve_convention(r: usize, n: usize) -> Result<RestrictionConvention, SplitError> {
    let trials = convention_trials(r, n)?;
    let ok: Vec<&ConventionTrial> = trials.iter().filter(|t| t.accepted()).collect();
    match ok.as_slice() {
        [one] => Ok(RestrictionConvention::with_t_sign(
            Sign::from_i64(one.eps_t).expect("valid sign"),
        )),
        [] if r == n => Ok(RestrictionConvention::with_t_sign(Sign::Minus)),
        [] => Err(SplitError::NoConsistentConvention { r, n }),
        _ if (r, n) != (2, 4) => resolve_convention(2, 4),
        _ => Err(SplitError::NoConsistentConvention { r, n }),
    }
}

/// Writes a GKM tuple as `sum q_lam [Omega_lam]` by triangular elimination.
///
/// Partitions are processed by size then lexicographically. Each one is
/// pivoted at the first basis where its Schubert tuple is nonzero and every
/// other unprocessed tuple vanishes; the coefficient is an exact quotient.
/// The residual must vanish everywhere at the end.
pub fn schubert_expand_tuple(f: &GkmTuple, conv: RestrictionConvention) -> Result<SchubertExpansion, SplitError> {
    let space = f.space();
    let parts = Partition::in_box(space.r, (space.n - space.r) as u32);
    let tuples: Vec<GkmTuple> = parts
        .par_iter()
        .map(|lam| schubert_tuple(lam, space, conv))
        .collect::<Result<_, _>>()?;
    let bases = Subset::all_of_size(space.n, space.r);
    let mut residual: BTreeMap<Subset, Poly> = f.iter().map(|(b, p)| (b, p.clone())).collect();
    let mut out = SchubertExpansion {
        space,
        coefficients: BTreeMap::new(),
        overflow: SchurExpansion::zero(space),
        convention: conv,
    };
    for (k, lam) in parts.iter().enumerate() {
        let pivot = bases.iter().copied().find(|&b| {
            !tuples[k].get(b).is_zero() && tuples[k + 1..].iter().all(|t| t.get(b).is_zero())
        });
        let Some(pivot) = pivot else {
            return Err(SplitError::NotInSpan(format!("no pivot basis for {lam}")));
        };
        let q = residual[&pivot]
            .div_exact(tuples[k].get(pivot))
            .map_err(|_| SplitError::NotInSpan(format!("{lam} coefficient is not a polynomial")))?;
        if q.is_zero() {
            continue;
        }
        for (b, v) in residual.iter_mut() {
            let s = tuples[k].get(*b);
            if !s.is_zero() {
                *v = &*v - &(&q * s);
            }
        }
        out.add(lam.clone(), q);
    }
    if let Some((b, _)) = residual.iter().find(|(_, v)| !v.is_zero()) {
        return Err(SplitError::NotInSpan(format!("reconstruction differs at {b}")));
    }
    Ok(out)
}
