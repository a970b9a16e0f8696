//! Torus fixed-point localization of orbit closure classes.
//!
//! At each fixed point `x_B` the class is the product of tangent weights
//! times a sum over orderings of the ground set whose greedy basis is `B`.
//! The K-theory analogue replaces `1/(t_b - t_a)` by `1/(1 - t_b/t_a)`.

mod chow;
mod dp;
mod ktheory;
mod tuple;

pub use chow::{
    orbit_chow_localization, orbit_chow_localization_at, orbit_chow_localization_telescoped,
    orbit_codim, tangent_prefactor,
};
pub use ktheory::{kms_chow_from_k, orbit_k_localization};
pub use tuple::{gkm_check, GkmEntryJson, GkmTuple, GkmTupleJson, GkmViolation};

use rayon::prelude::*;
use thiserror::Error;

use crate::exactpoly::PolyError;
use crate::matroid::{Matroid, Subset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalizeError {
    #[error("localization did not reduce to a polynomial: {0}")]
    InternalNonPolynomial(PolyError),
    #[error("the telescoped form needs a uniform matroid")]
    NotUniform,
    #[error("lowest forms do not divide exactly")]
    NotDivisible,
    #[error("lowest form has degree {got}, expected codimension {expected}")]
    CodimMismatch { expected: u32, got: u32 },
    #[error("the K-class is zero")]
    ZeroClass,
    #[error("{subset:?} is not an {r}-subset of [{n}]")]
    InvalidSubset { subset: Vec<usize>, r: usize, n: usize },
    #[error("tuple is missing subsets or has entries involving u")]
    IncompleteTuple,
    #[error("evaluation point has t{a} = t{b}")]
    DenominatorZero { a: usize, b: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The Chow localization at every `r`-subset, computed in parallel.
pub fn full_orbit_tuple(m: &Matroid) -> Result<GkmTuple, LocalizeError> {
    let space = chow::space_of(m);
    let values = Subset::all_of_size(m.n(), m.r())
        .into_par_iter()
        .map(|b| orbit_chow_localization(m, b).map(|p| (b, p)))
        .collect::<Result<_, _>>()?;
    GkmTuple::new(space, values)
}

#[cfg(test)]
mod tests;
