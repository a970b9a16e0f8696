//! Partitions, tableaux and symmetric polynomials.
//!
//! Schur polynomials are evaluated at arbitrary polynomial arguments,
//! which covers localized bundle arguments such as `s_lam(-t_1, -t_2)`.
//! Littlewood–Richardson coefficients come from iterated Pieri products.
//!
//! The ω operation here acts on the `u`-side Schur index only; the
//! `t`-coefficients are left untouched. Standard references define ω on
//! the whole alphabet, so callers mixing the two should take care.

mod expansion;
mod factorial;
mod lr;
mod partition;
mod render;
mod schur;
mod tableau;

pub use expansion::{schur_expand, SchurExpansion, SchurExpansionJson, SchurTermJson};
pub use factorial::factorial_schur;
pub use lr::{lr_coeff, lr_splittings, pieri_h, schur_product, SchurCombination};
pub use partition::{rect_complement, Partition};
pub use render::{render_schur_form, schur_expand_t};
pub use schur::{
    jacobi_trudi, jacobi_trudi_eval, schur_eval, schur_in_u, schur_poly, schur_poly_tableaux,
    schur_principal, EvalArgs,
};
pub use tableau::{sst_enumerate, Tableau};

use thiserror::Error;

use crate::exactpoly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("not a partition: {0:?}")]
    InvalidPartition(Vec<u32>),
    #[error("polynomial is not symmetric in u")]
    NotSymmetric,
    #[error("transpose of {partition} has more than {r} parts")]
    TransposeOverflow { partition: Partition, r: usize },
    #[error("{partition} has more than {r} parts")]
    TooManyParts { partition: Partition, r: usize },
    #[error("{partition} does not fit in a {rows}x{cols} box")]
    DoesNotFit { partition: Partition, rows: usize, cols: u32 },
    #[error("{partition} does not fit in the {r}x(n-r) box for n={n}")]
    ShapeOutOfBox { partition: Partition, r: usize, n: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}
