use num_bigint::BigInt;

use super::dp::{permutation_sum, SumOps};
use super::LocalizeError;
use crate::exactpoly::{LinFormFraction, Polynomial, VarSpace};
use crate::matroid::{Matroid, Subset};
use crate::scalar::FieldScalar;

type Frac = LinFormFraction<BigInt>;

pub(crate) fn space_of(m: &Matroid) -> VarSpace {
    // r = 0 has no u-variables; callers only use ranks >= 1.
    VarSpace::new(m.r().max(1), m.n()).expect("1 <= r <= n")
}

/// `prod_{i in B, j not in B} (t_j - t_i)`.
pub fn tangent_prefactor(space: VarSpace, b: Subset) -> Polynomial<BigInt> {
    let mut p = Polynomial::one(space);
    for i in b.elems() {
        for j in Subset::full(space.n).difference(b).elems() {
            p = &p * &Polynomial::t_diff(space, j, i);
        }
    }
    p
}

/// Codimension of the orbit closure: `r(n-r) - (n - #components)`.
pub fn orbit_codim(m: &Matroid) -> u32 {
    let (r, n) = (m.r() as u32, m.n() as u32);
    r * (n - r) - (n - m.components().len() as u32)
}

/// The permutation sum for the connected matroid `m|comp`, as a fraction.
pub(crate) fn component_chow_sum(m: &Matroid, comp: Subset, b: Subset, space: VarSpace) -> Frac {
    let step = |x: usize, a: usize| Frac::inverse_form(space, x, a).expect("distinct elements");
    let add = |p: &Frac, q: &Frac| p.checked_add(q).expect("same space");
    let mul = |p: &Frac, q: &Frac| p.checked_mul(q).expect("same space");
    let ops = SumOps {
        zero: Frac::zero(space),
        one: Frac::one(space),
        step: &step,
        add: &add,
        mul: &mul,
    };
    permutation_sum(m, comp, b, &ops)
}

/// The torus-equivariant class of the orbit closure restricted to `x_B`.
///
/// Computed as the tangent-space prefactor times the permutation sum over
/// orderings with greedy basis `B`. For a disconnected matroid the closure
/// is a product over components, so the sum factors accordingly. Zero when
/// `B` is not a basis.
pub fn orbit_chow_localization(m: &Matroid, b: Subset) -> Result<Polynomial<BigInt>, LocalizeError> {
    check_subset(m, b)?;
    let space = space_of(m);
    if !m.is_basis(b) {
        return Ok(Polynomial::zero(space));
    }
    let mut acc = Frac::one(space);
    for comp in m.components() {
        if comp.len() > 1 {
            acc = acc.checked_mul(&component_chow_sum(m, comp, b, space))?;
        }
    }
    acc.mul_poly(&tangent_prefactor(space, b))?
        .to_poly()
        .map_err(LocalizeError::InternalNonPolynomial)
}

/// The grouped form of the permutation sum for uniform matroids:
/// `prefactor * sum_{c in B} prod_{i in B-c} 1/(t_c - t_i) prod_{j not in B} 1/(t_j - t_c)`.
pub fn orbit_chow_localization_telescoped(m: &Matroid, b: Subset) -> Result<Polynomial<BigInt>, LocalizeError> {
    check_subset(m, b)?;
    if !m.is_uniform() {
        return Err(LocalizeError::NotUniform);
    }
    let space = space_of(m);
    if m.r() == m.n() {
        return Ok(Polynomial::one(space));
    }
    let comp = Subset::full(m.n()).difference(b);
    let mut acc = Frac::zero(space);
    for c in b.elems() {
        let mut forms: Vec<(usize, usize)> = b.without(c).elems().map(|i| (c, i)).collect();
        forms.extend(comp.elems().map(|j| (j, c)));
        acc = acc.checked_add(&Frac::new(Polynomial::one(space), &forms)?)?;
    }
    acc.mul_poly(&tangent_prefactor(space, b))?
        .to_poly()
        .map_err(LocalizeError::InternalNonPolynomial)
}

/// Numeric value of [`orbit_chow_localization`] at `t`, without building
/// any polynomial. Coordinates must be pairwise distinct.
pub fn orbit_chow_localization_at<S: FieldScalar>(m: &Matroid, b: Subset, t: &[S]) -> Result<S, LocalizeError> {
    check_subset(m, b)?;
    assert_eq!(t.len(), m.n(), "point length");
    for a in 0..t.len() {
        for c in a + 1..t.len() {
            if t[a] == t[c] {
                return Err(LocalizeError::DenominatorZero { a: a + 1, b: c + 1 });
            }
        }
    }
    if !m.is_basis(b) {
        return Ok(S::zero());
    }
    let step = |x: usize, a: usize| S::one() / (t[x - 1].clone() - t[a - 1].clone());
    let add = |p: &S, q: &S| p.clone() + q.clone();
    let mul = |p: &S, q: &S| p.clone() * q.clone();
    let ops = SumOps {
        zero: S::zero(),
        one: S::one(),
        step: &step,
        add: &add,
        mul: &mul,
    };
    let mut acc = S::one();
    for comp in m.components() {
        if comp.len() > 1 {
            acc = acc * permutation_sum(m, comp, b, &ops);
        }
    }
    for i in b.elems() {
        for j in Subset::full(m.n()).difference(b).elems() {
            acc = acc * (t[j - 1].clone() - t[i - 1].clone());
        }
    }
    Ok(acc)
}

pub(crate) fn check_subset(m: &Matroid, b: Subset) -> Result<(), LocalizeError> {
    if m.r() == 0 || b.len() != m.r() || !b.is_subset_of(Subset::full(m.n())) {
        return Err(LocalizeError::InvalidSubset {
            subset: b.to_vec(),
            r: m.r(),
            n: m.n(),
        });
    }
    Ok(())
}
