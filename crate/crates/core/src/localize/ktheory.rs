use num_bigint::BigInt;

use super::chow::{check_subset, space_of};
use super::dp::{permutation_sum, SumOps};
use super::LocalizeError;
use crate::exactpoly::{LaurentFraction, LinFormFraction, Polynomial, VarSpace};
use crate::matroid::{Matroid, Subset};

type Frac = LinFormFraction<BigInt>;

/// The K-class of the orbit closure restricted to `x_B`.
///
/// Each factor `1 / (1 - t_x / t_a)` is stored as `t_a / (t_a - t_x)`; the
/// prefactor `prod (1 - t_j / t_i)` becomes `prod (t_i - t_j)` times
/// `t_i^-(n-r)` for each `i` in `B`.
pub fn orbit_k_localization(m: &Matroid, b: Subset) -> Result<LaurentFraction<BigInt>, LocalizeError> {
    check_subset(m, b)?;
    let space = space_of(m);
    let n = m.n();
    if !m.is_basis(b) {
        return Ok(LaurentFraction::from_poly(Polynomial::zero(space)));
    }
    let step = |x: usize, a: usize| {
        Frac::new(Polynomial::t(space, a), &[(a, x)]).expect("distinct elements")
    };
    let add = |p: &Frac, q: &Frac| p.checked_add(q).expect("same space");
    let mul = |p: &Frac, q: &Frac| p.checked_mul(q).expect("same space");
    let ops = SumOps {
        zero: Frac::zero(space),
        one: Frac::one(space),
        step: &step,
        add: &add,
        mul: &mul,
    };
    let mut acc = Frac::one(space);
    for comp in m.components() {
        if comp.len() > 1 {
            acc = acc.checked_mul(&permutation_sum(m, comp, b, &ops))?;
        }
    }
    let mut pre = Polynomial::one(space);
    for i in b.elems() {
        for j in Subset::full(n).difference(b).elems() {
            pre = &pre * &Polynomial::t_diff(space, i, j);
        }
    }
    let acc = acc.mul_poly(&pre)?;
    let shift: Vec<i64> = (1..=n)
        .map(|j| if b.contains(j) { -((n - m.r()) as i64) } else { 0 })
        .collect();
    Ok(LaurentFraction::from_linforms(&acc, shift))
}

/// Chow class from a K-class: substitute `t_i -> 1 - t_i` and keep the
/// lowest-degree forms of numerator and denominator.
///
/// The monomial prefactor `t^shift` becomes `(1 - t)^shift`, whose lowest
/// form is 1, so only the numerator and denominator matter.
pub fn kms_chow_from_k(
    k: &LaurentFraction<BigInt>,
    expected_codim: u32,
) -> Result<Polynomial<BigInt>, LocalizeError> {
    if k.is_zero() {
        return Err(LocalizeError::ZeroClass);
    }
    let space = k.space();
    let num = one_minus_t(k.numerator(), space).lowest_form()?.1;
    let den = one_minus_t(k.denominator(), space).lowest_form()?.1;
    let q = num.div_exact(&den).map_err(|_| LocalizeError::NotDivisible)?;
    let got = q.total_degree().unwrap_or(0);
    if got != expected_codim {
        return Err(LocalizeError::CodimMismatch {
            expected: expected_codim,
            got,
        });
    }
    Ok(q)
}

fn one_minus_t(p: &Polynomial<BigInt>, space: VarSpace) -> Polynomial<BigInt> {
    let images: Vec<Polynomial<BigInt>> = (0..space.nvars())
        .map(|idx| {
            if idx < space.r {
                Polynomial::u(space, idx + 1)
            } else {
                Polynomial::one(space) - Polynomial::t(space, idx - space.r + 1)
            }
        })
        .collect();
    p.substitute(space, &images)
}
