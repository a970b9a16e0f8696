//! Closed forms for uniform matroids, plus the Cauchy-type identity,
//! Klyachko's Schubert coefficients and the degree formula.
//!
//! Ambient classes are plain [`Poly`] values; the variable space carries
//! `(r, n)`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exactpoly::{Polynomial, VarSpace};
use crate::matroid::Subset;
use crate::scalar::Sign;
use crate::symfunc::{
    lr_splittings, rect_complement, schur_eval, schur_in_u, schur_poly, schur_principal, EvalArgs, Partition,
    SymError,
};
use crate::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("need 1 <= r < n <= 16, got r={r}, n={n}")]
    InvalidSize { r: usize, n: usize },
    #[error("shape constraint violated: {0}")]
    ShapeConstraint(String),
    #[error("{0:?} is not an r-subset of [n]")]
    InvalidSubset(Vec<usize>),
    #[error(transparent)]
    Sym(#[from] SymError),
}

/// Which complement appears on the `t_{B^c}` side of the localized sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LocalizedForm {
    /// `s_lam(-t_B) s_{lam~'}(t_{B^c})`, which matches the permutation sum.
    #[default]
    Transposed,
    /// `s_lam(-t_B) s_{lam~}(t_{B^c})`; differs from the permutation sum
    /// once the box is not a square, e.g. at `(2,5)`.
    Literal,
}

fn check_size(r: usize, n: usize) -> Result<VarSpace, ClassError> {
    if r == 0 || r >= n || n > 16 {
        return Err(ClassError::InvalidSize { r, n });
    }
    Ok(VarSpace::new(r, n).expect("checked"))
}

/// Partitions in the `(r-1) x (n-r-1)` box with their rotated complements.
pub fn box_pairs(r: usize, n: usize) -> Vec<(Partition, Partition)> {
    let (rows, cols) = (r - 1, (n - r - 1) as u32);
    Partition::in_box(rows, cols)
        .into_iter()
        .map(|lam| {
            let c = rect_complement(&lam, rows, cols).expect("in box");
            (lam, c)
        })
        .collect()
}

/// The uniform orbit class at `x_B` from the Schur-function closed form.
pub fn uniform_orbit_localized(r: usize, n: usize, b: Subset, form: LocalizedForm) -> Result<Poly, ClassError> {
    let space = check_size(r, n)?;
    if b.len() != r || !b.is_subset_of(Subset::full(n)) {
        return Err(ClassError::InvalidSubset(b.to_vec()));
    }
    let inside = EvalArgs::t_vars(space, b.elems(), Sign::Minus);
    let outside = EvalArgs::t_vars(space, Subset::full(n).difference(b).elems(), Sign::Plus);
    let mut acc = Polynomial::zero(space);
    for (lam, comp) in box_pairs(r, n) {
        let right = match form {
            LocalizedForm::Transposed => comp.transpose(),
            LocalizedForm::Literal => comp,
        };
        acc = &acc + &(&schur_poly(&lam, &inside) * &schur_poly(&right, &outside));
    }
    Ok(acc)
}

/// [`uniform_orbit_localized`] evaluated at integer `t` without building polynomials.
pub fn uniform_orbit_localized_at(
    r: usize,
    n: usize,
    b: Subset,
    form: LocalizedForm,
    t: &[BigInt],
) -> Result<BigInt, ClassError> {
    check_size(r, n)?;
    if b.len() != r || !b.is_subset_of(Subset::full(n)) {
        return Err(ClassError::InvalidSubset(b.to_vec()));
    }
    assert_eq!(t.len(), n, "point length");
    let inside: Vec<BigInt> = b.elems().map(|j| -t[j - 1].clone()).collect();
    let outside: Vec<BigInt> = Subset::full(n).difference(b).elems().map(|j| t[j - 1].clone()).collect();
    let mut acc = BigInt::zero();
    for (lam, comp) in box_pairs(r, n) {
        let right = match form {
            LocalizedForm::Transposed => comp.transpose(),
            LocalizedForm::Literal => comp,
        };
        acc += schur_eval(&lam, &inside) * schur_eval(&right, &outside);
    }
    Ok(acc)
}

/// `sum_lam sum_{mu,nu} c^{lam~}_{mu nu} s_lam(u) s_{mu'}(t) s_nu(u)`.
pub fn uniform_matrix_class_lr(r: usize, n: usize) -> Result<Poly, ClassError> {
    let space = check_size(r, n)?;
    let ts = EvalArgs::t_vars(space, 1..=n, Sign::Plus);
    let mut acc = Polynomial::zero(space);
    for (lam, comp) in box_pairs(r, n) {
        let sl = schur_in_u::<BigInt>(&lam, space);
        for (mu, nu, c) in lr_splittings(&comp) {
            let term = &(&sl * &schur_poly(&mu.transpose(), &ts)) * &schur_in_u(&nu, space);
            acc = &acc + &term.scale(&c);
        }
    }
    Ok(acc)
}

/// `omega(s_{(r-1)^{n-r-1}}(u, u, t))` with omega acting on the `u` side.
///
/// The rectangle is split as `sum c_{alpha beta} s_alpha(u, u) s_beta(t)`;
/// omega sends `s_alpha(u, u)` to `s_{alpha'}(u, u)`, which is re-expanded
/// over the single alphabet `u` by a second splitting.
pub fn uniform_matrix_class_omega(r: usize, n: usize) -> Result<Poly, ClassError> {
    let space = check_size(r, n)?;
    let rect = Partition::rectangle(n - r - 1, (r - 1) as u32);
    let ts = EvalArgs::t_vars(space, 1..=n, Sign::Plus);
    let mut acc = Polynomial::zero(space);
    for (alpha, beta, c) in lr_splittings(&rect) {
        // alpha' lives on the doubled u alphabet of size 2r.
        if alpha.largest() as usize > 2 * r {
            return Err(SymError::TransposeOverflow {
                partition: alpha,
                r: 2 * r,
            }
            .into());
        }
        let at = alpha.transpose();
        let mut uu = Polynomial::zero(space);
        for (g, d, c2) in lr_splittings(&at) {
            uu = &uu + &(&schur_in_u::<BigInt>(&g, space) * &schur_in_u(&d, space)).scale(&c2);
        }
        acc = &acc + &(&schur_poly(&beta, &ts) * &uu).scale(&c);
    }
    Ok(acc)
}

/// Both sides of `prod_{t in T, v in V} (t - v) = sum c^{(|V|)^{|T|}}_{nu mu} s_nu(T) s_{mu'}(-V)`.
#[derive(Clone, Debug)]
pub struct CauchyReport {
    pub size_t: usize,
    pub size_v: usize,
    pub lhs: Poly,
    pub rhs: Poly,
}

impl CauchyReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates both sides in fresh variables `T = t_1..t_p`, `V = t_{p+1}..t_{p+q}`.
pub fn cauchy_sides(size_t: usize, size_v: usize) -> CauchyReport {
    let space = VarSpace::new(1, (size_t + size_v).max(1)).expect("n >= 1");
    let tees: Vec<usize> = (1..=size_t).collect();
    let vees: Vec<usize> = (size_t + 1..=size_t + size_v).collect();
    let mut lhs = Polynomial::one(space);
    for &a in &tees {
        for &b in &vees {
            lhs = &lhs * &Polynomial::t_diff(space, a, b);
        }
    }
    let targs = EvalArgs::t_vars(space, tees.iter().copied(), Sign::Plus);
    let vargs = EvalArgs::t_vars(space, vees.iter().copied(), Sign::Minus);
    let rect = Partition::rectangle(size_t, size_v as u32);
    let mut rhs = Polynomial::zero(space);
    for (nu, mu, c) in lr_splittings(&rect) {
        rhs = &rhs + &(&schur_poly(&nu, &targs) * &schur_poly(&mu.transpose(), &vargs)).scale(&c);
    }
    CauchyReport {
        size_t,
        size_v,
        lhs,
        rhs,
    }
}

pub fn cauchy_check(size_t: usize, size_v: usize) -> bool {
    cauchy_sides(size_t, size_v).holds()
}

/// One term `(-1)^i C(n, i) s_lam(1^{r-i})` of the Klyachko sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KlyachkoTerm {
    pub i: usize,
    pub sign: i8,
    pub binomial: String,
    pub principal: String,
    pub value: String,
}

/// `sum_{i=start}^{r} (-1)^i C(n, i) s_lam(1^{r-i})`, itemised.
pub fn klyachko_terms(
    lam: &Partition,
    r: usize,
    n: usize,
    start: usize,
) -> Result<(BigInt, Vec<KlyachkoTerm>), ClassError> {
    check_size(r, n)?;
    if start > 1 {
        return Err(ClassError::ShapeConstraint(format!("start index {start} must be 0 or 1")));
    }
    if !lam.fits(r, (n - r) as u32) {
        return Err(ClassError::ShapeConstraint(format!("{lam} does not fit the {r}x{} box", n - r)));
    }
    if lam.size() as usize != n - 1 {
        return Err(ClassError::ShapeConstraint(format!("|{lam}| = {} is not n-1 = {}", lam.size(), n - 1)));
    }
    let mut total = BigInt::zero();
    let mut terms = Vec::new();
    for i in start..=r {
        let bin = binomial(BigInt::from(n), BigInt::from(i));
        let p = schur_principal(lam, (r - i) as u32);
        let mut v = &bin * &p;
        let sign = if i % 2 == 0 { 1 } else { -1 };
        if sign < 0 {
            v = -v;
        }
        total += &v;
        terms.push(KlyachkoTerm {
            i,
            sign,
            binomial: bin.to_string(),
            principal: p.to_string(),
            value: v.to_string(),
        });
    }
    Ok((total, terms))
}

pub fn klyachko_coefficient(lam: &Partition, r: usize, n: usize, start: usize) -> Result<BigInt, ClassError> {
    klyachko_terms(lam, r, n, start).map(|(v, _)| v)
}

/// `sum_{lam in box} s_lam(1^r) s_{lam~}(1^r)`, with the itemised products.
pub fn uniform_degree_terms(r: usize, n: usize) -> Result<(BigInt, Vec<(Partition, Partition, BigInt)>), ClassError> {
    check_size(r, n)?;
    let mut total = BigInt::zero();
    let mut terms = Vec::new();
    for (lam, comp) in box_pairs(r, n) {
        let v = schur_principal(&lam, r as u32) * schur_principal(&comp, r as u32);
        total += &v;
        terms.push((lam, comp, v));
    }
    Ok((total, terms))
}

pub fn uniform_degree(r: usize, n: usize) -> Result<BigInt, ClassError> {
    uniform_degree_terms(r, n).map(|(v, _)| v)
}

/// Sets every `t` to zero and every `u` to one.
pub fn u_ones_t_zero(p: &Poly) -> BigInt {
    let s = p.space();
    p.eval(&vec![BigInt::one(); s.r], &vec![BigInt::zero(); s.n])
}
