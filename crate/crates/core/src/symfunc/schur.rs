use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{sst_enumerate, Partition};
use crate::exactpoly::{Polynomial, VarSpace};
use crate::scalar::{Scalar, Sign};

/// Minimal ring interface shared by polynomial and numeric Schur evaluation.
pub(crate) trait Ring: Clone {
    fn zero_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero_value(&self) -> bool;
}

impl<C: Scalar> Ring for Polynomial<C> {
    fn zero_like(&self) -> Self {
        Polynomial::zero(self.space())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

impl<S: Scalar> Ring for S {
    fn zero_like(&self) -> Self {
        S::zero()
    }
    fn add(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }
    fn mul(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

/// The arguments `x_1..x_m` a Schur polynomial is evaluated at.
///
/// Each argument is an arbitrary polynomial in a shared variable space,
/// which covers signed variables like `-t_1` and constants like `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalArgs<C: Scalar> {
    space: VarSpace,
    args: Vec<Polynomial<C>>,
}

impl<C: Scalar> EvalArgs<C> {
    pub fn new(space: VarSpace, args: Vec<Polynomial<C>>) -> Self {
        assert!(args.iter().all(|a| a.space() == space), "argument spaces differ");
        EvalArgs { space, args }
    }

    /// `sign * t_j` for each listed `j`.
    pub fn t_vars(space: VarSpace, js: impl IntoIterator<Item = usize>, sign: Sign) -> Self {
        let args = js
            .into_iter()
            .map(|j| sign.apply_poly(Polynomial::t(space, j)))
            .collect();
        EvalArgs { space, args }
    }

    /// `u_1..u_r`.
    pub fn u_vars(space: VarSpace) -> Self {
        EvalArgs {
            space,
            args: (1..=space.r).map(|k| Polynomial::u(space, k)).collect(),
        }
    }

    pub fn ones(space: VarSpace, count: usize) -> Self {
        EvalArgs {
            space,
            args: vec![Polynomial::one(space); count],
        }
    }

    /// Concatenation `(self, other)`.
    pub fn chain(mut self, other: EvalArgs<C>) -> Self {
        assert_eq!(self.space, other.space, "argument spaces differ");
        self.args.extend(other.args);
        self
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn args(&self) -> &[Polynomial<C>] {
        &self.args
    }

    pub fn len(&self) -> usize {
        self.args.len()
    }

    pub fn is_empty(&self) -> bool {
        self.args.is_empty()
    }
}

impl Sign {
    pub(crate) fn apply_poly<C: Scalar>(self, p: Polynomial<C>) -> Polynomial<C> {
        match self {
            Sign::Plus => p,
            Sign::Minus => -p,
        }
    }
}

/// `s_lam(x_1..x_m)` by the branching rule: a semistandard tableau is a
/// chain of horizontal strips, the outermost holding the entries `m`.
pub(crate) fn schur_generic<T: Ring>(lam: &Partition, xs: &[T], one: &T) -> T {
    fn rec<T: Ring>(
        lam: &Partition,
        m: usize,
        xs: &[T],
        pows: &mut Vec<Vec<T>>,
        one: &T,
        memo: &mut HashMap<(Partition, usize), T>,
    ) -> T {
        if lam.is_empty() {
            return one.clone();
        }
        if lam.len() > m {
            return one.zero_like();
        }
        if let Some(v) = memo.get(&(lam.clone(), m)) {
            return v.clone();
        }
        let mut acc = one.zero_like();
        for mu in lam.remove_horizontal_strips() {
            if mu.len() > m - 1 {
                continue;
            }
            let k = (lam.size() - mu.size()) as usize;
            let inner = rec(&mu, m - 1, xs, pows, one, memo);
            let p = power(pows, xs, m - 1, k);
            acc = acc.add(&inner.mul(&p));
        }
        memo.insert((lam.clone(), m), acc.clone());
        acc
    }
    fn power<T: Ring>(pows: &mut [Vec<T>], xs: &[T], i: usize, k: usize) -> T {
        while pows[i].len() <= k {
            let next = pows[i].last().expect("seeded with one").mul(&xs[i]);
            pows[i].push(next);
        }
        pows[i][k].clone()
    }
    let mut pows: Vec<Vec<T>> = xs.iter().map(|_| vec![one.clone()]).collect();
    let mut memo = HashMap::new();
    rec(lam, xs.len(), xs, &mut pows, one, &mut memo)
}

/// Complete homogeneous `h_0..h_kmax` of the arguments.
pub(crate) fn complete_homogeneous<T: Ring>(xs: &[T], kmax: usize, one: &T) -> Vec<T> {
    // h_k(x_1..x_m) = h_k(x_1..x_{m-1}) + x_m h_{k-1}(x_1..x_m)
    let mut h: Vec<T> = (0..=kmax)
        .map(|k| if k == 0 { one.clone() } else { one.zero_like() })
        .collect();
    for x in xs {
        for k in 1..=kmax {
            let add = x.mul(&h[k - 1]);
            h[k] = h[k].add(&add);
        }
    }
    h
}

/// Determinant by cofactor expansion along the first row.
pub(crate) fn determinant<T: Ring>(m: &[Vec<T>], one: &T) -> T {
    fn rec<T: Ring>(m: &[Vec<T>], row: usize, cols: &mut Vec<usize>, one: &T) -> T {
        if cols.is_empty() {
            return one.clone();
        }
        let mut acc = one.zero_like();
        for pos in 0..cols.len() {
            let c = cols.remove(pos);
            let entry = &m[row][c];
            if !entry.is_zero_value() {
                let minor = rec(m, row + 1, cols, one);
                let term = entry.mul(&minor);
                acc = if pos % 2 == 0 { acc.add(&term) } else { acc.add(&term.neg()) };
            }
            cols.insert(pos, c);
        }
        acc
    }
    let mut cols: Vec<usize> = (0..m.len()).collect();
    rec(m, 0, &mut cols, one)
}

pub(crate) fn jacobi_trudi_generic<T: Ring>(lam: &Partition, xs: &[T], one: &T) -> T {
    let l = lam.len();
    if l == 0 {
        return one.clone();
    }
    let kmax = (lam.largest() as usize) + l;
    let h = complete_homogeneous(xs, kmax, one);
    let mat: Vec<Vec<T>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let k = lam.part(i) as i64 - i as i64 + j as i64;
                    if k < 0 {
                        one.zero_like()
                    } else {
                        h[k as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    determinant(&mat, one)
}

/// `s_shape(args)` as a polynomial.
pub fn schur_poly<C: Scalar>(shape: &Partition, args: &EvalArgs<C>) -> Polynomial<C> {
    schur_generic(shape, args.args(), &Polynomial::one(args.space()))
}

/// `s_shape(args)` by the Jacobi–Trudi determinant `det h_{lam_i - i + j}`.
pub fn jacobi_trudi<C: Scalar>(shape: &Partition, args: &EvalArgs<C>) -> Polynomial<C> {
    jacobi_trudi_generic(shape, args.args(), &Polynomial::one(args.space()))
}

/// `s_shape(args)` by summing monomials over explicitly enumerated tableaux.
pub fn schur_poly_tableaux<C: Scalar>(shape: &Partition, args: &EvalArgs<C>) -> Polynomial<C> {
    let one = Polynomial::one(args.space());
    let mut acc = Polynomial::zero(args.space());
    for tab in sst_enumerate(shape, args.len() as u32) {
        let mut term = one.clone();
        for (_, _, e) in tab.cells() {
            term = &term * &args.args()[e as usize - 1];
        }
        acc = &acc + &term;
    }
    acc
}

/// Numeric `s_shape(values)`.
pub fn schur_eval<S: Scalar>(shape: &Partition, values: &[S]) -> S {
    schur_generic(shape, values, &S::one())
}

/// Numeric Jacobi–Trudi evaluation, independent of [`schur_eval`].
pub fn jacobi_trudi_eval<S: Scalar>(shape: &Partition, values: &[S]) -> S {
    jacobi_trudi_generic(shape, values, &S::one())
}

/// `s_shape(u_1..u_r)`.
pub fn schur_in_u<C: Scalar>(shape: &Partition, space: VarSpace) -> Polynomial<C> {
    schur_poly(shape, &EvalArgs::u_vars(space))
}

/// `s_lam(1^k)` by the hook-content formula.
pub fn schur_principal(lam: &Partition, k: u32) -> BigInt {
    let conj = lam.transpose();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, &row) in lam.parts().iter().enumerate() {
        for j in 0..row as usize {
            let content = k as i64 + j as i64 - i as i64;
            if content <= 0 {
                return BigInt::zero();
            }
            let hook = (row as usize - j) + (conj.part(j) as usize - i) - 1;
            num *= content;
            den *= hook as i64;
        }
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use num_rational::BigRational;

    type P = Polynomial<BigInt>;

    fn sp(r: usize, n: usize) -> VarSpace {
        VarSpace::new(r, n).unwrap()
    }

    #[test]
    fn documented_examples() {
        let s = sp(1, 4);
        let a = EvalArgs::t_vars(s, [3, 4], Sign::Plus);
        assert_eq!(schur_poly(&partition![1], &a), P::t(s, 3) + P::t(s, 4));
        let b = EvalArgs::t_vars(s, [1, 2], Sign::Minus);
        assert_eq!(schur_poly(&partition![1], &b), -P::t(s, 1) - P::t(s, 2));
        let ones: EvalArgs<BigInt> = EvalArgs::ones(s, 2);
        assert_eq!(schur_poly(&partition![2, 1], &ones).as_constant(), Some(BigInt::from(2)));
    }

    #[test]
    fn schur_in_u_examples() {
        let s = sp(2, 3);
        assert_eq!(schur_in_u::<BigInt>(&partition![1], s), P::u(s, 1) + P::u(s, 2));
        assert!(schur_in_u::<BigInt>(&partition![1, 1, 1], s).is_zero());
        let u1 = P::u(s, 1);
        let u2 = P::u(s, 2);
        assert_eq!(schur_in_u::<BigInt>(&partition![2], s), &u1 * &u1 + &u1 * &u2 + &u2 * &u2);
    }

    #[test]
    fn three_routes_agree_in_3x3_box() {
        let s = sp(1, 4);
        for m in 0..=4 {
            let args: EvalArgs<BigInt> = EvalArgs::t_vars(s, 1..=m, Sign::Plus);
            for lam in Partition::in_box(3, 3) {
                let a = schur_poly(&lam, &args);
                assert_eq!(a, jacobi_trudi(&lam, &args), "JT {lam} m={m}");
                assert_eq!(a, schur_poly_tableaux(&lam, &args), "tableaux {lam} m={m}");
            }
        }
    }

    #[test]
    fn signed_arguments_match_degree_sign() {
        let s = sp(1, 3);
        let pos = EvalArgs::t_vars(s, 1..=3, Sign::Plus);
        let neg = EvalArgs::t_vars(s, 1..=3, Sign::Minus);
        for lam in Partition::in_box(2, 2) {
            let p: P = schur_poly(&lam, &pos);
            let q = schur_poly(&lam, &neg);
            let expect = if lam.size() % 2 == 0 { p } else { -p };
            assert_eq!(q, expect);
        }
    }

    #[test]
    fn numeric_routes_agree() {
        let q = |v: i64| BigRational::from_integer(v.into());
        let vals = [q(3), q(-7), q(11), q(2)];
        for lam in Partition::in_box(3, 3) {
            assert_eq!(schur_eval(&lam, &vals), jacobi_trudi_eval(&lam, &vals));
        }
    }

    #[test]
    fn principal_specialization() {
        assert_eq!(schur_principal(&partition![1], 2), BigInt::from(2));
        assert_eq!(schur_principal(&partition![2, 1], 1), BigInt::zero());
        assert_eq!(schur_principal(&partition![2, 1], 2), BigInt::from(2));
        for lam in Partition::in_box(3, 3) {
            for k in 0..5 {
                assert_eq!(
                    schur_principal(&lam, k),
                    BigInt::from(sst_enumerate(&lam, k).len()),
                    "{lam} k={k}"
                );
            }
        }
    }
}
