use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::PolyError;
use crate::scalar::{Scalar, Sign};

/// Number of `u` and `t` variables of an ambient ring `Z[u_1..u_r, t_1..t_n]`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VarSpace {
    pub r: usize,
    pub n: usize,
}

impl VarSpace {
    pub fn new(r: usize, n: usize) -> Result<VarSpace, PolyError> {
        if r == 0 || r > n {
            return Err(PolyError::InvalidSpace { r, n });
        }
        Ok(VarSpace { r, n })
    }

    pub fn nvars(&self) -> usize {
        self.r + self.n
    }

    /// Flat index of `u_k`, 1-based `k`.
    pub fn u_index(&self, k: usize) -> usize {
        debug_assert!(k >= 1 && k <= self.r);
        k - 1
    }

    /// Flat index of `t_j`, 1-based `j`.
    pub fn t_index(&self, j: usize) -> usize {
        debug_assert!(j >= 1 && j <= self.n);
        self.r + j - 1
    }

    pub fn var_of_index(&self, idx: usize) -> Var {
        if idx < self.r {
            Var::U(idx + 1)
        } else {
            Var::T(idx - self.r + 1)
        }
    }

    pub fn index(&self, v: Var) -> usize {
        match v {
            Var::U(k) => self.u_index(k),
            Var::T(j) => self.t_index(j),
        }
    }
}

/// A variable of the ambient ring, 1-based.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    U(usize),
    T(usize),
}

/// Exponent vector over all `r + n` variables, `u` block first.
///
/// Ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn from_exponents(exps: Vec<u32>) -> Monomial {
        Monomial(exps.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out.into_boxed_slice()))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `u_1..u_r, t_1..t_n` with exact coefficients.
///
/// No zero coefficient is ever stored, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<C: Scalar> {
    space: VarSpace,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> Polynomial<C> {
    pub fn zero(space: VarSpace) -> Self {
        Polynomial {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(space: VarSpace) -> Self {
        Self::constant(space, C::one())
    }

    pub fn constant(space: VarSpace, c: C) -> Self {
        let mut p = Self::zero(space);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(space.nvars()), c);
        }
        p
    }

    pub fn var(space: VarSpace, v: Var) -> Self {
        let mut e = vec![0; space.nvars()];
        e[space.index(v)] = 1;
        Self::monomial(space, e, C::one())
    }

    pub fn u(space: VarSpace, k: usize) -> Self {
        Self::var(space, Var::U(k))
    }

    pub fn t(space: VarSpace, j: usize) -> Self {
        Self::var(space, Var::T(j))
    }

    /// The linear form `t_a - t_b`.
    pub fn t_diff(space: VarSpace, a: usize, b: usize) -> Self {
        Self::t(space, a) - Self::t(space, b)
    }

    pub fn monomial(space: VarSpace, exps: Vec<u32>, c: C) -> Self {
        assert_eq!(exps.len(), space.nvars(), "exponent vector length");
        let mut p = Self::zero(space);
        if !c.is_zero() {
            p.terms.insert(Monomial::from_exponents(exps), c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(space: VarSpace, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, C)>,
    {
        let mut p = Self::zero(space);
        for (e, c) in terms {
            assert_eq!(e.len(), space.nvars(), "exponent vector length");
            p.add_term(Monomial::from_exponents(e), c);
        }
        p
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant coefficient value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn constant_term(&self) -> C {
        self.terms
            .get(&Monomial::one(self.space.nvars()))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// Terms in canonical (descending graded-lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &C)> + '_ {
        self.terms.iter().rev().map(|(m, c)| (m.exponents(), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms
            .get(&Monomial::from_exponents(exps.to_vec()))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_space(&self, other: &Self) -> Result<(), PolyError> {
        if self.space != other.space {
            return Err(PolyError::SpaceMismatch {
                left: self.space,
                right: other.space,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_space(other)?;
        let mut out = Self::zero(self.space);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.space);
        }
        Polynomial {
            space: self.space,
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.space);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Largest exponent of the flat variable `idx` over all terms.
    pub fn degree_in(&self, idx: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponents()[idx])
            .max()
            .unwrap_or(0)
    }

    /// Largest combined `u`-degree of any term.
    pub fn u_degree(&self) -> u32 {
        let r = self.space.r;
        self.terms
            .keys()
            .map(|m| m.exponents()[..r].iter().sum())
            .max()
            .unwrap_or(0)
    }

    /// Largest exponent of any single `u` variable.
    pub fn max_u_var_degree(&self) -> u32 {
        (0..self.space.r).map(|i| self.degree_in(i)).max().unwrap_or(0)
    }

    pub fn involves_u(&self) -> bool {
        let r = self.space.r;
        self.terms
            .keys()
            .any(|m| m.exponents()[..r].iter().any(|&e| e > 0))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        Polynomial {
            space: self.space,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Lowest total degree present and the homogeneous component of that degree.
    pub fn lowest_form(&self) -> Result<(u32, Self), PolyError> {
        let d = self
            .terms
            .keys()
            .next()
            .map(Monomial::degree)
            .ok_or(PolyError::ZeroPolynomial)?;
        Ok((d, self.homogeneous_part(d)))
    }

    /// Part of `u`-degree exactly `d`.
    pub fn u_homogeneous_part(&self, d: u32) -> Self {
        let r = self.space.r;
        Polynomial {
            space: self.space,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponents()[..r].iter().sum::<u32>() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Groups terms by their `u`-exponent; the values only involve `t`.
    pub fn by_u_exponent(&self) -> BTreeMap<Vec<u32>, Self> {
        let r = self.space.r;
        let mut out: BTreeMap<Vec<u32>, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponents();
            let mut te = e.to_vec();
            te[..r].iter_mut().for_each(|x| *x = 0);
            out.entry(e[..r].to_vec())
                .or_insert_with(|| Self::zero(self.space))
                .add_term(Monomial::from_exponents(te), c.clone());
        }
        out
    }

    /// Multiplies by `u^exps` (exponents for the `u` block only).
    pub fn mul_u_monomial(&self, uexps: &[u32]) -> Self {
        let r = self.space.r;
        Polynomial {
            space: self.space,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.exponents().to_vec();
                    for (x, y) in e[..r].iter_mut().zip(uexps) {
                        *x += y;
                    }
                    (Monomial::from_exponents(e), c.clone())
                })
                .collect(),
        }
    }

    /// Applies a signed relabelling of variables: variable `i` becomes
    /// `sign_i * x_{target_i}` where targets are flat indices into `space`.
    pub fn relabel(&self, space: VarSpace, images: &[(usize, Sign)]) -> Self {
        assert_eq!(images.len(), self.space.nvars(), "relabel arity");
        let mut out = Self::zero(space);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; space.nvars()];
            let mut sign = Sign::Plus;
            for (i, &x) in m.exponents().iter().enumerate() {
                if x > 0 {
                    let (tgt, s) = images[i];
                    e[tgt] += x;
                    sign = sign.mul(s.pow(x));
                }
            }
            out.add_term(Monomial::from_exponents(e), sign.apply(c.clone()));
        }
        out
    }

    /// Swaps two flat variables.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let images: Vec<(usize, Sign)> = (0..self.space.nvars())
            .map(|k| {
                let tgt = if k == i {
                    j
                } else if k == j {
                    i
                } else {
                    k
                };
                (tgt, Sign::Plus)
            })
            .collect();
        self.relabel(self.space, &images)
    }

    /// True when invariant under every permutation of the `u` variables.
    pub fn is_symmetric_in_u(&self) -> bool {
        (0..self.space.r.saturating_sub(1)).all(|i| self.swap_vars(i, i + 1) == *self)
    }

    /// General substitution: flat variable `i` becomes `images[i]`, a
    /// polynomial in `target`.
    pub fn substitute(&self, target: VarSpace, images: &[Self]) -> Self {
        assert_eq!(images.len(), self.space.nvars(), "substitute arity");
        let nv = self.space.nvars();
        let mut powers: Vec<Vec<Self>> = Vec::with_capacity(nv);
        for (i, img) in images.iter().enumerate() {
            let maxe = self.degree_in(i) as usize;
            let mut pw = Vec::with_capacity(maxe + 1);
            pw.push(Polynomial::one(target));
            for k in 1..=maxe {
                let next = &pw[k - 1] * img;
                pw.push(next);
            }
            powers.push(pw);
        }
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = &term * &powers[i][e as usize];
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Sets the variable `t_a` equal to `t_b`.
    pub fn identify_t(&self, a: usize, b: usize) -> Self {
        let ia = self.space.t_index(a);
        let ib = self.space.t_index(b);
        let mut out = Self::zero(self.space);
        for (m, c) in &self.terms {
            let mut e = m.exponents().to_vec();
            e[ib] += e[ia];
            e[ia] = 0;
            out.add_term(Monomial::from_exponents(e), c.clone());
        }
        out
    }

    /// Whether `t_a - t_b` divides the polynomial (substitution test).
    pub fn divisible_by_linear_form(&self, a: usize, b: usize) -> bool {
        a != b && self.identify_t(a, b).is_zero()
    }

    /// Exact quotient by `t_a - t_b`, by synthetic division in `t_a`.
    pub fn divide_by_linear_form(&self, a: usize, b: usize) -> Result<Self, PolyError> {
        if a == b || a == 0 || b == 0 || a > self.space.n || b > self.space.n {
            return Err(PolyError::InvalidForm { a, b });
        }
        let ia = self.space.t_index(a);
        let ib = self.space.t_index(b);
        // Coefficients of t_a^k, highest first.
        let deg = self.degree_in(ia);
        let mut slices: Vec<Self> = vec![Self::zero(self.space); deg as usize + 1];
        for (m, c) in &self.terms {
            let mut e = m.exponents().to_vec();
            let k = e[ia] as usize;
            e[ia] = 0;
            slices[k].add_term(Monomial::from_exponents(e), c.clone());
        }
        let tb = Self::var(self.space, self.space.var_of_index(ib));
        // q_{k-1} = c_k + t_b q_k
        let mut quotient = Self::zero(self.space);
        let mut carry = Self::zero(self.space);
        for k in (1..=deg as usize).rev() {
            carry = &slices[k] + &(&tb * &carry);
            let mut shifted = carry.clone();
            shifted = shifted.shift_var(ia, (k - 1) as u32);
            quotient = &quotient + &shifted;
        }
        let remainder = &slices[0] + &(&tb * &carry);
        if !remainder.is_zero() {
            return Err(PolyError::NotDivisible);
        }
        Ok(quotient)
    }

    fn shift_var(mut self, idx: usize, by: u32) -> Self {
        if by == 0 {
            return self;
        }
        let terms = std::mem::take(&mut self.terms);
        self.terms = terms
            .into_iter()
            .map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e[idx] += by;
                (Monomial::from_exponents(e), c)
            })
            .collect();
        self
    }

    /// Exact multivariate division; fails unless the divisor divides exactly.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        self.check_space(divisor)?;
        let (lm, lc) = divisor
            .terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(PolyError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.space);
        while let Some((m, c)) = rem.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = m.div(&lm).ok_or(PolyError::NotDivisible)?;
            let qc = c.div_exact(&lc).ok_or(PolyError::NotDivisible)?;
            for (dm, dc) in &divisor.terms {
                rem.add_term(qm.mul(dm), -(qc.clone() * dc.clone()));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Evaluates at a point given as values of `u_1..u_r` and `t_1..t_n`.
    pub fn eval<S>(&self, u: &[S], t: &[S]) -> S
    where
        S: Scalar + From<C>,
    {
        assert_eq!(u.len(), self.space.r, "u point length");
        assert_eq!(t.len(), self.space.n, "t point length");
        let vals: Vec<&S> = u.iter().chain(t.iter()).collect();
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut term = S::from(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    term = term * vals[i].clone();
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// Re-embeds into another space, provided every variable used exists there.
    pub fn embed(&self, space: VarSpace) -> Result<Self, PolyError> {
        let mut out = Self::zero(space);
        for (m, c) in &self.terms {
            let e = m.exponents();
            let mut ne = vec![0u32; space.nvars()];
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let tgt = match self.space.var_of_index(i) {
                    Var::U(k) if k <= space.r => space.u_index(k),
                    Var::T(j) if j <= space.n => space.t_index(j),
                    _ => {
                        return Err(PolyError::SpaceMismatch {
                            left: self.space,
                            right: space,
                        })
                    }
                };
                ne[tgt] = x;
            }
            out.add_term(Monomial::from_exponents(ne), c.clone());
        }
        Ok(out)
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        let mut out = Polynomial::zero(self.space);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

impl<C: Scalar> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mut factors = Vec::new();
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let name = match self.space.var_of_index(i) {
                    Var::U(k) => format!("u{k}"),
                    Var::T(j) => format!("t{j}"),
                };
                if x == 1 {
                    factors.push(name);
                } else {
                    factors.push(format!("{name}^{x}"));
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a, C: Scalar> $tr<&'a Polynomial<C>> for &'a Polynomial<C> {
            type Output = Polynomial<C>;

            /// Panics when the operands live in different variable spaces.
            fn $m(self, rhs: &'a Polynomial<C>) -> Polynomial<C> {
                self.$checked(rhs).expect("polynomial variable spaces differ")
            }
        }

        impl<C: Scalar> $tr<Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;

            fn $m(self, rhs: Polynomial<C>) -> Polynomial<C> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<C: Scalar> Neg for Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(mut self) -> Polynomial<C> {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl<C: Scalar> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        -(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type P = Polynomial<BigInt>;

    fn sp(r: usize, n: usize) -> VarSpace {
        VarSpace::new(r, n).unwrap()
    }

    fn t(s: VarSpace, j: usize) -> P {
        P::t(s, j)
    }

    #[test]
    fn arithmetic_examples() {
        let s = sp(1, 2);
        assert_eq!(&(t(s, 1) + t(s, 2)) + &(-t(s, 2)), t(s, 1));
        let p = t(s, 1) * t(s, 2) - t(s, 1);
        assert_eq!(&p * &P::one(s), p);
        let lhs = (t(s, 2) - t(s, 1)) * (t(s, 2) + t(s, 1));
        assert_eq!(lhs, t(s, 2).pow(2) - t(s, 1).pow(2));
    }

    #[test]
    fn space_mismatch_is_reported() {
        let a = t(sp(1, 2), 1);
        let b = t(sp(1, 3), 1);
        assert!(matches!(a.checked_add(&b), Err(PolyError::SpaceMismatch { .. })));
        assert!(VarSpace::new(3, 2).is_err());
        assert!(VarSpace::new(0, 2).is_err());
    }

    #[test]
    fn divide_by_linear_form_examples() {
        let s = sp(1, 4);
        let p = t(s, 2).pow(2) - t(s, 1).pow(2);
        let q = p.divide_by_linear_form(1, 2).unwrap();
        assert_eq!(q, -(t(s, 1) + t(s, 2)));
        assert!(P::zero(s).divide_by_linear_form(1, 2).unwrap().is_zero());

        let inner = t(s, 3) + t(s, 4) - t(s, 1) - t(s, 2);
        let p = (t(s, 2) - t(s, 1)) * inner.clone();
        assert_eq!(p.divide_by_linear_form(1, 2).unwrap(), -inner);

        assert_eq!(
            (t(s, 1) + t(s, 2)).divide_by_linear_form(1, 2),
            Err(PolyError::NotDivisible)
        );
    }

    #[test]
    fn lowest_form_examples() {
        let s = sp(1, 4);
        let p = t(s, 1) + t(s, 1) * t(s, 2);
        assert_eq!(p.lowest_form().unwrap(), (1, t(s, 1)));
        let p = P::constant(s, BigInt::from(5)) + t(s, 1);
        assert_eq!(p.lowest_form().unwrap(), (0, P::constant(s, BigInt::from(5))));
        let low = t(s, 1) * t(s, 2) - t(s, 3) * t(s, 4);
        let p = &low + &(t(s, 1).pow(2) * t(s, 2));
        assert_eq!(p.lowest_form().unwrap(), (2, low));
        assert_eq!(P::zero(s).lowest_form(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn eval_examples() {
        let s = sp(2, 3);
        let q = |v: i64| BigRational::from_integer(v.into());
        let p = t(s, 1) + t(s, 2);
        assert_eq!(p.eval(&[q(0), q(0)], &[q(1), q(2), q(7)]), q(3));
        let p = P::u(s, 1) * P::u(s, 2);
        assert_eq!(p.eval(&[q(2), q(3)], &[q(0), q(0), q(0)]), q(6));
    }

    #[test]
    fn div_exact_recovers_factor() {
        let s = sp(2, 3);
        let a = P::u(s, 1) + t(s, 3) - t(s, 2);
        let b = P::u(s, 2).pow(2) - t(s, 1) * P::u(s, 1) + P::constant(s, BigInt::from(3));
        let p = &a * &b;
        assert_eq!(p.div_exact(&b).unwrap(), a);
        assert!((&p + &P::one(s)).div_exact(&b).is_err());
    }

    #[test]
    fn display_renders_canonically() {
        let s = sp(1, 2);
        let p = t(s, 2) - t(s, 1).scale(&BigInt::from(2)) + P::one(s);
        assert_eq!(p.to_string(), "-2*t1 + t2 + 1");
    }

    #[test]
    fn symmetry_detection() {
        let s = sp(2, 2);
        let sym = P::u(s, 1) * P::u(s, 2) + P::u(s, 1) + P::u(s, 2);
        assert!(sym.is_symmetric_in_u());
        assert!(!(P::u(s, 1) + t(s, 1)).is_symmetric_in_u());
    }
}
