use std::fmt;

use super::{LinFormFraction, PolyError, Polynomial, VarSpace};
use crate::scalar::Scalar;

/// `t^shift * numerator / denominator` with integer exponent offsets.
///
/// Only the `t` block is used. Monomial content is pulled out of the
/// numerator and denominator into `shift` on construction.
#[derive(Clone, Debug)]
pub struct LaurentFraction<C: Scalar> {
    numerator: Polynomial<C>,
    denominator: Polynomial<C>,
    shift: Vec<i64>,
}

impl<C: Scalar> LaurentFraction<C> {
    pub fn new(
        numerator: Polynomial<C>,
        denominator: Polynomial<C>,
        shift: Vec<i64>,
    ) -> Result<Self, PolyError> {
        let space = numerator.space();
        if denominator.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if denominator.space() != space {
            return Err(PolyError::SpaceMismatch {
                left: space,
                right: denominator.space(),
            });
        }
        assert_eq!(shift.len(), space.n, "shift length");
        let mut f = LaurentFraction {
            numerator,
            denominator,
            shift,
        };
        f.normalize();
        Ok(f)
    }

    pub fn from_poly(p: Polynomial<C>) -> Self {
        let space = p.space();
        Self::new(p, Polynomial::one(space), vec![0; space.n]).expect("nonzero denominator")
    }

    /// Converts `t^shift * f` where `f` has linear-form denominators.
    pub fn from_linforms(f: &LinFormFraction<C>, shift: Vec<i64>) -> Self {
        Self::new(f.numerator().clone(), f.denominator_poly(), shift).expect("nonzero denominator")
    }

    pub fn space(&self) -> VarSpace {
        self.numerator.space()
    }

    pub fn numerator(&self) -> &Polynomial<C> {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial<C> {
        &self.denominator
    }

    pub fn shift(&self) -> &[i64] {
        &self.shift
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn normalize(&mut self) {
        let space = self.space();
        if self.numerator.is_zero() {
            self.shift.iter_mut().for_each(|s| *s = 0);
            return;
        }
        for j in 1..=space.n {
            let idx = space.t_index(j);
            let low_num = min_exponent(&self.numerator, idx);
            let low_den = min_exponent(&self.denominator, idx);
            if low_num > 0 {
                self.numerator = divide_by_var_power(&self.numerator, idx, low_num);
                self.shift[j - 1] += i64::from(low_num);
            }
            if low_den > 0 {
                self.denominator = divide_by_var_power(&self.denominator, idx, low_den);
                self.shift[j - 1] -= i64::from(low_den);
            }
        }
        // Constant sign normalisation keeps the denominator's leading coefficient positive.
        let negative = self
            .denominator
            .terms()
            .next()
            .is_some_and(|(_, c)| c.is_negative());
        if negative {
            self.numerator = -&self.numerator;
            self.denominator = -&self.denominator;
        }
    }

    /// Equality as rational functions, by cross multiplication.
    pub fn equals(&self, other: &Self) -> bool {
        if self.space() != other.space() {
            return false;
        }
        let space = self.space();
        // Bring both shifts to a common nonnegative offset.
        let mut left_exps = vec![0u32; space.nvars()];
        let mut right_exps = vec![0u32; space.nvars()];
        for j in 0..space.n {
            let d = self.shift[j] - other.shift[j];
            if d > 0 {
                left_exps[space.t_index(j + 1)] = d as u32;
            } else {
                right_exps[space.t_index(j + 1)] = (-d) as u32;
            }
        }
        let lm = Polynomial::monomial(space, left_exps, C::one());
        let rm = Polynomial::monomial(space, right_exps, C::one());
        let lhs = &(&self.numerator * &other.denominator) * &lm;
        let rhs = &(&other.numerator * &self.denominator) * &rm;
        lhs == rhs
    }

    pub fn eval<S>(&self, t: &[S]) -> Result<S, PolyError>
    where
        S: Scalar + From<C>,
    {
        let space = self.space();
        let u = vec![S::zero(); space.r];
        let den = self.denominator.eval(&u, t);
        if den.is_zero() {
            return Err(PolyError::DenominatorZero { a: 0, b: 0 });
        }
        let mut val = self.numerator.eval(&u, t) / den;
        for (j, &s) in self.shift.iter().enumerate() {
            if s == 0 {
                continue;
            }
            if t[j].is_zero() {
                return Err(PolyError::DenominatorZero { a: j + 1, b: 0 });
            }
            for _ in 0..s.unsigned_abs() {
                if s > 0 {
                    val = val * t[j].clone();
                } else {
                    val = val / t[j].clone();
                }
            }
        }
        Ok(val)
    }
}

fn min_exponent<C: Scalar>(p: &Polynomial<C>, idx: usize) -> u32 {
    p.terms().map(|(e, _)| e[idx]).min().unwrap_or(0)
}

fn divide_by_var_power<C: Scalar>(p: &Polynomial<C>, idx: usize, k: u32) -> Polynomial<C> {
    Polynomial::from_terms(
        p.space(),
        p.terms().map(|(e, c)| {
            let mut e = e.to_vec();
            e[idx] -= k;
            (e, c.clone())
        }),
    )
}

impl<C: Scalar> fmt::Display for LaurentFraction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shifts: Vec<String> = self
            .shift
            .iter()
            .enumerate()
            .filter(|(_, &s)| s != 0)
            .map(|(j, s)| format!("t{}^{}", j + 1, s))
            .collect();
        if !shifts.is_empty() {
            write!(f, "{} * ", shifts.join("*"))?;
        }
        if self.denominator.as_constant().is_some_and(|c| c.is_one()) {
            write!(f, "({})", self.numerator)
        } else {
            write!(f, "({})/({})", self.numerator, self.denominator)
        }
    }
}
