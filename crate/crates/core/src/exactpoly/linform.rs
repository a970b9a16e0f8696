use std::collections::BTreeMap;
use std::fmt;

use super::{PolyError, Polynomial, VarSpace};
use crate::scalar::Scalar;

/// `numerator / prod (t_a - t_b)^{m_ab}` with every stored pair `a < b`.
///
/// Signs of reversed forms are absorbed into the numerator. Values are kept
/// reduced: no stored form divides the numerator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinFormFraction<C: Scalar> {
    numerator: Polynomial<C>,
    denominator: BTreeMap<(usize, usize), u32>,
}

impl<C: Scalar> LinFormFraction<C> {
    pub fn from_poly(p: Polynomial<C>) -> Self {
        LinFormFraction {
            numerator: p,
            denominator: BTreeMap::new(),
        }
    }

    pub fn zero(space: VarSpace) -> Self {
        Self::from_poly(Polynomial::zero(space))
    }

    pub fn one(space: VarSpace) -> Self {
        Self::from_poly(Polynomial::one(space))
    }

    /// `1 / (t_a - t_b)` for any `a != b`.
    pub fn inverse_form(space: VarSpace, a: usize, b: usize) -> Result<Self, PolyError> {
        Self::new(Polynomial::one(space), &[(a, b)])
    }

    /// `numerator / prod (t_a - t_b)` over the listed forms, in any orientation.
    pub fn new(numerator: Polynomial<C>, forms: &[(usize, usize)]) -> Result<Self, PolyError> {
        let space = numerator.space();
        let mut num = numerator;
        let mut den = BTreeMap::new();
        for &(a, b) in forms {
            if a == b || a == 0 || b == 0 || a > space.n || b > space.n {
                return Err(PolyError::InvalidForm { a, b });
            }
            if a > b {
                num = -num;
            }
            *den.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
        let mut f = LinFormFraction {
            numerator: num,
            denominator: den,
        };
        f.reduce();
        Ok(f)
    }

    pub fn space(&self) -> VarSpace {
        self.numerator.space()
    }

    pub fn numerator(&self) -> &Polynomial<C> {
        &self.numerator
    }

    /// Denominator multiset as `((a, b), multiplicity)` with `a < b`.
    pub fn denominator(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.denominator.iter().map(|(&k, &m)| (k, m))
    }

    pub fn denominator_degree(&self) -> u32 {
        self.denominator.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator.is_empty()
    }

    /// Cancels every denominator form that divides the numerator.
    fn reduce(&mut self) {
        if self.numerator.is_zero() {
            self.denominator.clear();
            return;
        }
        let forms: Vec<(usize, usize)> = self.denominator.keys().copied().collect();
        for (a, b) in forms {
            loop {
                let m = self.denominator[&(a, b)];
                if m == 0 || !self.numerator.divisible_by_linear_form(a, b) {
                    break;
                }
                self.numerator = self
                    .numerator
                    .divide_by_linear_form(a, b)
                    .expect("substitution test passed");
                if m == 1 {
                    self.denominator.remove(&(a, b));
                    break;
                }
                *self.denominator.get_mut(&(a, b)).unwrap() -= 1;
            }
        }
    }

    fn product_of_forms(space: VarSpace, forms: &BTreeMap<(usize, usize), u32>) -> Polynomial<C> {
        let mut p = Polynomial::one(space);
        for (&(a, b), &m) in forms {
            p = &p * &Polynomial::t_diff(space, a, b).pow(m);
        }
        p
    }

    /// Sum over the multiset-lcm of the two denominators, then reduced.
    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        if self.space() != other.space() {
            return Err(PolyError::SpaceMismatch {
                left: self.space(),
                right: other.space(),
            });
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let mut lcm = self.denominator.clone();
        for (&k, &m) in &other.denominator {
            let e = lcm.entry(k).or_insert(0);
            *e = (*e).max(m);
        }
        let missing = |den: &BTreeMap<(usize, usize), u32>| {
            lcm.iter()
                .filter_map(|(k, &m)| {
                    let have = den.get(k).copied().unwrap_or(0);
                    (m > have).then_some((*k, m - have))
                })
                .collect::<BTreeMap<_, _>>()
        };
        let space = self.space();
        let left = &self.numerator * &Self::product_of_forms(space, &missing(&self.denominator));
        let right = &other.numerator * &Self::product_of_forms(space, &missing(&other.denominator));
        let mut out = LinFormFraction {
            numerator: &left + &right,
            denominator: lcm,
        };
        out.reduce();
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        let numerator = self.numerator.checked_mul(&other.numerator)?;
        let mut denominator = self.denominator.clone();
        for (&k, &m) in &other.denominator {
            *denominator.entry(k).or_insert(0) += m;
        }
        let mut out = LinFormFraction {
            numerator,
            denominator,
        };
        out.reduce();
        Ok(out)
    }

    pub fn mul_poly(&self, p: &Polynomial<C>) -> Result<Self, PolyError> {
        let mut out = LinFormFraction {
            numerator: self.numerator.checked_mul(p)?,
            denominator: self.denominator.clone(),
        };
        out.reduce();
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        LinFormFraction {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }

    /// The polynomial value; fails when a denominator survives reduction.
    pub fn to_poly(&self) -> Result<Polynomial<C>, PolyError> {
        if self.denominator.is_empty() {
            Ok(self.numerator.clone())
        } else {
            Err(PolyError::DenominatorRemains {
                forms: self.denominator.keys().copied().collect(),
            })
        }
    }

    /// The full denominator as a polynomial.
    pub fn denominator_poly(&self) -> Polynomial<C> {
        Self::product_of_forms(self.space(), &self.denominator)
    }

    pub fn eval<S>(&self, u: &[S], t: &[S]) -> Result<S, PolyError>
    where
        S: Scalar + From<C>,
    {
        let mut den = S::one();
        for (&(a, b), &m) in &self.denominator {
            let d = t[a - 1].clone() - t[b - 1].clone();
            if d.is_zero() {
                return Err(PolyError::DenominatorZero { a, b });
            }
            for _ in 0..m {
                den = den * d.clone();
            }
        }
        Ok(self.numerator.eval(u, t) / den)
    }
}

impl<C: Scalar> fmt::Display for LinFormFraction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        write!(f, "({})/(", self.numerator)?;
        let parts: Vec<String> = self
            .denominator
            .iter()
            .map(|(&(a, b), &m)| {
                if m == 1 {
                    format!("(t{a} - t{b})")
                } else {
                    format!("(t{a} - t{b})^{m}")
                }
            })
            .collect();
        write!(f, "{})", parts.join("*"))
    }
}
