//! Exact coefficient rings.
//!
//! Everything in this crate is generic over [`Scalar`], a num-traits based
//! bound that is implemented only for exact types. Floating point types are
//! intentionally absent: divisibility and zero tests must be decidable.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Num, Signed};

/// An exact commutative ring element usable as a polynomial coefficient.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + FromStr
    + PartialEq
    + Eq
    + Hash
    + Num
    + Signed
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_i64(v: i64) -> Self;

    /// Exact quotient `self / rhs`, or `None` when `rhs` does not divide `self`.
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if (self.clone() % rhs.clone()).is_zero() {
            Some(self.clone() / rhs.clone())
        } else {
            None
        }
    }
}

/// Scalars that form a field, used for rank computations and evaluation.
pub trait FieldScalar: Scalar {}

macro_rules! impl_scalar_prim {
    ($($t:ty),*) => {
        $(
            impl Scalar for $t {
                fn from_i64(v: i64) -> Self {
                    v as $t
                }
            }
        )*
    };
}

impl_scalar_prim!(i64, i128);

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!num_traits::Zero::is_zero(rhs)).then(|| self / rhs)
    }
}

impl Scalar for Rational64 {
    fn from_i64(v: i64) -> Self {
        Rational64::from_integer(v)
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!num_traits::Zero::is_zero(rhs)).then(|| self / rhs)
    }
}

impl FieldScalar for BigRational {}
impl FieldScalar for Rational64 {}

/// `+1` or `-1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn apply<C: Scalar>(self, c: C) -> C {
        match self {
            Sign::Plus => c,
            Sign::Minus => -c,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn pow(self, e: u32) -> Sign {
        if self == Sign::Minus && e % 2 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn mul(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_i64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn div_exact_integers_and_fields() {
        assert_eq!(BigInt::from(12).div_exact(&BigInt::from(4)), Some(BigInt::from(3)));
        assert_eq!(BigInt::from(12).div_exact(&BigInt::from(5)), None);
        assert_eq!(Scalar::div_exact(&7i64, &0), None);
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(q(1, 2).div_exact(&q(3, 4)), Some(q(2, 3)));
        assert_eq!(q(1, 2).div_exact(&q(0, 1)), None);
        assert_eq!(Rational64::new(5, 3).div_exact(&Rational64::new(2, 1)), Some(Rational64::new(5, 6)));
    }
}
