//! Equivariant Chow and K-theory classes of matrix orbit closures.
//!
//! Given a matroid (or a rational matrix), this crate computes the torus
//! equivariant class of the corresponding torus orbit closure in the
//! Grassmannian at every fixed point, lifts it to the `GL_r x T` equivariant
//! Chow ring of `r x n` matrices through the factorial Schur basis, and
//! checks it against closed forms for uniform matroids.

pub mod certify;
pub mod classes;
pub mod exactpoly;
pub mod localize;
pub mod matroid;
pub mod scalar;
pub mod split;
pub mod symfunc;
pub mod verify;

pub use scalar::{FieldScalar, Scalar, Sign};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Integer-coefficient ambient polynomial.
pub type Poly = exactpoly::Polynomial<BigInt>;
/// Rational-coefficient polynomial.
pub type RatPoly = exactpoly::Polynomial<BigRational>;
pub type LinFrac = exactpoly::LinFormFraction<BigInt>;
pub type LaurentFrac = exactpoly::LaurentFraction<BigInt>;
