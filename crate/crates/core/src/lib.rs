//! Exact functional decomposition of Euler and Dickson polynomials, and a
//! harness for the Diophantine equation
//!
//! ```text
//! -1^k + 2^k - 3^k + ... + (-1)^x x^k = g(y)
//! ```
//!
//! The polynomial machinery is generic over the scalar type (see
//! [`scalar::Scalar`] and [`scalar::Field`]); the aliases below fix it to
//! arbitrary-precision rationals, which is what the number-theoretic layers use.

pub mod classical;
pub mod decompose;
pub mod diophantine;
pub mod error;
pub mod poly;
pub mod recognize;
pub mod scalar;
pub mod theorems;

pub use error::{Error, Result};
pub use poly::{Degree, Linear, Poly};
pub use scalar::{Field, Scalar};

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rat = num_rational::BigRational;
/// Polynomial over the rationals.
pub type QPoly = Poly<Rat>;
/// Invertible linear polynomial over the rationals.
pub type QLinear = Linear<Rat>;

/// Shorthand for the rational `n/d`. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}
