//! Scalar traits the polynomial layer is generic over.
//!
//! [`Scalar`] is enough for ring arithmetic, evaluation and composition, and
//! is satisfied by `f64` as well as the exact rationals. [`Field`] adds exact
//! equality plus the two number-theoretic queries the structural algorithms
//! need (integrality and exact rational roots); only exact types implement it.

use std::fmt;
use std::hash::Hash;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Signed, Zero};

pub trait Scalar:
    Clone + fmt::Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive
{
    /// Embeds a small integer. Every supported scalar represents these exactly
    /// or (for floats) to within rounding.
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("scalar type cannot represent a small integer")
    }
}

impl<T> Scalar for T where
    T: Clone + fmt::Debug + PartialEq + Num + Neg<Output = T> + FromPrimitive
{
}

/// An exact field of characteristic zero.
pub trait Field: Scalar + Eq + Hash + fmt::Display {
    fn is_integral(&self) -> bool;

    /// The exact `n`-th root in this field, if one exists. For even `n` the
    /// nonnegative root is returned.
    fn nth_root(&self, n: u32) -> Option<Self>;
}

fn int_nth_root_big(x: &BigInt, n: u32) -> Option<BigInt> {
    if x.is_negative() {
        if n % 2 == 0 {
            return None;
        }
        return int_nth_root_big(&-x, n).map(|r| -r);
    }
    let r = x.nth_root(n);
    if num_traits::pow(r.clone(), n as usize) == *x {
        Some(r)
    } else {
        None
    }
}

impl Field for BigRational {
    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn nth_root(&self, n: u32) -> Option<Self> {
        assert!(n > 0, "zeroth root");
        if self.is_zero() {
            return Some(self.clone());
        }
        let num = int_nth_root_big(self.numer(), n)?;
        let den = int_nth_root_big(self.denom(), n)?;
        Some(Ratio::new(num, den))
    }
}

macro_rules! small_ratio_field {
    ($t:ty) => {
        impl Field for Ratio<$t> {
            fn is_integral(&self) -> bool {
                self.is_integer()
            }

            fn nth_root(&self, n: u32) -> Option<Self> {
                assert!(n > 0, "zeroth root");
                let root = |x: $t| -> Option<$t> {
                    if x < 0 {
                        if n % 2 == 0 {
                            return None;
                        }
                        let r = Roots::nth_root(&-x, n);
                        return (r.checked_pow(n)? == -x).then_some(-r);
                    }
                    let r = Roots::nth_root(&x, n);
                    (r.checked_pow(n)? == x).then_some(r)
                };
                Some(Ratio::new(root(*self.numer())?, root(*self.denom())?))
            }
        }
    };
}

small_ratio_field!(i64);
small_ratio_field!(i128);
