use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

use super::Poly;

/// An invertible linear polynomial `slope·x + intercept`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Linear<T> {
    slope: T,
    intercept: T,
}

impl<T: Scalar> Linear<T> {
    pub fn new(slope: T, intercept: T) -> Result<Self> {
        if slope.is_zero() {
            return Err(Error::Precondition("linear polynomial needs a nonzero slope".into()));
        }
        Ok(Self { slope, intercept })
    }

    pub fn identity() -> Self {
        Self { slope: T::one(), intercept: T::zero() }
    }

    pub fn slope(&self) -> &T {
        &self.slope
    }

    pub fn intercept(&self) -> &T {
        &self.intercept
    }

    pub fn apply(&self, x: &T) -> T {
        self.slope.clone() * x.clone() + self.intercept.clone()
    }

    pub fn to_poly(&self) -> Poly<T> {
        Poly::new(vec![self.intercept.clone(), self.slope.clone()])
    }

    /// `self ∘ inner`.
    pub fn then_after(&self, inner: &Linear<T>) -> Linear<T> {
        Linear {
            slope: self.slope.clone() * inner.slope.clone(),
            intercept: self.slope.clone() * inner.intercept.clone() + self.intercept.clone(),
        }
    }

    /// `self ∘ p`, computed directly on coefficients.
    pub fn apply_poly(&self, p: &Poly<T>) -> Poly<T> {
        &p.scale(&self.slope) + &Poly::constant(self.intercept.clone())
    }
}

impl<T: Field> Linear<T> {
    pub fn from_poly(p: &Poly<T>) -> Option<Self> {
        (p.deg() == Some(1)).then(|| Linear { slope: p.coeff(1), intercept: p.coeff(0) })
    }

    pub fn inverse(&self) -> Linear<T> {
        let inv = T::one() / self.slope.clone();
        Linear { intercept: -(self.intercept.clone() * inv.clone()), slope: inv }
    }
}

impl<T: Field> fmt::Display for Linear<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*x + ({})", self.slope, self.intercept)
    }
}
