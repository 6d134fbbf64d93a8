use crate::error::{Error, Result};
use crate::scalar::Field;

use super::{gcd, Poly};

/// `f = content · ∏ factorᵢ^multiplicityᵢ` with monic, square-free, pairwise
/// coprime factors listed by increasing multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareFreeDecomposition<T> {
    pub content: T,
    pub parts: Vec<(Poly<T>, usize)>,
}

impl<T: Field> SquareFreeDecomposition<T> {
    pub fn reconstruct(&self) -> Poly<T> {
        self.parts
            .iter()
            .fold(Poly::constant(self.content.clone()), |acc, (f, m)| &acc * &f.pow(*m as u32))
    }

    /// The factor of multiplicity exactly `m` (1 if absent).
    pub fn part(&self, m: usize) -> Poly<T> {
        self.parts
            .iter()
            .find(|(_, k)| *k == m)
            .map(|(f, _)| f.clone())
            .unwrap_or_else(Poly::one)
    }

    /// Multiplicities of all roots over the algebraic closure, ascending.
    pub fn root_multiplicities(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .parts
            .iter()
            .flat_map(|(f, m)| std::iter::repeat(*m).take(f.deg().unwrap_or(0)))
            .collect();
        out.sort_unstable();
        out
    }
}

/// Yun's square-free decomposition (characteristic zero).
pub fn squarefree_decompose<T: Field>(f: &Poly<T>) -> Result<SquareFreeDecomposition<T>> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial("squarefree_decompose"));
    }
    let content = f.leading().unwrap().clone();
    let monic = f.monic();
    let deriv = monic.derivative();
    let a0 = gcd(&monic, &deriv)?;
    let mut b = monic.div_exact(&a0)?.expect("gcd divides");
    let c = deriv.div_exact(&a0)?.expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut parts = Vec::new();
    let mut mult = 1;
    while !b.is_constant() {
        let a = gcd(&b, &d)?;
        b = b.div_exact(&a)?.expect("gcd divides");
        let c = d.div_exact(&a)?.expect("gcd divides");
        d = &c - &b.derivative();
        if !a.is_constant() {
            parts.push((a, mult));
        }
        mult += 1;
    }
    Ok(SquareFreeDecomposition { content, parts })
}

/// Number of complex roots of multiplicity exactly one.
pub fn count_simple_roots<T: Field>(f: &Poly<T>) -> Result<usize> {
    let sf = squarefree_decompose(f)?;
    Ok(sf.part(1).deg().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::QPoly;

    #[test]
    fn examples() {
        let f = QPoly::from_ints(&[0, 0, -1, 1]);
        let sf = squarefree_decompose(&f).unwrap();
        assert_eq!(sf.parts, vec![(QPoly::from_ints(&[-1, 1]), 1), (QPoly::x(), 2)]);
        assert_eq!(count_simple_roots(&f).unwrap(), 1);

        let sf = squarefree_decompose(&QPoly::from_ints(&[0, 0, 0, 1])).unwrap();
        assert_eq!(sf.parts, vec![(QPoly::x(), 3)]);
        assert_eq!(count_simple_roots(&QPoly::from_ints(&[0, -1, 0, 1])).unwrap(), 3);
    }

    #[test]
    fn content_is_reported() {
        let f = QPoly::from_ints(&[0, 0, -3, 3]);
        let sf = squarefree_decompose(&f).unwrap();
        assert_eq!(sf.content, crate::Rat::from_integer(3.into()));
        assert_eq!(sf.reconstruct(), f);
        assert_eq!(sf.root_multiplicities(), vec![1, 2]);
    }

    #[test]
    fn constant_rejected() {
        assert!(squarefree_decompose(&QPoly::from_ints(&[4])).is_err());
        assert!(count_simple_roots(&QPoly::zero()).is_err());
    }
}
