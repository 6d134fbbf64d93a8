use num_traits::pow;

use crate::error::{Error, Result};
use crate::scalar::Field;

use super::Poly;

fn pseudo_rem<T: Field>(a: &Poly<T>, b: &Poly<T>) -> Poly<T> {
    let delta = a.deg().unwrap() - b.deg().unwrap();
    let lc = b.leading().unwrap().clone();
    let scaled = a.scale(&pow(lc, delta + 1));
    scaled.divrem(b).expect("nonzero divisor").1
}

/// Monic gcd over the field, via the subresultant remainder sequence.
///
/// The sequence keeps intermediate coefficients bounded by subresultant
/// determinants rather than letting them grow as in the naive Euclidean
/// scheme.
pub fn gcd<T: Field>(f: &Poly<T>, g: &Poly<T>) -> Result<Poly<T>> {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return Err(Error::GcdOfZeros),
        (true, false) => return Ok(g.monic()),
        (false, true) => return Ok(f.monic()),
        _ => {}
    }
    let (mut a, mut b) = if f.degree() >= g.degree() { (f.clone(), g.clone()) } else { (g.clone(), f.clone()) };
    let mut g_coef = T::one();
    let mut h_coef = T::one();
    loop {
        let d = a.deg().unwrap() - b.deg().unwrap();
        let r = pseudo_rem(&a, &b);
        if r.is_zero() {
            return Ok(b.monic());
        }
        if r.is_constant() {
            return Ok(Poly::one());
        }
        let div = g_coef.clone() * pow(h_coef.clone(), d);
        a = b;
        b = r.scale(&(T::one() / div));
        g_coef = a.leading().unwrap().clone();
        h_coef = if d == 0 {
            h_coef
        } else {
            pow(g_coef.clone(), d) / pow(h_coef, d - 1)
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::QPoly;

    #[test]
    fn examples() {
        let g = gcd(&QPoly::from_ints(&[-1, 0, 1]), &QPoly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(g, QPoly::from_ints(&[-1, 1]));
        let g = gcd(&QPoly::from_ints(&[0, 0, 1]), &QPoly::from_ints(&[0, 0, 0, 1])).unwrap();
        assert_eq!(g, QPoly::from_ints(&[0, 0, 1]));
        let g = gcd(&QPoly::from_ints(&[1, 0, 1]), &QPoly::from_ints(&[-1, 0, 1])).unwrap();
        assert_eq!(g, QPoly::one());
    }

    #[test]
    fn zero_inputs() {
        assert_eq!(gcd(&QPoly::zero(), &QPoly::zero()), Err(Error::GcdOfZeros));
        assert_eq!(gcd(&QPoly::zero(), &QPoly::from_ints(&[2, 4])).unwrap(), QPoly::from_ints(&[1, 2]).monic());
    }

    #[test]
    fn shared_factor_recovered_from_products() {
        let common = QPoly::from_ints(&[3, -1, 0, 2]);
        let a = &common * &QPoly::from_ints(&[1, 1, 7, 1]);
        let b = &common * &QPoly::from_ints(&[-4, 0, 5]);
        assert_eq!(gcd(&a, &b).unwrap(), common.monic());
    }
}
