use num_traits::pow;

use crate::error::{Error, Result};
use crate::scalar::Field;

use super::{Linear, Poly};

/// Base-`h` digits of `f`: `f = Σ dᵢ·hⁱ` with `deg dᵢ < deg h`.
pub fn h_adic_expansion<T: Field>(f: &Poly<T>, h: &Poly<T>) -> Result<Vec<Poly<T>>> {
    if h.is_constant() {
        return Err(Error::ConstantPolynomial("h_adic_expansion"));
    }
    let mut digits = Vec::new();
    let mut rest = f.clone();
    while !rest.is_zero() {
        let (q, r) = rest.divrem(h)?;
        digits.push(r);
        rest = q;
    }
    Ok(digits)
}

/// Returns `φ` with `f = φ∘h` when every base-`h` digit of `f` is constant.
pub fn polynomial_in<T: Field>(f: &Poly<T>, h: &Poly<T>) -> Result<Option<Poly<T>>> {
    let digits = h_adic_expansion(f, h)?;
    if digits.iter().any(|d| !d.is_constant()) {
        return Ok(None);
    }
    Ok(Some(Poly::new(digits.iter().map(|d| d.coeff(0)).collect())))
}

/// Every `ℓ` with `p = q∘ℓ`. At most two exist: the slope is a rational
/// `n`-th root of `lc(p)/lc(q)` and the intercept then follows from the
/// `x^{n-1}` coefficient.
pub fn right_linear_candidates<T: Field>(p: &Poly<T>, q: &Poly<T>) -> Vec<Linear<T>> {
    let (Some(n), Some(m)) = (p.deg(), q.deg()) else {
        return Vec::new();
    };
    if n != m || n == 0 {
        return Vec::new();
    }
    let ratio = p.leading().unwrap().clone() / q.leading().unwrap().clone();
    let Some(root) = ratio.nth_root(n as u32) else {
        return Vec::new();
    };
    let mut slopes = vec![root.clone()];
    if n % 2 == 0 {
        slopes.push(-root);
    }
    let lc_q = q.leading().unwrap().clone();
    let mut out = Vec::new();
    for alpha in slopes {
        let alpha_pow = pow(alpha.clone(), n - 1);
        let beta = (p.coeff(n - 1) - q.coeff(n - 1) * alpha_pow.clone())
            / (T::from_int(n as i64) * lc_q.clone() * alpha_pow);
        let ell = Linear::new(alpha, beta).expect("nonzero slope");
        if q.compose(&ell.to_poly()) == *p && !out.contains(&ell) {
            out.push(ell);
        }
    }
    out
}

/// First `terms` coefficients of `F^{1/t}` for a power series `F` with
/// `F_0 = 1`, via `F·P' = (1/t)·F'·P`.
pub(crate) fn series_root<T: Field>(series: &[T], t: usize, terms: usize) -> Vec<T> {
    let coef = |i: usize| series.get(i).cloned().unwrap_or_else(T::zero);
    let exponent_plus_one = T::one() / T::from_int(t as i64) + T::one();
    let mut root = vec![T::one()];
    for j in 1..terms {
        let mut acc = T::zero();
        for i in 1..=j {
            let weight = exponent_plus_one.clone() * T::from_int(i as i64) - T::from_int(j as i64);
            acc = acc + weight * coef(i) * root[j - i].clone();
        }
        root.push(acc / T::from_int(j as i64));
    }
    root
}

/// `r` with `r^t = f`, if one exists over the field. The leading coefficient
/// of `r` is the nonnegative root when `t` is even.
pub fn poly_nth_root<T: Field>(f: &Poly<T>, t: usize) -> Option<Poly<T>> {
    let n = f.deg()?;
    if t == 0 || n % t != 0 {
        return None;
    }
    let d = n / t;
    let lc = f.leading().unwrap().clone();
    let lc_root = lc.nth_root(t as u32)?;
    let top: Vec<T> = (0..=d).map(|j| f.coeff(n - j) / lc.clone()).collect();
    let mut coeffs = series_root(&top, t, d + 1);
    coeffs.reverse();
    let r = Poly::new(coeffs).scale(&lc_root);
    (r.pow(t as u32) == *f).then_some(r)
}

/// Solves `p = q∘ℓ` for a linear `ℓ` over the field.
pub fn find_right_linear<T: Field>(p: &Poly<T>, q: &Poly<T>) -> Option<Linear<T>> {
    right_linear_candidates(p, q).into_iter().next()
}

/// Shifts `p` so the `x^{n-1}` coefficient vanishes: returns `(s, p(x + s))`.
pub fn depress<T: Field>(p: &Poly<T>) -> Result<(T, Poly<T>)> {
    let n = match p.deg() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::ConstantPolynomial("depress")),
    };
    let shift = -p.coeff(n - 1) / (T::from_int(n as i64) * p.leading().unwrap().clone());
    let depressed = p.shift(&shift);
    Ok((shift, depressed))
}
